"""Cellular chain complex of a tiled surface and induced maps on H1.

The complex has one 2-cell per square, 2n oriented edges and one 0-cell
per vertex class.  With ``h_q`` the south side of q oriented east and
``v_q`` the west side oriented north,

    boundary(square q) = h_q + v_{E(q)} - h_{N(q)} - v_q,
    boundary(h_q) = [SW(E(q))] - [SW(q)],
    boundary(v_q) = [SW(N(q))] - [SW(q)].

H1 = ker(boundary1) / im(boundary2) is free of rank 2g.  The basis is
computed deterministically: an echelon basis of the kernel lattice,
then a Smith form of the boundary image expressed in that basis; the
unimodular row transform singles out 2g complementary coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import intlinalg
from .antitwist import CellularChainMap, verify_boundary_commutation
from .errors import ChainMapInvalid
from .polynomials import IntPolynomial
from .surface import BacfiSurface, genus_from_euler, vertex_classes


@dataclass(frozen=True)
class ChainComplex:
    surface: BacfiSurface
    boundary2: tuple[tuple[int, ...], ...]  # 2n x n, column q = boundary of square q
    boundary1: tuple[tuple[int, ...], ...]  # V x 2n, column e = boundary of edge e


@dataclass(frozen=True)
class H1Matrix:
    basis: tuple[tuple[int, ...], ...]      # edge-space vectors spanning H1
    matrix: tuple[tuple[int, ...], ...]     # column j = image of basis vector j

    @property
    def dimension(self) -> int:
        return len(self.matrix)

    def trace(self) -> int:
        return sum(self.matrix[i][i] for i in range(self.dimension))

    def determinant(self) -> int:
        return intlinalg.det_bareiss([list(row) for row in self.matrix])


def chain_complex(s: BacfiSurface) -> ChainComplex:
    n = s.n
    classes = vertex_classes(s)
    cls = [0] * n
    for ci, vc in enumerate(classes):
        for q in vc.corner_squares:
            cls[q] = ci
    d2 = [[0] * n for _ in range(2 * n)]
    for q in range(n):
        d2[q][q] += 1                     # h_q
        d2[n + s.east[q]][q] += 1         # v_{E(q)}
        d2[s.north[q]][q] -= 1            # h_{N(q)}
        d2[n + q][q] -= 1                 # v_q
    d1 = [[0] * (2 * n) for _ in range(len(classes))]
    for q in range(n):
        d1[cls[s.east[q]]][q] += 1
        d1[cls[q]][q] -= 1
        d1[cls[s.north[q]]][n + q] += 1
        d1[cls[q]][n + q] -= 1
    return ChainComplex(
        surface=s,
        boundary2=tuple(tuple(row) for row in d2),
        boundary1=tuple(tuple(row) for row in d1),
    )


def verify_chain_map(s: BacfiSurface, f: CellularChainMap):
    """Full chain-map verification, raising ChainMapInvalid on failure.

    Checks commutation with boundary1 on every edge and that the image
    of every square boundary stays inside the span of square boundaries
    (tested by orthogonality to the left kernel of boundary2); the
    latter is what makes the induced map on H1 well defined, and is not
    implied by the former when the surface has few vertex classes.
    """
    if f.surface != s:
        raise ChainMapInvalid("chain map does not live on the given surface")
    verify_boundary_commutation(f)
    cc = chain_complex(s)
    d2 = [list(row) for row in cc.boundary2]
    left_null = intlinalg.kernel_basis(intlinalg.transpose(d2))
    edge_matrix = f.matrix()
    for q in range(s.n):
        column = [d2[i][q] for i in range(2 * s.n)]
        image = intlinalg.mat_vec(edge_matrix, column)
        for j in range(len(left_null[0]) if left_null else 0):
            if sum(left_null[i][j] * image[i] for i in range(2 * s.n)) != 0:
                raise ChainMapInvalid(
                    f"image of the boundary of square {q} leaves the space of "
                    "square boundaries"
                )


def _h1_setup(s: BacfiSurface):
    """Kernel basis, projection data and expected rank for H1 of s."""
    cc = chain_complex(s)
    d1 = [list(row) for row in cc.boundary1]
    d2 = [list(row) for row in cc.boundary2]
    kernel = intlinalg.kernel_basis(d1)                     # 2n x k
    k = len(kernel[0]) if kernel else 0
    coords = []
    for q in range(s.n):
        column = [d2[i][q] for i in range(2 * s.n)]
        coords.append(intlinalg.solve_integer(kernel, column))
    x = [[coords[q][i] for q in range(s.n)] for i in range(k)]  # k x n
    u, u_inv, smith, _ = intlinalg.smith_with_transforms(x)
    rank = sum(1 for i in range(min(len(smith), s.n)) if smith[i][i] != 0)
    if any(smith[i][i] != 1 for i in range(rank)):
        raise AssertionError("H1 of a closed orientable surface must be torsion free")
    dim = k - rank
    if dim != 2 * genus_from_euler(s):
        raise AssertionError(f"H1 rank {dim} disagrees with genus {genus_from_euler(s)}")
    lifts = [[u_inv[i][rank + j] for j in range(dim)] for i in range(k)]   # k x dim
    basis = intlinalg.mat_mul(kernel, lifts)                              # 2n x dim
    return kernel, u, rank, dim, basis


def h1_matrix(s: BacfiSurface, f: CellularChainMap) -> H1Matrix:
    """Exact integer matrix of the map induced by ``f`` on H1."""
    verify_chain_map(s, f)
    kernel, u, rank, dim, basis = _h1_setup(s)
    edge_matrix = f.matrix()
    columns = []
    for j in range(dim):
        vec = [basis[i][j] for i in range(2 * s.n)]
        image = intlinalg.mat_vec(edge_matrix, vec)
        y = intlinalg.solve_integer(kernel, image)
        z = intlinalg.mat_vec(u, y)
        columns.append(z[rank:])
    matrix = tuple(tuple(columns[j][i] for j in range(dim)) for i in range(dim))
    basis_vectors = tuple(tuple(basis[i][j] for i in range(2 * s.n)) for j in range(dim))
    return H1Matrix(basis=basis_vectors, matrix=matrix)


def char_poly(m: Sequence[Sequence[int]]) -> IntPolynomial:
    """Characteristic polynomial det(x*I - m) by fraction-free
    elimination, lowest degree first."""
    rows = [list(row) for row in m]
    if any(len(row) != len(rows) for row in rows):
        raise ValueError("characteristic polynomial needs a square matrix")
    return IntPolynomial(tuple(intlinalg.charpoly(rows)))
