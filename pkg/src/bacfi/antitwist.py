"""Antitwists and the divide monodromy as exact cellular chain maps.

The square complex of a surface with n squares has 2n oriented edges:
``h_q``, the south side of square q oriented east (edge index q), and
``v_q``, the west side of q oriented north (edge index n + q).  Both
antitwists send the vertex at the south-west corner of q to the one at
the south-west corner of ``NE(q)``.

On a horizontal cylinder of width w and exponent k, the antitwist is the
map (x, y) -> (x + 1 + (k*w - 2) * y mod w, 1 - y): a reflection along a
horizontal axis composed with a transvection of factor k*w - 2.  Its
cellular approximation is pinned to the staircase homotopic rel
endpoints that runs along the cylinder's top boundary and then one edge
downward:

    h_q  |->  h_{NE(q)}
    v_q  |->  sum_{i=1..k*w-2} h_{N(E^i(q))}  -  v_{W(q)}

Repeated horizontal edges (k >= 2) enter the sum with multiplicity.  The
vertical antitwist is the mirror image, wrapping up the vertical
cylinder of height h and exponent m:

    v_q  |->  v_{NE(q)}
    h_q  |->  sum_{j=1..m*h-2} v_{E(N^j(q))}  -  h_{S(q)}

Both formulas commute with the boundary operator precisely because the
move north-east-north equals west on these surfaces; this is checked by
:func:`verify_boundary_commutation` and exercised on random surfaces by
the test suite.  No floating point is used anywhere in this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import ChainMapInvalid, SurfaceMismatch
from .perms import orbit_of
from .surface import BacfiSurface, vertex_classes

LABEL_HORIZONTAL = "horizontal-antitwist"
LABEL_VERTICAL = "vertical-antitwist"
LABEL_COMPOSITE = "composite"
LABEL_IDENTITY = "identity"

EdgeSum = tuple[tuple[int, int], ...]  # sorted ((edge, coefficient), ...)


@dataclass(frozen=True)
class CellularChainMap:
    surface: BacfiSurface
    label: str
    vertex_map: tuple[int, ...]        # vertex class index -> vertex class index
    edge_images: tuple[EdgeSum, ...]   # one signed edge sum per edge 0..2n-1

    @property
    def n_edges(self) -> int:
        return 2 * self.surface.n

    def image_of(self, edge: int) -> EdgeSum:
        return self.edge_images[edge]

    def matrix(self) -> list[list[int]]:
        """Dense 2n x 2n matrix; column e holds the image of edge e."""
        size = self.n_edges
        out = [[0] * size for _ in range(size)]
        for e in range(size):
            for target, coeff in self.edge_images[e]:
                out[target][e] += coeff
        return out


def _merge(terms: Iterable[tuple[int, int]]) -> EdgeSum:
    acc: dict[int, int] = {}
    for edge, coeff in terms:
        acc[edge] = acc.get(edge, 0) + coeff
    return tuple(sorted((e, c) for e, c in acc.items() if c != 0))


def _class_index_of(s: BacfiSurface) -> list[int]:
    index = [0] * s.n
    for ci, vc in enumerate(vertex_classes(s)):
        for q in vc.corner_squares:
            index[q] = ci
    return index


def _vertex_map_from_squares(s: BacfiSurface, square_map: list[int]) -> tuple[int, ...]:
    """Induce a map of vertex classes from a map of squares; the square
    map must permute the rotation cycles."""
    cls = _class_index_of(s)
    classes = vertex_classes(s)
    out = []
    for vc in classes:
        targets = {cls[square_map[q]] for q in vc.corner_squares}
        if len(targets) != 1:
            raise ChainMapInvalid(
                f"square map does not descend to vertex classes on {vc.corner_squares}"
            )
        out.append(targets.pop())
    return tuple(out)


def horizontal_antitwist(s: BacfiSurface) -> CellularChainMap:
    """The left-veering horizontal antitwist (one per surface, the
    per-cylinder exponents being part of the surface data)."""
    n = s.n
    ne, west, north, east = s.northeast, s.west, s.north, s.east
    images: list[EdgeSum] = [()] * (2 * n)
    for q in range(n):
        images[q] = ((ne[q], 1),)
    for q in range(n):
        width = len(orbit_of(east, q))
        span = s.h_exp[q] * width - 2
        step = q
        terms = []
        for _ in range(span):
            step = east[step]
            terms.append((north[step], 1))
        terms.append((n + west[q], -1))
        images[n + q] = _merge(terms)
    return CellularChainMap(
        surface=s,
        label=LABEL_HORIZONTAL,
        vertex_map=_vertex_map_from_squares(s, list(ne)),
        edge_images=tuple(images),
    )


def vertical_antitwist(s: BacfiSurface) -> CellularChainMap:
    """The right-veering vertical antitwist.

    Note the asymmetry with the horizontal case: the west side of q
    lands on the east side of N(q), which is the west side of E(N(q)),
    and E(N(q)) differs from N(E(q)) whenever east and north do not
    commute.  Both squares share the vertex at the north-east corner of
    q, so the vertex map is q -> NE(q) all the same.
    """
    n = s.n
    south, north, east = s.south, s.north, s.east
    en = tuple(east[north[q]] for q in range(n))
    images: list[EdgeSum] = [()] * (2 * n)
    for q in range(n):
        images[n + q] = ((n + en[q], 1),)
    for q in range(n):
        height = len(orbit_of(north, q))
        span = s.v_exp[q] * height - 2
        step = q
        terms = []
        for _ in range(span):
            step = north[step]
            terms.append((n + east[step], 1))
        terms.append((south[q], -1))
        images[q] = _merge(terms)
    return CellularChainMap(
        surface=s,
        label=LABEL_VERTICAL,
        vertex_map=_vertex_map_from_squares(s, list(s.northeast)),
        edge_images=tuple(images),
    )


def identity_map(s: BacfiSurface) -> CellularChainMap:
    k = len(vertex_classes(s))
    return CellularChainMap(
        surface=s,
        label=LABEL_IDENTITY,
        vertex_map=tuple(range(k)),
        edge_images=tuple(((e, 1),) for e in range(2 * s.n)),
    )


def compose(outer: CellularChainMap, inner: CellularChainMap) -> CellularChainMap:
    """The chain map outer . inner."""
    if outer.surface != inner.surface:
        raise SurfaceMismatch("cannot compose chain maps on different surfaces")
    images = []
    for e in range(inner.n_edges):
        terms = []
        for mid, coeff in inner.edge_images[e]:
            terms.extend((target, coeff * c) for target, c in outer.edge_images[mid])
        images.append(_merge(terms))
    vmap = tuple(outer.vertex_map[i] for i in inner.vertex_map)
    return CellularChainMap(
        surface=inner.surface,
        label=LABEL_COMPOSITE,
        vertex_map=vmap,
        edge_images=tuple(images),
    )


def monodromy(s: BacfiSurface) -> CellularChainMap:
    """The divide monodromy: vertical antitwist after horizontal."""
    return compose(vertical_antitwist(s), horizontal_antitwist(s))


# -- boundary bookkeeping -------------------------------------------------

def edge_boundary(s: BacfiSurface, edge: int) -> tuple[int, int]:
    """(start, end) vertex class of an oriented edge."""
    cls = _class_index_of(s)
    n = s.n
    if edge < n:
        return cls[edge], cls[s.east[edge]]
    q = edge - n
    return cls[q], cls[s.north[q]]


def verify_boundary_commutation(f: CellularChainMap):
    """Raise ChainMapInvalid unless boundary(f(e)) = f(boundary(e)) for
    every edge e."""
    s = f.surface
    classes = len(vertex_classes(s))
    for e in range(f.n_edges):
        start, end = edge_boundary(s, e)
        expected = [0] * classes
        expected[f.vertex_map[end]] += 1
        expected[f.vertex_map[start]] -= 1
        actual = [0] * classes
        for target, coeff in f.edge_images[e]:
            t_start, t_end = edge_boundary(s, target)
            actual[t_end] += coeff
            actual[t_start] -= coeff
        if actual != expected:
            raise ChainMapInvalid(
                f"boundary does not commute on edge {e}: got {actual}, expected {expected}"
            )


# -- per-cylinder linear parts --------------------------------------------

def horizontal_linear_part(s: BacfiSurface, q: int) -> tuple[tuple[int, int], tuple[int, int]]:
    """Action of the horizontal antitwist on the (horizontal, vertical)
    cycle classes of the cylinder through square q, as a 2x2 matrix."""
    width = len(orbit_of(s.east, q))
    a = s.h_exp[q] * width - 2
    return ((1, a), (0, -1))


def vertical_linear_part(s: BacfiSurface, q: int) -> tuple[tuple[int, int], tuple[int, int]]:
    height = len(orbit_of(s.north, q))
    b = s.v_exp[q] * height - 2
    return ((-1, 0), (b, 1))


def monodromy_linear_part(s: BacfiSurface, q: int) -> tuple[tuple[int, int], tuple[int, int]]:
    """Per-square linear action of the composite, the product of the two
    cylinder matrices through q."""
    (a00, a01), (a10, a11) = vertical_linear_part(s, q)
    (b00, b01), (b10, b11) = horizontal_linear_part(s, q)
    return (
        (a00 * b00 + a01 * b10, a00 * b01 + a01 * b11),
        (a10 * b00 + a11 * b10, a10 * b01 + a11 * b11),
    )
