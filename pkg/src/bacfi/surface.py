"""Square-tiled surfaces whose north-east move is an involution.

A square-tiled surface with ``n`` unit squares is encoded by two
permutations of {0, ..., n-1}: ``east`` sends a square to its right-hand
neighbour and ``north`` to its upper neighbour.  We only work with
surfaces where travelling one step east and one step north, twice,
returns every square to itself; equivalently the diagonal move
``q -> north[east[q]]`` is an involution.  On such a surface every
horizontal cylinder (an orbit of ``east``) and every vertical cylinder
(an orbit of ``north``) additionally carries a positive integer
exponent, the wrapping multiplicity of the antitwist supported on it.

Exponents are stored per square, with a validator enforcing constancy
along each cylinder.  A cylinder of width ``w`` and exponent ``k`` must
satisfy ``k * w >= 2`` so that the antitwist chain map is well formed;
``k * w == 2`` is allowed and yields an empty transvection sum.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Sequence

from .errors import (
    BacfiViolation,
    ExponentNotCylinderConstant,
    ExponentTooSmall,
    MalformedDocument,
    NotAPermutation,
    NotConnected,
)
from .perms import compose, inverse, is_permutation, is_transitive, orbits


@dataclass(frozen=True)
class Cylinder:
    """One orbit of ``east`` (horizontal) or ``north`` (vertical)."""

    kind: str                      # "horizontal" | "vertical"
    squares: tuple[int, ...]       # cyclically ordered, starting at the minimum
    exponent: int

    @property
    def width(self) -> int:
        return len(self.squares)


@dataclass(frozen=True)
class VertexClass:
    """A vertex of the square complex.

    Vertices are represented by south-west corners of squares; two
    corners coincide when they lie in one cycle of the rotation
    ``north . east . south . west``.  A cycle of length k is a point of
    total angle 2*pi*k on the translation surface.
    """

    corner_squares: tuple[int, ...]

    @property
    def cone_angle_turns(self) -> int:
        return len(self.corner_squares)


@dataclass(frozen=True)
class BacfiSurface:
    n: int
    east: tuple[int, ...]
    north: tuple[int, ...]
    h_exp: tuple[int, ...]
    v_exp: tuple[int, ...]

    def __post_init__(self):
        n = self.n
        if not isinstance(n, int) or n < 1:
            raise MalformedDocument(f"number of squares must be a positive integer, got {n!r}")
        for name in ("east", "north", "h_exp", "v_exp"):
            value = getattr(self, name)
            if not isinstance(value, tuple):
                object.__setattr__(self, name, tuple(value))
        for name in ("east", "north"):
            p = getattr(self, name)
            if not is_permutation(p, n):
                raise NotAPermutation(f"{name} is not a permutation of 0..{n - 1}: {list(p)}")
        ne = self.northeast
        for q in range(n):
            if ne[ne[q]] != q:
                raise BacfiViolation(
                    f"north(east(north(east(q)))) != q at q={q}: "
                    f"the diagonal move sends {q} -> {ne[q]} -> {ne[ne[q]]}"
                )
        if not is_transitive([self.east, self.north], n):
            raise NotConnected("east and north do not act transitively on the squares")
        self._check_exponents("h_exp", self.h_exp, self.east)
        self._check_exponents("v_exp", self.v_exp, self.north)

    def _check_exponents(self, name: str, exp: tuple[int, ...], perm: tuple[int, ...]):
        if len(exp) != self.n:
            raise MalformedDocument(f"{name} must have length {self.n}, got {len(exp)}")
        if any(not isinstance(e, int) or e < 1 for e in exp):
            raise MalformedDocument(f"{name} entries must be integers >= 1: {list(exp)}")
        for cyc in orbits(perm):
            values = {exp[q] for q in cyc}
            if len(values) > 1:
                raise ExponentNotCylinderConstant(
                    f"{name} takes several values {sorted(values)} on the cylinder {cyc}"
                )
            if exp[cyc[0]] * len(cyc) < 2:
                raise ExponentTooSmall(
                    f"cylinder {cyc} has exponent {exp[cyc[0]]} and width {len(cyc)}; "
                    "exponent * width must be at least 2"
                )

    # -- derived permutations ------------------------------------------

    @cached_property
    def west(self) -> tuple[int, ...]:
        return inverse(self.east)

    @cached_property
    def south(self) -> tuple[int, ...]:
        return inverse(self.north)

    @cached_property
    def northeast(self) -> tuple[int, ...]:
        """The involution q -> north[east[q]]."""
        return compose(self.north, self.east)

    @cached_property
    def rotation(self) -> tuple[int, ...]:
        """Counterclockwise rotation around the south-west corner:
        north . east . south . west."""
        return compose(self.north, compose(self.east, compose(self.south, self.west)))


def cylinders(s: BacfiSurface, kind: str) -> list[Cylinder]:
    """Cylinders of the given kind, sorted by minimal square index."""
    if kind == "horizontal":
        perm, exp = s.east, s.h_exp
    elif kind == "vertical":
        perm, exp = s.north, s.v_exp
    else:
        raise ValueError(f"kind must be 'horizontal' or 'vertical', got {kind!r}")
    return [Cylinder(kind, tuple(cyc), exp[cyc[0]]) for cyc in orbits(perm)]


def cylinder_of(s: BacfiSurface, q: int, kind: str) -> Cylinder:
    """The cylinder of the given kind through square ``q``."""
    for cyl in cylinders(s, kind):
        if q in cyl.squares:
            return cyl
    raise ValueError(f"square {q} out of range")


def vertex_classes(s: BacfiSurface) -> list[VertexClass]:
    """Vertices of the square complex as cycles of the corner rotation."""
    return [VertexClass(tuple(cyc)) for cyc in orbits(s.rotation)]


def genus_from_euler(s: BacfiSurface) -> int:
    """Genus via 2 - 2g = V - E + F with V vertex classes, 2n edges and
    n squares."""
    v = len(vertex_classes(s))
    chi = v - 2 * s.n + s.n
    if chi % 2 != 0:
        raise AssertionError(f"odd Euler characteristic {chi} on a closed surface")
    return (2 - chi) // 2


# -- serialization -------------------------------------------------------

def surface_to_dict(s: BacfiSurface) -> dict[str, Any]:
    return {
        "squares": s.n,
        "east": list(s.east),
        "north": list(s.north),
        "h_exp": list(s.h_exp),
        "v_exp": list(s.v_exp),
    }


def surface_from_dict(doc: Any) -> BacfiSurface:
    if not isinstance(doc, dict):
        raise MalformedDocument(f"surface document must be a JSON object, got {type(doc).__name__}")
    required = {"squares", "east", "north", "h_exp", "v_exp"}
    missing = required - doc.keys()
    if missing:
        raise MalformedDocument(f"surface document is missing keys: {sorted(missing)}")
    extra = doc.keys() - required
    if extra:
        raise MalformedDocument(f"surface document has unknown keys: {sorted(extra)}")
    n = doc["squares"]
    if not isinstance(n, int):
        raise MalformedDocument(f"'squares' must be an integer, got {n!r}")
    for key in ("east", "north", "h_exp", "v_exp"):
        value = doc[key]
        if not isinstance(value, list) or any(not isinstance(x, int) for x in value):
            raise MalformedDocument(f"'{key}' must be a list of integers")
    return BacfiSurface(
        n=n,
        east=tuple(doc["east"]),
        north=tuple(doc["north"]),
        h_exp=tuple(doc["h_exp"]),
        v_exp=tuple(doc["v_exp"]),
    )


def parse_surface(text: str) -> BacfiSurface:
    """Parse and fully validate a surface document (JSON, UTF-8)."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedDocument(f"not valid JSON: {exc}") from exc
    return surface_from_dict(doc)


def serialize_surface(s: BacfiSurface) -> str:
    return json.dumps(surface_to_dict(s), sort_keys=True) + "\n"


# -- isomorphism ---------------------------------------------------------

def find_isomorphism(a: BacfiSurface, b: BacfiSurface) -> tuple[int, ...] | None:
    """A relabelling of squares carrying ``a`` to ``b``, or None.

    The relabelling must commute with east and north and preserve both
    exponent arrays.  Since east and north act transitively it is
    determined by the image of square 0.
    """
    if a.n != b.n:
        return None
    for image_of_zero in range(b.n):
        phi: list[int | None] = [None] * a.n
        phi[0] = image_of_zero
        stack = [0]
        ok = True
        while stack and ok:
            q = stack.pop()
            for pa, pb in ((a.east, b.east), (a.north, b.north)):
                q2, target = pa[q], pb[phi[q]]
                if phi[q2] is None:
                    phi[q2] = target
                    stack.append(q2)
                elif phi[q2] != target:
                    ok = False
                    break
        if not ok or None in phi:
            continue
        if sorted(phi) != list(range(a.n)):
            continue
        if all(a.h_exp[q] == b.h_exp[phi[q]] and a.v_exp[q] == b.v_exp[phi[q]] for q in range(a.n)):
            return tuple(phi)  # type: ignore[arg-type]
    return None


def are_isomorphic(a: BacfiSurface, b: BacfiSurface) -> bool:
    return find_isomorphism(a, b) is not None
