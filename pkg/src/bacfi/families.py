"""Builtin surface families used throughout the test suite and the CLI.

Each generator returns a validated :class:`~bacfi.surface.BacfiSurface`.

* ``example1(p, q, r, s)`` -- the 2x2 torus coming from a cross on a
  sphere with four cone points; ``p, r`` sit on the two horizontal
  cylinders (rows), ``q, s`` on the two vertical ones (columns).
* ``example2()`` -- the 12-square torus with two horizontal cylinders of
  width 6 glued with a shift of two squares.
* ``example3(q, r)`` -- the one-square surface whose monodromy lives on
  the sphere with cone points (2, q, r).
* ``example4(q, r)`` -- three squares, two horizontal cylinders but a
  single vertical one; the divide is a loop through an order-2 point
  with one double point.
* ``pingpong(n, q, r)`` -- the even ping-pong on 4n-1 squares: rows of
  widths 2, 4, ..., 4, 1 with exponents q, 1, ..., 1, r, descending in a
  staircase; ``pingpong(1, q, r)`` degenerates to ``example4(q, r)``.
"""

from __future__ import annotations

from .surface import BacfiSurface


def example1(p: int, q: int, r: int, s: int) -> BacfiSurface:
    # squares 0,1 bottom row, 2,3 top row; east swaps within rows,
    # north swaps within columns.
    return BacfiSurface(
        n=4,
        east=(1, 0, 3, 2),
        north=(2, 3, 0, 1),
        h_exp=(p, p, r, r),
        v_exp=(q, s, q, s),
    )


def example2() -> BacfiSurface:
    # squares 0..5 bottom row, 6..11 top row; going north from the top
    # row re-enters the bottom row two squares to the west.
    east = tuple((i + 1) % 6 for i in range(6)) + tuple(6 + (i + 1) % 6 for i in range(6))
    north = tuple(6 + i for i in range(6)) + tuple((i - 2) % 6 for i in range(6))
    return BacfiSurface(n=12, east=east, north=north, h_exp=(1,) * 12, v_exp=(1,) * 12)


def example3(q: int, r: int) -> BacfiSurface:
    return BacfiSurface(n=1, east=(0,), north=(0,), h_exp=(q,), v_exp=(r,))


def example4(q: int, r: int) -> BacfiSurface:
    # Of the two 3-cycles completing east=(0 1)(2) to a valid surface,
    # both give isomorphic data (swap squares 0 and 1); this one puts
    # the U-turn on square 1.
    return BacfiSurface(
        n=3,
        east=(1, 0, 2),
        north=(1, 2, 0),
        h_exp=(q, q, r),
        v_exp=(1, 1, 1),
    )


def pingpong(n: int, q: int, r: int) -> BacfiSurface:
    """Even ping-pong surface on 4n-1 squares.

    Rows are [0, 1], then n-1 rows of four squares, then a single
    square.  East cycles each row.  North threads vertical cylinders of
    heights 4, ..., 4, 3: the cylinder below row j contains the two
    leftmost squares of row j and the two rightmost squares of row j+1.
    """
    if n < 1:
        raise ValueError(f"pingpong needs n >= 1, got {n}")
    total = 4 * n - 1
    rows = [[0, 1]] + [[4 * i - 2, 4 * i - 1, 4 * i, 4 * i + 1] for i in range(1, n)] + [[total - 1]]
    east = [0] * total
    for row in rows:
        for k, sq in enumerate(row):
            east[sq] = row[(k + 1) % len(row)]
    north = [0] * total
    for j in range(n - 1):
        lm, rm = rows[j][0], rows[j + 1][-1]
        north[rm] = lm
        north[lm] = lm + 1
        north[lm + 1] = rm - 1
        north[rm - 1] = rm
    lm, t = rows[n - 1][0], total - 1
    north[t] = lm
    north[lm] = lm + 1
    north[lm + 1] = t
    h_exp = [0] * total
    for j, row in enumerate(rows):
        e = q if j == 0 else r if j == n else 1
        for sq in row:
            h_exp[sq] = e
    return BacfiSurface(
        n=total,
        east=tuple(east),
        north=tuple(north),
        h_exp=tuple(h_exp),
        v_exp=(1,) * total,
    )


def wide_torus(width: int = 10, shift: int = 4) -> BacfiSurface:
    """One-row torus with long cylinders, the fixture for the stretch
    factor certificate.

    East is the cycle i -> i+1 on Z/width, north is i -> i+shift.  The
    defaults give one horizontal cylinder of width 10 and two vertical
    cylinders of height 5, with no square fixed by the diagonal move.
    """
    if (2 + 2 * shift) % width != 0:
        raise ValueError(f"need width | 2 + 2*shift for a valid surface, got {width}, {shift}")
    east = tuple((i + 1) % width for i in range(width))
    north = tuple((i + shift) % width for i in range(width))
    return BacfiSurface(n=width, east=east, north=north, h_exp=(1,) * width, v_exp=(1,) * width)


BUILTIN = {
    "example1": (example1, ("p", "q", "r", "s")),
    "example2": (example2, ()),
    "example3": (example3, ("q", "r")),
    "example4": (example4, ("q", "r")),
    "pingpong": (pingpong, ("n", "q", "r")),
}
