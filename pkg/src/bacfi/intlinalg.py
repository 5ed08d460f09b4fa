"""Exact linear algebra over the integers for small dense matrices.

Matrices are lists of lists of Python ints (arbitrary precision).  All
routines are deterministic: pivots are chosen by minimal absolute value
with lowest index as tie break, so repeated runs produce identical
bases.  Sizes here stay in the tens, so no effort is spent on
asymptotics; correctness and exactness are what matter.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = list[list[int]]


def mat_identity(k: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(k)] for i in range(k)]


def mat_copy(a: Sequence[Sequence[int]]) -> Matrix:
    return [list(row) for row in a]


def mat_mul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Matrix:
    rows, mid, cols = len(a), len(b), len(b[0]) if b else 0
    out = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        ai = a[i]
        oi = out[i]
        for t in range(mid):
            c = ai[t]
            if c:
                bt = b[t]
                for j in range(cols):
                    oi[j] += c * bt[j]
    return out


def mat_vec(a: Sequence[Sequence[int]], v: Sequence[int]) -> list[int]:
    return [sum(row[j] * v[j] for j in range(len(v))) for row in a]


def transpose(a: Sequence[Sequence[int]]) -> Matrix:
    return [list(col) for col in zip(*a)] if a else []


def mat_trace(a: Sequence[Sequence[int]]) -> int:
    return sum(a[i][i] for i in range(len(a)))


def kernel_basis(a: Sequence[Sequence[int]]) -> Matrix:
    """Basis of the kernel lattice ker(a) x Z^n, as columns.

    Integer column reduction of ``a`` while tracking the applied
    unimodular transform; the transform columns over the zero columns of
    the reduced matrix span the kernel saturated in Z^n.
    """
    m = len(a)
    n = len(a[0]) if m else 0
    work = mat_copy(a)
    trans = mat_identity(n)
    pivot_cols: set[int] = set()

    def col_addmul(dst: int, src: int, c: int):
        for i in range(m):
            work[i][dst] += c * work[i][src]
        for i in range(n):
            trans[i][dst] += c * trans[i][src]

    for row in range(m):
        while True:
            active = [j for j in range(n) if j not in pivot_cols and work[row][j] != 0]
            if len(active) <= 1:
                break
            piv = min(active, key=lambda j: (abs(work[row][j]), j))
            for j in active:
                if j != piv:
                    col_addmul(j, piv, -(work[row][j] // work[row][piv]))
        active = [j for j in range(n) if j not in pivot_cols and work[row][j] != 0]
        if active:
            pivot_cols.add(active[0])

    kernel_cols = [j for j in range(n) if j not in pivot_cols
                   and all(work[i][j] == 0 for i in range(m))]
    return [[trans[i][j] for j in kernel_cols] for i in range(n)]


def solve_rational(a: Sequence[Sequence[int]], b: Sequence[int]) -> list[Fraction] | None:
    """Solve a x = b over Q for a with full column rank; None if
    inconsistent."""
    m = len(a)
    n = len(a[0]) if m else 0
    aug = [[Fraction(a[i][j]) for j in range(n)] + [Fraction(b[i])] for i in range(m)]
    row = 0
    pivots = []
    for col in range(n):
        piv = next((i for i in range(row, m) if aug[i][col] != 0), None)
        if piv is None:
            continue
        aug[row], aug[piv] = aug[piv], aug[row]
        inv = 1 / aug[row][col]
        aug[row] = [x * inv for x in aug[row]]
        for i in range(m):
            if i != row and aug[i][col] != 0:
                factor = aug[i][col]
                aug[i] = [x - factor * y for x, y in zip(aug[i], aug[row])]
        pivots.append(col)
        row += 1
        if row == m:
            break
    if len(pivots) < n:
        raise ValueError("matrix does not have full column rank")
    for i in range(row, m):
        if aug[i][n] != 0:
            return None
    x = [Fraction(0)] * n
    for i, col in enumerate(pivots):
        x[col] = aug[i][n]
    return x


def solve_integer(a: Sequence[Sequence[int]], b: Sequence[int]) -> list[int]:
    """Solve a x = b demanding an integer solution."""
    x = solve_rational(a, b)
    if x is None:
        raise ValueError("inconsistent linear system")
    if any(f.denominator != 1 for f in x):
        raise ValueError(f"solution is not integral: {x}")
    return [f.numerator for f in x]


def smith_with_transforms(a: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix, Matrix, Matrix]:
    """Smith normal form with transforms.

    Returns (u, u_inv, s, v) with u * a * v = s, u and v unimodular, s
    diagonal with each entry dividing the next.
    """
    m = len(a)
    n = len(a[0]) if m else 0
    s = mat_copy(a)
    u = mat_identity(m)
    u_inv = mat_identity(m)
    v = mat_identity(n)

    def row_addmul(dst: int, src: int, c: int):
        # s, u gain row_dst += c*row_src; u_inv compensates on columns.
        for j in range(n):
            s[dst][j] += c * s[src][j]
        for j in range(m):
            u[dst][j] += c * u[src][j]
        for i in range(m):
            u_inv[i][src] -= c * u_inv[i][dst]

    def row_swap(i: int, j: int):
        s[i], s[j] = s[j], s[i]
        u[i], u[j] = u[j], u[i]
        for r in range(m):
            u_inv[r][i], u_inv[r][j] = u_inv[r][j], u_inv[r][i]

    def row_negate(i: int):
        s[i] = [-x for x in s[i]]
        u[i] = [-x for x in u[i]]
        for r in range(m):
            u_inv[r][i] = -u_inv[r][i]

    def col_addmul(dst: int, src: int, c: int):
        for i in range(m):
            s[i][dst] += c * s[i][src]
        for i in range(n):
            v[i][dst] += c * v[i][src]

    def col_swap(i: int, j: int):
        for r in range(m):
            s[r][i], s[r][j] = s[r][j], s[r][i]
        for r in range(n):
            v[r][i], v[r][j] = v[r][j], v[r][i]

    t = 0
    while t < min(m, n):
        entries = [(abs(s[i][j]), i, j) for i in range(t, m) for j in range(t, n) if s[i][j] != 0]
        if not entries:
            break
        _, pi, pj = min(entries)
        if pi != t:
            row_swap(t, pi)
        if pj != t:
            col_swap(t, pj)
        dirty = False
        for i in range(t + 1, m):
            if s[i][t] != 0:
                q = s[i][t] // s[t][t]
                row_addmul(i, t, -q)
                if s[i][t] != 0:
                    dirty = True
        for j in range(t + 1, n):
            if s[t][j] != 0:
                q = s[t][j] // s[t][t]
                col_addmul(j, t, -q)
                if s[t][j] != 0:
                    dirty = True
        if dirty:
            continue
        # enforce divisibility of the remaining block by the pivot
        offender = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                         if s[i][j] % s[t][t] != 0), None)
        if offender is not None:
            row_addmul(t, offender[0], 1)
            continue
        if s[t][t] < 0:
            row_negate(t)
        t += 1
    return u, u_inv, s, v


def det_bareiss(a: Sequence[Sequence[int]]) -> int:
    """Determinant by fraction-free (Bareiss) elimination."""
    n = len(a)
    if n == 0:
        return 1
    work = mat_copy(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if work[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if work[i][k] != 0), None)
            if piv is None:
                return 0
            work[k], work[piv] = work[piv], work[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                work[i][j] = (work[i][j] * work[k][k] - work[i][k] * work[k][j]) // prev
            work[i][k] = 0
        prev = work[k][k]
    return sign * work[n - 1][n - 1]


def charpoly(a: Sequence[Sequence[int]]) -> list[int]:
    """Coefficients of det(x*I - a), lowest degree first.

    Evaluates the characteristic polynomial at k+1 integer points by
    fraction-free elimination and interpolates exactly.
    """
    k = len(a)
    if k == 0:
        return [1]
    points = list(range(k + 1))
    values = []
    for t in points:
        shifted = [[(t if i == j else 0) - a[i][j] for j in range(k)] for i in range(k)]
        values.append(det_bareiss(shifted))
    # Newton interpolation over Q; the result is monic with integer
    # coefficients, which we assert.
    divided = [Fraction(v) for v in values]
    for order in range(1, k + 1):
        for i in range(k, order - 1, -1):
            divided[i] = (divided[i] - divided[i - 1]) / (points[i] - points[i - order])
    coeffs = [Fraction(0)] * (k + 1)
    coeffs[0] = divided[k]
    for i in range(k - 1, -1, -1):
        # multiply by (x - points[i]) and add divided[i]
        new = [Fraction(0)] * (k + 1)
        for d in range(k):
            new[d + 1] += coeffs[d]
            new[d] -= coeffs[d] * points[i]
        new[0] += divided[i]
        coeffs = new
    assert all(c.denominator == 1 for c in coeffs), "characteristic polynomial must be integral"
    out = [int(c) for c in coeffs]
    assert out[-1] == 1, "characteristic polynomial must be monic"
    return out
