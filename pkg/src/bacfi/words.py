"""Positive words in X = (1 1; 0 1) and Y = (1 0; 1 1).

Every integer 2x2 matrix of determinant 1 and trace at least 2 is
conjugate to a positive product of X's and Y's, unique up to cyclic
rotation.  We canonicalize by the lexicographically least rotation.

The word is found in two steps: conjugate the matrix into one with
nonnegative entries (greedy descent on the sum of absolute values of
the entries, with a breadth-first fallback), then peel generators off
the left: X comes off when the top row dominates the bottom one, Y in
the opposite case, and for a nonnegative determinant-1 matrix other
than the identity exactly one of the two applies.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import BacfiError, NotGenusOne, NotSL2, TraceTooSmall

Mat2 = tuple[tuple[int, int], tuple[int, int]]

X: Mat2 = ((1, 1), (0, 1))
Y: Mat2 = ((1, 0), (1, 1))
X_INV: Mat2 = ((1, -1), (0, 1))
Y_INV: Mat2 = ((1, 0), (-1, 1))
IDENTITY: Mat2 = ((1, 0), (0, 1))


def mat_mul(a: Mat2, b: Mat2) -> Mat2:
    return (
        (a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]),
        (a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]),
    )


def det(m: Mat2) -> int:
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def trace(m: Mat2) -> int:
    return m[0][0] + m[1][1]


def inverse_unimodular(m: Mat2) -> Mat2:
    d = det(m)
    if abs(d) != 1:
        raise NotSL2(f"matrix with determinant {d} has no integer inverse")
    return ((d * m[1][1], -d * m[0][1]), (-d * m[1][0], d * m[0][0]))


def evaluate_word(word: str) -> Mat2:
    out = IDENTITY
    for letter in word:
        if letter == "X":
            out = mat_mul(out, X)
        elif letter == "Y":
            out = mat_mul(out, Y)
        else:
            raise ValueError(f"word may only contain X and Y, got {letter!r}")
    return out


def canonical_rotation(word: str) -> str:
    return min(word[i:] + word[:i] for i in range(len(word))) if word else word


@dataclass(frozen=True)
class XYWord:
    """Canonical cyclic positive word with its conjugator: evaluating
    ``word`` gives ``conjugator * M * conjugator^-1`` for the input M
    (for :func:`torus_word` with ``mirrored`` set, for the input
    conjugated by diag(1, -1))."""

    word: str
    conjugator: Mat2
    mirrored: bool = False

    def matrix(self) -> Mat2:
        return evaluate_word(self.word)


def _abs_sum(m: Mat2) -> int:
    return abs(m[0][0]) + abs(m[0][1]) + abs(m[1][0]) + abs(m[1][1])


def _is_nonnegative(m: Mat2) -> bool:
    return m[0][0] >= 0 and m[0][1] >= 0 and m[1][0] >= 0 and m[1][1] >= 0


_CONJUGATORS = (X, X_INV, Y, Y_INV)


def _nonnegative_conjugate(m: Mat2, node_limit: int = 100000) -> tuple[Mat2, Mat2]:
    """(n, p) with n = p m p^-1 entrywise nonnegative."""
    current, conj = m, IDENTITY
    while not _is_nonnegative(current):
        best = None
        for g in _CONJUGATORS:
            candidate = mat_mul(mat_mul(g, current), inverse_unimodular(g))
            if _abs_sum(candidate) < _abs_sum(current):
                if best is None or _abs_sum(candidate) < _abs_sum(best[0]):
                    best = (candidate, g)
        if best is None:
            break
        current = best[0]
        conj = mat_mul(best[1], conj)
    if _is_nonnegative(current):
        return current, conj
    # breadth-first fallback around the local minimum
    queue = deque([(current, conj)])
    seen = {current}
    while queue and len(seen) < node_limit:
        mat, p = queue.popleft()
        for g in _CONJUGATORS:
            candidate = mat_mul(mat_mul(g, mat), inverse_unimodular(g))
            if candidate in seen:
                continue
            q = mat_mul(g, p)
            if _is_nonnegative(candidate):
                return candidate, q
            seen.add(candidate)
            queue.append((candidate, q))
    raise BacfiError("no nonnegative conjugate found within the search bound")


def _peel(n: Mat2) -> str:
    letters = []
    while n != IDENTITY:
        (a, b), (c, d) = n
        if a >= c and b >= d:
            letters.append("X")
            n = mat_mul(X_INV, n)
        elif c >= a and d >= b:
            letters.append("Y")
            n = mat_mul(Y_INV, n)
        else:
            raise BacfiError(f"cannot peel generators off {n}")
    return "".join(letters)


def xy_word(m: Mat2) -> XYWord:
    """Canonical positive word conjugate to m, with the conjugator."""
    m = (tuple(m[0]), tuple(m[1]))  # type: ignore[assignment]
    if det(m) != 1:
        raise NotSL2(f"determinant must be 1, got {det(m)}")
    if trace(m) <= 2:
        raise TraceTooSmall(
            f"trace {trace(m)} <= 2: periodic or reducible, no hyperbolic positive word"
        )
    nonneg, p = _nonnegative_conjugate(m)
    word = _peel(nonneg)
    # rotating the word by i conjugates its value by the first i letters
    best_word, best_conj = None, None
    prefix = IDENTITY
    for i in range(len(word)):
        rotated = word[i:] + word[:i]
        if best_word is None or rotated < best_word:
            best_word = rotated
            best_conj = mat_mul(inverse_unimodular(prefix), p)
        prefix = mat_mul(prefix, evaluate_word(word[i]))
    assert best_word is not None and best_conj is not None
    result = XYWord(word=best_word, conjugator=best_conj)
    check = mat_mul(mat_mul(best_conj, m), inverse_unimodular(best_conj))
    assert evaluate_word(best_word) == check, "conjugator bookkeeping failed"
    return result


def torus_word(s) -> XYWord:
    """Canonical positive word of the monodromy's H1 action on a
    genus-one surface.

    If the computed H1 basis has the wrong orientation for a positive
    word, the matrix conjugated by diag(1, -1) is used instead and the
    result is marked ``mirrored``.
    """
    from .antitwist import monodromy
    from .homology import h1_matrix
    from .surface import genus_from_euler

    if genus_from_euler(s) != 1:
        raise NotGenusOne(f"torus words need genus 1, got genus {genus_from_euler(s)}")
    h1 = h1_matrix(s, monodromy(s))
    m: Mat2 = (tuple(h1.matrix[0]), tuple(h1.matrix[1]))  # type: ignore[assignment]
    try:
        return xy_word(m)
    except TraceTooSmall:
        raise
    except BacfiError:
        mirrored = ((m[0][0], -m[0][1]), (-m[1][0], m[1][1]))
        result = xy_word(mirrored)
        return XYWord(word=result.word, conjugator=result.conjugator, mirrored=True)
