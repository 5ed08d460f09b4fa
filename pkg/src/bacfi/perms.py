"""Permutations of {0, ..., n-1} stored as integer tuples."""

from __future__ import annotations

from typing import Iterable, Sequence


def identity(n: int) -> tuple[int, ...]:
    return tuple(range(n))


def is_permutation(p: Sequence[int], n: int) -> bool:
    return len(p) == n and sorted(p) == list(range(n))


def compose(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    """p after q: the permutation sending i to p[q[i]]."""
    return tuple(p[q[i]] for i in range(len(p)))


def inverse(p: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def orbits(p: Sequence[int]) -> list[list[int]]:
    """Cycle decomposition; each cycle starts at its minimum, cycles are
    sorted by that minimum."""
    seen = [False] * len(p)
    out = []
    for i in range(len(p)):
        if seen[i]:
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(j)
            j = p[j]
        out.append(cyc)
    return out


def orbit_of(p: Sequence[int], start: int) -> list[int]:
    cyc = [start]
    j = p[start]
    while j != start:
        cyc.append(j)
        j = p[j]
    return cyc


def is_transitive(perms: Iterable[Sequence[int]], n: int) -> bool:
    """Whether the group generated by ``perms`` acts transitively."""
    perms = list(perms)
    seen = [False] * n
    stack = [0]
    seen[0] = True
    count = 1
    while stack:
        i = stack.pop()
        for p in perms:
            j = p[i]
            if not seen[j]:
                seen[j] = True
                count += 1
                stack.append(j)
    return count == n
