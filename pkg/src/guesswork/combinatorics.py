"""Minimal-change generators: permutations, sign patterns, combinations.

Each cursor walks its whole configuration space emitting one elementary
step at a time (a transposition, a sign flip, or a single element
exchange), so a caller can maintain derived quantities with a
constant-size update per step.  Exhaustion is a normal None return, not
an error.  Positions are 1-based throughout.
"""

from __future__ import annotations

from typing import Iterator, Optional


class PermutationCursor:
    """All n! orderings by adjacent transpositions (Johnson-Trotter).

    next_swap() returns the 1-based position pair (i, j), i < j, that was
    just exchanged, or None once every ordering has been visited.  Exactly
    n! - 1 swaps are emitted.
    """

    def __init__(self, n: int):
        if n < 0:
            raise ValueError("n must be >= 0")
        self.n = n
        self._vals = list(range(1, n + 1))
        self._dirs = [-1] * n

    def next_swap(self) -> Optional[tuple[int, int]]:
        vals, dirs, n = self._vals, self._dirs, self.n
        largest = 0
        at = -1
        for i in range(n):
            j = i + dirs[i]
            if 0 <= j < n and vals[j] < vals[i] and vals[i] > largest:
                largest = vals[i]
                at = i
        if at < 0:
            return None
        j = at + dirs[at]
        vals[at], vals[j] = vals[j], vals[at]
        dirs[at], dirs[j] = dirs[j], dirs[at]
        for i in range(n):
            if vals[i] > largest:
                dirs[i] = -dirs[i]
        return (at + 1, j + 1) if at < j else (j + 1, at + 1)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        while (step := self.next_swap()) is not None:
            yield step


class GrayCursor:
    """All 2^m sign patterns by single flips (reflected binary Gray code).

    next_flip() returns the 1-based position whose sign changes, or None
    after 2^m - 1 flips.
    """

    def __init__(self, m: int):
        if m < 0:
            raise ValueError("m must be >= 0")
        self.m = m
        self._t = 0
        self._end = (1 << m) - 1

    def next_flip(self) -> Optional[int]:
        if self._t >= self._end:
            return None
        self._t += 1
        t = self._t
        return (t & -t).bit_length()  # 1 + number of trailing zeros

    def __iter__(self) -> Iterator[int]:
        while (k := self.next_flip()) is not None:
            yield k


def _door_forward(n: int, d: int) -> Iterator[tuple[int, ...]]:
    # revolving-door order: first {1..d}, last {1..d-1, n}
    if d == 0:
        yield ()
        return
    if d == n:
        yield tuple(range(1, n + 1))
        return
    yield from _door_forward(n - 1, d)
    for s in _door_backward(n - 1, d - 1):
        yield s + (n,)


def _door_backward(n: int, d: int) -> Iterator[tuple[int, ...]]:
    if d == 0:
        yield ()
        return
    if d == n:
        yield tuple(range(1, n + 1))
        return
    for s in _door_forward(n - 1, d - 1):
        yield s + (n,)
    yield from _door_backward(n - 1, d)


class CombinationCursor:
    """All C(n, d) d-subsets of {1..n} by single element exchanges.

    Uses the revolving-door minimal-change order: consecutive subsets
    differ by removing one element and inserting another.
    next_combination() returns the pair (out, in) of 1-based ground-set
    elements exchanged, or None at exhaustion.  The current subset is
    available as `selection` (a sorted tuple).
    """

    def __init__(self, n: int, d: int):
        if n < 0 or d < 0:
            raise ValueError("n and d must be >= 0")
        if d > n:
            raise ValueError(f"combination size {d} exceeds ground set size {n}")
        self.n = n
        self.d = d
        self._seq = _door_forward(n, d)
        self.selection: tuple[int, ...] = next(self._seq)

    def next_combination(self) -> Optional[tuple[int, int]]:
        nxt = next(self._seq, None)
        if nxt is None:
            return None
        prev = set(self.selection)
        cur = set(nxt)
        (out,) = prev - cur
        (ins,) = cur - prev
        self.selection = nxt
        return out, ins

    def __iter__(self) -> Iterator[tuple[int, int]]:
        while (step := self.next_combination()) is not None:
            yield step
