"""Generation and counting of the full die space for a given n."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from dicelab.dice import Die, face_total


class DieSpaceIterator:
    """Lazily yields every n-sided die once, in lexicographic face order.

    Faces are chosen left to right, never decreasing, and a branch is cut as
    soon as the remaining sum cannot be met: with ``r`` slots left and the
    next face at least ``lo``, we need ``r * lo <= remaining <= r * n``.
    """

    def __init__(self, n: int):
        if n < 1:
            raise ValueError(f"n must be positive, got {n}")
        self.n = n
        self._gen = self._walk()

    def __iter__(self) -> Iterator[Die]:
        return self

    def __next__(self) -> Die:
        return next(self._gen)

    def _walk(self) -> Iterator[Die]:
        n = self.n
        faces: list[int] = []

        def extend(lo: int, remaining: int) -> Iterator[Die]:
            r = n - len(faces)
            if r == 0:
                if remaining == 0:
                    yield Die(n, tuple(faces))
                return
            for v in range(lo, n + 1):
                if v * r > remaining:
                    break
                if remaining - v > (r - 1) * n:
                    continue
                faces.append(v)
                yield from extend(v, remaining - v)
                faces.pop()

        yield from extend(1, face_total(n))


def enumerate_dice(n: int) -> DieSpaceIterator:
    return DieSpaceIterator(n)


def count_dice(n: int) -> int:
    """Size of the die space, by dynamic programming; no dice are built."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")

    @lru_cache(maxsize=None)
    def ways(slots: int, lo: int, remaining: int) -> int:
        if slots == 0:
            return 1 if remaining == 0 else 0
        total = 0
        for v in range(lo, n + 1):
            if v * slots > remaining:
                break
            total += ways(slots - 1, v, remaining - v)
        return total

    return ways(n, 1, face_total(n))
