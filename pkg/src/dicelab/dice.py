"""Die values, face-count profiles and the one-step transfer.

A die with ``n`` sides is stored as its faces sorted ascending. Every face
lies in ``1..n`` and the faces sum to ``n(n+1)/2``, which is the same as
saying the die, rolled uniformly over its slots, has mean ``(n+1)/2``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence


class DieError(ValueError):
    """Base class for malformed dice and illegal operations on them."""


class WrongLength(DieError):
    pass


class FaceOutOfRange(DieError):
    pass


class WrongSum(DieError):
    pass


class StepError(DieError):
    pass


class DecrementFloor(StepError):
    pass


class IncrementCeiling(StepError):
    pass


class SamePosition(StepError):
    pass


def face_total(n: int) -> int:
    return n * (n + 1) // 2


@dataclass(frozen=True, order=True)
class Die:
    """An n-sided die in canonical (ascending) form.

    Construct through :func:`make_die` when the faces may be unsorted; the
    constructor itself only validates.
    """

    n: int
    faces: tuple[int, ...]

    def __post_init__(self) -> None:
        n, faces = self.n, self.faces
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise DieError(f"number of sides must be a positive integer, got {n!r}")
        if len(faces) != n:
            raise WrongLength(f"expected {n} faces, got {len(faces)}")
        for f in faces:
            if not isinstance(f, int) or isinstance(f, bool):
                raise DieError(f"faces must be integers, got {f!r}")
            if not 1 <= f <= n:
                raise FaceOutOfRange(f"face {f} outside 1..{n}")
        if sum(faces) != face_total(n):
            raise WrongSum(f"faces sum to {sum(faces)}, need {face_total(n)}")
        if any(a > b for a, b in zip(faces, faces[1:])):
            raise DieError("faces must be sorted ascending; use make_die")

    def __iter__(self):
        return iter(self.faces)

    def __len__(self) -> int:
        return self.n

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.faces)) + "}"

    def is_standard(self) -> bool:
        return self.faces == tuple(range(1, self.n + 1))

    def to_json(self) -> list[int]:
        return list(self.faces)


def make_die(n: int, faces: Iterable[int]) -> Die:
    faces = tuple(faces)
    if len(faces) != n:
        raise WrongLength(f"expected {n} faces, got {len(faces)}")
    try:
        ordered = tuple(sorted(faces))
    except TypeError as exc:
        raise DieError(f"faces must be integers: {exc}") from None
    return Die(n, ordered)


def parse_die(text: str) -> Die:
    """Parse a JSON integer array such as ``"[1,1,4,4]"``; n is its length."""
    try:
        value = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DieError(f"die literal is not valid JSON: {exc.msg}") from None
    if not isinstance(value, list) or not value:
        raise DieError("die literal must be a non-empty JSON array of integers")
    return make_die(len(value), value)


def standard_die(n: int) -> Die:
    return Die(n, tuple(range(1, n + 1)))


@dataclass(frozen=True)
class GammaProfile:
    """Face multiplicities. ``counts[k - 1]`` is how often face ``k`` occurs."""

    n: int
    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.counts) != self.n:
            raise DieError("gamma profile must have n entries")
        if any(c < 0 for c in self.counts):
            raise DieError("gamma counts must be non-negative")
        if sum(self.counts) != self.n:
            raise DieError("gamma counts must sum to n")
        if sum(k * c for k, c in enumerate(self.counts, 1)) != face_total(self.n):
            raise DieError("gamma profile violates the face-sum constraint")

    def at(self, k: int) -> int:
        """1-indexed access; faces outside 1..n have count 0."""
        return self.counts[k - 1] if 1 <= k <= self.n else 0

    def to_die(self) -> Die:
        faces = [k for k, c in enumerate(self.counts, 1) for _ in range(c)]
        return Die(self.n, tuple(faces))


@dataclass(frozen=True)
class XiProfile:
    """Adjacent count sums, ``values[k - 1] = gamma_k + gamma_{k+1}`` for k in 1..n-1."""

    n: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.values) != max(self.n - 1, 0):
            raise DieError("xi profile must have n - 1 entries")
        if any(not 0 <= v <= self.n for v in self.values):
            raise DieError("xi entries must lie in 0..n")

    def at(self, k: int) -> int:
        return self.values[k - 1]


def gamma_profile(d: Die) -> GammaProfile:
    counts = [0] * d.n
    for f in d.faces:
        counts[f - 1] += 1
    return GammaProfile(d.n, tuple(counts))


def xi_profile(g: GammaProfile) -> XiProfile:
    c = g.counts
    return XiProfile(g.n, tuple(c[k] + c[k + 1] for k in range(g.n - 1)))


def one_step(d: Die, i: int, j: int) -> Die:
    """Decrement the face at position ``i`` and increment the face at ``j``.

    Positions are 0-based indices into ``d.faces`` (the canonical order).
    The result is re-sorted.
    """
    if i == j:
        raise SamePosition(f"positions must differ, got i = j = {i}")
    faces = list(d.faces)
    if faces[i] == 1:
        raise DecrementFloor(f"face at position {i} is already 1")
    if faces[j] == d.n:
        raise IncrementCeiling(f"face at position {j} is already {d.n}")
    faces[i] -= 1
    faces[j] += 1
    return Die(d.n, tuple(sorted(faces)))


def one_step_neighbors(d: Die) -> frozenset[Die]:
    # Positions holding equal faces give the same result, so iterate over
    # distinct face values; a repeated value may still transfer to itself.
    values = sorted(set(d.faces))
    out = set()
    for down in values:
        if down == 1:
            continue
        i = d.faces.index(down)
        for up in values:
            if up == d.n:
                continue
            j = d.faces.index(up)
            if up == down:
                if d.faces.count(up) < 2:
                    continue
                j += 1
            out.add(one_step(d, i, j))
    out.discard(d)
    return frozenset(out)


def dice_to_json(dice: Sequence[Die]) -> list[list[int]]:
    return [d.to_json() for d in dice]
