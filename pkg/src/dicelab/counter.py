"""Building a die that beats any nonstandard die.

Let ``xi_k`` be the number of faces of the target equal to ``k`` or ``k+1``.
Starting from the standard die, raising face ``i`` to ``i+1`` gains
``xi_i`` net winning pairs against the target, and lowering face ``j+1`` to
``j`` loses ``xi_j``. So any pair with ``xi_i > xi_j`` and ``i != j + 1``
gives a die one transfer away from standard that beats the target.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional, Sequence

from dicelab.dice import Die, DieError, gamma_profile, one_step_neighbors, standard_die, xi_profile
from dicelab.payoff import format_fraction, payoff


class CounterError(DieError):
    pass


class StandardDie(CounterError):
    pass


class TooFewSides(CounterError):
    pass


class InternalExhaustion(CounterError):
    """No admissible pair was found for a nonstandard die. Should be unreachable."""


class BeatVerificationFailed(CounterError):
    """A constructed counter did not beat its target. Should be unreachable."""


MIN_SIDES = 4


@dataclass(frozen=True)
class CounterCertificate:
    target: Die
    pair: Optional[tuple[int, int]]
    counter: Die
    gain: Optional[int]
    exact_payoff: Fraction

    def to_json(self) -> dict:
        return {
            "target": self.target.to_json(),
            "pair": list(self.pair) if self.pair is not None else None,
            "counter": self.counter.to_json(),
            "gain": self.gain,
            "payoff": format_fraction(self.exact_payoff),
        }


class RankedDie(NamedTuple):
    die: Die
    exact_payoff: Fraction
    gain: Optional[int]

    def to_json(self) -> dict:
        return {"die": self.die.to_json(), "payoff": format_fraction(self.exact_payoff), "gain": self.gain}


def _require_sides(n: int) -> None:
    if n < MIN_SIDES:
        raise TooFewSides(f"counters are only defined for n >= {MIN_SIDES}, got n = {n}")


def xi_all_equal(b: Die) -> bool:
    values = xi_profile(gamma_profile(b)).values
    return len(set(values)) <= 1


def relabel_adjacent_pair(xi: Sequence[int], i: int, j: int) -> tuple[int, int]:
    """Turn a strict pair with ``i == j + 1`` into an admissible one.

    ``xi`` is 0-based storage of the 1-indexed profile. Needs ``len(xi) >= 3``.
    """
    if i != j + 1 or not xi[i - 1] > xi[j - 1]:
        raise ValueError(f"({i}, {j}) is not a strict adjacent pair")
    x = lambda k: xi[k - 1]  # noqa: E731
    if j != 1:
        if x(j - 1) <= x(j):
            return i, j - 1
        return j - 1, j
    if i + 1 > len(xi):
        raise InternalExhaustion("profile too short to relabel")
    if x(i + 1) >= x(i):
        return i + 1, j
    return i, i + 1


def find_counter_pair(b: Die) -> tuple[int, int]:
    """Pick ``(i, j)`` in 1..n-1 with ``xi_i > xi_j`` and ``i != j + 1``.

    Among admissible pairs the largest ``xi_i - xi_j`` wins, then the
    smallest ``i``, then the smallest ``j``.
    """
    n = b.n
    _require_sides(n)
    if b.is_standard():
        raise StandardDie("the standard die ties every die; nothing beats it")
    xi = xi_profile(gamma_profile(b)).values
    m = n - 1

    best = None
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            if i == j + 1 or xi[i - 1] <= xi[j - 1]:
                continue
            key = (-(xi[i - 1] - xi[j - 1]), i, j)
            if best is None or key < best:
                best = key
    if best is not None:
        return best[1], best[2]

    # Only adjacent strict pairs remain, if any.
    for j in range(1, m):
        i = j + 1
        if xi[i - 1] > xi[j - 1]:
            pi, pj = relabel_adjacent_pair(xi, i, j)
            if pi != pj + 1 and xi[pi - 1] > xi[pj - 1]:
                return pi, pj
    raise InternalExhaustion(f"no admissible pair for nonstandard die {b} (xi = {xi})")


def apply_pair(n: int, i: int, j: int) -> Die:
    """Standard die with face ``i`` raised by one and face ``j + 1`` lowered by one."""
    if not (1 <= i <= n - 1 and 1 <= j <= n - 1) or i == j + 1:
        raise ValueError(f"({i}, {j}) is not a valid pair for n = {n}")
    faces = list(range(1, n + 1))
    faces[i - 1] += 1
    faces[j] -= 1
    return Die(n, tuple(sorted(faces)))


def construct_counter(b: Die) -> CounterCertificate:
    i, j = find_counter_pair(b)
    xi = xi_profile(gamma_profile(b))
    g = apply_pair(b.n, i, j)
    p = payoff(g, b)
    if p <= Fraction(1, 2):
        raise BeatVerificationFailed(f"{g} does not beat {b} (payoff {p})")
    return CounterCertificate(b, (i, j), g, xi.at(i) - xi.at(j), p)


def _pairs_by_neighbor(n: int) -> dict[Die, tuple[int, int]]:
    """Map every one-transfer neighbour of the standard die to the pair producing it."""
    out = {}
    for i in range(1, n):
        for j in range(1, n):
            if i == j or i == j + 1:
                continue
            out[apply_pair(n, i, j)] = (i, j)
    return out


def _score_neighbors(b: Die) -> list[RankedDie]:
    n = b.n
    _require_sides(n)
    xi = xi_profile(gamma_profile(b))
    pairs = _pairs_by_neighbor(n)
    rows = []
    for g in one_step_neighbors(standard_die(n)):
        pair = pairs.get(g)
        gain = xi.at(pair[0]) - xi.at(pair[1]) if pair is not None else None
        rows.append(RankedDie(g, payoff(g, b), gain))
    rows.sort(key=lambda r: (-r.exact_payoff, r.die.faces))
    return rows


def rank_one_step_dice(b: Die) -> list[RankedDie]:
    """Every die one transfer from standard, best payoff against ``b`` first.

    The tail holds the dice that lose to ``b``.
    """
    return _score_neighbors(b)


def all_one_step_counters(b: Die) -> list[CounterCertificate]:
    pairs = _pairs_by_neighbor(b.n) if b.n >= MIN_SIDES else {}
    return [
        CounterCertificate(b, pairs.get(r.die), r.die, r.gain, r.exact_payoff)
        for r in _score_neighbors(b)
        if r.exact_payoff > Fraction(1, 2)
    ]
