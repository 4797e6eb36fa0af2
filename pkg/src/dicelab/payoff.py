"""Exact payoffs and the beats relation.

Everything here is integer or :class:`fractions.Fraction` arithmetic. Ties
are split analytically (half a point each), never sampled.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from dicelab.dice import Die, DieError


class MismatchedSides(DieError):
    pass


class Outcome(enum.Enum):
    A_WINS = "AWins"
    B_WINS = "BWins"
    TIE = "Tie"


@dataclass(frozen=True)
class PairTally:
    """Counts over the n^2 ordered face pairs (a, b)."""

    wins: int
    ties: int
    losses: int

    @property
    def pairs(self) -> int:
        return self.wins + self.ties + self.losses

    def swapped(self) -> "PairTally":
        return PairTally(self.losses, self.ties, self.wins)


def _check(a: Die, b: Die) -> None:
    if a.n != b.n:
        raise MismatchedSides(f"dice have {a.n} and {b.n} sides")


def tally_reference(a: Die, b: Die) -> PairTally:
    """Plain double loop over all face pairs."""
    _check(a, b)
    wins = ties = losses = 0
    for x in a.faces:
        for y in b.faces:
            if x > y:
                wins += 1
            elif x == y:
                ties += 1
            else:
                losses += 1
    return PairTally(wins, ties, losses)


def tally(a: Die, b: Die) -> PairTally:
    """Merge-style tally over the sorted faces, linear in n."""
    _check(a, b)
    bf = b.faces
    n = len(bf)
    below = 0  # faces of b strictly less than the current a face
    upto = 0  # faces of b at most the current a face
    wins = ties = 0
    for x in a.faces:
        while below < n and bf[below] < x:
            below += 1
        if upto < below:
            upto = below
        while upto < n and bf[upto] <= x:
            upto += 1
        wins += below
        ties += upto - below
    return PairTally(wins, ties, n * n - wins - ties)


def score(t: PairTally) -> int:
    """Payoff numerator over the common denominator 2n^2."""
    return 2 * t.wins + t.ties


def payoff(a: Die, b: Die) -> Fraction:
    """Probability that ``a`` rolls higher than ``b``, plus half the tie probability."""
    t = tally(a, b)
    return Fraction(score(t), 2 * a.n * a.n)


def beats(a: Die, b: Die) -> Outcome:
    t = tally(a, b)
    if t.wins > t.losses:
        return Outcome.A_WINS
    if t.losses > t.wins:
        return Outcome.B_WINS
    return Outcome.TIE


def format_fraction(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"
