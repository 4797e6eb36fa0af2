from fractions import Fraction

import pytest
from hypothesis import given

from dicelab.dice import make_die, standard_die
from dicelab.enumeration import enumerate_dice
from dicelab.payoff import MismatchedSides, Outcome, PairTally, beats, payoff, tally, tally_reference

from conftest import dice, dice_pairs, probability_payoff

X4 = make_die(4, [1, 1, 4, 4])
Y4 = make_die(4, [2, 2, 2, 4])
HALF = Fraction(1, 2)


def test_tally_example():
    assert tally(X4, Y4) == PairTally(wins=6, ties=2, losses=8)
    assert tally(Y4, X4) == PairTally(wins=8, ties=2, losses=6)


def test_payoff_examples():
    assert payoff(X4, Y4) == Fraction(7, 16)
    assert payoff(Y4, X4) == Fraction(9, 16)
    assert probability_payoff(X4, Y4) == Fraction(7, 16)


def test_standard_self_tally():
    for n in range(1, 12):
        s = standard_die(n)
        assert tally(s, s) == PairTally(n * (n - 1) // 2, n, n * (n - 1) // 2)


def test_beats_examples():
    assert beats(Y4, X4) is Outcome.A_WINS
    assert beats(X4, Y4) is Outcome.B_WINS
    assert beats(X4, X4) is Outcome.TIE
    assert beats(make_die(4, [2, 2, 3, 3]), X4) is Outcome.TIE


def test_mismatched_sides():
    for fn in (tally, payoff, beats, tally_reference):
        with pytest.raises(MismatchedSides):
            fn(standard_die(3), standard_die(4))


@pytest.mark.parametrize("n", range(1, 9))
def test_fast_path_matches_reference(n):
    space = list(enumerate_dice(n))
    for a in space:
        for b in space:
            assert tally(a, b) == tally_reference(a, b)


@pytest.mark.parametrize("n", range(1, 7))
def test_constant_sum_and_consistency_exhaustive(n):
    space = list(enumerate_dice(n))
    for a in space:
        for b in space:
            p = payoff(a, b)
            assert p + payoff(b, a) == 1
            assert p == probability_payoff(a, b)
            assert (beats(a, b) is Outcome.A_WINS) == (p > HALF)
            assert (beats(a, b) is Outcome.TIE) == (p == HALF)


@given(dice_pairs(max_n=40))
def test_constant_sum_sampled(pair):
    a, b = pair
    assert payoff(a, b) + payoff(b, a) == 1
    assert tally(a, b) == tally_reference(a, b)
    assert tally(a, b).pairs == a.n ** 2


@given(dice_pairs(max_n=40))
def test_payoff_in_range_with_small_denominator(pair):
    a, b = pair
    p = payoff(a, b)
    assert isinstance(p, Fraction)
    assert 0 <= p <= 1
    assert (2 * a.n * a.n) % p.denominator == 0


@given(dice())
def test_self_play_is_even(d):
    t = tally(d, d)
    assert t.wins == t.losses
    assert beats(d, d) is Outcome.TIE


@pytest.mark.parametrize("n", range(1, 9))
def test_standard_neutrality_per_face(n):
    # each face f of d, against the standard die, wins (f - 1) of n and ties 1
    s = standard_die(n)
    for d in enumerate_dice(n):
        per_face = sum(Fraction(f - 1, n) + Fraction(1, 2 * n) for f in d.faces) / n
        assert per_face == HALF
        assert payoff(d, s) == per_face
        assert payoff(s, d) == HALF
