from fractions import Fraction
from itertools import combinations_with_replacement

import pytest
from hypothesis import strategies as st

from dicelab.dice import Die, one_step, standard_die


def brute_force_space(n):
    """Every n-sided die by filtering all non-decreasing n-tuples. Slow on purpose."""
    target = n * (n + 1) // 2
    return {Die(n, c) for c in combinations_with_replacement(range(1, n + 1), n) if sum(c) == target}


def probability_payoff(a, b):
    """Payoff from the probability definition: P(A > B) + P(A = B) / 2."""
    p = Fraction(1, a.n)
    total = Fraction(0)
    for x in a.faces:
        for y in b.faces:
            if x > y:
                total += p * p
            elif x == y:
                total += p * p / 2
    return total


@st.composite
def dice(draw, min_n=1, max_n=25, max_steps=60):
    """A die reached by a random walk of transfers from the standard die."""
    n = draw(st.integers(min_n, max_n))
    d = standard_die(n)
    for _ in range(draw(st.integers(0, max_steps))):
        downs = [k for k, f in enumerate(d.faces) if f > 1]
        ups = [k for k, f in enumerate(d.faces) if f < n]
        moves = [(i, j) for i in downs for j in ups if i != j]
        if not moves:
            break
        i, j = draw(st.sampled_from(moves))
        d = one_step(d, i, j)
    return d


@st.composite
def dice_pairs(draw, min_n=1, max_n=25):
    a = draw(dice(min_n=min_n, max_n=max_n))
    b = draw(dice(min_n=a.n, max_n=a.n))
    return a, b


_ACCEPTANCE = {}


@pytest.fixture(scope="session")
def acceptance_log():
    return _ACCEPTANCE


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_ACCEPTANCE):
        ok, label = _ACCEPTANCE[key]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {key}: {label}")
