"""Exact engine for the two-player n-sided dice game."""

from dicelab.dice import (
    Die,
    DieError,
    GammaProfile,
    XiProfile,
    gamma_profile,
    make_die,
    one_step,
    one_step_neighbors,
    parse_die,
    standard_die,
    xi_profile,
)
from dicelab.enumeration import count_dice, enumerate_dice
from dicelab.payoff import Outcome, PairTally, beats, payoff, tally
from dicelab.counter import (
    CounterCertificate,
    all_one_step_counters,
    construct_counter,
    find_counter_pair,
    rank_one_step_dice,
    xi_all_equal,
)
from dicelab.analysis import (
    BeatsDigraph,
    EquilibriumReport,
    build_beats_digraph,
    find_nontransitive_cycles,
    find_pure_nash,
    verify_one_step_connectivity,
    verify_standard_neutrality,
)

__all__ = [
    "BeatsDigraph",
    "CounterCertificate",
    "Die",
    "DieError",
    "EquilibriumReport",
    "GammaProfile",
    "Outcome",
    "PairTally",
    "XiProfile",
    "all_one_step_counters",
    "beats",
    "build_beats_digraph",
    "construct_counter",
    "count_dice",
    "enumerate_dice",
    "find_counter_pair",
    "find_nontransitive_cycles",
    "find_pure_nash",
    "gamma_profile",
    "make_die",
    "one_step",
    "one_step_neighbors",
    "parse_die",
    "payoff",
    "rank_one_step_dice",
    "standard_die",
    "tally",
    "verify_one_step_connectivity",
    "verify_standard_neutrality",
    "xi_all_equal",
    "xi_profile",
]
