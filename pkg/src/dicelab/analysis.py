"""Whole-space checks: pure equilibria, connectivity, the beats digraph."""

from __future__ import annotations

from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from dicelab.dice import Die, one_step_neighbors, standard_die
from dicelab.enumeration import enumerate_dice
from dicelab.payoff import payoff, score, tally


def _score_rows(args: tuple[Sequence[Die], int, int]) -> list[list[int]]:
    dice, start, stop = args
    return [[score(tally(a, b)) for b in dice] for a in dice[start:stop]]


def score_matrix(dice: Sequence[Die], workers: int = 1) -> list[list[int]]:
    """``M[r][c] = 2 * wins + ties`` of ``dice[r]`` against ``dice[c]``.

    Rows are split into contiguous chunks when ``workers > 1``; chunks are
    concatenated in order, so the result does not depend on scheduling.
    """
    dice = list(dice)
    m = len(dice)
    if workers <= 1 or m < 2:
        return _score_rows((dice, 0, m))
    step = -(-m // workers)
    jobs = [(dice, s, min(s + step, m)) for s in range(0, m, step)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        chunks = list(pool.map(_score_rows, jobs))
    return [row for chunk in chunks for row in chunk]


@dataclass(frozen=True)
class EquilibriumReport:
    n: int
    space_size: int
    equilibria: tuple[tuple[Die, Die], ...]
    unique_standard: bool

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "space_size": self.space_size,
            "equilibria": [[a.to_json(), b.to_json()] for a, b in self.equilibria],
            "unique_standard": self.unique_standard,
        }


def find_pure_nash(n: int, workers: int = 1) -> EquilibriumReport:
    """All pure-strategy equilibria, by the best-response definition.

    ``(A, B)`` is listed when no ``A'`` scores more against ``B`` than ``A``
    does and no ``B'`` scores more against ``A`` than ``B`` does.
    """
    dice = list(enumerate_dice(n))
    m = len(dice)
    s = score_matrix(dice, workers)
    # best score any die achieves against column c
    best = [max(s[r][c] for r in range(m)) for c in range(m)]
    eq = tuple(
        (dice[a], dice[b])
        for a in range(m)
        for b in range(m)
        if s[a][b] == best[b] and s[b][a] == best[a]
    )
    sn = standard_die(n)
    return EquilibriumReport(n, m, eq, eq == ((sn, sn),))


def verify_standard_neutrality(n: int) -> bool:
    sn = standard_die(n)
    half = Fraction(1, 2)
    return all(payoff(d, sn) == half for d in enumerate_dice(n))


def verify_one_step_connectivity(n: int) -> bool:
    """Breadth-first search from the standard die over one-transfer moves."""
    space = set(enumerate_dice(n))
    start = standard_die(n)
    seen = {start}
    queue = deque([start])
    while queue:
        d = queue.popleft()
        for e in one_step_neighbors(d):
            if e not in seen:
                seen.add(e)
                queue.append(e)
    return seen == space


@dataclass(frozen=True)
class BeatsDigraph:
    """Edge ``(r, c)`` means ``nodes[r]`` beats ``nodes[c]``."""

    n: int
    nodes: tuple[Die, ...]
    edges: frozenset[tuple[int, int]]

    def successors(self, r: int) -> list[int]:
        return sorted(c for a, c in self.edges if a == r)

    def in_degree(self, c: int) -> int:
        return sum(1 for _, b in self.edges if b == c)

    def out_degree(self, r: int) -> int:
        return sum(1 for a, _ in self.edges if a == r)

    def index(self, d: Die) -> int:
        return self.nodes.index(d)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "nodes": [d.to_json() for d in self.nodes],
            "edges": [list(e) for e in sorted(self.edges)],
        }


def build_beats_digraph(n: int, workers: int = 1) -> BeatsDigraph:
    dice = tuple(enumerate_dice(n))
    s = score_matrix(dice, workers)
    half = n * n  # score of an even match
    edges = frozenset(
        (r, c) for r in range(len(dice)) for c in range(len(dice)) if s[r][c] > half
    )
    return BeatsDigraph(n, dice, edges)


def find_cycles(graph: BeatsDigraph, length: int) -> list[tuple[int, ...]]:
    """Directed simple cycles of exactly ``length`` nodes, each rotated to start at its smallest index."""
    if length < 1:
        raise ValueError("cycle length must be positive")
    adj = {r: graph.successors(r) for r in range(len(graph.nodes))}
    found = []
    path: list[int] = []

    def walk(start: int, v: int) -> None:
        if len(path) == length:
            if start in adj[v]:
                found.append(tuple(path))
            return
        for w in adj[v]:
            if w > start and w not in path:
                path.append(w)
                walk(start, w)
                path.pop()

    for s in adj:
        path.append(s)
        walk(s, s)
        path.pop()
    return found


def find_nontransitive_cycles(n: int, length: int = 3, workers: int = 1) -> list[tuple[Die, ...]]:
    if length < 3:
        raise ValueError("nontransitive cycles need at least 3 dice")
    g = build_beats_digraph(n, workers)
    return [tuple(g.nodes[k] for k in cyc) for cyc in find_cycles(g, length)]
