"""``dicelab`` command line.

Exit codes: 0 success, 1 usage error, 2 invalid input (bad die literal or a
die the command cannot handle), 3 a verification came back false.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from typing import Any, Optional, Sequence

from dicelab.analysis import (
    build_beats_digraph,
    find_cycles,
    find_pure_nash,
    verify_one_step_connectivity,
    verify_standard_neutrality,
)
from dicelab.counter import (
    MIN_SIDES,
    InternalExhaustion,
    BeatVerificationFailed,
    all_one_step_counters,
    construct_counter,
    rank_one_step_dice,
    xi_all_equal,
)
from dicelab.dice import DieError, parse_die, standard_die
from dicelab.enumeration import count_dice, enumerate_dice
from dicelab.payoff import MismatchedSides, format_fraction, payoff, tally

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID = 2
EXIT_FALSIFIED = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


# ---------------------------------------------------------------- verify-all

CHECKS = ("neutrality", "lemma4", "counter_totality", "corollary2", "connectivity", "nash")


@dataclass
class VerificationSuiteReport:
    # results[n][check] is True/False, or None where the check does not apply
    results: dict[int, dict[str, Optional[bool]]] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(v is not False for row in self.results.values() for v in row.values())

    def to_json(self) -> dict:
        return {
            "results": [{"n": n, **row} for n, row in sorted(self.results.items())],
            "pass": self.passed,
        }


def verify_all(max_n: int, workers: int = 1, min_n: int = 1) -> VerificationSuiteReport:
    report = VerificationSuiteReport()
    for n in range(min_n, max_n + 1):
        row: dict[str, Optional[bool]] = dict.fromkeys(CHECKS)
        row["neutrality"] = verify_standard_neutrality(n)
        row["connectivity"] = verify_one_step_connectivity(n)
        nash = find_pure_nash(n, workers)
        sn = standard_die(n)
        if n >= MIN_SIDES:
            row["nash"] = nash.unique_standard
            dice = list(enumerate_dice(n))
            row["lemma4"] = all(xi_all_equal(d) == d.is_standard() for d in dice)
            totality = corollary = True
            for d in dice:
                if d.is_standard():
                    continue
                try:
                    construct_counter(d)
                except (InternalExhaustion, BeatVerificationFailed):
                    totality = False
                if not all_one_step_counters(d):
                    corollary = False
            row["counter_totality"] = totality
            row["corollary2"] = corollary
        else:
            # below four sides only existence of the standard equilibrium is claimed
            row["nash"] = (sn, sn) in nash.equilibria
        report.results[n] = row
    return report


# ---------------------------------------------------------------- rendering

def _csv_cell(v: Any) -> str:
    if isinstance(v, list):
        return " ".join(_csv_cell(x) for x in v)
    if v is None:
        return ""
    return json.dumps(v) if isinstance(v, bool) else str(v)


def render(payload: Any, fmt: str, records: Optional[list[dict]] = None) -> str:
    """Render ``payload``. For csv, ``records`` (a list of flat dicts) is used."""
    if fmt == "json":
        return json.dumps(payload, separators=(",", ":"))
    if fmt == "pretty":
        return json.dumps(payload, indent=2)
    rows = records if records is not None else (payload if isinstance(payload, list) else [payload])
    buf = io.StringIO()
    if rows:
        writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        writer.writeheader()
        for r in rows:
            writer.writerow({k: _csv_cell(v) for k, v in r.items()})
    return buf.getvalue().rstrip("\n")


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        with open(output, "w") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


# ---------------------------------------------------------------- commands

def cmd_enum(args) -> int:
    if args.count_only:
        _emit(str(count_dice(args.n)), args.output)
        return EXIT_OK
    dice = [d.to_json() for d in enumerate_dice(args.n)]
    if args.format == "csv":
        text = render(None, "csv", [{"faces": d} for d in dice])
    else:
        text = "\n".join(json.dumps(d, separators=(",", ":")) for d in dice)
    _emit(text, args.output)
    return EXIT_OK


def cmd_payoff(args) -> int:
    a, b = parse_die(args.a), parse_die(args.b)
    t = tally(a, b)
    out = {"wins": t.wins, "ties": t.ties, "losses": t.losses, "payoff": format_fraction(payoff(a, b))}
    _emit(render(out, args.format), args.output)
    return EXIT_OK


def cmd_counter(args) -> int:
    b = parse_die(args.die)
    if args.rank:
        out = [r.to_json() for r in rank_one_step_dice(b)]
    elif args.all:
        out = [c.to_json() for c in all_one_step_counters(b)]
    else:
        out = construct_counter(b).to_json()
    _emit(render(out, args.format), args.output)
    return EXIT_OK


def cmd_nash(args) -> int:
    report = find_pure_nash(args.n, args.workers)
    out = report.to_json()
    records = [{"a": a, "b": b} for a, b in out["equilibria"]]
    _emit(render(out, args.format, records), args.output)
    sn = standard_die(args.n)
    ok = report.unique_standard if args.n >= MIN_SIDES else (sn, sn) in report.equilibria
    return EXIT_OK if ok else EXIT_FALSIFIED


def cmd_connectivity(args) -> int:
    ok = verify_one_step_connectivity(args.n)
    out = {"n": args.n, "space_size": count_dice(args.n), "connected": ok}
    _emit(render(out, args.format), args.output)
    return EXIT_OK if ok else EXIT_FALSIFIED


def cmd_graph(args) -> int:
    g = build_beats_digraph(args.n, args.workers)
    out = g.to_json()
    if args.cycles is not None:
        if args.cycles < 3:
            raise UsageError("--cycles must be at least 3")
        out["cycles"] = [[g.nodes[k].to_json() for k in cyc] for cyc in find_cycles(g, args.cycles)]
    records = [{"from": g.nodes[r].to_json(), "to": g.nodes[c].to_json()} for r, c in sorted(g.edges)]
    _emit(render(out, args.format, records), args.output)
    return EXIT_OK


def cmd_verify_all(args) -> int:
    report = verify_all(args.max_n, args.workers)
    out = report.to_json()
    _emit(render(out, args.format, out["results"]), args.output)
    return EXIT_OK if report.passed else EXIT_FALSIFIED


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "pretty"), default="json")
    common.add_argument("--output", metavar="PATH")
    common.add_argument("--workers", type=_positive, default=1)

    p = _Parser(prog="dicelab", description="Exact analysis of the n-sided dice game.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("enum", parents=[common], help="list every n-sided die")
    s.add_argument("--n", type=_positive, required=True)
    s.add_argument("--count-only", action="store_true")
    s.set_defaults(func=cmd_enum)

    s = sub.add_parser("payoff", parents=[common], help="exact payoff of die A against die B")
    s.add_argument("--a", required=True, metavar="DIE")
    s.add_argument("--b", required=True, metavar="DIE")
    s.set_defaults(func=cmd_payoff)

    s = sub.add_parser("counter", parents=[common], help="build a die that beats DIE")
    s.add_argument("--die", required=True)
    mode = s.add_mutually_exclusive_group()
    mode.add_argument("--all", action="store_true", help="every winning die one transfer from standard")
    mode.add_argument("--rank", action="store_true", help="rank all dice one transfer from standard")
    s.set_defaults(func=cmd_counter)

    s = sub.add_parser("nash", parents=[common], help="exhaustive pure equilibrium search")
    s.add_argument("--n", type=_positive, required=True)
    s.set_defaults(func=cmd_nash)

    s = sub.add_parser("connectivity", parents=[common], help="one-transfer connectivity of the die space")
    s.add_argument("--n", type=_positive, required=True)
    s.set_defaults(func=cmd_connectivity)

    s = sub.add_parser("graph", parents=[common], help="beats digraph and nontransitive cycles")
    s.add_argument("--n", type=_positive, required=True)
    s.add_argument("--cycles", type=int, metavar="L")
    s.set_defaults(func=cmd_graph)

    s = sub.add_parser("verify-all", parents=[common], help="run every check for n = 1..MAX_N")
    s.add_argument("--max-n", type=_positive, default=6)
    s.set_defaults(func=cmd_verify_all)
    return p


def run(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(json.dumps({"error": "usage", "message": str(exc)}), file=sys.stderr)
        return EXIT_USAGE
    except (InternalExhaustion, BeatVerificationFailed) as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return EXIT_FALSIFIED
    except (DieError, MismatchedSides) as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(json.dumps({"error": "io", "message": str(exc)}), file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
