"""For each nonstandard die, compare the constructed counter with the best one-step counter.

Reports how often the selected pair already achieves the best exact payoff
among all dice one transfer from standard, and the spread of payoffs.
"""

import argparse
from collections import Counter

from dicelab.counter import construct_counter, rank_one_step_dice
from dicelab.enumeration import enumerate_dice
from dicelab.payoff import format_fraction


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--min-n", type=int, default=4)
    ap.add_argument("--max-n", type=int, default=8)
    args = ap.parse_args()

    for n in range(args.min_n, args.max_n + 1):
        optimal = total = 0
        gains = Counter()
        for b in enumerate_dice(n):
            if b.is_standard():
                continue
            cert = construct_counter(b)
            best = rank_one_step_dice(b)[0]
            total += 1
            optimal += cert.exact_payoff == best.exact_payoff
            gains[cert.gain] += 1
        spread = ", ".join(f"gain {g}: {c}" for g, c in sorted(gains.items()))
        print(f"n={n}: {optimal}/{total} constructed counters are payoff-optimal; {spread}")

    b = next(d for d in enumerate_dice(args.min_n) if not d.is_standard())
    print(f"\nranking against {b}:")
    for r in rank_one_step_dice(b):
        print(f"  {str(r.die):<20} payoff {format_fraction(r.exact_payoff):>6}  gain {r.gain:+d}")


if __name__ == "__main__":
    main()
