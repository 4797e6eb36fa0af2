"""Run every whole-space check for n = 1..MAX_N and time each n.

    python scripts/verification_sweep.py --max-n 9
"""

import argparse
import time

from dicelab.cli import CHECKS, verify_all
from dicelab.enumeration import count_dice


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    print(f"{'n':>3} {'|D_n|':>7} " + " ".join(f"{c:>16}" for c in CHECKS) + f" {'sec':>7}")
    for n in range(1, args.max_n + 1):
        t0 = time.perf_counter()
        row = verify_all(n, args.workers, min_n=n).results[n]
        dt = time.perf_counter() - t0
        cells = " ".join(f"{'-' if row[c] is None else str(row[c]):>16}" for c in CHECKS)
        print(f"{n:>3} {count_dice(n):>7} {cells} {dt:>7.2f}")


if __name__ == "__main__":
    main()
