"""Count nontransitive cycles in the beats digraph by n and cycle length."""

import argparse

from dicelab.analysis import build_beats_digraph, find_cycles


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--max-length", type=int, default=4)
    ap.add_argument("--show", type=int, default=1, help="example cycles printed per cell")
    args = ap.parse_args()

    for n in range(3, args.max_n + 1):
        g = build_beats_digraph(n)
        print(f"n={n}: {len(g.nodes)} dice, {len(g.edges)} beats-edges")
        for length in range(3, args.max_length + 1):
            cycles = find_cycles(g, length)
            print(f"  length {length}: {len(cycles)} cycles")
            for cyc in cycles[: args.show]:
                print("    " + " > ".join(str(g.nodes[k]) for k in cyc) + f" > {g.nodes[cyc[0]]}")


if __name__ == "__main__":
    main()
