"""Compare the four packing conditions with exact seagull packings on every alpha <= 2 graph."""

import argparse
import time

from domhad.graph6 import to_graph6
from domhad.hunt import enumerate_alpha2
from domhad.seagull import feasibility, max_disjoint_seagulls


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=9)
    ap.add_argument("--ells", default="1,2,3")
    args = ap.parse_args()
    ells = [int(x) for x in args.ells.split(",")]
    t = time.perf_counter()
    for n in range(1, args.max_n + 1):
        agree = tight = 0
        odd = []
        for g in enumerate_alpha2(n):
            best = len(max_disjoint_seagulls(g))
            for ell in ells:
                holds = feasibility(g, ell).all_hold
                if holds == (best >= ell):
                    agree += 1
                    tight += holds and best == ell
                else:
                    odd.append((to_graph6(g), ell, holds, best))
        print(f"n={n}: agree={agree} tight={tight} disagree={len(odd)}")
        for g6, ell, holds, best in odd:
            print(f"    {g6} ell={ell} conditions={'hold' if holds else 'fail'} max packing={best}")
    print(f"{time.perf_counter() - t:.1f}s")


if __name__ == "__main__":
    main()
