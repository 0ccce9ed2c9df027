"""Distribution of h_d relative to ceil(n/2) and chi over all alpha <= 2 graphs of each order.

Prints, per n, how many graphs have h_d - ceil(n/2) = 0, 1, 2, ... and how
many reach h_d >= chi. A negative surplus would be a counterexample.
"""

import argparse
from collections import Counter

from domhad.hunt import enumerate_alpha2
from domhad.invariants import chromatic_number
from domhad.minors import hd


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--min-n", type=int, default=1)
    args = ap.parse_args()
    for n in range(args.min_n, args.max_n + 1):
        surplus = Counter()
        reach_chi = total = 0
        for g in enumerate_alpha2(n):
            h = hd(g).value
            surplus[h - (n + 1) // 2] += 1
            reach_chi += h >= chromatic_number(g)
            total += 1
        dist = " ".join(f"{k:+d}:{surplus[k]}" for k in sorted(surplus))
        print(f"n={n:2d} graphs={total:6d} h_d>=chi={reach_chi:6d}  surplus over ceil(n/2): {dist}")


if __name__ == "__main__":
    main()
