"""Which step of the omega construction produced each certificate, per order."""

import argparse
from collections import Counter

from domhad.construct import build_omega_certificate, omega_hypothesis
from domhad.hunt import enumerate_alpha2


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=10)
    args = ap.parse_args()
    for n in range(1, args.max_n + 1):
        paths = Counter()
        skipped = 0
        for g in enumerate_alpha2(n):
            if not omega_hypothesis(g):
                skipped += 1
                continue
            paths[build_omega_certificate(g).provenance] += 1
        print(f"n={n:2d} hypothesis fails on {skipped:5d}; " + ", ".join(f"{k}={v}" for k, v in sorted(paths.items())))


if __name__ == "__main__":
    main()
