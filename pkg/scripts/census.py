"""Count alpha <= 2 graphs per order with the internal generator and time each level."""

import argparse
import time

from domhad.hunt import enumerate_alpha2

KNOWN = {1: 1, 2: 2, 3: 3, 4: 7, 5: 14, 6: 38, 7: 107, 8: 410, 9: 1897, 10: 12172, 11: 105071, 12: 1262180}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=10)
    args = ap.parse_args()
    print(f"{'n':>3} {'count':>9} {'known':>9} {'seconds':>8}")
    for n in range(1, args.max_n + 1):
        t = time.perf_counter()
        count = sum(1 for _ in enumerate_alpha2(n))
        flag = "" if KNOWN.get(n) in (None, count) else "  MISMATCH"
        print(f"{n:>3} {count:>9} {KNOWN.get(n, '?'):>9} {time.perf_counter() - t:>8.2f}{flag}")


if __name__ == "__main__":
    main()
