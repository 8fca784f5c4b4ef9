#!/usr/bin/env python3
"""Sweep the quadratic component-count table and summarize the dichotomy.

For every ordered pair of distinct odd primes p, q below the bound, the
fiber over p in the quadratic covering of q decomposes into two circles
exactly when (q|p) = +1 and stays connected otherwise, computed on both
the covering side and the flow side.

Usage:
    python scripts/reciprocity_table.py [--max-prime 100] [--show-rows]
"""

import argparse
import collections
import sys
import time

from wittlink.orbits import reciprocity_row
from wittlink.rings import primes_below


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-prime", type=int, default=100)
    ap.add_argument("--show-rows", action="store_true", help="print every row")
    ns = ap.parse_args()

    odd = [p for p in primes_below(ns.max_prime) if p > 2]
    t0 = time.time()
    tally = collections.Counter()
    disagreements = []
    for p in odd:
        for q in odd:
            if p == q:
                continue
            row = reciprocity_row(p, q)
            tally[row.legendre] += 1
            if not row.agree:
                disagreements.append(row)
            if ns.show_rows:
                print(
                    f"p={row.p:<3} q={row.q:<3} legendre={row.legendre:+d} "
                    f"cc={row.cc_count} deninger={row.deninger_count} agree={row.agree}"
                )
    total = tally[1] + tally[-1]
    print(f"{total} ordered pairs of distinct odd primes < {ns.max_prime}")
    print(f"  split (two circles):  {tally[1]}")
    print(f"  inert (one circle):   {tally[-1]}")
    print(f"  disagreements:        {len(disagreements)}")
    print(f"  elapsed:              {time.time() - t0:.2f}s")
    if disagreements:
        for row in disagreements:
            print(f"  MISMATCH {row}")
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
