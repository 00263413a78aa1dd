"""Densest representations of small integers: how far must {1..n} stretch?

For each integer target r, scan n upward until some subset of {1..n} has
reciprocal sum exactly r, and show the witnesses at the first workable n.
Targets 1-4 are quick; pass "5" to also run the fifth (about a minute,
16 witnesses), or "6" for the sixth (several minutes, 224 witnesses).

Run:  python3 demos/densest_scan.py [max_target]
"""

import sys
import time

from unitfrac import SearchStats, smallest_max_denominator

max_target = int(sys.argv[1]) if len(sys.argv) > 1 else 4

for r in range(1, max_target + 1):
    stats = SearchStats()
    started = time.perf_counter()
    result = smallest_max_denominator(r, stats=stats)
    elapsed = time.perf_counter() - started
    print(f"target {r}: smallest workable n = {result.n}  "
          f"({len(result.witnesses)} witness(es), "
          f"{stats.branches_expanded} branches, {elapsed:.2f}s)")
    if len(result.witnesses) <= 2:
        for w in result.witnesses:
            print("   ", w)
    else:
        print("    e.g.", result.witnesses[0])
        # the fifth target is special: every witness shares the element 136
        shared = [v for v in result.witnesses[0]
                  if all(w.count(v) for w in result.witnesses)]
        print("    elements common to all witnesses:", shared)
