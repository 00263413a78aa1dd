"""Every integer d >= 5 seems to appear as the second-largest denominator
in some unit-fraction representation of 1.  Check a range of d live.

For each d we pick a multiplier c >= 2 whose remainder 1 - 1/d - 1/(c*d)
has a smooth denominator, then search for that remainder using only small
denominators; found + {d, c*d} is then a representation of 1 in which d
sits in second place.

Run:  python3 demos/second_largest.py [d_lo] [d_hi]
"""

import sys

from unitfrac import choose_multiplier, verify_second_largest_range

d_lo = int(sys.argv[1]) if len(sys.argv) > 1 else 5
d_hi = int(sys.argv[2]) if len(sys.argv) > 2 else 30

print(f"hunting witnesses for every d in [{d_lo}, {d_hi}] ...")
failures = 0
for row in verify_second_largest_range(d_lo, d_hi):
    if row.witness is None:
        failures += 1
        print(f"  d={row.d}: nothing found within the default limits")
    else:
        print(f"  d={row.d}  (c={row.c}):  1 = sum of 1/x for x in [{row.witness}]")

if failures:
    print(failures, "value(s) need a larger multiplier range or bound schedule")
else:
    print("all values verified")

print()
best = choose_multiplier(11, 1000)
print(f"the smoothest multiplier is not always workable: for d=11 the ranking")
print(f"prefers c={best}, but the bounded search only succeeds once the driver")
print(f"has walked down the ranking to c=120")
