#!/usr/bin/env python3
"""Classical and vincular pattern counting, and joint statistic tables.

Run:  python3 demos/pattern_statistics.py
"""
from motzkin import (
    distribution,
    is_motzkin,
    occurrences,
    parse_pattern,
    parse_permutation,
    stats,
)

# Dash notation: "1-2-3-4" is fully classical, while omitting a dash glues
# the letters together (they must sit in adjacent positions of the host).
p = parse_permutation("3 5 4 2 6 1 7")
for text in ("1-2-3-4", "12-3-4"):
    pat = parse_pattern(text)
    print(f"occurrences of {text:8s} in {p}: {occurrences(p, pat)}")
# 3567 and 3467 are the two classical occurrences; only 3567 keeps the
# first pair adjacent.

# A permutation is Motzkin when it avoids 132 and the vincular 1-23.
for q in ("2 1 3", "2 3 1", "1 3 2", "1 2 3"):
    qq = parse_permutation(q)
    print(f"is_motzkin({q}) = {is_motzkin(qq)}")

# The statistics behind the generating functions:
s = stats(parse_permutation("6 7 4 3 5 2 8 1"))
print("\nprofile of 67435281:", s)

# Joint distributions over a whole universe come from the oracle module.
table = distribution("motzkin", 5, ["lds", "rises"])
print("\n(lds, rises) over the 21 Motzkin permutations of length 5:")
for key, count in sorted(table.rows.items()):
    print(f"  lds={key[0]} rises={key[1]}: {count}")

fp = distribution("reverse_motzkin", 5, ["fixed_points"])
print("\nfixed points over the reversed family (avoiding 231 and 32-1):")
for key, count in sorted(fp.rows.items()):
    print(f"  fp={key[0]}: {count}")
