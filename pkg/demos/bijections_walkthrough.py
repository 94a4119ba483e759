#!/usr/bin/env python3
"""Walk through the bijections connecting Motzkin permutations, Dyck paths,
and Motzkin paths, and watch the statistics travel along.

Run:  python3 demos/bijections_walkthrough.py
"""
from motzkin import (
    collapse_blocks,
    dyck_to_perm,
    height,
    motzkin_permutations,
    motzkin_to_perm,
    parse_permutation,
    path_stats,
    perm_to_dyck,
    perm_to_motzkin,
    stats,
)

# A Motzkin permutation is 132-avoiding with no ascent that has a smaller
# entry somewhere to its left (equivalently: no three consecutive rising
# entries).  The running example below is an 8-letter one.
p = parse_permutation("6 7 4 3 5 2 8 1")
print(f"permutation        {p}")

# Step 1: the cross-array walk.  Draw the permutation as an 8x8 array of
# crosses and walk from the lower-left to the upper-right corner, hugging
# the diagonal while keeping every cross to the right.  Vertical steps read
# u, horizontal steps read d: a Dyck path.
d = perm_to_dyck(p)
print(f"dyck image         {d}")

# Step 2: cut the Dyck path after every down-step.  Because the permutation
# has no vincular 1-23, no block has three rising steps, so each block is
# uud, ud, or d.  Collapse uud->u, ud->h, d->d: a Motzkin path, one step
# per permutation entry.
m = collapse_blocks(d)
print(f"motzkin image      {m}")

# The statistics transport dictionary:
s, ds, ms = stats(p), path_stats(d), path_stats(m)
print("\nstatistic transport")
print(f"  lds(p)   = {s.lds}  = peaks of D = {ds.peaks}"
      f"  = u-steps + h-steps of M = {ms.up_steps + ms.horiz_steps}")
print(f"  lis(p)   = {s.lis}  = height of D = {height(d)}"
      f"  = height of M + 1 = {height(m) + 1}")
print(f"  rises(p) = {s.rises}  = double rises of D = {ds.double_rises}"
      f"  = u-steps of M = {ms.up_steps}")

# Everything inverts exactly.
assert dyck_to_perm(d) == p
assert motzkin_to_perm(m) == p
print("\nround trips: perm -> dyck -> perm and perm -> motzkin -> perm OK")

# Walking the inverse over all Motzkin paths of length n enumerates the
# Motzkin permutations; the counts are the Motzkin numbers.
print("\n|M_n| by generation:", [sum(1 for _ in motzkin_permutations(n))
                                 for n in range(9)])
print("the four length-3 Motzkin permutations:",
      sorted(motzkin_permutations(3)))
assert perm_to_motzkin((3, 2, 1)).steps == "hhh"
