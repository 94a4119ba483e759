#!/usr/bin/env python3
"""Tour of the generating-function catalog, ending with a verification run
that compares every series against brute-force enumeration.

Run:  python3 demos/generating_function_tour.py
"""
from motzkin import (
    gf_avoid_increasing,
    gf_fixed_points,
    gf_lds_rises,
    gf_pattern_avoidance,
    gf_rises_descents,
    gf_vincular_21_exactly,
    verify,
)

N = 9

# Joint distribution of the longest decreasing subsequence (v) and the
# number of rises (y).  Internally this is computed three ways (functional
# equation, radical closed form, explicit double sum) and cross-checked.
a = gf_lds_rises(N)
print("x^3 slice of the (lds, rises) series:",
      {f"v^{dict(m).get('v', 0)} y^{dict(m).get('y', 0)}": c
       for m, c in sorted(a.size_slice(3).items())})

# Avoiding an increasing run 12...k is a ratio of rescaled Chebyshev
# polynomials; k = 3 gives the powers of two.
print("avoiding 123:", gf_avoid_increasing(3, N))

# Ladder-shaped patterns decompose recursively; 546213 has the rational
# closed form (1-2x)/((1-x)(1-2x-x^2)), one short of Motzkin from n = 6 on.
print("avoiding 546213:", gf_pattern_avoidance((5, 4, 6, 2, 1, 3), N))

# Fixed points over the reversed family, from a continued fraction whose
# level-j denominator feeds in the (j-1)-st Motzkin number.
f = gf_fixed_points(6)
print("x^4 slice of the fixed-point series:",
      {f"w^{dict(m).get('w', 0)}": c for m, c in sorted(f.size_slice(4).items())})

# Rises and descents jointly, from the vincular machinery.
rd = gf_rises_descents(6)
print("x^4 slice of the (rises, descents) series:",
      {f"p^{dict(m).get('p', 0)} q^{dict(m).get('q', 0)}": c
       for m, c in sorted(rd.size_slice(4).items())})

# Exactly one occurrence of the vincular 21-3.
print("exactly one 21-3:", gf_vincular_21_exactly(3, 1, N))

# Every catalog entry can be replayed against the brute-force oracle.
print()
for tid, params in [("A", {}), ("fp", {}), ("tau", {"tau": "546213"}),
                    ("21d3k_r", {"k": 3, "r": 1})]:
    print(verify(tid, params, order=8))
