#!/usr/bin/env python3
"""Exact power series, Chebyshev polynomials, and continued fractions.

Run:  python3 demos/series_and_continued_fractions.py
"""
from motzkin import (
    Series,
    catalan_series,
    cf_eval,
    cheb_p,
    chebyshev_u,
    motzkin_series,
    sqrt_series,
)
from motzkin.series import poly_mul, poly_sub

N = 12

# The two classical series, straight from their radical closed forms.
print("Catalan numbers :", catalan_series(N))
print("Motzkin numbers :", motzkin_series(N))

# sqrt_series is an exact formal square root: squaring gives back the
# radicand, coefficient for coefficient.
root = sqrt_series(Series([1, -2, -3], N))
assert root * root == Series([1, -2, -3], N)
print("sqrt(1-2x-3x^2) :", root)

# The Motzkin series is also the value of the continued fraction with every
# numerator x^2 and every denominator 1 - x.
x2 = Series([0, 0, 1], N)
one_minus_x = Series([1, -1], N)
cf = cf_eval(lambda j: x2, lambda j: one_minus_x, depth=N)
assert cf == motzkin_series(N)
print("same, via a depth-12 continued fraction: OK")

# Truncating the fraction at k levels counts Motzkin paths of height < k,
# and equals a ratio of rescaled Chebyshev polynomials P_{k-1}/P_k, where
# P_k = x^k U_k((1-x)/(2x)) is computed without ever touching a radical:
# P_0 = 1, P_1 = 1-x, P_k = (1-x) P_{k-1} - x^2 P_{k-2}.
a, b = one_minus_x, x2
for k in range(1, 5):
    finite = cf_eval(lambda j: x2, lambda j: one_minus_x, depth=k - 1)
    ratio = cheb_p(k - 1, a, b) / cheb_p(k, a, b)
    assert finite == ratio
    print(f"height < {k}: {finite}")

# The rescaling inherits the classical product identities.
for k in range(8):
    uk = chebyshev_u(k)
    assert poly_sub(poly_mul(uk, uk),
                    poly_mul(chebyshev_u(k - 1), chebyshev_u(k + 1))) == (1,)
    assert (cheb_p(k, a, b) ** 2
            - cheb_p(k - 1, a, b) * cheb_p(k + 1, a, b)) == b ** k
print("U_k^2 - U_{k-1}U_{k+1} = 1 and P_k^2 - P_{k-1}P_{k+1} = x^(2k): OK")
