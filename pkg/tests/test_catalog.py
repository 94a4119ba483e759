"""Generating-function catalog against brute-force enumeration.

Every closed form or continued fraction is compared coefficient-by-
coefficient with counts obtained by enumerating Motzkin permutations and
evaluating the statistics directly.  Expected low-order values frozen in
the tests below were computed with these brute-force loops.
"""
import pytest

from motzkin.bijections import motzkin_permutations
from motzkin.catalog import (
    catalog_series,
    gf_avoid_increasing,
    gf_fixed_points,
    gf_free_rises,
    gf_increasing_exactly,
    gf_increasing_occurrences,
    gf_lds_rises,
    gf_lds_rises_bounded,
    gf_lrm,
    gf_pattern_avoidance,
    gf_rises_descents,
    gf_vincular_12_exactly,
    gf_vincular_21_exactly,
    gf_vincular_occurrences,
)
from motzkin.permutations import (
    Pattern,
    increasing_pattern,
    occurrences,
    parse_pattern,
    parse_permutation,
    reverse,
    rl_maxima,
    stats,
)
from motzkin.series import MultiSeries, Series, cheb_p, motzkin_series

NMAX = 8


def motzkin_upto(nmax=NMAX):
    for n in range(nmax + 1):
        for p in motzkin_permutations(n):
            yield n, p


def joint(stat_fns, var_names, size_var, order):
    """Brute-force joint distribution as a MultiSeries."""
    terms = {}
    for n, p in motzkin_upto(order):
        mono = {size_var: n}
        for fn, v in zip(stat_fns, var_names):
            e = fn(p)
            if e:
                mono[v] = mono.get(v, 0) + e
        key = tuple(sorted((v, e) for v, e in mono.items() if e))
        terms[key] = terms.get(key, 0) + 1
    return MultiSeries(terms, size_var, order)


def avoid_counts(pat, order):
    cs = [0] * (order + 1)
    for n, p in motzkin_upto(order):
        if occurrences(p, pat) == 0:
            cs[n] += 1
    return Series(cs, order)


def exact_counts(pat, r, order):
    cs = [0] * (order + 1)
    for n, p in motzkin_upto(order):
        if occurrences(p, pat) == r:
            cs[n] += 1
    return Series(cs, order)


def test_gf_lds_rises_against_oracle():
    a = gf_lds_rises(NMAX)
    oracle = joint([lambda p: stats(p).lds, lambda p: stats(p).rises],
                   ["v", "y"], "x", NMAX)
    assert a == oracle
    assert a.coefficient({}) == 1
    # length-3 slice: 321 -> v^3, the other three -> v^2 y
    assert a.coefficient({"x": 3, "v": 3}) == 1
    assert a.coefficient({"x": 3, "v": 2, "y": 1}) == 3
    assert sum(c for m, c in a.terms.items() if dict(m).get("x", 0) == 3) == 4


def test_gf_lds_rises_bounded_against_oracle():
    for k in range(1, 6):
        b = gf_lds_rises_bounded(k, NMAX)
        terms = {}
        for n, p in motzkin_upto(NMAX):
            s = stats(p)
            if s.lis <= k:
                key = tuple(sorted({"x": n, "v": s.lds, "y": s.rises}.items()))
                key = tuple((v, e) for v, e in key if e)
                terms[key] = terms.get(key, 0) + 1
        assert b == MultiSeries(terms, "x", NMAX), f"height bound {k}"


def test_gf_lds_rises_bounded_saturates():
    order = 7
    assert gf_lds_rises_bounded(order + 1, order) == gf_lds_rises(order)
    assert gf_lds_rises_bounded(order + 3, order) == gf_lds_rises(order)


def test_gf_bounded_slice_counts_123_avoiders():
    b = gf_lds_rises_bounded(2, NMAX).substitute_ones(["v", "y"]).as_series()
    assert b.coeffs == (1, 1, 2, 4, 8, 16, 32, 64, 128)


def test_gf_fixed_points_against_oracle():
    f = gf_fixed_points(NMAX)
    oracle = joint([lambda p: stats(reverse(p)).fixed_points], ["w"], "x", NMAX)
    assert f == oracle
    assert f.coefficient({"x": 1, "w": 1}) == 1
    # frozen length-3 slice over reversals of Motzkin permutations
    assert f.coefficient({"x": 3}) == 1
    assert f.coefficient({"x": 3, "w": 1}) == 2
    assert f.coefficient({"x": 3, "w": 3}) == 1
    # w = 1 collapses to the Motzkin series
    assert f.substitute_ones(["w"]).as_series() == motzkin_series(NMAX)
    # the coefficient of (w-1) x^(n+2) in the level denominators feeds M_n;
    # spot-check the full gf at depth variations
    assert gf_fixed_points(NMAX, depth=NMAX + 4) == f


def test_gf_avoid_increasing():
    assert gf_avoid_increasing(1, 6).coeffs == (1, 0, 0, 0, 0, 0, 0)
    assert gf_avoid_increasing(2, 6).coeffs == (1, 1, 1, 1, 1, 1, 1)
    assert gf_avoid_increasing(3, 6).coeffs == (1, 1, 2, 4, 8, 16, 32)
    for k in range(2, 6):
        assert gf_avoid_increasing(k, NMAX) == avoid_counts(increasing_pattern(k), NMAX)
    # a bound beyond the truncation order is vacuous
    assert gf_avoid_increasing(9, 7) == motzkin_series(7)


def test_gf_increasing_exactly_against_oracle():
    for k in range(2, 5):
        for r in range(0, k + 1):
            got = gf_increasing_exactly(k, r, NMAX)
            want = exact_counts(increasing_pattern(k), r, NMAX)
            assert got == want, f"exactly {r} occurrences of 12...{k}"
    with pytest.raises(ValueError):
        gf_increasing_exactly(3, 4, 6)
    with pytest.raises(ValueError):
        gf_increasing_exactly(1, 1, 6)


def test_exactly_r_partial_sums_dominated_by_motzkin():
    m = motzkin_series(NMAX)
    for k in (2, 3, 4):
        total = Series.zero(NMAX)
        for r in range(0, k + 1):
            total = total + gf_increasing_exactly(k, r, NMAX)
            assert all(t <= mm for t, mm in zip(total.coeffs, m.coeffs))


def test_gf_increasing_occurrences_against_oracle():
    order, top = 7, 7
    g = gf_increasing_occurrences(order, 3)
    oracle = joint(
        [lambda p: occurrences(p, parse_pattern("12")),
         lambda p: occurrences(p, parse_pattern("123"))],
        ["x2", "x3"], "x1", order)
    assert g == oracle
    assert g.substitute_ones(["x2", "x3"]).as_series() == motzkin_series(order)


def test_gf_free_rises_counts_pattern_12_pairs():
    g = gf_free_rises(NMAX)
    oracle = joint([lambda p: occurrences(p, parse_pattern("12"))], ["q"], "x", NMAX)
    assert g == oracle
    assert g.coefficient({"x": 1}) == 1  # the one-letter permutation: no pair
    # The positional free-rise statistic (entry with a larger entry later)
    # agrees with the pair count only through n = 3: at n = 4 the positional
    # histogram is {0:1, 1:3, 2:3, 3:2} while the pair count histogram is
    # {0:1, 1:3, 2:3, 3:1, 4:1}.  The continued fraction follows the pairs.
    positional = joint([lambda p: stats(p).free_rises], ["q"], "x", 3)
    assert g.truncated(3) == positional
    positional4 = joint([lambda p: stats(p).free_rises], ["q"], "x", 4)
    assert g.truncated(4) != positional4
    assert g.coefficient({"x": 4, "q": 4}) == 1
    assert positional4.coefficient({"x": 4, "q": 4}) == 0


def test_gf_lrm_counts_right_to_left_maxima():
    g = gf_lrm(NMAX)
    oracle = joint([rl_maxima], ["q"], "x", NMAX)
    assert g == oracle
    # equivalently, left-to-right maxima over the reversed permutations
    oracle_rev = joint([lambda p: stats(reverse(p)).lrm], ["q"], "x", NMAX)
    assert g == oracle_rev
    # frozen length-3 slice: q + 2q^2 + q^3; the forward lrm histogram
    # (2q + 2q^2) differs, pinning the attribution.
    assert g.coefficient({"x": 3, "q": 1}) == 1
    assert g.coefficient({"x": 3, "q": 2}) == 2
    assert g.coefficient({"x": 3, "q": 3}) == 1
    forward = joint([lambda p: stats(p).lrm], ["q"], "x", 3)
    assert forward.coefficient({"x": 3, "q": 1}) == 2
    assert g.truncated(3) != forward
    assert g.coefficient({}) == 1


# patterns exercised against the oracle: the Chebyshev-ratio families, the
# rung-pair shapes, and the rotated-increasing shapes
TAU_CASES = [
    "231", "2314", "23415",
    "3412", "34512", "45123",
    "3241", "34251", "43512",
    "32415", "546213", "342516",
    "6743512",
]


@pytest.mark.parametrize("tau_text", TAU_CASES)
def test_gf_pattern_avoidance_against_oracle(tau_text):
    tau = parse_permutation(" ".join(tau_text))
    got = gf_pattern_avoidance(tau, NMAX)
    want = avoid_counts(Pattern(tau), NMAX)
    assert got == want, f"avoidance series for {tau_text}"


def test_gf_pattern_avoidance_closed_forms():
    order = 10
    x = Series.x(order)
    a, b = Series([1, -1], order), Series([0, 0, 1], order)
    # (rho', t, k, theta', 1, t-1) example 546213
    got = gf_pattern_avoidance((5, 4, 6, 2, 1, 3), order)
    num = Series([1, -2], order)
    den = Series([1, -1], order) * Series([1, -2, -1], order)
    assert got == num / den
    assert got.coeffs[:7] == (1, 1, 2, 4, 9, 21, 50)
    # 23...(k-1)1k is the Chebyshev ratio P_{k-3}/P_{k-2} from k = 4 on;
    # at k = 3 the inner series is the single-letter one and the avoidance
    # series of 213 is the Fibonacci series 1/(1-x-x^2) instead.
    for tau, k in [((2, 3, 1, 4), 4), ((2, 3, 4, 1, 5), 5)]:
        assert gf_pattern_avoidance(tau, order) == cheb_p(k - 3, a, b) / cheb_p(k - 2, a, b)
    assert gf_pattern_avoidance((2, 1, 3), order) == Series([1, -1, -1], order).inverse()
    # the two rung-ladder families at k = 2
    assert gf_pattern_avoidance((2, 3, 1, 4), order) == cheb_p(1, a, b) / cheb_p(2, a, b)
    second = (cheb_p(2, a, b) + x * cheb_p(1, a, b)) / (cheb_p(3, a, b) + x * cheb_p(2, a, b))
    assert gf_pattern_avoidance((3, 2, 4, 1, 5), order) == second


def test_gf_pattern_avoidance_ladder_families_nonedge():
    # (k-1) k 1 2 ... (k-2): ratio U_{k-3}/(x U_{k-2}) holds from k = 4 on
    order = 10
    a, b = Series([1, -1], order), Series([0, 0, 1], order)
    for tau, k in [((3, 4, 1, 2), 4), ((4, 5, 1, 2, 3), 5)]:
        assert gf_pattern_avoidance(tau, order) == cheb_p(k - 3, a, b) / cheb_p(k - 2, a, b)
    # (k-1)(k-2) k 1 2 ... (k-3) from k = 5 on
    got = gf_pattern_avoidance((4, 3, 5, 1, 2), order)
    num = cheb_p(1, a, b) - b * cheb_p(0, a, b)
    den = cheb_p(2, a, b) - b * cheb_p(1, a, b)
    assert got == num / den
    # (t+2)...(k-1) (t+1) k 1...t with t >= 2 gives P_{k-4}/P_{k-3} (here k=6, t=2)
    got = gf_pattern_avoidance((4, 5, 3, 6, 1, 2), order)
    assert got == cheb_p(2, a, b) / cheb_p(3, a, b)


def test_gf_pattern_avoidance_edge_cases_follow_oracle_not_ratios():
    # At the smallest lengths some of the displayed Chebyshev ratios break;
    # the oracle decides.  231: counts are 1, 1, 2, 3, 4, 5, ... while
    # U_0/(xU_1) would give all-ones.
    order = 8
    got = gf_pattern_avoidance((2, 3, 1), order)
    assert got.coeffs == (1, 1, 2, 3, 4, 5, 6, 7, 8)
    a, b = Series([1, -1], order), Series([0, 0, 1], order)
    assert got != cheb_p(0, a, b) / cheb_p(1, a, b)
    # 3241: oracle gives 8 at n=4; the k=4 ratio 1/(1-x-x^2) would give 5.
    got = gf_pattern_avoidance((3, 2, 4, 1), order)
    assert got.coefficient(4) == 8
    assert Series([1, -1, -1], order).inverse().coefficient(4) == 5
    # 34251 (t = 1 ladder tail): oracle 9 at n=4, ratio P_1/P_2 would give 8.
    got = gf_pattern_avoidance((3, 4, 2, 5, 1), order)
    assert got.coefficient(4) == 9


def test_gf_pattern_avoidance_supported_sweep():
    # Every pattern the resolver accepts, through length 7, must match the
    # enumeration; unsupported shapes must raise.
    import itertools

    nmax = 7
    hosts = {n: list(motzkin_permutations(n)) for n in range(nmax + 1)}
    supported = 0
    for k in range(1, 8):
        for tau in itertools.permutations(range(1, k + 1)):
            try:
                got = gf_pattern_avoidance(tau, nmax)
            except ValueError:
                continue
            supported += 1
            pat = Pattern(tau)
            want = Series([sum(1 for p in hosts[n] if occurrences(p, pat) == 0)
                           for n in range(nmax + 1)], nmax)
            assert got == want, f"resolver disagrees with enumeration on {tau}"
    assert supported == 81   # 41 of length <= 6 plus 40 of length 7


def test_gf_pattern_avoidance_shape_errors():
    with pytest.raises(ValueError):
        gf_pattern_avoidance((), 5)
    with pytest.raises(ValueError):
        gf_pattern_avoidance((2, 1), 5)  # decreasing: no supported decomposition
    with pytest.raises(ValueError):
        gf_pattern_avoidance((1, 3, 2), 5)


def test_equinumerosity_of_increasing_and_ladder_family():
    # avoiders of 12...(k+1) are equinumerous with avoiders of
    # k(k+1)(k-1)(k+2)...1(2k); series equality to order 10 for k = 2, 3.
    order = 10
    assert gf_avoid_increasing(3, order) == gf_pattern_avoidance((2, 3, 1, 4), order)
    assert gf_avoid_increasing(4, order) == gf_pattern_avoidance((3, 4, 2, 5, 1, 6), order)


def test_gf_vincular_occurrences_against_oracle():
    order = 7
    g = gf_vincular_occurrences(order, 3)
    p12 = Pattern((1, 2), frozenset({1}))
    p21 = Pattern((2, 1), frozenset({1}))
    oracle = joint(
        [lambda p: occurrences(p, p12),
         lambda p: occurrences(p, p21),
         lambda p: occurrences(p, parse_pattern("12-3")),
         lambda p: occurrences(p, parse_pattern("21-3"))],
        ["x2", "y2", "x3", "y3"], "t", order)
    assert g == oracle
    plain = g.substitute_ones(["x2", "x3", "y2", "y3"]).as_series()
    assert plain == motzkin_series(order)


def test_gf_rises_descents_against_oracle():
    g = gf_rises_descents(NMAX)
    oracle = joint([lambda p: stats(p).rises, lambda p: stats(p).descents],
                   ["p", "q"], "t", NMAX)
    assert g == oracle


def test_gf_vincular_12_exactly_against_oracle():
    for k in (3, 4):
        pat = increasing_pattern(k, glued=[1])
        for r in range(0, k):
            got = gf_vincular_12_exactly(k, r, NMAX)
            assert got == exact_counts(pat, r, NMAX), f"12-3-...-{k} exactly {r}"
    # k = 2: glued 12 counts rises
    assert gf_vincular_12_exactly(2, 0, 6).coeffs == (1, 1, 1, 1, 1, 1, 1)
    assert gf_vincular_12_exactly(2, 1, NMAX) == exact_counts(
        Pattern((1, 2), frozenset({1})), 1, NMAX)
    with pytest.raises(ValueError):
        gf_vincular_12_exactly(3, 3, 6)


def test_gf_vincular_21_exactly_against_oracle():
    for k in (3, 4):
        pat = Pattern(tuple([2, 1] + list(range(3, k + 1))), frozenset({1}))
        for r in range(0, k):
            got = gf_vincular_21_exactly(k, r, NMAX)
            assert got == exact_counts(pat, r, NMAX), f"21-3-...-{k} exactly {r}"
    with pytest.raises(ValueError):
        gf_vincular_21_exactly(2, 0, 6)
    with pytest.raises(ValueError):
        gf_vincular_21_exactly(3, 3, 6)


def test_exact_occurrence_formula_attribution():
    # The positive-r ratio family x^r (1+x)^r U_{k-2}^{r-1} / (...)^{r+1}
    # belongs to 21-3-...-k, not 12-3-...-k: at k = 3, r = 1 it gives 1 at
    # n = 3 (only 213 has one 21-3) while no length-3 Motzkin permutation
    # has exactly one 12-3.
    got = gf_vincular_21_exactly(3, 1, 6)
    assert got.coefficient(3) == 1
    assert exact_counts(parse_pattern("21-3"), 1, 6).coefficient(3) == 1
    assert exact_counts(parse_pattern("12-3"), 1, 6).coefficient(3) == 0
    assert gf_vincular_12_exactly(3, 1, 6).coefficient(3) == 0


def test_unrestricted_distributions_specialize_to_motzkin():
    order = 9
    m = motzkin_series(order)
    cases = [
        (gf_lds_rises(order), ["v", "y"]),
        (gf_fixed_points(order), ["w"]),
        (gf_free_rises(order), ["q"]),
        (gf_lrm(order), ["q"]),
        (gf_increasing_occurrences(order, 3), ["x2", "x3"]),
        (gf_vincular_occurrences(order, 3), ["x2", "x3", "y2", "y3"]),
        (gf_rises_descents(order), ["p", "q"]),
    ]
    for series, markers in cases:
        assert series.substitute_ones(markers).as_series() == m


def test_catalog_registry():
    s = catalog_series("N12k", {"k": 3}, 5)
    assert isinstance(s, Series) and s.coeffs == (1, 1, 2, 4, 8, 16)
    ms = catalog_series("Bk", {"k": 2}, 4)
    assert isinstance(ms, MultiSeries)
    t = catalog_series("tau", {"tau": "546213"}, 6)
    assert t.coeffs == (1, 1, 2, 4, 9, 21, 50)
    with pytest.raises(ValueError):
        catalog_series("nope", {}, 4)
    with pytest.raises(ValueError):
        catalog_series("Bk", {}, 4)
