"""Acceptance suite: the package's exit criteria, one test per criterion.

Each criterion prints a PASS line (visible with pytest -s); every check is
an exact integer comparison against an independently computed value, and
the timed criteria assert their stated wall-clock budgets.
"""
import subprocess
import sys
import time

from motzkin.bijections import (
    collapse_blocks,
    dyck_to_perm,
    motzkin_permutations,
    motzkin_to_perm,
    perm_to_dyck,
    perm_to_motzkin,
)
from motzkin.catalog import (
    gf_avoid_increasing,
    gf_lrm,
    gf_pattern_avoidance,
)
from motzkin.oracle import verify
from motzkin.paths import (
    dyck_diag_tunnels,
    dyck_paths,
    good_tunnels,
    gt_counts,
    height,
    motzkin_paths,
    path_stats,
)
from motzkin.permutations import all_permutations, avoids, parse_pattern, reverse, stats
from motzkin.series import Series, cheb_p, chebyshev_u, poly_mul, poly_sub, sqrt_series


def _ok(number: int, text: str) -> None:
    print(f"ACCEPTANCE {number:02d} {text}: PASS")


def test_criterion_01_motzkin_counting():
    t0 = time.perf_counter()
    # M(x) = (1 - x - sqrt(1-2x-3x^2)) / (2x^2), expanded via sqrt_series
    root = sqrt_series(Series([1, -2, -3], 14))
    m = (Series([1, -1], 14) - root).divided_by_xpow(2) / 2
    counts = [sum(1 for _ in motzkin_permutations(n)) for n in range(13)]
    assert counts == list(m.coeffs[:13])
    assert counts == [1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188, 5798, 15511]
    assert sorted(motzkin_permutations(3)) == [
        (2, 1, 3), (2, 3, 1), (3, 1, 2), (3, 2, 1)]
    elapsed = time.perf_counter() - t0
    assert elapsed < 5.0
    _ok(1, f"Motzkin counting n<=12 in {elapsed:.2f}s")


def test_criterion_02_bijection_round_trips():
    t0 = time.perf_counter()
    p132 = parse_pattern("132")
    for n in range(9):
        for p in all_permutations(n):
            if avoids(p, p132):
                assert dyck_to_perm(perm_to_dyck(p)) == p
        for d in dyck_paths(n):
            assert perm_to_dyck(dyck_to_perm(d)) == d
    for n in range(11):
        for m in motzkin_paths(n):
            p = motzkin_to_perm(m)
            assert perm_to_motzkin(p) == m
    elapsed = time.perf_counter() - t0
    assert elapsed < 60.0
    _ok(2, f"round trips (132-avoiders n<=8, Motzkin n<=10) in {elapsed:.2f}s")


def test_criterion_03_statistic_transport():
    t0 = time.perf_counter()
    for n in range(1, 11):
        for p in motzkin_permutations(n):
            st = stats(p)
            d = perm_to_dyck(p)
            m = collapse_blocks(d)
            ds, ms = path_stats(d), path_stats(m)
            assert st.lds == ds.peaks == ms.up_steps + ms.horiz_steps
            assert st.lis == height(d) == height(m) + 1
            assert st.rises == ds.double_rises == ms.up_steps
    elapsed = time.perf_counter() - t0
    assert elapsed < 60.0
    _ok(3, f"lds/lis/rises transport for n<=10 in {elapsed:.2f}s")


def test_criterion_04_joint_lds_rises():
    rep = verify("A", {}, order=9)
    assert rep.passed, rep.mismatches[:3]
    _ok(4, "joint (lds, rises) distribution, three routes, n<=9")


def test_criterion_05_height_bounded_joint():
    for k in range(1, 6):
        rep = verify("Bk", {"k": k}, order=9)
        assert rep.passed, (k, rep.mismatches[:3])
    _ok(5, "height-bounded joint distribution k=1..5, n<=9")


def test_criterion_06_fixed_points():
    rep = verify("fp", {}, order=9)
    assert rep.passed, rep.mismatches[:3]
    for n in range(10):
        for q in motzkin_permutations(n):
            p = reverse(q)
            m = perm_to_motzkin(q)
            fp = stats(p).fixed_points
            assert fp == path_stats(m).horiz_at_zero + sum(gt_counts(m).values())
            assert fp == path_stats(m).horiz_at_zero + good_tunnels(m)
            assert fp == dyck_diag_tunnels(perm_to_dyck(q))
    _ok(6, "fixed-point distribution and tunnel identity, n<=9")


def test_criterion_07_joint_occurrences_free_rises_lrm():
    rep = verify("joint12j", {"max_j": 3}, order=8)
    assert rep.passed, rep.mismatches[:3]
    for k in range(2, 5):
        for r in range(0, k + 1):
            rep = verify("12k_r", {"k": k, "r": r}, order=9)
            assert rep.passed, (k, r, rep.mismatches[:3])
    assert verify("free_rises", {}, order=9).passed
    assert verify("lrm", {}, order=9).passed
    gf_lrm(12)  # both closed forms are computed and compared to order 12
    _ok(7, "joint 12..j, exactly-r, pair-count and rl-maxima distributions")


def test_criterion_08_general_pattern_avoidance():
    taus = ["546213", "2314", "23415", "3412", "34512",
            "32415", "231", "3241", "34251", "43512"]
    for t in taus:
        rep = verify("tau", {"tau": t}, order=9)
        assert rep.passed, (t, rep.mismatches[:3])
    got = gf_pattern_avoidance((5, 4, 6, 2, 1, 3), 10)
    closed = Series([1, -2], 10) / (Series([1, -1], 10) * Series([1, -2, -1], 10))
    assert got == closed
    assert got.coeffs[:7] == (1, 1, 2, 4, 9, 21, 50)
    _ok(8, "pattern avoidance for the ladder/rung families, n<=9")


def test_criterion_09_equinumerosity():
    assert gf_avoid_increasing(3, 10) == gf_pattern_avoidance((2, 3, 1, 4), 10)
    assert gf_avoid_increasing(4, 10) == gf_pattern_avoidance((3, 4, 2, 5, 1, 6), 10)
    _ok(9, "equinumerosity of 12...(k+1) and k(k+1)(k-1)...1(2k) avoiders, k=2,3")


def test_criterion_10_vincular_families():
    rep = verify("F", {"max_j": 3}, order=8)
    assert rep.passed, rep.mismatches[:3]
    rep = verify("rises_descents", {}, order=9)
    assert rep.passed, rep.mismatches[:3]
    for k in (3, 4):
        for r in (0, 1):
            rep = verify("12d3k_r", {"k": k, "r": r}, order=9)
            assert rep.passed, ("12", k, r, rep.mismatches[:3])
            rep = verify("21d3k_r", {"k": k, "r": r}, order=9)
            assert rep.passed, ("21", k, r, rep.mismatches[:3])
    # the attribution of the positive-r ratio family is stated in the report
    rep = verify("21d3k_r", {"k": 3, "r": 1}, order=9)
    assert any("21-3-...-k" in note for note in rep.notes)
    _ok(10, "vincular joint, rises/descents closed form, exactly-r families")


def test_criterion_11_chebyshev_identities():
    two_t = (0, 2)
    for k in range(0, 11):
        uk, ukm1, ukp1, ukm2 = (chebyshev_u(j) for j in (k, k - 1, k + 1, k - 2))
        assert poly_sub(poly_mul(uk, uk), poly_mul(ukm1, ukp1)) == (1,)
        assert poly_sub(poly_mul(uk, ukm1), poly_mul(ukm2, ukp1)) == two_t
    a = Series([1, -1], 20)
    b = Series([0, 0, 1], 20)
    for k in range(0, 9):
        lhs = cheb_p(k, a, b) ** 2 - cheb_p(k - 1, a, b) * cheb_p(k + 1, a, b)
        assert lhs == b ** k
    _ok(11, "Chebyshev product identities (k<=10) and cleared form (k<=8)")


def test_criterion_12_full_verification_battery():
    t0 = time.perf_counter()
    proc = subprocess.run(
        [sys.executable, "-m", "motzkin.cli", "verify", "--id", "all",
         "--order", "8"],
        capture_output=True, text=True)
    elapsed = time.perf_counter() - t0
    assert proc.returncode == 0, proc.stdout + proc.stderr
    assert "FAIL" not in proc.stdout
    assert elapsed < 300.0
    _ok(12, f"verify all --order 8 exit 0 in {elapsed:.1f}s")
