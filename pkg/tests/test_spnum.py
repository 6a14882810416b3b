import random
from math import isqrt

import pytest

from pgtriangles import spnum
from pgtriangles.spnum import (
    ScanBudgetError,
    density_trace,
    find_sp_pairs_with_gap,
    gap_representation,
    is_prime,
    is_sp,
    nth_sp,
    pell_fundamental,
    sp_factor,
    sp_in_range,
    sp_sieve,
    sp_twins,
)

SP_BELOW_100 = [8, 12, 18, 20, 27, 28, 32, 44, 45, 48, 50, 52, 63, 68,
                72, 75, 76, 80, 92, 98, 99]


def test_sieve_below_100_matches_published_list():
    assert sp_sieve(100).terms.tolist() == SP_BELOW_100


def test_sieve_counts():
    assert sp_sieve(400).count() == 75
    assert sp_sieve(100).count() == 21


def test_membership_edge_cases():
    sieve = sp_sieve(200)
    assert 8 in sieve and 27 in sieve and 32 in sieve and 72 in sieve
    assert 16 not in sieve  # perfect square
    assert 7 not in sieve  # prime
    assert 1 not in sieve and 0 not in sieve
    assert 108 in sieve  # 6^2 * 3, square factor shares a prime with p
    with pytest.raises(ValueError):
        200 in sieve


def test_no_primes_no_squares_in_sieve():
    sieve = sp_sieve(5000)
    for n in sieve.terms.tolist():
        assert not is_prime(n)
        assert isqrt(n) ** 2 != n


def test_sp_factor_soundness():
    sieve = sp_sieve(5000)
    members = set(sieve.terms.tolist())
    for n in range(2, 5000):
        f = sp_factor(n)
        if n in members:
            k, p = f
            assert k >= 2 and is_prime(p) and k * k * p == n
        else:
            assert f is None


def test_representation_uniqueness_below_1e5():
    # kernel argument: p must be the unique odd-exponent prime, so (k, p)
    # is forced; verified by exhaustive factorization via the spf table
    sieve = sp_sieve(10**5)
    for n in sieve.terms.tolist():
        fac = sieve.factor(n)
        odd = [p for p, e in fac if e % 2 == 1]
        assert len(odd) == 1
        p = odd[0]
        k = isqrt(n // p)
        assert k * k * p == n and k >= 2
        reps = [
            (kk, n // (kk * kk))
            for kk in range(2, isqrt(n // 2) + 1)
            if n % (kk * kk) == 0 and is_prime(n // (kk * kk))
        ]
        assert reps == [(k, p)]


def test_nth_values():
    assert nth_sp(1) == 8
    assert nth_sp(21) == 99
    assert nth_sp(76) == 404
    assert nth_sp(1000) == 7900
    with pytest.raises(ValueError):
        nth_sp(0)


def test_twins():
    assert sp_twins(29) == [(27, 28)]
    assert sp_twins(10) == []
    t100 = sp_twins(100)
    for pair in [(27, 28), (44, 45), (75, 76), (98, 99)]:
        assert pair in t100


def test_sp_in_range_matches_sieve():
    sieve = sp_sieve(30000)
    assert sp_in_range(0, 30000) == sieve.terms.tolist()
    lo, hi = 7321, 19999
    expect = [int(t) for t in sieve.terms if lo <= t < hi]
    assert sp_in_range(lo, hi) == expect


def test_sp_in_range_witnesses():
    for n, k, p in sp_in_range(10**12, 10**12 + 2000, with_witness=True):
        assert k * k * p == n and k >= 2 and is_prime(p)


def test_pell_examples():
    assert (pell_fundamental(2).m, pell_fundamental(2).n) == (3, 2)
    assert (pell_fundamental(6).m, pell_fundamental(6).n) == (5, 2)
    assert (pell_fundamental(15).m, pell_fundamental(15).n) == (4, 1)
    big = pell_fundamental(61)
    assert (big.m, big.n) == (1766319049, 226153980)
    assert big.check()


def test_pell_fundamental_is_least():
    # brute force over n confirms minimality for every small non-square D
    for d in range(2, 60):
        if isqrt(d) ** 2 == d:
            with pytest.raises(ValueError):
                pell_fundamental(d)
            continue
        sol = pell_fundamental(d)
        assert sol.check()
        for n in range(1, sol.n):
            m2 = 1 + d * n * n
            assert isqrt(m2) ** 2 != m2


def test_pell_exactness_large():
    rng = random.Random(6)
    for _ in range(25):
        d = rng.randint(2, 3000)
        if isqrt(d) ** 2 == d:
            continue
        assert pell_fundamental(d).check()


def test_gap_named_cases():
    c = gap_representation(1)
    assert (c.a, c.b, c.case_tag) == (28, 27, "i")
    c = gap_representation(6)
    assert (c.a, c.b, c.case_tag) == (18, 12, "iv")
    c = gap_representation(3)
    assert (c.a, c.b, c.case_tag) == (75, 72, "ii")
    c = gap_representation(9)
    assert c.case_tag == "v" and c.a - c.b == 9
    c = gap_representation(15)
    assert c.case_tag == "iii" and (c.a, c.b) == (27, 12)
    with pytest.raises(ValueError):
        gap_representation(0)


def test_gap_case_partition():
    seen = {}
    for x in range(1, 400):
        seen.setdefault(gap_representation(x).case_tag, []).append(x)
    assert seen["i"] == [1]
    assert all(is_prime(x) for x in seen["ii"])
    assert all(x % 2 == 1 and not is_prime(x) for x in seen["iii"])
    assert all(x % 2 == 0 and not is_prime(x) for x in seen["iv"])
    assert 4 in seen["v"] and 9 in seen["v"] and 12 in seen["v"]
    assert sum(len(v) for v in seen.values()) == 399


def test_gap_certificates_verified_independently():
    sieve = sp_sieve(10**5)
    for x in list(range(1, 200)) + [997, 1024, 1847, 2000]:
        c = gap_representation(x)
        c.verify()
        assert c.a - c.b == x
        # membership cross-check against the sieve whenever in range
        for v in (c.a, c.b):
            if v < sieve.limit:
                assert v in sieve


def test_gap_certificate_json():
    d = gap_representation(7).to_json_dict()
    assert d["case"] == "ii"
    assert int(d["a"]) - int(d["b"]) == 7


def test_find_pairs_examples():
    assert find_sp_pairs_with_gap(2, min_value=30, count=1) == [(48, 50)]
    assert find_sp_pairs_with_gap(1, min_value=0, count=2) == [(27, 28), (44, 45)]
    assert find_sp_pairs_with_gap(4, min_value=72, count=1) == [(72, 76)]


def test_find_pairs_budget_error_carries_partial():
    with pytest.raises(ScanBudgetError) as ei:
        find_sp_pairs_with_gap(1, min_value=0, count=50, scan_limit=100)
    assert ei.value.pairs == [(27, 28), (44, 45), (75, 76), (98, 99)]


def test_find_pairs_large_gap_far_out():
    # partner window far from the base window (gap much larger than it)
    (b, a), = find_sp_pairs_with_gap(10**9, min_value=10**12, count=1)
    assert a - b == 10**9


def test_density_checkpoints():
    rows = density_trace(10**6, [100, 400, 10**6])
    assert rows[0][:2] == (100, 21)
    assert rows[1][:2] == (400, 75)
    assert rows[2][:2] == (10**6, 69179)
    for _, count, main, ratio in rows:
        assert ratio == pytest.approx(count / main)
    with pytest.raises(ValueError):
        density_trace(100, [400])
