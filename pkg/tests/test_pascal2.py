import random
from math import comb

import pytest

from pgtriangles import seqcore
from pgtriangles.pascal2 import (
    F2Poly,
    binom_parity,
    hockey_stick_check,
    pascal_parity_rows,
    t_fast,
    t_naive,
    t_rational,
)


def test_binom_parity_against_exact_binomials():
    for n in range(64):
        for k in range(n + 2):
            assert binom_parity(n, k) == comb(n, k) % 2


def test_parity_rows_match_lucas():
    for n, row in enumerate(pascal_parity_rows(128)):
        # bit k of the packed row is C(n, k) mod 2
        for k in range(n + 1):
            assert (row >> k) & 1 == binom_parity(n, k)


def test_t_naive_examples():
    assert t_naive(F2Poly.from_bits([1, 0, 1])).to_bits() == (1, 1, 0)
    n = 24
    ones = t_naive(F2Poly(1, n))
    assert ones.to_bits() == (1,) * n
    zero = t_naive(F2Poly(0, n))
    assert zero.bits == 0


def test_t_fast_examples_and_oracle():
    assert t_fast(F2Poly.from_bits([1, 0, 1, 0])).to_bits() == (1, 1, 0, 0)
    assert t_fast(F2Poly(1, 16)).to_bits() == (1,) * 16
    rng = random.Random(99)
    for _ in range(1000):
        n = rng.randint(1, 1024)
        f = F2Poly(rng.getrandbits(n), n)
        assert t_fast(f) == t_naive(f)


def test_t_rational_examples():
    assert t_rational(F2Poly.from_bits([1, 0, 1, 0, 0])).to_bits() == (1, 1, 0, 0, 1)
    n = 20
    assert t_rational(F2Poly(1, n)).to_bits() == (1,) * n
    # f = X gives coefficient m of X/(1+X)^2, which is C(m, 1) mod 2
    got = t_rational(F2Poly(2, 12)).to_bits()
    assert got == tuple(m % 2 for m in range(12))


def test_triple_agreement_and_left_edge():
    rng = random.Random(4)
    for _ in range(300):
        n = rng.randint(1, 160)
        bits = [rng.randint(0, 1) for _ in range(n)]
        f = F2Poly.from_bits(bits)
        a = t_naive(f)
        assert t_fast(f) == a
        assert t_rational(f) == a
        assert seqcore.left_edge(bits) == a.to_bits()


def test_involution_exhaustive_small():
    for n in range(1, 9):
        for v in range(1 << n):
            f = F2Poly(v, n)
            assert t_naive(t_naive(f)) == f


def test_involution_random_large():
    rng = random.Random(12)
    for _ in range(40):
        n = rng.randint(1, 4096)
        f = F2Poly(rng.getrandbits(n), n)
        assert t_fast(t_fast(f)) == f


def test_linearity():
    rng = random.Random(8)
    for _ in range(100):
        n = rng.randint(1, 256)
        f = F2Poly(rng.getrandbits(n), n)
        g = F2Poly(rng.getrandbits(n), n)
        assert t_naive(f ^ g) == t_naive(f) ^ t_naive(g)


def test_truncation_consistency():
    rng = random.Random(21)
    for _ in range(100):
        n = rng.randint(1, 200)
        bits = rng.getrandbits(n)
        big = t_naive(F2Poly(bits | (rng.getrandbits(n) << n), 2 * n))
        small = t_naive(F2Poly(bits, n))
        assert big.bits & ((1 << n) - 1) == small.bits


def test_all_ones_powers_identity():
    # coefficient m of the (N+1)-st power of the all-ones series equals
    # C(N + m, N) mod 2, for orders up to 16 and 512 coefficients
    limit = 512
    mask = (1 << limit) - 1
    ones = mask
    power = ones
    for n_exp in range(0, 17):
        for m in (0, 1, 2, 3, 5, 17, 100, 511):
            assert (power >> m) & 1 == comb(n_exp + m, n_exp) % 2
        # multiply by the all-ones series: prefix sums of coefficients mod 2
        nxt = 0
        acc = 0
        for i in range(limit):
            acc ^= (power >> i) & 1
            nxt |= acc << i
        power = nxt & mask


def test_hockey_stick():
    assert hockey_stick_check(2, 2) == (2, 2, 10, 10, True)
    r = hockey_stick_check(0, 9)
    assert r.lhs == r.rhs == 10
    r = hockey_stick_check(3, 4)
    assert r.lhs == r.rhs == 70 and r.ok
    for K in range(8):
        for n in range(8):
            assert hockey_stick_check(K, n).ok


def test_f2poly_basics():
    f = F2Poly.from_string("1011")
    assert f.to_string() == "1011"
    assert f.bit(0) == 1 and f.bit(2) == 1 and f.bit(1) == 0
    assert len(f) == 4
    g = F2Poly.from_bits([1, 1, 1, 1])
    assert (f ^ g).to_bits() == (0, 1, 0, 0)
    with pytest.raises(ValueError):
        F2Poly.from_bits([2])
    with pytest.raises(ValueError):
        f ^ F2Poly(1, 3)
    # bits beyond the order are masked away
    assert F2Poly(0b111111, 3).bits == 0b111
