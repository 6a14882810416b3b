"""Square-prime arithmetic.

A square-prime (SP number) is an integer of the form k^2 * p with k >= 2
and p prime: 8, 12, 18, 20, 27, 28, ...  Equivalently, exactly one prime
in the factorization carries an odd exponent and the cofactor square is
at least 4; the set contains no primes and no perfect squares, and the
representation n = k^2 * p is unique (p is forced to be the unique
odd-exponent prime).

Provided here: sieving and membership, the n-th term, twin pairs,
segmented detection near arbitrary (large) values, a continued-fraction
Pell solver, the constructive five-case procedure producing a pair of
square-primes at any prescribed difference, and an empirical density
table against the (zeta(2) - 1) * x / log x main term.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import isqrt, log, pi
from typing import Iterable, Optional

import numpy as np

__all__ = [
    "SpSieve",
    "PellSolution",
    "GapCertificate",
    "ScanBudgetError",
    "sp_sieve",
    "is_sp",
    "sp_factor",
    "nth_sp",
    "sp_twins",
    "sp_in_range",
    "find_sp_pairs_with_gap",
    "pell_fundamental",
    "gap_representation",
    "density_trace",
    "is_prime",
    "primes_below",
]

ZETA2_MINUS_1 = pi * pi / 6.0 - 1.0


# ----------------------------------------------------------------------
# primes

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
# deterministic for n < 3.3 * 10^24 with the bases above


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin (valid far beyond 64 bits)."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _sieve_bool(limit: int) -> np.ndarray:
    """Boolean primality table for [0, limit)."""
    flags = np.zeros(max(limit, 2), dtype=bool)
    if limit > 2:
        flags[2:] = True
        for p in range(2, isqrt(limit - 1) + 1):
            if flags[p]:
                flags[p * p :: p] = False
    return flags[:limit]


def primes_below(limit: int) -> np.ndarray:
    """All primes < limit as an int64 array."""
    if limit <= 2:
        return np.array([], dtype=np.int64)
    return np.flatnonzero(_sieve_bool(limit)).astype(np.int64)


_small_prime_flags = _sieve_bool(1 << 21)
_prefilter_primes = [int(p) for p in np.flatnonzero(_small_prime_flags[:1000])]


def _is_prime_fast(n: int) -> bool:
    if n < len(_small_prime_flags):
        return bool(_small_prime_flags[n])
    for p in _prefilter_primes:
        if n % p == 0:
            return False
    return is_prime(n)


# ----------------------------------------------------------------------
# sieve

@dataclass(frozen=True)
class SpSieve:
    """Square-prime table below `limit` with membership and factor data.

    terms is the sorted int64 array of SP numbers < limit; member is the
    0/1 table over [0, limit); spf holds smallest prime factors up to the
    limit for exhaustive factorization checks.
    """

    limit: int
    terms: np.ndarray
    member: np.ndarray
    spf: np.ndarray

    def __contains__(self, n: int) -> bool:
        if not 0 <= n < self.limit:
            raise ValueError(f"{n} outside sieve range [0, {self.limit})")
        return bool(self.member[n])

    def count(self) -> int:
        return len(self.terms)

    def count_below(self, x: int) -> int:
        if x > self.limit:
            raise ValueError(f"{x} beyond sieve limit {self.limit}")
        return int(np.searchsorted(self.terms, x, side="left"))

    def factor(self, n: int) -> list[tuple[int, int]]:
        """(prime, exponent) pairs via the smallest-prime-factor table."""
        if not 2 <= n < self.limit:
            raise ValueError(f"{n} outside sieve range")
        out: list[tuple[int, int]] = []
        while n > 1:
            p = int(self.spf[n])
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        return out


def _spf_table(limit: int) -> np.ndarray:
    spf = np.zeros(limit, dtype=np.int32)
    for p in range(2, isqrt(limit - 1) + 1):
        if spf[p] == 0:
            sl = spf[p * p :: p]
            sl[sl == 0] = p
    unset = np.flatnonzero(spf[2:] == 0) + 2
    spf[unset] = unset
    return spf


def sp_sieve(limit: int) -> SpSieve:
    """All square-primes below `limit`, by direct k^2 * p construction.

    Uniqueness of the representation means the k-loop emits each term
    exactly once, so no deduplication is needed.
    """
    if limit < 2:
        raise ValueError("limit must be at least 2")
    if limit > (1 << 27):
        raise ValueError("limit too large for the in-memory sieve")
    primes = primes_below((limit + 3) // 4)
    chunks = []
    k = 2
    while k * k * 2 < limit:
        ps = primes[: np.searchsorted(primes, (limit - 1) // (k * k), side="right")]
        chunks.append(ps * (k * k))
        k += 1
    terms = np.sort(np.concatenate(chunks)) if chunks else np.array([], dtype=np.int64)
    member = np.zeros(limit, dtype=bool)
    member[terms] = True
    return SpSieve(limit, terms, member, _spf_table(limit))


def sp_factor(n: int) -> Optional[tuple[int, int]]:
    """The unique (k, p) with n == k^2 * p, or None if n is not SP.

    Full trial-division factorization; intended for n up to ~10^12.
    """
    if n < 8:
        return None
    m = n
    odd_prime = None
    square = 1
    f = 2
    while f * f <= m:
        if m % f == 0:
            e = 0
            while m % f == 0:
                m //= f
                e += 1
            if e % 2 == 1:
                if odd_prime is not None:
                    return None
                odd_prime = f
                e -= 1
            square *= f ** (e // 2)
        f += 1 if f == 2 else 2
    if m > 1:
        if odd_prime is not None:
            return None
        odd_prime = m
    if odd_prime is None:
        return None  # perfect square
    k = square
    if k < 2:
        return None  # the prime itself, or p^2 cofactor below 4
    return k, odd_prime


def is_sp(n: int) -> bool:
    return sp_factor(n) is not None


_nth_cache: dict[str, SpSieve] = {}


def nth_sp(n: int) -> int:
    """The n-th square-prime (1-based), extending the sieve on demand."""
    if n < 1:
        raise ValueError("index must be at least 1")
    sieve = _nth_cache.get("sieve")
    if sieve is None or len(sieve.terms) < n:
        limit = 64
        if n > 4:
            limit = max(limit, int(n * log(n) * 2.0))
        while True:
            sieve = sp_sieve(limit)
            if len(sieve.terms) >= n:
                break
            limit *= 2
        _nth_cache["sieve"] = sieve
    return int(sieve.terms[n - 1])


def sp_twins(limit: int) -> list[tuple[int, int]]:
    """All pairs (s, s+1) of square-primes below `limit`."""
    sieve = sp_sieve(limit)
    t = sieve.terms
    idx = np.flatnonzero(np.diff(t) == 1)
    return [(int(t[i]), int(t[i + 1])) for i in idx]


# ----------------------------------------------------------------------
# segmented detection near large values

def _primes_in_window(p_lo: int, p_hi: int) -> list[int]:
    """Primes in [p_lo, p_hi], both ends inclusive."""
    if p_hi < p_lo:
        return []
    out: list[int] = []
    small_end = len(_small_prime_flags)
    if p_lo < small_end:
        top = min(p_hi + 1, small_end)
        out.extend((np.flatnonzero(_small_prime_flags[p_lo:top]) + p_lo).tolist())
        p_lo = top
    if p_lo > p_hi:
        return out
    if p_hi - p_lo < 64:
        out.extend(p for p in range(p_lo, p_hi + 1) if _is_prime_fast(p))
        return out
    # long window above the table: vectorized small-prime prefilter, then
    # Miller-Rabin on survivors (candidates here all exceed the prefilter
    # primes, so striking multiples never removes a prime)
    arr = np.arange(p_lo, p_hi + 1, dtype=np.int64)
    keep = np.ones(len(arr), dtype=bool)
    for q in _prefilter_primes:
        keep &= arr % q != 0
    out.extend(int(v) for v in arr[keep] if is_prime(int(v)))
    return out


def sp_in_range(lo: int, hi: int, with_witness: bool = False):
    """Square-primes in [lo, hi), enumerated as k^2 * p per square factor.

    The window may sit anywhere below 2^62, far beyond any in-memory
    sieve.  Small square factors k are walked directly (one prime window
    per k); the long sparse tail of large k is covered by iterating the
    small primes p instead, so the cost scales with the window width and
    not with sqrt(hi).  Returns a sorted list of ints, or of (n, k, p)
    triples.
    """
    lo = max(lo, 0)
    if hi <= lo:
        return []
    if hi > (1 << 62):
        raise ValueError("window exceeds the 2^62 scan ceiling")
    out = []
    width = hi - lo
    table = len(_small_prime_flags)
    k_cut = max(isqrt((hi - 1) // table) + 1, isqrt(4 * width), 64)
    k = 2
    while k * k * 2 < hi and k <= k_cut:
        kk = k * k
        p_lo = max(2, -(-lo // kk))
        p_hi = (hi - 1) // kk
        if p_lo <= p_hi:
            for p in _primes_in_window(p_lo, p_hi):
                out.append((kk * p, k, p) if with_witness else kk * p)
        k += 1
    # large square factors: p = n / k^2 is below the cached prime table
    p_max = (hi - 1) // ((k_cut + 1) * (k_cut + 1))
    if p_max >= 2:
        for p in _primes_in_window(2, p_max):
            k_lo = isqrt(max(lo - 1, 0) // p)
            while k_lo * k_lo * p < lo:
                k_lo += 1
            k_lo = max(k_lo, k_cut + 1)
            k_hi = isqrt((hi - 1) // p)
            for q in range(k_lo, k_hi + 1):
                out.append((q * q * p, q, p) if with_witness else q * q * p)
    out.sort()
    return out


class ScanBudgetError(RuntimeError):
    """Scan exceeded its budget; carries the pairs found so far."""

    def __init__(self, budget: int, pairs: list[tuple[int, int]]):
        super().__init__(f"square-prime scan exhausted budget {budget}")
        self.budget = budget
        self.pairs = pairs


def find_sp_pairs_with_gap(
    x: int,
    min_value: int = 0,
    count: int = 1,
    scan_limit: Optional[int] = None,
    with_witness: bool = False,
):
    """First `count` pairs (b, b + x) of square-primes with b >= min_value.

    Scans upward in windows (on-demand extension); existence for every x
    is guaranteed, so the default budget is effectively unbounded.  With
    `with_witness`, pairs come as ((b, kb, pb), (a, ka, pa)).
    """
    if x < 1:
        raise ValueError("gap must be at least 1")
    if count < 1:
        raise ValueError("count must be at least 1")
    budget = scan_limit if scan_limit is not None else 1 << 61
    pairs = []
    lo = max(min_value, 0)
    window = 1 << 14
    while lo < budget:
        hi = min(lo + window, budget)
        lows = sp_in_range(lo, hi, with_witness=True)
        if x < window:
            # partner window overlaps the base window; reuse plus the strip
            partners = {t[0]: t for t in lows}
            partners.update(
                {t[0]: t for t in sp_in_range(hi, hi + x, with_witness=True)}
            )
        else:
            partners = {t[0]: t for t in sp_in_range(lo + x, hi + x, with_witness=True)}
        for low in lows:
            other = partners.get(low[0] + x)
            if other is not None:
                pairs.append((low, other) if with_witness else (low[0], low[0] + x))
                if len(pairs) >= count:
                    return pairs
        lo = hi
        window *= 2
    raise ScanBudgetError(budget, pairs)


# ----------------------------------------------------------------------
# Pell

@dataclass(frozen=True)
class PellSolution:
    """Fundamental solution of m^2 - D n^2 = 1 (exact integers)."""

    D: int
    m: int
    n: int

    def check(self) -> bool:
        return self.m * self.m - self.D * self.n * self.n == 1


def pell_fundamental(D: int) -> PellSolution:
    """Least positive solution via the continued fraction of sqrt(D)."""
    if D < 2:
        raise ValueError("D must be at least 2")
    a0 = isqrt(D)
    if a0 * a0 == D:
        raise ValueError(f"{D} is a perfect square")
    m, den, a = 0, 1, a0
    h_prev, h = 1, a0
    k_prev, k = 0, 1
    while h * h - D * k * k != 1:
        m = den * a - m
        den = (D - m * m) // den
        a = (a0 + m) // den
        h, h_prev = a * h + h_prev, h
        k, k_prev = a * k + k_prev, k
    return PellSolution(D, h, k)


# ----------------------------------------------------------------------
# gap representation

@dataclass(frozen=True)
class GapCertificate:
    """Witness that x = a - b with both sides square-primes.

    a == a_prime * a_k^2 and b == b_prime * b_k^2, with both k's >= 2 and
    both primes verified; the case tag names which branch of the
    constructive partition produced it.
    """

    x: int
    case_tag: str
    a: int
    b: int
    a_prime: int
    a_k: int
    b_prime: int
    b_k: int

    def verify(self) -> None:
        if self.a - self.b != self.x:
            raise ValueError("difference mismatch")
        for value, p, k in (
            (self.a, self.a_prime, self.a_k),
            (self.b, self.b_prime, self.b_k),
        ):
            if k < 2:
                raise ValueError("square factor below 2")
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
            if value != p * k * k:
                raise ValueError("factorization mismatch")

    def to_json_dict(self) -> dict:
        return {
            "x": self.x,
            "case": self.case_tag,
            "a": str(self.a),
            "b": str(self.b),
            "a_prime": str(self.a_prime),
            "a_k": str(self.a_k),
            "b_prime": str(self.b_prime),
            "b_k": str(self.b_k),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)


def _square_split(x: int) -> tuple[int, int]:
    """x = c^2 * y with y squarefree, by trial division."""
    c, y = 1, 1
    m = x
    f = 2
    while f * f <= m:
        if m % f == 0:
            e = 0
            while m % f == 0:
                m //= f
                e += 1
            c *= f ** (e // 2)
            if e % 2 == 1:
                y *= f
        f += 1 if f == 2 else 2
    y *= m
    return c, y


def _gap_squarefree(y: int) -> GapCertificate:
    # y squarefree (primality is re-derived, not assumed from the split)
    if y == 1:
        return GapCertificate(1, "i", 28, 27, 7, 2, 3, 3)
    if is_prime(y):
        p = 3 if y == 2 else 2
        sol = pell_fundamental(p * y)
        return GapCertificate(
            y, "ii", y * sol.m**2, p * (y * sol.n) ** 2, y, sol.m, p, y * sol.n
        )
    if y % 2 == 1:
        p = min(q for q, _ in _factor_trial(y))
        K = (y // p - 1) // 2
        return GapCertificate(
            y, "iii", p * (K + 1) ** 2, p * K**2, p, K + 1, p, K
        )
    K = (y // 2 - 1) // 2
    if K == 1:
        return GapCertificate(6, "iv", 18, 12, 2, 3, 3, 2)
    return GapCertificate(y, "iv", 2 * (K + 1) ** 2, 2 * K**2, 2, K + 1, 2, K)


def _factor_trial(n: int) -> list[tuple[int, int]]:
    out = []
    m = n
    f = 2
    while f * f <= m:
        if m % f == 0:
            e = 0
            while m % f == 0:
                m //= f
                e += 1
            out.append((f, e))
        f += 1 if f == 2 else 2
    if m > 1:
        out.append((m, 1))
    return out


def gap_representation(x: int) -> GapCertificate:
    """A verified pair of square-primes at difference exactly x.

    Case routing over the five-set partition of the positive integers:
    (i) x = 1, (ii) x prime via the Pell equation m^2 - p x n^2 = 1,
    (iii) odd composite squarefree, (iv) even composite squarefree, and
    (v) non-squarefree x = c^2 y, which reuses the squarefree case for y
    and scales both square factors by c.
    """
    if x < 1:
        raise ValueError("x must be a positive integer")
    c, y = _square_split(x)
    inner = _gap_squarefree(y)
    if c == 1:
        cert = inner
    else:
        cert = GapCertificate(
            x,
            "v",
            inner.a_prime * (inner.a_k * c) ** 2,
            inner.b_prime * (inner.b_k * c) ** 2,
            inner.a_prime,
            inner.a_k * c,
            inner.b_prime,
            inner.b_k * c,
        )
    cert.verify()
    return cert


# ----------------------------------------------------------------------
# density

def density_trace(
    limit: int, checkpoints: Iterable[int]
) -> list[tuple[int, int, float, float]]:
    """Rows (x, #SP below x, (zeta(2)-1) x / log x, count/main-term).

    The slow monotone approach of the ratio toward 1 is reported, never
    asserted.
    """
    cps = sorted(set(int(c) for c in checkpoints))
    if not cps:
        return []
    if cps[-1] > limit:
        raise ValueError("checkpoint beyond limit")
    if cps[0] < 3:
        raise ValueError("checkpoints must be at least 3")
    sieve = sp_sieve(limit)
    rows = []
    for x in cps:
        count = sieve.count_below(x)
        main = ZETA2_MINUS_1 * x / log(x)
        rows.append((x, count, main, count / main))
    return rows
