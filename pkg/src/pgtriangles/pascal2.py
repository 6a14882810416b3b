"""GF(2) carrier of the left-edge operator.

Over bits, the left edge of a difference triangle is a linear map: edge
element n is the XOR of C(n, k)·a_k over k, i.e. the Pascal matrix modulo
2 applied to the generator.  This module provides three routes to that
map on truncated coefficient vectors,

* t_naive    -- row-by-row inner products against Pascal parity rows,
* t_fast     -- the Kronecker butterfly exploiting the block structure
                P_{2N} = [[P_N, 0], [P_N, P_N]] (O(N log N) word XORs),
* t_rational -- truncated substitution f(X/(1+X)) / (1+X) in GF(2)
                power series,

plus the Lucas parity rule for single binomial coefficients and an exact
hockey-stick identity checker.  The map is an involution, which the test
suite verifies against the triangle engine.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

from math import comb

__all__ = [
    "F2Poly",
    "binom_parity",
    "t_naive",
    "t_fast",
    "t_rational",
    "hockey_stick_check",
    "HockeyStick",
]


class F2Poly:
    """Bit-packed GF(2) coefficient vector truncated to a fixed order.

    Bit i of `bits` is the coefficient of X^i; bits at index >= order are
    always zero.  Addition is XOR.
    """

    __slots__ = ("bits", "order")

    def __init__(self, bits: int, order: int):
        if order < 0:
            raise ValueError("order must be non-negative")
        self.order = order
        self.bits = bits & ((1 << order) - 1)

    @classmethod
    def from_bits(cls, coeffs: Iterable[int]) -> "F2Poly":
        cs = list(coeffs)
        v = 0
        for i, c in enumerate(cs):
            if c not in (0, 1):
                raise ValueError(f"coefficient {c!r} is not a bit")
            v |= c << i
        return cls(v, len(cs))

    @classmethod
    def from_string(cls, text: str) -> "F2Poly":
        """Little-endian '0'/'1' characters, index 0 first."""
        return cls.from_bits(int(ch) for ch in text)

    def to_bits(self) -> tuple[int, ...]:
        return tuple((self.bits >> i) & 1 for i in range(self.order))

    def to_string(self) -> str:
        return "".join(str(b) for b in self.to_bits())

    def bit(self, i: int) -> int:
        return (self.bits >> i) & 1

    def __xor__(self, other: "F2Poly") -> "F2Poly":
        if self.order != other.order:
            raise ValueError("order mismatch")
        return F2Poly(self.bits ^ other.bits, self.order)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, F2Poly)
            and self.order == other.order
            and self.bits == other.bits
        )

    def __hash__(self) -> int:
        return hash((self.bits, self.order))

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"F2Poly({self.to_string()!r})"


def binom_parity(n: int, k: int) -> int:
    """C(n, k) mod 2 by the Lucas criterion: 1 iff k's bits lie in n's."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be non-negative")
    return 1 if (n & k) == k else 0


def pascal_parity_rows(count: int) -> Iterable[int]:
    """Packed parity rows of Pascal's triangle: row' = row ^ (row << 1)."""
    row = 1
    for _ in range(count):
        yield row
        row ^= row << 1


def t_naive(f: F2Poly) -> F2Poly:
    """Pascal-mod-2 transform by direct row evaluation.

    Output bit n is the parity of popcount(row_n AND f) where row_n packs
    the parities C(n, 0..n); this equals XOR_k binom_parity(n, k)·a_k.
    """
    n = f.order
    mask = (1 << n) - 1
    out = 0
    row = 1
    fb = f.bits
    for j in range(n):
        out |= ((row & fb).bit_count() & 1) << j
        row = (row ^ (row << 1)) & mask
    return F2Poly(out, n)


_even_mask_cache: dict[tuple[int, int], int] = {}


def _even_mask(stride: int, width: int) -> int:
    # bits i in [0, width) whose `stride` bit is clear
    key = (stride, width)
    m = _even_mask_cache.get(key)
    if m is None:
        block = (1 << stride) - 1
        m = 0
        for off in range(0, width, 2 * stride):
            m |= block << off
        _even_mask_cache[key] = m
    return m


def t_fast(f: F2Poly) -> F2Poly:
    """Pascal-mod-2 transform via the Kronecker butterfly.

    Pads to the next power of two, runs one masked shift-XOR per level,
    and truncates back; lower triangularity makes the truncation exact.
    """
    n = f.order
    if n <= 1:
        return F2Poly(f.bits, n)
    width = 1 << (n - 1).bit_length()
    v = f.bits
    stride = 1
    while stride < width:
        v ^= (v & _even_mask(stride, width)) << stride
        stride <<= 1
    return F2Poly(v, n)


def _div_1pxs(v: int, stride: int, order: int) -> int:
    # division by (1 + X^stride) mod X^order: prefix-XOR at that stride,
    # applied by doubling
    s = stride
    while s < order:
        v ^= v << s
        s <<= 1
    return v & ((1 << order) - 1)


def t_rational(f: F2Poly) -> F2Poly:
    """Pascal-mod-2 transform as the substitution f(X/(1+X)) · 1/(1+X).

    Horner accumulation over q_{j+1} = q_j (1+X) + a_{j+1} X^{j+1} builds
    the denominators-cleared substitution (1+X)^{n-1} f(X/(1+X)); the
    owed factor (1+X)^{-n} is then applied in one pass, factored over the
    binary digits of n since (1+X)^(2^i) = 1 + X^(2^i), each factor being
    a strided prefix-XOR inverse.
    """
    n = f.order
    if n < 1:
        raise ValueError("order must be at least 1")
    mask = (1 << n) - 1
    q = f.bits & 1
    for j in range(1, n):
        q = (q ^ (q << 1)) & mask
        q ^= ((f.bits >> j) & 1) << j
    i = 1
    while i <= n:
        if n & i:
            q = _div_1pxs(q, i, n)
        i <<= 1
    return F2Poly(q, n)


class HockeyStick(NamedTuple):
    K: int
    n: int
    lhs: int
    rhs: int
    ok: bool


def hockey_stick_check(K: int, n: int) -> HockeyStick:
    """Exact check of sum_{i=0..n} C(K+i, K) == C(K+n+1, K+1)."""
    if K < 0 or n < 0:
        raise ValueError("K and n must be non-negative")
    lhs = sum(comb(K + i, K) for i in range(n + 1))
    rhs = comb(K + n + 1, K + 1)
    return HockeyStick(K, n, lhs, rhs, lhs == rhs)
