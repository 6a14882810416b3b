"""Builtin sequence generators and the generator-spec mini-language.

All generators return tuples of non-negative integers ready to feed the
triangle engine.  The sqrt(2)-bit generator decides each bit with exact
integer comparisons (no floating point), so outputs are identical on
every platform.  The ten-bit tail (0,1,0,0,0,0,0,1,0,0) is a named
builtin because the helicoid experiments reuse it throughout.

Spec syntax (for the CLI and census): "kind:arg,arg,flag", e.g.

    inline:27,28,44,76        literal values
    file:path.json            JSON array or newline-delimited decimals
    primes:limit=100          primes below 100
    primes:count=20,desc      first 20 primes, descending
    square-primes:count=20,desc
    powers:5,10,desc          1^5..10^5, descending
    fibonacci:30,desc
    fibonacci-bisection:30,desc
    base3-no-2:314,desc       integers with no digit 2 in base 3
    prime-indicator:0,50      0/1 indicator of primality on [0, 50)
    times3-pow2:11,desc       3 * 2^j
    sqrt2-bits:40             1 iff frac(k*sqrt(2)) < 1/2, k = 1..40
    fixed-tail-bits           the ten-bit tail itself
"""

from __future__ import annotations

import json
from math import isqrt
from pathlib import Path
from typing import Sequence

from . import spnum

__all__ = [
    "FIXED_TAIL",
    "primes_seq",
    "square_primes_seq",
    "powers_seq",
    "fibonacci_seq",
    "fibonacci_bisection_seq",
    "base3_no2_seq",
    "prime_indicator_seq",
    "times3_pow2_seq",
    "sqrt2_bits_seq",
    "with_fixed_tail",
    "parse_generator_spec",
    "read_sequence_file",
]

FIXED_TAIL = (0, 1, 0, 0, 0, 0, 0, 1, 0, 0)


def with_fixed_tail(seq: Sequence[int]) -> tuple[int, ...]:
    return tuple(seq) + FIXED_TAIL


def primes_seq(
    limit: int | None = None, count: int | None = None, descending: bool = False
) -> tuple[int, ...]:
    if (limit is None) == (count is None):
        raise ValueError("give exactly one of limit or count")
    if limit is not None:
        ps = [int(p) for p in spnum.primes_below(limit)]
    else:
        bound = 64
        while True:
            ps = [int(p) for p in spnum.primes_below(bound)]
            if len(ps) >= count:
                ps = ps[:count]
                break
            bound *= 2
    return tuple(reversed(ps)) if descending else tuple(ps)


def square_primes_seq(
    limit: int | None = None, count: int | None = None, descending: bool = False
) -> tuple[int, ...]:
    if (limit is None) == (count is None):
        raise ValueError("give exactly one of limit or count")
    if limit is not None:
        terms = spnum.sp_sieve(limit).terms.tolist()
    else:
        terms = [spnum.nth_sp(i) for i in range(1, count + 1)]
    return tuple(reversed(terms)) if descending else tuple(terms)


def powers_seq(exponent: int, count: int, descending: bool = True) -> tuple[int, ...]:
    """count-many exponent-th powers of 1, 2, ..."""
    vals = [i**exponent for i in range(1, count + 1)]
    return tuple(reversed(vals)) if descending else tuple(vals)


def fibonacci_seq(count: int, descending: bool = True) -> tuple[int, ...]:
    """First `count` Fibonacci numbers starting 1, 1, 2, 3, ..."""
    vals = []
    a, b = 1, 1
    for _ in range(count):
        vals.append(a)
        a, b = b, a + b
    return tuple(reversed(vals)) if descending else tuple(vals)


def fibonacci_bisection_seq(count: int, descending: bool = True) -> tuple[int, ...]:
    """First `count` even-indexed Fibonacci numbers 1, 3, 8, 21, ..."""
    vals = []
    a, b = 1, 1
    for _ in range(count):
        vals.append(b)
        a, b = a + b, a + 2 * b
    return tuple(reversed(vals)) if descending else tuple(vals)


def base3_no2_seq(count: int, descending: bool = True) -> tuple[int, ...]:
    """First `count` non-negative integers whose base-3 digits avoid 2.

    Element i reads the binary digits of i as base-3 digits (the greedy
    sequence free of 3-term arithmetic progressions), starting at 0.
    """
    vals = []
    for i in range(count):
        v = 0
        place = 1
        m = i
        while m:
            if m & 1:
                v += place
            place *= 3
            m >>= 1
        vals.append(v)
    return tuple(reversed(vals)) if descending else tuple(vals)


def prime_indicator_seq(start: int, stop: int) -> tuple[int, ...]:
    """0/1 indicator of primality on the integer range [start, stop)."""
    if stop < start:
        raise ValueError("empty range")
    return tuple(1 if spnum.is_prime(j) else 0 for j in range(start, stop))


def times3_pow2_seq(count: int, descending: bool = True) -> tuple[int, ...]:
    """3, 6, 12, ...: three times the powers of two."""
    vals = [3 << j for j in range(count)]
    return tuple(reversed(vals)) if descending else tuple(vals)


def sqrt2_bits_seq(count: int) -> tuple[int, ...]:
    """Bit k is 1 iff frac(k * sqrt(2)) < 1/2, for k = 1..count.

    Decided exactly: with m = floor(k * sqrt(2)) = isqrt(2 k^2), the
    fractional part is below 1/2 iff 8 k^2 < (2m + 1)^2.
    """
    bits = []
    for k in range(1, count + 1):
        m = isqrt(2 * k * k)
        bits.append(1 if 8 * k * k < (2 * m + 1) ** 2 else 0)
    return tuple(bits)


def read_sequence_file(path: str | Path) -> tuple[int, ...]:
    """JSON array of non-negative integers, or newline-delimited decimals."""
    text = Path(path).read_text()
    stripped = text.lstrip()
    if stripped.startswith("["):
        data = json.loads(text)
        if not isinstance(data, list):
            raise ValueError("JSON sequence file must hold an array")
        return tuple(int(v) for v in data)
    return tuple(int(line) for line in text.split() if line)


_KINDS = {
    "inline",
    "file",
    "primes",
    "square-primes",
    "powers",
    "fibonacci",
    "fibonacci-bisection",
    "base3-no-2",
    "prime-indicator",
    "times3-pow2",
    "sqrt2-bits",
    "fixed-tail-bits",
}


def parse_generator_spec(spec: str) -> tuple[int, ...]:
    """Resolve a "kind:args" generator description to a sequence."""
    kind, _, rest = spec.partition(":")
    kind = kind.strip()
    if kind not in _KINDS:
        raise ValueError(f"unknown generator kind {kind!r}")
    args = [a.strip() for a in rest.split(",") if a.strip()] if rest else []
    flags = {a for a in args if a in ("desc", "asc")}
    kv = dict(a.split("=", 1) for a in args if "=" in a)
    pos = [a for a in args if a not in flags and "=" not in a]
    descending = "desc" in flags

    if kind == "inline":
        return tuple(int(a) for a in pos)
    if kind == "file":
        if len(pos) != 1:
            raise ValueError("file generator needs a path")
        return read_sequence_file(pos[0])
    if kind == "fixed-tail-bits":
        return FIXED_TAIL
    if kind in ("primes", "square-primes"):
        fn = primes_seq if kind == "primes" else square_primes_seq
        limit = int(kv["limit"]) if "limit" in kv else None
        count = int(kv["count"]) if "count" in kv else None
        if limit is None and count is None and len(pos) == 1:
            limit = int(pos[0])
        return fn(limit=limit, count=count, descending=descending)
    if kind == "powers":
        return powers_seq(int(pos[0]), int(pos[1]), descending)
    if kind == "fibonacci":
        return fibonacci_seq(int(pos[0]), descending)
    if kind == "fibonacci-bisection":
        return fibonacci_bisection_seq(int(pos[0]), descending)
    if kind == "base3-no-2":
        return base3_no2_seq(int(pos[0]), descending)
    if kind == "prime-indicator":
        return prime_indicator_seq(int(pos[0]), int(pos[1]))
    if kind == "times3-pow2":
        return times3_pow2_seq(int(pos[0]), descending)
    if kind == "sqrt2-bits":
        return sqrt2_bits_seq(int(pos[0]))
    raise AssertionError("unreachable")
