"""Difference-triangle engine.

A generator row (a_0, ..., a_{L-1}) of non-negative integers induces a
triangular array: every subsequent row holds the absolute differences of
neighboring entries of the row above, so row j+1 element k is
|row_j[k+1] - row_j[k]| and row j has length L - j.

Exposed geometry:

* rows          -- the horizontal levels of the triangle,
* left edge     -- the sequence of first elements of successive rows
                   (the "western edge"; the overlying operator),
* rays          -- columns parallel to the western edge (ray 0 == edge),
* anti-diagonals / eastern edges -- diagonals i + j = const, read from
                   the right of the triangle.

Everything is exact integer arithmetic.  Elements are validated to fit in
a signed 64-bit word; since every triangle entry is bounded by the maximum
of the generator, no intermediate value can overflow once the input passes
validation.  Heavy rows are streamed with numpy using two ping-pong
buffers (never the whole triangle); binary rows use a bit-packed XOR
automaton, tiny rows plain Python.  All paths produce identical values.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

INT63_MAX = (1 << 63) - 1

# below this length plain Python beats per-row numpy call overhead
_NUMPY_MIN_LEN = 64


def validate_seq(seq: Iterable[int]) -> tuple[int, ...]:
    """Check elements are integers in [0, 2^63 - 1] and return a tuple."""
    out = tuple(seq)
    for e in out:
        if isinstance(e, bool) or not isinstance(e, (int, np.integer)):
            raise TypeError(f"sequence element {e!r} is not an integer")
        if e < 0:
            raise ValueError(f"sequence element {e} is negative")
        if e > INT63_MAX:
            raise OverflowError(f"sequence element {e} exceeds 64-bit magnitude")
    return tuple(int(e) for e in out)


def _dtype_for(max_val: int):
    # differences of values below 2^31 stay below 2^31, so int32 is lossless
    return np.int32 if max_val < (1 << 31) else np.int64


def next_row(seq: Sequence[int]) -> tuple[int, ...]:
    """One step of the row operator: absolute differences of neighbors."""
    s = validate_seq(seq)
    return tuple(abs(b - a) for a, b in zip(s, s[1:]))


def triangle_rows(seq: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Yield every row of the triangle, starting with the generator."""
    row = validate_seq(seq)
    while row:
        yield row
        row = tuple(abs(b - a) for a, b in zip(row, row[1:]))


def pack_bits(seq: Sequence[int]) -> int:
    """Little-endian bit packing: element i becomes bit i."""
    v = 0
    for i, e in enumerate(seq):
        if e:
            v |= 1 << i
    return v


def unpack_bits(v: int, length: int) -> tuple[int, ...]:
    return tuple((v >> i) & 1 for i in range(length))


def binary_rows(v: int, length: int) -> Iterator[int]:
    """Bit-packed rows of a binary triangle: row' = row XOR (row >> 1).

    Yields `length` packed rows.  Bits at index >= current row length are
    stale once the row shrinks, but they can never travel down to bit 0
    faster than the valid region shrinks, so no masking is needed.
    """
    for _ in range(length):
        yield v
        v ^= v >> 1


def _left_edge_bits(s: tuple[int, ...]) -> tuple[int, ...]:
    v = pack_bits(s)
    out = []
    for row in binary_rows(v, len(s)):
        out.append(row & 1)
    return tuple(out)


def _left_edge_py(s: tuple[int, ...]) -> tuple[int, ...]:
    out = [s[0]]
    row = s
    while len(row) > 1:
        row = tuple(abs(b - a) for a, b in zip(row, row[1:]))
        out.append(row[0])
    return tuple(out)


def _left_edge_np(s: tuple[int, ...]) -> tuple[int, ...]:
    dtype = _dtype_for(max(s))
    cur = np.array(s, dtype=dtype)
    nxt = np.empty(len(s) - 1, dtype=dtype)
    out = [int(cur[0])]
    for length in range(len(s) - 1, 0, -1):
        np.subtract(cur[1 : length + 1], cur[:length], out=nxt[:length])
        np.abs(nxt[:length], out=nxt[:length])
        out.append(int(nxt[0]))
        cur, nxt = nxt, cur
    return tuple(out)


def left_edge(seq: Sequence[int]) -> tuple[int, ...]:
    """The overlying operator: first elements of successive rows.

    Output length equals the input length.  Binary inputs take a
    bit-packed XOR path, long integer inputs a streaming numpy path;
    the paths are value-identical.
    """
    s = validate_seq(seq)
    if not s:
        raise ValueError("empty generator")
    if max(s) <= 1:
        return _left_edge_bits(s)
    if len(s) < _NUMPY_MIN_LEN:
        return _left_edge_py(s)
    return _left_edge_np(s)


def stream_row_prefixes(
    seq: Sequence[int],
    num_rays: int,
    include_generator: bool = True,
    segment_size: Optional[int] = None,
) -> Iterator[list[int]]:
    """Stream the triangle, yielding the first `num_rays` values of each row.

    Only two row buffers are alive at any time.  With `segment_size` the
    row update runs in fixed-size chunks (bit-identical to the one-shot
    update; exercised by tests as the data-parallel segmentation contract).
    """
    s = validate_seq(seq)
    if not s:
        return
    if include_generator:
        yield list(s[:num_rays])
    if len(s) == 1:
        return
    dtype = _dtype_for(max(s))
    cur = np.array(s, dtype=dtype)
    nxt = np.empty(len(s) - 1, dtype=dtype)
    for length in range(len(s) - 1, 0, -1):
        if segment_size is None:
            np.subtract(cur[1 : length + 1], cur[:length], out=nxt[:length])
        else:
            for lo in range(0, length, segment_size):
                hi = min(lo + segment_size, length)
                np.subtract(cur[lo + 1 : hi + 1], cur[lo:hi], out=nxt[lo:hi])
        np.abs(nxt[:length], out=nxt[:length])
        yield nxt[: min(num_rays, length)].tolist()
        cur, nxt = nxt, cur


def ray(seq: Sequence[int], k: int, max_len: Optional[int] = None) -> tuple[int, ...]:
    """Column k of the triangle, parallel to the western edge.

    Entry j is row_j[k]; the full ray has len(seq) - k entries.
    """
    s = validate_seq(seq)
    if not 0 <= k < len(s):
        raise IndexError(f"ray index {k} out of range for length {len(s)}")
    out = []
    limit = len(s) - k if max_len is None else min(max_len, len(s) - k)
    for prefix in stream_row_prefixes(s, k + 1):
        if len(prefix) <= k:
            break
        out.append(prefix[k])
        if len(out) >= limit:
            break
    return tuple(out)


def anti_diagonal(seq: Sequence[int], radius: int) -> tuple[int, ...]:
    """Entries d_i^(j) with i + j == radius, ordered by increasing j."""
    s = validate_seq(seq)
    if not 0 <= radius < len(s):
        raise IndexError(f"radius {radius} out of range for length {len(s)}")
    out = []
    for j, row in enumerate(triangle_rows(s)):
        if j > radius:
            break
        out.append(row[radius - j])
    return tuple(out)


def eastern_edge(seq: Sequence[int], k: int) -> tuple[int, ...]:
    """k-th anti-diagonal from the right: entries with i + j == len-1-k."""
    s = validate_seq(seq)
    if not 0 <= k <= len(s) - 1:
        raise IndexError(f"eastern edge index {k} out of range for length {len(s)}")
    return anti_diagonal(s, len(s) - 1 - k)


@dataclass(frozen=True)
class RayStats:
    """Value census of one ray, excluding the generator-row entry.

    `counts` maps raw values (or residues, when `mod` is set) to their
    number of occurrences among the n_entries ray values below row 0.
    `second_value` selects the companion count reported next to the zero
    count: 2 for prime-generated tables, 1 for square-prime tables.
    """

    ray_rank: int
    n_entries: int
    counts: dict[int, int]
    second_value: int = 2
    mod: Optional[int] = None

    @property
    def z(self) -> int:
        return self.counts.get(0, 0)

    @property
    def second(self) -> int:
        return self.counts.get(self.second_value, 0)

    @property
    def h(self) -> int:
        return self.n_entries - self.z - self.second

    @property
    def diff(self) -> int:
        return self.z - self.second

    @property
    def ratio(self) -> Fraction:
        if self.n_entries == 0:
            return Fraction(0)
        return Fraction(self.diff, self.n_entries)

    def csv_row(self) -> str:
        return (
            f"{self.ray_rank},{self.n_entries},{self.z},{self.second},"
            f"{self.diff},{self.h},{float(self.ratio):.5f}"
        )


RAY_STATS_CSV_HEADER = "r,N,z,second_count,diff,h,ratio"


def ray_stats(
    seq: Sequence[int],
    k: int,
    second_value: int = 2,
    mod: Optional[int] = None,
) -> RayStats:
    """Census of the values on ray k below the generator row.

    With `mod` set, residues modulo `mod` are counted instead of raw
    values (secondary classifier, for comparing count conventions).
    """
    s = validate_seq(seq)
    if not 0 <= k < len(s):
        raise IndexError(f"ray index {k} out of range for length {len(s)}")
    counts: Counter[int] = Counter()
    for j, prefix in enumerate(stream_row_prefixes(s, k + 1)):
        if j == 0 or len(prefix) <= k:
            continue
        v = prefix[k]
        counts[v % mod if mod else v] += 1
    return RayStats(k, len(s) - 1 - k, dict(counts), second_value, mod)


class TriangleView:
    """Immutable view of the triangle generated by a sequence.

    Rows are materialized lazily and cached, so the view is only suitable
    for generators of moderate length; the streaming functions above
    handle the million-element tables.
    """

    def __init__(self, generator: Sequence[int]):
        self._gen = validate_seq(generator)
        self._rows: list[tuple[int, ...]] = [self._gen] if self._gen else []

    @property
    def generator(self) -> tuple[int, ...]:
        return self._gen

    def __len__(self) -> int:
        return len(self._gen)

    def row(self, j: int) -> tuple[int, ...]:
        if not 0 <= j < len(self._gen):
            raise IndexError(f"row {j} out of range")
        while len(self._rows) <= j:
            prev = self._rows[-1]
            self._rows.append(tuple(abs(b - a) for a, b in zip(prev, prev[1:])))
        return self._rows[j]

    def rows(self) -> list[tuple[int, ...]]:
        return [self.row(j) for j in range(len(self._gen))]

    def left_edge(self) -> tuple[int, ...]:
        return left_edge(self._gen)

    def ray(self, k: int, max_len: Optional[int] = None) -> tuple[int, ...]:
        return ray(self._gen, k, max_len)

    def eastern_edge(self, k: int) -> tuple[int, ...]:
        return eastern_edge(self._gen, k)

    def anti_diagonal(self, radius: int) -> tuple[int, ...]:
        return anti_diagonal(self._gen, radius)

    def southern_vertex(self) -> int:
        return self.row(len(self._gen) - 1)[0]
