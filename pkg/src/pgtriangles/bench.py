"""Experiment drivers.

* table_rays streams the full difference triangle of the primes or the
  square-primes below a limit, counting raw values on the first rays
  (the published frequency tables),
* monte_carlo_balance samples (or exhausts) binary generators and checks
  the zero-proportions on western rays and eastern anti-diagonals
  against a band around 1/2,
* conjecture_trace records |nu_d(n) - n/2| / sqrt(n) along a ray
  (observational only; the underlying statement is open),
* layer_census runs the orbit analysis over a family of generators.

Randomness is counter-based: sample i draws from a Philox generator
keyed by the seed with counter block i * 2^64, so results depend only on
(seed, i) and never on batch or shard boundaries.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import sqrt
from typing import Iterable, Optional, Sequence

import numpy as np

from . import generators, helix, seqcore
from .seqcore import RayStats

__all__ = [
    "BalanceReport",
    "table_rays",
    "rays_table",
    "monte_carlo_balance",
    "conjecture_trace",
    "layer_census",
    "builtin_census_family",
]


# ----------------------------------------------------------------------
# frequency tables

def rays_table(
    seq: Sequence[int],
    num_rays: int,
    second_value: int,
    mod: Optional[int] = None,
) -> list[RayStats]:
    """Raw-value (or residue) counts on rays 0..num_rays-1, streaming.

    One pass over the triangle serves every ray; entries on the generator
    row are excluded (there are no differences on the first row).
    """
    s = seqcore.validate_seq(seq)
    if num_rays < 1:
        raise ValueError("need at least one ray")
    if num_rays > len(s):
        raise ValueError("more rays than columns")
    counters: list[Counter[int]] = [Counter() for _ in range(num_rays)]
    for j, prefix in enumerate(seqcore.stream_row_prefixes(s, num_rays)):
        if j == 0:
            continue
        if mod:
            for r in range(min(num_rays, len(prefix))):
                counters[r][prefix[r] % mod] += 1
        else:
            for r in range(min(num_rays, len(prefix))):
                counters[r][prefix[r]] += 1
    return [
        RayStats(r, len(s) - 1 - r, dict(counters[r]), second_value, mod)
        for r in range(num_rays)
    ]


def table_rays(
    source: str,
    limit: int,
    num_rays: int = 10,
    mod: Optional[int] = None,
) -> list[RayStats]:
    """The published ray-frequency tables: source is "primes" (companion
    value 2) or "square-primes" (companion value 1), both below `limit`.
    """
    if source == "primes":
        seq = generators.primes_seq(limit=limit)
        second = 2
    elif source == "square-primes":
        seq = generators.square_primes_seq(limit=limit)
        second = 1
    else:
        raise ValueError(f"unknown source {source!r}")
    return rays_table(seq, num_rays, second, mod)


def render_table_csv(stats: Iterable[RayStats]) -> str:
    lines = [seqcore.RAY_STATS_CSV_HEADER]
    lines.extend(s.csv_row() for s in stats)
    return "\n".join(lines) + "\n"


# ----------------------------------------------------------------------
# balance experiment

def _as_fraction(x) -> Fraction:
    # floats go through their decimal literal so 0.1 means exactly 1/10
    if isinstance(x, float):
        return Fraction(str(x))
    return Fraction(x)


@dataclass(frozen=True)
class BalanceReport:
    """Band census for the zero-proportions on rays w_0.. and e_0..K."""

    n: int
    samples: int
    epsilon: Fraction
    delta: Fraction
    num_rays: int  # K + 1 with K = floor(delta * n)
    mode: str
    seed: Optional[int]
    fraction_within_band: Fraction
    mean_west_ratio: tuple[float, ...]
    mean_east_ratio: tuple[float, ...]

    def to_json_dict(self) -> dict:
        return {
            "N": self.n,
            "samples": self.samples,
            "epsilon": str(self.epsilon),
            "delta": str(self.delta),
            "num_rays": self.num_rays,
            "mode": self.mode,
            "seed": self.seed,
            "fraction_within_band": str(self.fraction_within_band),
            "within_band": float(self.fraction_within_band),
            "mean_west_ratio": list(self.mean_west_ratio),
            "mean_east_ratio": list(self.mean_east_ratio),
        }


def _valid_mask(n: int, k: int) -> np.ndarray:
    # valid[j, r] is True when ray r still exists on row j
    return (np.arange(n)[:, None] + np.arange(k + 1)[None, :]) < n


def _west_zero_counts(v: int, n: int, k: int, valid: np.ndarray) -> np.ndarray:
    """Zeros among rows 0..n-1-r of ray r, r = 0..k, of the binary
    triangle packed in v (bit i = element i)."""
    nbytes = (k + 8) // 8
    mask = (1 << (k + 1)) - 1
    buf = bytearray(n * nbytes)
    pos = 0
    for _ in range(n):
        buf[pos : pos + nbytes] = (v & mask).to_bytes(nbytes, "little")
        pos += nbytes
        v ^= v >> 1
    bits = np.unpackbits(
        np.frombuffer(bytes(buf), dtype=np.uint8).reshape(n, nbytes),
        axis=1,
        bitorder="little",
    )[:, : k + 1]
    ones = np.where(valid, bits, 0).sum(axis=0)
    return (n - np.arange(k + 1)) - ones


def _sample_bits(seed: int, index: int, n: int) -> np.ndarray:
    gen = np.random.Generator(np.random.Philox(key=seed, counter=index << 64))
    return gen.integers(0, 2, size=n, dtype=np.uint8)


def _bits_to_int(bits: np.ndarray) -> int:
    return int.from_bytes(
        np.packbits(bits, bitorder="little").tobytes(), "little"
    )


def monte_carlo_balance(
    n: int,
    samples: int,
    epsilon,
    delta,
    seed: Optional[int] = 0,
    mode: str = "random",
) -> BalanceReport:
    """Fraction of binary generators whose ray zero-proportions all sit
    in [1/2 - epsilon, 1/2 + epsilon].

    Checked rays: w_0..w_K and e_0..e_K with K = floor(delta * n); ray r
    spans the full column including the generator row (n - r entries).
    Eastern counts come from the reversed generator, whose triangle rows
    are the reversals of the original rows.  mode "exhaustive" enumerates
    all 2^n generators (n <= 24; seed unused), "random" draws `samples`
    counter-based Philox samples.
    """
    eps = _as_fraction(epsilon)
    dlt = _as_fraction(delta)
    if n < 4:
        raise ValueError("n must be at least 4")
    if not 0 < eps < Fraction(1, 2):
        raise ValueError("epsilon must lie in (0, 1/2)")
    k = int(dlt * n)
    if not 0 <= k < n:
        raise ValueError("floor(delta * n) must be below n")
    lo, hi = Fraction(1, 2) - eps, Fraction(1, 2) + eps
    lengths = n - np.arange(k + 1)
    valid = _valid_mask(n, k)

    def in_band(zw: np.ndarray, ze: np.ndarray) -> bool:
        for zeros, length in zip(list(zw) + list(ze), list(lengths) * 2):
            r = Fraction(int(zeros), int(length))
            if not lo <= r <= hi:
                return False
        return True

    west_acc = np.zeros(k + 1, dtype=np.float64)
    east_acc = np.zeros(k + 1, dtype=np.float64)
    hits = 0

    if mode == "exhaustive":
        if n > 24:
            raise ValueError("exhaustive mode limited to n <= 24")
        total = 1 << n
        rev_shift = n - 1
        for v in range(total):
            vr = int(f"{v:0{n}b}"[::-1], 2) if n > 1 else v
            zw = _west_zero_counts(v, n, k, valid)
            ze = _west_zero_counts(vr, n, k, valid)
            west_acc += zw / lengths
            east_acc += ze / lengths
            if in_band(zw, ze):
                hits += 1
        count = total
        used_seed = None
    elif mode == "random":
        if samples < 1:
            raise ValueError("need at least one sample")
        if seed is None:
            raise ValueError("random mode needs a seed")
        for i in range(samples):
            bits = _sample_bits(seed, i, n)
            v = _bits_to_int(bits)
            vr = _bits_to_int(bits[::-1])
            zw = _west_zero_counts(v, n, k, valid)
            ze = _west_zero_counts(vr, n, k, valid)
            west_acc += zw / lengths
            east_acc += ze / lengths
            if in_band(zw, ze):
                hits += 1
        count = samples
        used_seed = seed
    else:
        raise ValueError(f"unknown mode {mode!r}")

    return BalanceReport(
        n=n,
        samples=count,
        epsilon=eps,
        delta=dlt,
        num_rays=k + 1,
        mode=mode,
        seed=used_seed,
        fraction_within_band=Fraction(hits, count),
        mean_west_ratio=tuple(float(x) for x in west_acc / count),
        mean_east_ratio=tuple(float(x) for x in east_acc / count),
    )


# ----------------------------------------------------------------------
# conjecture trace

def conjecture_trace(
    seq: Sequence[int],
    ray: int,
    d_values: tuple[int, ...] = (0, 2),
    checkpoints: Optional[Iterable[int]] = None,
) -> dict[int, list[tuple[int, int, float]]]:
    """Observational series (n, nu_d(n), |nu_d(n) - n/2| / sqrt(n)).

    nu_d(n) counts occurrences of d among the first n ray entries below
    the generator row.  Reported at the given checkpoints (default:
    powers of two and the final position).  Nothing is asserted.
    """
    s = seqcore.validate_seq(seq)
    if ray < 1:
        raise ValueError("ray must be at least 1")
    if ray >= len(s):
        raise ValueError("ray beyond triangle")
    total = len(s) - 1 - ray
    if checkpoints is None:
        cps = {1 << i for i in range(total.bit_length()) if (1 << i) <= total}
        cps.add(total)
    else:
        cps = {int(c) for c in checkpoints}
    counts = {d: 0 for d in d_values}
    series: dict[int, list[tuple[int, int, float]]] = {d: [] for d in d_values}
    n_seen = 0
    for j, prefix in enumerate(seqcore.stream_row_prefixes(s, ray + 1)):
        if j == 0 or len(prefix) <= ray:
            continue
        v = prefix[ray]
        if v in counts:
            counts[v] += 1
        n_seen += 1
        if n_seen in cps:
            for d in d_values:
                dev = abs(counts[d] - n_seen / 2) / sqrt(n_seen)
                series[d].append((n_seen, counts[d], dev))
    return series


# ----------------------------------------------------------------------
# layer census

def layer_census(
    family: Iterable[tuple[str, Sequence[int]]],
    max_layers: int = 10000,
) -> list[tuple[str, int, int, int, int]]:
    """Rows (label, length, P, C, distinct) for each (label, generator)."""
    rows = []
    for label, seq in family:
        orbit = helix.orbit_analysis(seq, max_layers=max_layers)
        rows.append(
            (label, len(orbit.generator), orbit.precycle_len, orbit.cycle_len,
             orbit.distinct)
        )
    return rows


def builtin_census_family() -> list[tuple[str, tuple[int, ...]]]:
    """The helicoid census generators studied in the source experiments."""
    g = generators
    fam: list[tuple[str, tuple[int, ...]]] = [
        ("5th-powers-10", g.with_fixed_tail(g.powers_seq(5, 10))),
        ("7th-powers-77", g.with_fixed_tail(g.powers_seq(7, 77))),
        ("9th-powers-10", g.with_fixed_tail(g.powers_seq(9, 10))),
        ("10th-powers-10", g.with_fixed_tail(g.powers_seq(10, 10))),
        ("11th-powers-10", g.with_fixed_tail(g.powers_seq(11, 10))),
        ("fibonacci-30", g.with_fixed_tail(g.fibonacci_seq(30))),
        ("4th-powers-20", g.with_fixed_tail(g.powers_seq(4, 20))),
        ("5th-powers-20", g.with_fixed_tail(g.powers_seq(5, 20))),
        ("base3-no-2-20", g.with_fixed_tail(g.base3_no2_seq(20))),
        ("base3-no-2-30", g.with_fixed_tail(g.base3_no2_seq(30))),
        ("primes-20", g.with_fixed_tail(g.primes_seq(count=20, descending=True))),
        (
            "square-primes-20",
            g.with_fixed_tail(g.square_primes_seq(count=20, descending=True)),
        ),
    ]
    for n in range(314, 321):
        fam.append((f"base3-no-2-{n}", g.with_fixed_tail(g.base3_no2_seq(n))))
    return fam
