"""Helicoid layer dynamics.

Iterating the left-edge operator six times corresponds geometrically to a
full turn around the apex: each application rotates the triangle by 60
degrees, so six of them stack a new hexagonal layer on top of the old
one.  Layer n is generated by the 6(n-1)-th iterate of the generator.
Because every triangle entry is bounded by the generator maximum, the
sequence of layer generators is ultimately periodic; this module finds
the precycle/cycle split, the champions of a sequence, and the hexagonal
circles of differences used by the champion diagnostics.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from typing import Sequence

from . import seqcore

__all__ = [
    "Orbit",
    "OrbitBudgetError",
    "ChampionSet",
    "upsilon_pow",
    "orbit_analysis",
    "champions",
    "circle_of_differences",
]


def upsilon_pow(u: Sequence[int], k: int) -> tuple[int, ...]:
    """k-fold application of the left-edge operator."""
    if k < 0:
        raise ValueError("iteration count must be non-negative")
    s = seqcore.validate_seq(u)
    for _ in range(k):
        s = seqcore.left_edge(s)
    return s


def seq_digest(s: Sequence[int]) -> str:
    """Stable short digest of a sequence, for orbit reports."""
    payload = ",".join(str(e) for e in s).encode()
    return hashlib.sha256(payload).hexdigest()[:16]


@dataclass(frozen=True)
class Orbit:
    """Precycle/cycle decomposition of the layer-generator iteration.

    layer_generators holds the P + C distinct generators g_1, g_2, ...
    (g_1 the input); applying six edge steps to the last one lands back
    on layer_generators[precycle_len].
    """

    generator: tuple[int, ...]
    layer_generators: tuple[tuple[int, ...], ...]
    precycle_len: int
    cycle_len: int

    @property
    def distinct(self) -> int:
        return self.precycle_len + self.cycle_len

    @property
    def cycle(self) -> tuple[tuple[int, ...], ...]:
        return self.layer_generators[self.precycle_len :]

    def to_json_dict(self) -> dict:
        return {
            "generator": list(self.generator),
            "P": self.precycle_len,
            "C": self.cycle_len,
            "distinct": self.distinct,
            "layer_hashes": [seq_digest(g) for g in self.layer_generators],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)


class OrbitBudgetError(RuntimeError):
    """Raised when no repeat shows up within max_layers; carries progress."""

    def __init__(self, max_layers: int, partial: tuple[tuple[int, ...], ...]):
        super().__init__(f"no cycle detected within {max_layers} layers")
        self.max_layers = max_layers
        self.partial = partial


def orbit_analysis(u: Sequence[int], max_layers: int = 10000) -> Orbit:
    """Iterate six-fold edge steps until a layer generator repeats.

    Detection is a dict from generator tuple to first occurrence index
    (hash lookup plus full equality on collision, which is exactly what
    a Python dict does).  Termination is guaranteed for any max_layers
    covering the finite state space, since values never exceed max(u).
    """
    g = seqcore.validate_seq(u)
    if not g:
        raise ValueError("empty generator")
    if max_layers < 1:
        raise ValueError("max_layers must be at least 1")
    seen: dict[tuple[int, ...], int] = {g: 0}
    gens: list[tuple[int, ...]] = [g]
    for i in range(1, max_layers + 1):
        g = upsilon_pow(g, 6)
        hit = seen.get(g)
        if hit is not None:
            return Orbit(gens[0], tuple(gens), hit, i - hit)
        seen[g] = i
        gens.append(g)
    raise OrbitBudgetError(max_layers, tuple(gens))


@dataclass(frozen=True)
class ChampionSet:
    """Indices n with a_n > 0 and a_j < a_n for every j < n.

    Index 0 counts whenever a_0 > 0: the predecessor condition is vacuous
    there.
    """

    indices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.indices)

    def __contains__(self, i: int) -> bool:
        return i in self.indices


def champions(u: Sequence[int]) -> ChampionSet:
    s = seqcore.validate_seq(u)
    out = []
    best = 0
    for i, a in enumerate(s):
        if a > 0 and (i == 0 or a > best):
            out.append(i)
        best = max(best, a)
    return ChampionSet(tuple(out))


def circle_of_differences(u: Sequence[int], rho: int) -> tuple[tuple[int, ...], ...]:
    """The six edges of the hexagonal circle of radius rho around a_0.

    Edge m is the anti-diagonal i + j == rho of the triangle generated by
    the m-th edge iterate, ordered by increasing row.  Consecutive edges
    share their corner entries.
    """
    s = seqcore.validate_seq(u)
    if not 0 <= rho < len(s):
        raise IndexError(f"radius {rho} out of range for length {len(s)}")
    edges = []
    g = s
    for _ in range(6):
        edges.append(seqcore.anti_diagonal(g, rho))
        g = seqcore.left_edge(g)
    return tuple(edges)
