"""Triangle-bordering constructions.

Two ways of growing a difference triangle while controlling its southern
vertex:

* border_single appends one element to the generating row; a backward
  recursion along the new eastern edge forces the vertex to any preset
  value Z.

* border_pair appends two square-primes (X, Y).  Reading the current
  eastern anti-diagonal (A_m, D_1, ..., D_{m-1}), the constraints

      X >= A_m + Z + D_1 + ... + D_{m-1}
      Y - X = Z + (D_1 + D_3 + ... odd-indexed terms)

  make the two new anti-diagonals collapse to closed forms ending in Z.
  Since every positive difference occurs between square-primes, suitable
  (X, Y) always exist; the least admissible pair is chosen and the whole
  triangle is recomputed brute-force to confirm the prediction.

Iterating border_pair with Z = w_1, w_2, ... plants the prescribed
values at every other position of the western edge.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional, Sequence

from . import seqcore, spnum

__all__ = [
    "BorderStep",
    "border_single",
    "border_pair",
    "build_prescribed_west",
]

# elements at or below this get their square-prime form re-verified on entry
_SP_RECHECK_BOUND = 10**9


@dataclass(frozen=True)
class BorderStep:
    """One two-column bordering round and its verified predictions."""

    x: int
    y: int
    delta: int
    bound: int
    z: int
    d_values: tuple[int, ...]
    predicted_e: tuple[int, ...]
    predicted_f: tuple[int, ...]
    x_witness: tuple[int, int]  # (k, p) with x == k^2 * p
    y_witness: tuple[int, int]

    def to_json_dict(self) -> dict:
        return {
            "Z": self.z,
            "D": list(self.d_values),
            "bound": self.bound,
            "delta": self.delta,
            "X": self.x,
            "Y": self.y,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)


def border_single(
    b: Sequence[int], z: int, orientation: str = "c_above_b"
) -> tuple[int, ...]:
    """Pad a triangle with inner eastern edge B_1 <= ... <= B_m so the new
    edge C_1, ..., C_{m+1} ends at C_{m+1} == Z.

    The default preset order keeps C_j >= B_j (backward recursion
    C_j = C_{j+1} + B_j).  orientation="b_above_c" instead presets
    C_j <= B_j via C_j = B_j - C_{j+1}, failing when that goes negative.
    The result is re-checked by folding absolute differences forward.
    """
    bs = seqcore.validate_seq(b)
    if z < 0:
        raise ValueError("target vertex must be non-negative")
    if any(x > y for x, y in zip(bs, bs[1:])):
        raise ValueError("inner edge must be nondecreasing")
    c = [z]
    for bj in reversed(bs):
        if orientation == "c_above_b":
            c.append(c[-1] + bj)
        elif orientation == "b_above_c":
            nxt = bj - c[-1]
            if nxt < 0:
                raise ValueError("preset order b_above_c infeasible for this edge")
            c.append(nxt)
        else:
            raise ValueError(f"unknown orientation {orientation!r}")
    c.reverse()
    # forward re-check: |C_j - B_j| must reproduce C_{j+1} and end at Z
    probe = c[0]
    for bj, expect in zip(bs, c[1:]):
        probe = abs(probe - bj)
        if probe != expect:
            raise AssertionError("difference recomputation mismatch")
    if probe != z:
        raise AssertionError("southern vertex mismatch")
    return tuple(c)


def _predict_columns(
    a_m: int, d: tuple[int, ...], x: int, y: int, z: int
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    e = [x - a_m]
    for dj in d:
        e.append(e[-1] - dj)
    f = [y - x]
    for ej in e[:-1]:
        f.append(ej - f[-1])
    f.append(e[-1] - f[-1])
    return tuple(e), tuple(f)


def border_pair(
    u: Sequence[int],
    z: int,
    scan_limit: Optional[int] = None,
) -> tuple[BorderStep, tuple[int, ...]]:
    """Extend an even-length increasing square-prime row by the least
    admissible square-prime pair (X, Y) forcing southern vertex Z.

    Preconditions: len(u) even and >= 2, strictly increasing; square-prime
    membership of the entries is re-verified only below 10^9 (bordered
    rows grow fast and their entries carry witnesses from construction).
    """
    s = seqcore.validate_seq(u)
    m = len(s)
    if m < 2 or m % 2 != 0:
        raise ValueError("row length must be even and at least 2")
    if z < 0:
        raise ValueError("target vertex must be non-negative")
    if any(a >= b for a, b in zip(s, s[1:])):
        raise ValueError("row must be strictly increasing")
    if s[-1] <= _SP_RECHECK_BOUND:
        for e in s:
            if not spnum.is_sp(e):
                raise ValueError(f"row element {e} is not a square-prime")

    edge = seqcore.eastern_edge(s, 0)
    a_m, d = edge[0], edge[1:]
    bound = a_m + z + sum(d)
    delta = z + sum(d[0::2])
    if delta == 0:
        # degenerate: a zero gap repeats one square-prime (row no longer
        # strictly increasing, so further bordering rounds must stop)
        first = spnum.sp_in_range(bound, bound + (1 << 16), with_witness=True)
        if not first:
            raise spnum.ScanBudgetError(bound + (1 << 16), [])
        xv = first[0]
        pair = (xv, xv)
    else:
        pair = spnum.find_sp_pairs_with_gap(
            delta, min_value=bound, count=1, scan_limit=scan_limit, with_witness=True
        )[0]
    (x, xk, xp), (y, yk, yp) = pair

    pred_e, pred_f = _predict_columns(a_m, d, x, y, z)
    extended = s + (x, y)

    # brute-force confirmation on the recomputed triangle
    actual_e = seqcore.eastern_edge(extended, 1)
    actual_f = seqcore.eastern_edge(extended, 0)
    if actual_e != (x,) + pred_e:
        raise AssertionError("inner bordering column mismatch")
    if actual_f != (y,) + pred_f:
        raise AssertionError("outer bordering column mismatch")
    if pred_f[-1] != z or seqcore.left_edge(extended)[-1] != z:
        raise AssertionError("southern vertex mismatch")

    step = BorderStep(x, y, delta, bound, z, d, pred_e, pred_f, (xk, xp), (yk, yp))
    return step, extended


def build_prescribed_west(
    w: Sequence[int],
    seed: Sequence[int] = (27, 28),
    scan_limit: Optional[int] = None,
) -> tuple[tuple[int, ...], list[BorderStep]]:
    """Iterate border_pair with Z = w_1, w_2, ...

    After round t the western edge shows w_t at position 2t + 1, so the
    odd-indexed positions of the finished edge read off `w` (position 1
    comes from the seed itself).
    """
    row = seqcore.validate_seq(seed)
    steps: list[BorderStep] = []
    for z in w:
        step, row = border_pair(row, z, scan_limit=scan_limit)
        steps.append(step)
    return row, steps
