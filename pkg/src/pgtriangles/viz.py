"""Deterministic SVG rendering.

Triangles are drawn on a unit lattice (row j cell k centered at
(k + j/2, j*sqrt(3)/2)), hexagonal helicoid layers as six 60-degree
sectors sharing their boundary rays, and orbits as stacked color strips.
Colors come from golden-ratio hue stepping over the rank of each value
among the distinct values present, so identical inputs give identical
bytes; all coordinates are printed with fixed precision.
"""

from __future__ import annotations

import colorsys
from math import cos, pi, sin, sqrt
from typing import Optional, Sequence

from . import helix, seqcore

__all__ = [
    "palette",
    "render_triangle",
    "render_layer",
    "render_orbit_strip",
]

_GOLDEN = 0.6180339887498949
_SQ3_2 = sqrt(3.0) / 2.0


def palette(values: Sequence[int]) -> dict[int, str]:
    """Color per distinct value: hue walks the golden-ratio sequence in
    rank order, zero stays a light neutral so patterns read like prints.
    """
    distinct = sorted(set(values))
    colors: dict[int, str] = {}
    step = 0
    for v in distinct:
        if v == 0:
            colors[0] = "#f2f2ef"
            continue
        h = (step * _GOLDEN) % 1.0
        r, g, b = colorsys.hsv_to_rgb(h, 0.62, 0.92)
        colors[v] = f"#{int(r * 255):02x}{int(g * 255):02x}{int(b * 255):02x}"
        step += 1
    return colors


def _svg_document(
    circles: list[tuple[float, float, str]], radius: float, scale: float
) -> str:
    xs = [c[0] for c in circles]
    ys = [c[1] for c in circles]
    pad = 2.0 * radius
    x0, x1 = min(xs) - pad, max(xs) + pad
    y0, y1 = min(ys) - pad, max(ys) + pad
    w = (x1 - x0) * scale
    h = (y1 - y0) * scale
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w:.2f}" '
        f'height="{h:.2f}" viewBox="{x0 * scale:.2f} {y0 * scale:.2f} '
        f'{w:.2f} {h:.2f}">\n'
    ]
    r = radius * scale
    for x, y, color in circles:
        parts.append(
            f'<circle cx="{x * scale:.2f}" cy="{y * scale:.2f}" '
            f'r="{r:.2f}" fill="{color}"/>\n'
        )
    parts.append("</svg>\n")
    return "".join(parts)


def render_triangle(
    u: Sequence[int],
    mod: Optional[int] = None,
    cell_radius: float = 0.48,
    scale: float = 12.0,
) -> str:
    """SVG of the whole difference triangle of u.

    With `mod`, cell values are reduced modulo `mod` for coloring only.
    """
    s = seqcore.validate_seq(u)
    if not s:
        raise ValueError("empty generator")
    cells = []
    for j, row in enumerate(seqcore.triangle_rows(s)):
        for k, v in enumerate(row):
            cells.append((k + j / 2.0, j * _SQ3_2, v % mod if mod else v))
    colors = palette([c[2] for c in cells])
    circles = [(x, y, colors[v]) for x, y, v in cells]
    return _svg_document(circles, cell_radius, scale)


def _layer_cells(gens: Sequence[tuple[int, ...]]) -> list[tuple[float, float, int]]:
    # sector m draws its own top row and interior (columns k >= 1); its
    # left-edge cells equal sector m+1's top row, so each boundary is
    # drawn exactly once and the shared center once at the end
    cells = []
    for m, gen in enumerate(gens):
        ang = -m * pi / 3.0
        e1 = (cos(ang), sin(ang))
        ang2 = ang - pi / 3.0
        e2 = (cos(ang2), sin(ang2))
        for j, row in enumerate(seqcore.triangle_rows(gen)):
            for k, v in enumerate(row):
                if k == 0:
                    continue
                cells.append(
                    (k * e1[0] + j * e2[0], k * e1[1] + j * e2[1], v)
                )
    cells.append((0.0, 0.0, gens[0][0]))
    return cells


def render_layer(
    u: Sequence[int],
    level: int = 1,
    cell_radius: float = 0.48,
    scale: float = 12.0,
) -> str:
    """SVG of one hexagonal helicoid layer (level >= 1).

    The six sector triangles are generated by successive edge iterates of
    the level generator; a generator of length N+1 yields 3N^2 + 3N + 1
    cells.
    """
    if level < 1:
        raise ValueError("level must be at least 1")
    s = seqcore.validate_seq(u)
    if not s:
        raise ValueError("empty generator")
    g = helix.upsilon_pow(s, 6 * (level - 1))
    gens = [g]
    for _ in range(5):
        gens.append(seqcore.left_edge(gens[-1]))
    cells = _layer_cells(gens)
    colors = palette([c[2] for c in cells])
    circles = [(x, y, colors[v]) for x, y, v in cells]
    return _svg_document(circles, cell_radius, scale)


def render_orbit_strip(
    u: Sequence[int],
    max_layers: int = 10000,
    cell_radius: float = 0.48,
    scale: float = 12.0,
) -> str:
    """SVG strip of the edge iterates 0 .. 6 * distinct, one row each."""
    s = seqcore.validate_seq(u)
    orbit = helix.orbit_analysis(s, max_layers=max_layers)
    rows = [s]
    for _ in range(6 * orbit.distinct):
        rows.append(seqcore.left_edge(rows[-1]))
    cells = []
    for t, row in enumerate(rows):
        for i, v in enumerate(row):
            cells.append((float(i), float(t), v))
    colors = palette([c[2] for c in cells])
    circles = [(x, y, colors[v]) for x, y, v in cells]
    return _svg_document(circles, cell_radius, scale)
