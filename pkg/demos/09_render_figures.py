#!/usr/bin/env python3
"""Render triangles, hexagonal layers, and orbit strips as SVG.

Writes a small gallery into demos/out/: the square-prime triangle below
400 reduced mod 2, the prime triangle below 400 mod 4, the base layer of
the 5th-powers helicoid, a binary hexagon, and the orbit strip of the
5th-powers generator.  Output is byte-deterministic.
"""

from pathlib import Path

from pgtriangles import generators, viz

OUT = Path(__file__).parent / "out"


def main():
    OUT.mkdir(exist_ok=True)
    jobs = {
        "square_primes_400_mod2.svg": viz.render_triangle(
            generators.square_primes_seq(limit=400), mod=2, cell_radius=0.45
        ),
        "primes_400_mod4.svg": viz.render_triangle(
            generators.primes_seq(limit=400), mod=4, cell_radius=0.45
        ),
        "powers5_layer1.svg": viz.render_layer(
            generators.with_fixed_tail(generators.powers_seq(5, 10))
        ),
        "binary_hexagon.svg": viz.render_layer(
            generators.sqrt2_bits_seq(24)
        ),
        "powers5_orbit_strip.svg": viz.render_orbit_strip(
            generators.with_fixed_tail(generators.powers_seq(5, 10))
        ),
    }
    for name, svg in jobs.items():
        path = OUT / name
        path.write_text(svg)
        print(f"wrote {path} ({svg.count('<circle')} cells)")


if __name__ == "__main__":
    main()
