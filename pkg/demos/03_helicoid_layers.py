#!/usr/bin/env python3
"""Helicoid layer dynamics and the precycle/cycle census.

Six applications of the left-edge operator wrap a triangle once around
its apex, stacking a hexagonal layer; iterating gives a discrete
helicoid.  Because values never exceed the generator maximum, the layer
sequence is eventually periodic.  This script reproduces the layer
censuses for the power families and friends, then looks at champions
and a circle of differences around a fixed point.
"""

from pgtriangles import bench, generators, helix


def main():
    fig2 = generators.with_fixed_tail(generators.powers_seq(5, 10))
    orbit = helix.orbit_analysis(fig2)
    print("ten 5th powers + ten-bit tail:")
    print("  generator:", orbit.generator)
    print(f"  distinct layers: {orbit.distinct} (precycle {orbit.precycle_len},"
          f" cycle {orbit.cycle_len})")

    print("\nlayer census over the builtin family:")
    print(f"  {'label':<18} {'len':>4} {'P':>4} {'C':>4} {'distinct':>8}")
    for label, n, p, c, d in bench.layer_census(bench.builtin_census_family()):
        print(f"  {label:<18} {n:>4} {p:>4} {c:>4} {d:>8}")

    print("\nchampions (entries larger than everything before them):")
    for u in [(0, 1, 3, 4), (9, 5, 3, 1, 0, 1), (5, 5, 6)]:
        print(f"  {u} -> indices {helix.champions(u).indices}")

    # a sixth-iterate fixed point with its champion at index 2: the whole
    # circle at that radius carries the champion value, the inside is 0
    u = (0, 0, 7, 0)
    print(f"\nfixed point {u}: sixth iterate returns it:",
          helix.upsilon_pow(u, 6) == u)
    for rho in (1, 2):
        edges = helix.circle_of_differences(u, rho)
        print(f"  circle radius {rho}: {edges}")


if __name__ == "__main__":
    main()
