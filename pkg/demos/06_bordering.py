#!/usr/bin/env python3
"""Growing square-prime triangles with a prescribed western edge.

Appending two square-primes (X, Y) chosen from the current eastern
anti-diagonal forces the new southern vertex to any target Z, and the
choice always exists because every positive integer occurs infinitely
often as a gap between square-primes.  Iterating with Z = 1 yields
triangles of square-primes whose western edge alternates with 1s;
arbitrary target sequences land on every other edge position.
"""

from pgtriangles import border, seqcore


def main():
    row = (27, 28)
    print("iterated bordering from (27, 28) with target vertex 1:")
    for r in range(6):
        step, row = border.border_pair(row, 1)
        print(f"  round {r+1}: D={step.d_values} bound={step.bound} "
              f"delta={step.delta} -> X={step.x}, Y={step.y}")
    print("  top row:", row)
    print("  western edge:", seqcore.left_edge(row))

    w = (4, 0, 2, 7)
    row, steps = border.build_prescribed_west(w)
    edge = seqcore.left_edge(row)
    print(f"\nprescribing {w} on the western edge:")
    print("  top row:", row)
    print("  western edge:", edge)
    print("  odd positions:", edge[1::2])

    print("\nsingle-column padding: inner edge (2, 3), target vertex 5")
    print("  new edge:", border.border_single((2, 3), 5))


if __name__ == "__main__":
    main()
