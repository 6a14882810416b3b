#!/usr/bin/env python3
"""Tour of the difference-triangle geometry.

A row of integers generates a triangle of iterated absolute differences;
this script prints the triangle of a 12-term square-prime row whose
western edge alternates with 1s, then slices it every way the library
knows: rows, the left edge, rays, and eastern anti-diagonals.
"""

from pgtriangles import seqcore

ROW = (27, 28, 44, 76, 98, 112, 153, 171, 180, 188, 292, 316)


def main():
    print("generator:", ROW)
    print("\nfull triangle (each row = |differences| of the one above):")
    for j, row in enumerate(seqcore.triangle_rows(ROW)):
        print("  " * j + "  ".join(f"{v:>3}" for v in row))

    edge = seqcore.left_edge(ROW)
    print("\nwestern edge (first element of every row):", edge)
    print("every other entry is 1:", all(v == 1 for v in edge[1::2]))

    print("\nrays parallel to the western edge:")
    for k in range(3):
        print(f"  ray {k}:", seqcore.ray(ROW, k))

    print("\neastern anti-diagonals, right to left:")
    for k in range(3):
        print(f"  edge {k}:", seqcore.eastern_edge(ROW, k))

    stats = seqcore.ray_stats(ROW, 1)
    print("\nvalue census of ray 1 below the top row:", dict(sorted(stats.counts.items())))
    print("zeros:", stats.z, " twos:", stats.second, " other:", stats.h)


if __name__ == "__main__":
    main()
