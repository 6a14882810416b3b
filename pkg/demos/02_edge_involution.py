#!/usr/bin/env python3
"""The left-edge operator on bits is an involution.

Over binary sequences, taking the left edge of the triangle is the
Pascal-matrix-mod-2 transform, and applying it twice gives the identity.
This script shows the same edge computed four ways (matrix rows, the
Kronecker butterfly, the rational substitution, and the plain triangle),
then demonstrates the involution and what it means for triangles: the
generator and its edge are mirror images across the diagonal.
"""

import random

from pgtriangles import seqcore
from pgtriangles.pascal2 import F2Poly, t_fast, t_naive, t_rational


def main():
    bits = (1, 0, 1, 1, 0, 0, 1, 0, 1, 1)
    f = F2Poly.from_bits(bits)
    print("bits:            ", bits)
    print("t_naive:         ", t_naive(f).to_bits())
    print("t_fast:          ", t_fast(f).to_bits())
    print("t_rational:      ", t_rational(f).to_bits())
    print("triangle edge:   ", seqcore.left_edge(bits))
    print("applied twice:   ", t_naive(t_naive(f)).to_bits(), "(back to start)")

    rng = random.Random(0)
    trials = 2000
    for _ in range(trials):
        n = rng.randint(1, 512)
        g = F2Poly(rng.getrandbits(n), n)
        assert t_fast(t_fast(g)) == g
    print(f"\ninvolution holds on {trials} random inputs up to length 512")

    u = (1, 1, 0, 1, 0)
    w = seqcore.left_edge(u)
    print("\nmirror property: ray k of the triangle of u equals row k of")
    print("the triangle of its edge")
    rows_w = list(seqcore.triangle_rows(w))
    for k in range(len(u)):
        print(f"  ray {k} of u: {seqcore.ray(u, k)}   row {k} of edge: {rows_w[k]}")


if __name__ == "__main__":
    main()
