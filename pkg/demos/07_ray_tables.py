#!/usr/bin/env python3
"""Ray frequency tables for prime and square-prime generators.

Below the top row, the rays of the prime triangle carry almost only 0s
and 2s in nearly equal shares, and the square-prime triangle almost only
0s and 1s.  This script streams both tables (the full million-element
rows take about a second each) and prints them in CSV column order,
plus the deviation trace |nu_d(n) - n/2| / sqrt(n) along one ray.
"""

from pgtriangles import bench, generators

LIMIT = 10**6


def main():
    for source in ("primes", "square-primes"):
        stats = bench.table_rays(source, LIMIT, num_rays=10)
        print(f"{source} below {LIMIT}:")
        print(" ", bench.render_table_csv(stats).replace("\n", "\n  ").rstrip())
        print()

    seq = generators.primes_seq(limit=LIMIT)
    trace = bench.conjecture_trace(seq, ray=1, d_values=(0, 2))
    print("deviation of the zero count from n/2 on ray 1 (prime generator):")
    for n, nu, dev in trace[0]:
        print(f"  n={n:>6}  zeros={nu:>6}  |dev|/sqrt(n)={dev:.3f}")


if __name__ == "__main__":
    main()
