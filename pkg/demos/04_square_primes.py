#!/usr/bin/env python3
"""Square-primes: k^2 * p with k >= 2 and p prime.

Sieving, twins, selected terms, empirical density against the
(zeta(2) - 1) * x / log x main term, and segmented detection far beyond
the sieve range.
"""

from pgtriangles import spnum


def main():
    sieve = spnum.sp_sieve(100)
    print("square-primes below 100:", sieve.terms.tolist())
    print("twins below 100:", spnum.sp_twins(100))
    for n in (1, 21, 76, 1000):
        print(f"term #{n}: {spnum.nth_sp(n)}")

    print("\ncounts against the main term:")
    for x, count, main, ratio in spnum.density_trace(10**6, [100, 10**3, 10**4, 10**5, 10**6]):
        print(f"  x={x:>8}  count={count:>6}  main={main:>10.1f}  ratio={ratio:.3f}")
    print("(the ratio drifts toward 1 from above, slowly, like it does for primes)")

    lo = 10**14
    window = spnum.sp_in_range(lo, lo + 300, with_witness=True)
    print(f"\nsquare-primes in [{lo}, {lo}+300), found by segmented enumeration:")
    for n, k, p in window:
        print(f"  {n} = {k}^2 * {p}")


if __name__ == "__main__":
    main()
