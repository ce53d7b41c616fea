#!/usr/bin/env python3
"""Sweep the invariant over a grid of decoration pairs.

For every ordered pair of partitions up to --max-size, computes the pairing,
confirms it is symmetric, optionally cross-checks every admissible sl(N)
specialisation against the minor route, and reports timings.
"""

import argparse
import time

from hopfly import partitions_up_to
from hopfly.hopf import _hopf_value
from hopfly.sln import hopf_sln_minor, hopf_sln_substitution


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-size", type=int, default=4)
    parser.add_argument("--max-n", type=int, default=0,
                        help="also cross-check sl(N) routes up to this rank (0 = skip)")
    args = parser.parse_args()

    diagrams = partitions_up_to(args.max_size)
    print(f"{len(diagrams)} diagrams up to size {args.max_size}, "
          f"{len(diagrams) ** 2} ordered pairs")

    start = time.perf_counter()
    asymmetric = 0
    for lam in diagrams:
        for mu in diagrams:
            if _hopf_value(lam, mu) != _hopf_value(mu, lam):
                asymmetric += 1
                print(f"  ASYMMETRY at ({lam}; {mu})")
    elapsed = time.perf_counter() - start
    print(f"pairings + symmetry: {elapsed:.2f}s, asymmetric pairs: {asymmetric}")

    if args.max_n:
        start = time.perf_counter()
        checked = 0
        disagreements = 0
        for lam in diagrams:
            for mu in diagrams:
                for n in range(max(lam.length, mu.length, 1), args.max_n + 1):
                    checked += 1
                    sub = hopf_sln_substitution(lam, mu, n).value
                    minor = hopf_sln_minor(lam, mu, n).value
                    if sub != minor:
                        disagreements += 1
                        print(f"  ROUTE MISMATCH at ({lam}; {mu}; N={n})")
        elapsed = time.perf_counter() - start
        print(f"sl(N) cross-checks: {checked} triples in {elapsed:.2f}s, "
              f"disagreements: {disagreements}")

    return 0 if asymmetric == 0 else 1


if __name__ == "__main__":
    raise SystemExit(main())
