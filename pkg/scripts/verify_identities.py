#!/usr/bin/env python3
"""Numerically verify every coset identity and every full unit-group
product for odd moduli up to a bound, reporting the worst residuals."""

import argparse
import sys
import time

from gammaprod import enumerate_identities, verify_full_product, verify_identity


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max", type=int, default=999, metavar="N",
                        help="largest modulus to check (default 999)")
    args = parser.parse_args()

    start = time.perf_counter()
    checked = failures = 0
    worst_coset = (0.0, None)   # (|residual|, report)
    worst_full = (0.0, None)

    for n in range(3, args.max + 1, 2):
        for identity in enumerate_identities(n):
            report = verify_identity(identity)
            checked += 1
            if not report.passed:
                failures += 1
                print(f"FAIL n={n} coset min {report.coset_min} "
                      f"residual {report.residual:+.3e} tol {report.tolerance:.3e}")
            if abs(report.residual) > worst_coset[0]:
                worst_coset = (abs(report.residual), report)
        full = verify_full_product(n)
        checked += 1
        if not full.passed:
            failures += 1
            print(f"FAIL n={n} full product residual {full.residual:+.3e}")
        if abs(full.residual) > worst_full[0]:
            worst_full = (abs(full.residual), full)

    elapsed = time.perf_counter() - start
    print(f"{checked} products checked up to n={args.max} in {elapsed:.2f} s, "
          f"{failures} failures")
    if worst_coset[1] is not None:
        r = worst_coset[1]
        print(f"worst coset residual {r.residual:+.3e} at n={r.n} "
              f"(coset of {r.coset_min}, {r.term_count} terms)")
    if worst_full[1] is not None:
        r = worst_full[1]
        print(f"worst full-product residual {r.residual:+.3e} at n={r.n} "
              f"({r.term_count} terms)")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
