#!/usr/bin/env python3
"""Tabulate coset statistics for odd moduli and optionally check the
recorded reference counts against the sweep."""

import argparse
import sys
import time

from gammaprod import GammaprodError, check_reference_claims, survey_range


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max", type=int, default=99, metavar="N",
                        help="largest modulus to include (default 99)")
    parser.add_argument("--claims", action="store_true",
                        help="also check the recorded reference counts "
                             "(needs --max >= 99)")
    args = parser.parse_args()

    start = time.perf_counter()
    rows = survey_range(args.max)
    elapsed = time.perf_counter() - start

    header = f"{'n':>5} {'phi':>5} {'nu':>5} {'cosets':>6} {'selfc':>5} {'max_b':>5}  notes"
    print(header)
    print("-" * len(header))
    for row in rows:
        notes = []
        if row.coset_count > 2:
            notes.append("many cosets")
        if row.nu == row.phi:
            notes.append("full order")
        if row.is_prime_power:
            notes.append("prime power")
        print(f"{row.n:>5} {row.phi:>5} {row.nu:>5} {row.coset_count:>6} "
              f"{row.self_complementary_count:>5} {row.max_b:>5}  "
              f"{', '.join(notes)}")
    print(f"\n{len(rows)} moduli surveyed in {elapsed:.3f} s")

    if not args.claims:
        return 0

    try:
        report = check_reference_claims(rows)
    except GammaprodError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print()
    for claim in report.claims:
        status = "ok" if claim.passed else "DISAGREES"
        print(f"{status:>9}  {claim.key}: expected {claim.expected}, "
              f"observed {claim.observed}")
        if claim.derived:
            print(f"{'':>9}  derived: {', '.join(map(str, claim.derived))}")
    return 0 if report.all_passed else 1


if __name__ == "__main__":
    sys.exit(main())
