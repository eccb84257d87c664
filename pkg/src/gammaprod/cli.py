"""Command line interface.

Subcommands: decompose, identities, verify, survey, mersenne, full-product.
Exit codes: 0 on success (everything verified), 1 when a verification or
claim check fails, 2 on usage or domain errors (message on stderr).
"""

import argparse
import json
import sys
from typing import Sequence

from .errors import DomainError, GammaprodError
from .identities import enumerate_identities, full_product_identity, mersenne_identity
from .render import FORMATS, render_identity
from .survey import check_reference_claims, survey_range
from .verification import verify_identity


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gammaprod",
        description="Construct, enumerate and numerically verify gamma product "
                    "identities indexed by cosets of <n+2> in the units mod 2n.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="list the cosets of <n+2> in the units mod 2n")
    p.add_argument("n", type=int)

    p = sub.add_parser("identities", help="render every identity for n")
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=FORMATS, default="text")
    p.add_argument("--ascii", action="store_true",
                   help="write Gamma/pi instead of unicode in text output")

    p = sub.add_parser("verify", help="numerically verify the identities for n")
    p.add_argument("n", type=int)
    p.add_argument("--tol", type=float, default=None,
                   help="absolute residual tolerance (default scales with the term count)")
    p.add_argument("--coset-of", type=int, default=None, metavar="X",
                   help="verify only the coset containing X")

    p = sub.add_parser("survey", help="tabulate coset statistics over odd n")
    p.add_argument("--max", type=int, required=True, dest="max_n")
    p.add_argument("--json", action="store_true")
    p.add_argument("--check-claims", action="store_true",
                   help="also evaluate the recorded n<100 reference counts")

    p = sub.add_parser("mersenne", help="the subgroup identity for n = 2**m - 1")
    p.add_argument("m", type=int)
    p.add_argument("--format", choices=FORMATS, default="text")
    p.add_argument("--ascii", action="store_true")

    p = sub.add_parser("full-product", help="the product over every unit mod 2n")
    p.add_argument("n", type=int)

    return parser


def _coset_text(coset) -> str:
    return "(" + ",".join(str(x) for x in coset) + ")"


def _cmd_decompose(args) -> int:
    for identity in enumerate_identities(args.n):
        print(_coset_text(identity.coset))
    return 0


def _cmd_identities(args) -> int:
    for identity in enumerate_identities(args.n):
        print(render_identity(identity, args.format, ascii_symbols=args.ascii).payload)
    return 0


def _cmd_verify(args) -> int:
    if args.tol is not None and args.tol <= 0:
        raise DomainError(f"tolerance must be positive, got {args.tol}")
    identities = enumerate_identities(args.n)
    if args.coset_of is not None:
        x = args.coset_of
        identities = tuple(ident for ident in identities if x in ident.coset)
        if not identities:
            raise DomainError(f"{x} is not a unit modulo {2 * args.n}")
    failures = 0
    for identity in identities:
        report = verify_identity(identity, args.tol)
        failures += not report.passed
        print(f"{'PASS' if report.passed else 'FAIL'} n={report.n} "
              f"coset={_coset_text(identity.coset)} "
              f"residual={report.residual:+.3e} tol={report.tolerance:.3e}")
    return 1 if failures else 0


def _cmd_survey(args) -> int:
    rows = survey_range(args.max_n)
    for row in rows:
        if args.json:
            print(json.dumps({
                "n": row.n, "phi": row.phi, "nu": row.nu,
                "coset_count": row.coset_count,
                "self_complementary_count": row.self_complementary_count,
                "max_b": row.max_b, "is_prime_power": row.is_prime_power,
            }))
        else:
            print(f"n={row.n} phi={row.phi} nu={row.nu} cosets={row.coset_count} "
                  f"self_complementary={row.self_complementary_count} max_b={row.max_b} "
                  f"prime_power={'yes' if row.is_prime_power else 'no'}")
    if not args.check_claims:
        return 0
    report = check_reference_claims(rows)
    for claim in report.claims:
        if args.json:
            print(json.dumps({
                "claim": claim.key, "passed": claim.passed,
                "expected": claim.expected, "observed": claim.observed,
                "derived": list(claim.derived),
            }))
        else:
            line = (f"CLAIM {claim.key}: {'PASS' if claim.passed else 'FAIL'} "
                    f"expected {claim.expected}; observed {claim.observed}")
            if claim.derived:
                line += " derived=" + ",".join(str(v) for v in claim.derived)
            print(line)
    return 0 if report.all_passed else 1


def _cmd_mersenne(args) -> int:
    identity = mersenne_identity(args.m)
    print(render_identity(identity, args.format, ascii_symbols=args.ascii).payload)
    return 0


def _cmd_full_product(args) -> int:
    fp = full_product_identity(args.n)
    m = 2 * int(fp.n)
    print(f"prod_(x in Phi({m})) Gamma(x/{m}) = (2*pi)^{fp.pow2}")
    return 0


_HANDLERS = {
    "decompose": _cmd_decompose,
    "identities": _cmd_identities,
    "verify": _cmd_verify,
    "survey": _cmd_survey,
    "mersenne": _cmd_mersenne,
    "full-product": _cmd_full_product,
}


def run_cli(argv: Sequence[str] | None = None) -> int:
    """Parse argv, run the subcommand, return the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 for --help
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return _HANDLERS[args.command](args)
    except GammaprodError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
