"""Acceptance suite.

Each test exercises one end-to-end requirement at its stated tolerance and
prints a single `[acceptance] name: PASS|FAIL (detail)` line before asserting,
so `pytest tests/test_acceptance.py -v -s` reads as a checklist.  Budgets are
wall-clock on the assumption of an unremarkable machine; they sit far above
the measured costs.
"""

import math
import random
import time

from gammaprod import (
    build_identity,
    complement_identity,
    coset_decomposition,
    enumerate_identities,
    log_gamma,
    mersenne_identity,
    run_cli,
    survey_range,
    check_reference_claims,
    verify_duplication,
    verify_full_product,
    verify_identity,
)

N31_COSET_LINES = [
    "(1,33,35,39,47)",
    "(3,17,37,43,55)",
    "(5,9,41,49,51)",
    "(7,19,25,45,59)",
    "(11,13,21,53,57)",
    "(15,23,27,29,61)",
]


def _criterion(name, ok, detail):
    print(f"[acceptance] {name}: {'PASS' if ok else 'FAIL'} ({detail})")
    assert ok, f"{name}: {detail}"


def test_three_term_identity(capsys):
    identity = build_identity(7, [1, 9, 11])
    report = verify_identity(identity)
    run_cli(["verify", "7", "--coset-of", "1"])  # warm-up
    best = math.inf
    for _ in range(5):
        start = time.perf_counter()
        code = run_cli(["verify", "7", "--coset-of", "1"])
        best = min(best, time.perf_counter() - start)
    capsys.readouterr()
    with capsys.disabled():
        _criterion(
            "three-term identity at n=7",
            abs(report.residual) < 1e-12 and code == 0 and best < 0.010,
            f"residual={report.residual:.3e}, cli exit={code}, best={best * 1e3:.2f} ms",
        )


def test_golden_decomposition_n31(capsys):
    code = run_cli(["decompose", "31"])
    lines = capsys.readouterr().out.splitlines()
    report = verify_identity(enumerate_identities(31)[0])
    with capsys.disabled():
        _criterion(
            "n=31 decomposition and leading identity",
            code == 0 and lines == N31_COSET_LINES and abs(report.residual) < 1e-10,
            f"lines match={lines == N31_COSET_LINES}, residual={report.residual:.3e}",
        )


def test_survey_reference_statistics(capsys):
    start = time.perf_counter()
    report = check_reference_claims(survey_range(99))
    elapsed = time.perf_counter() - start
    failed = [c.key for c in report.claims if not c.passed]
    with capsys.disabled():
        _criterion(
            "survey matches recorded reference statistics",
            report.all_passed and elapsed < 1.0,
            f"failed claims={failed or 'none'}, elapsed={elapsed:.3f} s",
        )


def test_full_products_to_99(capsys):
    worst_n, worst = 0, 0.0
    for n in range(3, 100, 2):
        report = verify_full_product(n)
        if abs(report.residual) > worst:
            worst_n, worst = n, abs(report.residual)
    with capsys.disabled():
        _criterion(
            "full unit-group products for odd n < 100",
            worst < 1e-8,
            f"worst residual={worst:.3e} at n={worst_n}",
        )


def test_mersenne_family(capsys):
    structure_ok = True
    for m in range(2, 13):
        identity = mersenne_identity(m)
        n = 2**m - 1
        dec = coset_decomposition(n)
        if (identity.coset != dec.cosets[0] or identity.nu != m
                or identity.b != m - 1):
            structure_ok = False
    worst = max(abs(verify_identity(mersenne_identity(m)).residual)
                for m in range(2, 9))
    with capsys.disabled():
        _criterion(
            "Mersenne modulus family",
            structure_ok and worst < 1e-9,
            f"structure ok for m=2..12, worst residual={worst:.3e} for m=2..8",
        )


def test_sweep_to_999(capsys):
    start = time.perf_counter()
    ok = True
    detail = "all invariants held"
    for n in range(3, 1000, 2):
        identities = enumerate_identities(n)
        by_coset = {ident.coset: ident for ident in identities}
        for ident in identities:
            m = 2 * n
            if sum(ident.coset) != n * ident.nu:
                ok, detail = False, f"coset sum broke at n={n}"
            if {x * (n + 2) % m for x in ident.coset} != set(ident.coset):
                ok, detail = False, f"closure broke at n={n}"
            twin = complement_identity(ident)
            if by_coset[twin.coset].b != ident.nu - ident.b:
                ok, detail = False, f"complement rule broke at n={n}"
            report = verify_identity(ident, tol=1e-9 * (1 + ident.nu))
            if not report.passed:
                ok, detail = False, f"residual {report.residual:.3e} at n={n}"
    elapsed = time.perf_counter() - start
    with capsys.disabled():
        _criterion(
            "structural and numeric sweep over odd n <= 999",
            ok and elapsed < 30.0,
            f"{detail}, elapsed={elapsed:.2f} s",
        )


def test_functional_equation_spot_checks(capsys):
    dup_worst = max(abs(verify_duplication(k / 1000)) for k in range(1, 500))
    rng = random.Random(20240601)
    ref_worst = 0.0
    for _ in range(200):
        t = rng.uniform(1e-4, 1 - 1e-4)
        lhs = log_gamma(min(t, 1 - t)) + log_gamma(max(t, 1 - t))
        rhs = math.log(math.pi) - math.log(math.sin(math.pi * min(t, 1 - t)))
        ref_worst = max(ref_worst, abs(lhs - rhs))
    with capsys.disabled():
        _criterion(
            "duplication and reflection spot checks",
            dup_worst < 1e-12 and ref_worst < 1e-12,
            f"duplication worst={dup_worst:.3e}, reflection worst={ref_worst:.3e}",
        )


def test_partition_against_naive_orbits(capsys):
    ok = True
    for n in range(3, 202, 2):
        m, g = 2 * n, n + 2
        seen = [False] * m
        expected = []
        for start_x in range(1, m):
            if seen[start_x] or math.gcd(start_x, m) != 1:
                continue
            orbit, x = [], start_x
            while not seen[x]:
                seen[x] = True
                orbit.append(x)
                x = x * g % m
            expected.append(tuple(sorted(orbit)))
        if list(coset_decomposition(n).cosets) != expected:
            ok = False
    with capsys.disabled():
        _criterion(
            "coset partition agrees with naive orbit walk for odd n <= 201",
            ok,
            "element-for-element" if ok else "mismatch found",
        )
