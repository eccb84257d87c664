"""Sweep statistics over ranges of odd moduli, plus the recorded reference
counts for n < 100 and an honest checker for them."""

from dataclasses import dataclass
from typing import Iterable

from .errors import DomainError
from .identities import enumerate_identities, is_self_complementary
from .residues import units_mod

__all__ = [
    "SurveyRow",
    "ClaimResult",
    "ClaimReport",
    "survey_row",
    "survey_range",
    "check_reference_claims",
    "is_prime_power",
]


@dataclass(frozen=True)
class SurveyRow:
    """Per-modulus statistics of the coset decomposition."""

    n: int
    phi: int
    nu: int
    coset_count: int
    self_complementary_count: int
    max_b: int
    is_prime_power: bool


def _smallest_prime_factor(n: int) -> int:
    if n % 2 == 0:
        return 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return d
        d += 2
    return n


def is_prime_power(n: int) -> bool:
    """True when n = p**k for a single prime p, k >= 1."""
    if n < 2:
        return False
    p = _smallest_prime_factor(n)
    while n % p == 0:
        n //= p
    return n == 1


def survey_row(n: int) -> SurveyRow:
    """Statistics for a single odd modulus.

    phi is recomputed from the units mod n rather than read off the coset
    sizes, so phi == nu * coset_count stays a checkable invariant instead
    of a tautology.
    """
    identities = enumerate_identities(n)
    return SurveyRow(
        n=int(identities[0].n),
        phi=len(units_mod(int(identities[0].n))),
        nu=identities[0].nu,
        coset_count=len(identities),
        self_complementary_count=sum(1 for ident in identities if is_self_complementary(ident)),
        max_b=max(ident.b for ident in identities),
        is_prime_power=is_prime_power(int(identities[0].n)),
    )


def survey_range(max_n: int) -> tuple[SurveyRow, ...]:
    """One row per odd n in [3, max_n], in increasing n.

    Rows are computed independently per modulus; nothing is shared or
    cached across them, so any single row can be recomputed in isolation.
    """
    if max_n < 3:
        raise DomainError(f"survey range must reach at least 3, got {max_n}")
    return tuple(survey_row(n) for n in range(3, max_n + 1, 2))


@dataclass(frozen=True)
class ClaimResult:
    """Outcome of one recorded reference claim about the n < 100 survey.

    derived carries computed lists behind claims recorded only as counts;
    it is survey output, not part of the recorded claim.
    """

    key: str
    passed: bool
    expected: str
    observed: str
    derived: tuple[int, ...] = ()


@dataclass(frozen=True)
class ClaimReport:
    claims: tuple[ClaimResult, ...]

    @property
    def all_passed(self) -> bool:
        return all(claim.passed for claim in self.claims)


def check_reference_claims(rows: Iterable[SurveyRow]) -> ClaimReport:
    """Evaluate the recorded n < 100 statistics against an actual survey.

    rows must cover every odd n in [3, 99]; rows outside that window are
    ignored.  Each recorded count is checked as stated and reported with
    the computed value, pass or fail.
    """
    by_n = {row.n: row for row in rows if 3 <= row.n <= 99}
    missing = [n for n in range(3, 100, 2) if n not in by_n]
    if missing:
        raise DomainError(f"rows must cover all odd n in [3, 99]; missing {missing}")
    surveyed = [by_n[n] for n in sorted(by_n)]

    claims = []

    gt2 = tuple(row.n for row in surveyed if row.coset_count > 2)
    claims.append(ClaimResult(
        key="more-than-two-cosets",
        passed=len(gt2) == 9,
        expected="9 moduli with more than 2 cosets",
        observed=f"{len(gt2)} moduli",
        derived=gt2,
    ))

    odd_counts = tuple(row.n for row in surveyed
                       if row.coset_count > 2 and row.coset_count % 2 == 1)
    row43 = by_n[43]
    claims.append(ClaimResult(
        key="odd-coset-count",
        passed=(odd_counts == (43,) and row43.coset_count == 3
                and row43.self_complementary_count == 3),
        expected="only n=43, with 3 cosets, all self-complementary",
        observed=(f"odd counts at {list(odd_counts)}; n=43 has {row43.coset_count} cosets, "
                  f"{row43.self_complementary_count} self-complementary"),
    ))

    others = [row for row in surveyed if row.coset_count > 2 and row.n != 43]
    top = max((row.coset_count for row in others), default=0)
    claims.append(ClaimResult(
        key="even-counts-max-8",
        passed=all(row.coset_count % 2 == 0 for row in others) and top == 8,
        expected="every other count even, maximum 8",
        observed=f"parities {'all even' if all(r.coset_count % 2 == 0 for r in others) else 'mixed'}, "
                 f"maximum {top}",
        derived=tuple(row.n for row in others if row.coset_count == 8),
    ))

    single = tuple(row.n for row in surveyed if row.nu == row.phi)
    claims.append(ClaimResult(
        key="order-equals-totient",
        passed=len(single) == 16,
        expected="16 moduli where the order of 2 is the full totient",
        observed=f"{len(single)} moduli",
        derived=single,
    ))

    non_pp = tuple(n for n in single if not by_n[n].is_prime_power)
    claims.append(ClaimResult(
        key="order-equals-totient-prime-power",
        passed=not non_pp,
        expected="each such modulus a prime or prime power",
        observed="all prime powers" if not non_pp else f"exceptions {list(non_pp)}",
    ))

    return ClaimReport(claims=tuple(claims))
