"""Coset-indexed gamma product identities and their exact closed forms.

For odd n > 1, each coset A of the subgroup generated by n+2 inside the
units mod 2n yields

    prod over x in A of Gamma(x / 2n)  =  2**b * pi**(nu / 2)

where nu is the coset size (the multiplicative order of 2 mod n) and b
counts the elements of A above n.  The right side is stored exactly as the
integer exponent pair; nothing here touches floating point.
"""

import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .errors import DomainError, InvalidCosetError
from .residues import OddModulus, coset_decomposition, multiplicative_order, units_mod

__all__ = [
    "Rhs",
    "GammaProductIdentity",
    "FullProduct",
    "build_identity",
    "enumerate_identities",
    "complement_identity",
    "is_self_complementary",
    "mersenne_identity",
    "full_product_identity",
]


class Rhs(NamedTuple):
    """Exact closed-form value 2**pow2 * pi**(pi_half_units / 2)."""

    pow2: int
    pi_half_units: int


@dataclass(frozen=True)
class GammaProductIdentity:
    """One identity: the Gamma product over a coset and its closed form.

    Instances are plain records with structural equality, keyed in practice
    by (n, smallest coset element).  build_identity is the validating
    constructor; the record itself never re-checks, which lets tests tamper
    with fields and watch the numeric verifier report honest residuals.
    """

    n: OddModulus
    coset: tuple[int, ...]
    nu: int
    b: int

    @property
    def modulus(self) -> int:
        """Common denominator 2n of the product arguments."""
        return 2 * self.n

    @property
    def rhs(self) -> Rhs:
        return Rhs(pow2=self.b, pi_half_units=self.nu)


@dataclass(frozen=True)
class FullProduct:
    """Product of Gamma(x/2n) over every unit x mod 2n: equals (2*pi)**pow2."""

    n: OddModulus
    pow2: int
    pi_half_units: int


def _identity_from_coset(n: OddModulus, coset: tuple[int, ...], nu: int) -> GammaProductIdentity:
    return GammaProductIdentity(n=n, coset=coset, nu=nu,
                                b=sum(1 for x in coset if x > n))


def build_identity(n: int, coset: Iterable[int]) -> GammaProductIdentity:
    """Validate a coset of <n+2> mod 2n and attach its closed form.

    The elements must be distinct units mod 2n, closed under multiplication
    by n+2, and exactly one coset in size; anything else raises
    InvalidCosetError.  Input order does not matter, the stored coset is
    ascending.
    """
    n = OddModulus(n)
    m = 2 * n
    elems = sorted(coset)
    if not elems:
        raise InvalidCosetError("empty coset")
    members = set(elems)
    if len(members) != len(elems):
        raise InvalidCosetError(f"coset has repeated elements: {elems}")
    for x in elems:
        if not 0 < x < m or math.gcd(x, m) != 1:
            raise InvalidCosetError(f"{x} is not a unit modulo {m}")
    g = n + 2
    if {x * g % m for x in members} != members:
        raise InvalidCosetError(f"{elems} is not closed under multiplication by {g} mod {m}")
    nu = multiplicative_order(2, n)
    if len(elems) != nu:
        raise InvalidCosetError(f"{elems} is a union of cosets, not a single coset of size {nu}")
    return _identity_from_coset(n, tuple(elems), nu)


def enumerate_identities(n: int) -> tuple[GammaProductIdentity, ...]:
    """One identity per coset, in coset order (smallest element first)."""
    decomp = coset_decomposition(n)
    return tuple(_identity_from_coset(decomp.n, coset, decomp.nu)
                 for coset in decomp.cosets)


def complement_identity(identity: GammaProductIdentity) -> GammaProductIdentity:
    """Identity for the mirrored coset {2n - x}.

    Complementation is an involution on identities and flips the power of
    two: the mirror of an identity with exponent b has exponent nu - b.
    """
    n = identity.n
    mirrored = tuple(sorted(2 * n - x for x in identity.coset))
    return _identity_from_coset(n, mirrored, identity.nu)


def is_self_complementary(identity: GammaProductIdentity) -> bool:
    """Whether the coset is fixed by x -> 2n - x (derived, never stored)."""
    n = identity.n
    return set(identity.coset) == {2 * n - x for x in identity.coset}


def mersenne_identity(m: int) -> GammaProductIdentity:
    """Subgroup identity for n = 2**m - 1.

    The coset of 1 is {1} together with {2**k + n : 1 <= k < m}, giving
    nu = m and b = m - 1 (every element except 1 exceeds n).
    """
    if m <= 1:
        raise DomainError(f"exponent must be > 1, got {m}")
    n = (1 << m) - 1
    return build_identity(n, [1] + [(1 << k) + n for k in range(1, m)])


def full_product_identity(n: int) -> FullProduct:
    """Combine all coset identities: the total product is (2*pi)**(phi(n)/2).

    The powers of two sum to half the totient and the coset sizes sum to
    the whole of it; both are theorems, asserted here as a cross-check.
    """
    identities = enumerate_identities(n)
    pow2 = sum(identity.b for identity in identities)
    pi_half_units = sum(identity.nu for identity in identities)
    phi = len(units_mod(int(identities[0].n)))
    assert pi_half_units == phi and 2 * pow2 == phi
    return FullProduct(n=identities[0].n, pow2=pow2, pi_half_units=pi_half_units)
