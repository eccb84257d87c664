"""Exact arithmetic in the unit groups (Z/mZ)*.

Moduli are plain Python integers, so modular products never overflow no
matter the size.  Representatives always live in the open interval (0, m)
and listings are sorted ascending; cycles and cosets are keyed by their
smallest member.  Together this makes every derived listing deterministic.
"""

import math
from dataclasses import dataclass

from .errors import DomainError, InvalidModulusError, NotAUnitError

__all__ = [
    "OddModulus",
    "UnitGroup",
    "HalvingCycle",
    "CosetDecomposition",
    "units_mod",
    "multiplicative_order",
    "odd_lift",
    "odd_lift_inverse",
    "halve_mod",
    "halving_cycles",
    "coset_decomposition",
]


class OddModulus(int):
    """An odd integer modulus n > 1; construction enforces the domain."""

    def __new__(cls, n: int) -> "OddModulus":
        n = int(n)
        if n < 3 or n % 2 == 0:
            raise InvalidModulusError(f"modulus must be odd and > 1, got {n}")
        return super().__new__(cls, n)


@dataclass(frozen=True)
class UnitGroup:
    """Residues in (0, m) coprime to m, ascending; the totient is the length."""

    modulus: int
    elements: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x) -> bool:
        return 0 < x < self.modulus and math.gcd(x, self.modulus) == 1


@dataclass(frozen=True)
class HalvingCycle:
    """One cycle of the mod-n halving permutation.

    vertices[i+1] == halve_mod(vertices[i], n) cyclically, rotated so the
    smallest vertex comes first.  labels[i] is the odd lift of vertices[i]
    into the units mod 2n; the label sets across all cycles reproduce the
    coset decomposition.
    """

    vertices: tuple[int, ...]
    labels: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class CosetDecomposition:
    """Partition of the units mod 2n into cosets of the subgroup <n+2>."""

    n: OddModulus
    nu: int
    cosets: tuple[tuple[int, ...], ...]

    @property
    def coset_count(self) -> int:
        return len(self.cosets)

    def coset_containing(self, x: int) -> tuple[int, ...]:
        for coset in self.cosets:
            if x in coset:
                return coset
        raise DomainError(f"{x} is not a unit modulo {2 * self.n}")


def units_mod(m: int) -> UnitGroup:
    """All residues in (0, m) coprime to m."""
    if m < 2:
        raise InvalidModulusError(f"modulus must be at least 2, got {m}")
    return UnitGroup(modulus=m, elements=tuple(x for x in range(1, m) if math.gcd(x, m) == 1))


def multiplicative_order(g: int, m: int) -> int:
    """Smallest k >= 1 with g**k congruent to 1 mod m."""
    if m < 2:
        raise InvalidModulusError(f"modulus must be at least 2, got {m}")
    g %= m
    if math.gcd(g, m) != 1:
        raise NotAUnitError(f"{g} is not a unit modulo {m}")
    k, acc = 1, g
    while acc != 1:
        acc = acc * g % m
        k += 1
    return k


def _check_unit(y: int, n: int) -> None:
    if not 0 < y < n or math.gcd(y, n) != 1:
        raise DomainError(f"{y} is not a unit in (0, {n})")


def odd_lift(y: int, n: int) -> int:
    """Lift a unit mod n to the unique odd unit mod 2n congruent to it.

    The lift is a group isomorphism onto the units mod 2n (n odd); its
    inverse is odd_lift_inverse.
    """
    n = OddModulus(n)
    _check_unit(y, n)
    return y if y % 2 else y + n


def odd_lift_inverse(x: int, n: int) -> int:
    """Send an odd unit mod 2n back to its representative in (0, n)."""
    n = OddModulus(n)
    if not 0 < x < 2 * n or math.gcd(x, 2 * n) != 1:
        raise DomainError(f"{x} is not a unit in (0, {2 * n})")
    return x if x < n else x - n


def halve_mod(y: int, n: int) -> int:
    """Halve a unit mod odd n: the unique unit z with 2*z congruent to y."""
    n = OddModulus(n)
    _check_unit(y, n)
    return y // 2 if y % 2 == 0 else (y + n) // 2


def halving_cycles(n: int) -> tuple[HalvingCycle, ...]:
    """Cycles of the halving permutation on the units mod n.

    Cycles appear in order of their smallest vertex.  Walking starts at the
    smallest unvisited unit, so each cycle is automatically rotated to lead
    with its minimum.
    """
    n = OddModulus(n)
    seen: set[int] = set()
    cycles = []
    for start in units_mod(n):
        if start in seen:
            continue
        vertices = []
        v = start
        while v not in seen:
            seen.add(v)
            vertices.append(v)
            v = halve_mod(v, n)
        cycles.append(HalvingCycle(
            vertices=tuple(vertices),
            labels=tuple(odd_lift(v, n) for v in vertices),
        ))
    return tuple(cycles)


def coset_decomposition(n: int) -> CosetDecomposition:
    """Partition the units mod 2n into cosets of the subgroup generated by n+2.

    nu, the common coset size, is computed as the multiplicative order of 2
    mod n; it equals the order of n+2 mod 2n (the lift transports orders,
    and the test suite pins the equality).  Cosets are ascending internally
    and ordered by smallest element, so the subgroup itself comes first.
    """
    n = OddModulus(n)
    m = 2 * n
    g = n + 2
    nu = multiplicative_order(2, n)
    seen: set[int] = set()
    cosets = []
    for u in units_mod(m):
        if u in seen:
            continue
        orbit = []
        x = u
        while x not in seen:
            seen.add(x)
            orbit.append(x)
            x = x * g % m
        assert len(orbit) == nu
        cosets.append(tuple(sorted(orbit)))
    return CosetDecomposition(n=n, nu=nu, cosets=tuple(cosets))
