"""Text, LaTeX and JSON renderings of the identities.

Conventions shared by all formats: numerators ascending, unit factors
(2**0, pi**0) omitted, 2**1 written as a bare 2.  JSON field names are a
stable external contract; payloads are single lines so streams of
identities come out newline-delimited.
"""

import json
from dataclasses import dataclass

from .identities import GammaProductIdentity

__all__ = ["FORMATS", "RenderedIdentity", "render_identity"]

FORMATS = ("text", "latex", "json")


@dataclass(frozen=True)
class RenderedIdentity:
    format: str
    payload: str


def _rhs_plain(b: int, nu: int, times: str, pi_sym: str) -> str:
    factors = []
    if b == 1:
        factors.append("2")
    elif b >= 2:
        factors.append(f"2^{b}")
    if nu == 2:
        factors.append(pi_sym)
    elif nu > 0 and nu % 2 == 0:
        factors.append(f"{pi_sym}^{nu // 2}")
    elif nu > 0:
        factors.append(f"{pi_sym}^({nu}/2)")
    return times.join(factors) if factors else "1"


def _text(identity: GammaProductIdentity, ascii_symbols: bool) -> str:
    gamma = "Gamma" if ascii_symbols else "Γ"
    times = "*" if ascii_symbols else "·"
    pi_sym = "pi" if ascii_symbols else "π"
    m = identity.modulus
    lhs = times.join(f"{gamma}({x}/{m})" for x in identity.coset)
    return f"{lhs} = {_rhs_plain(identity.b, identity.nu, times, pi_sym)}"


def _rhs_latex(b: int, nu: int) -> str:
    parts = []
    if b == 1:
        parts.append("2")
    elif b >= 2:
        parts.append(f"2^{{{b}}}")
    if nu == 2:
        parts.append(r"\pi")
    elif nu > 0 and nu % 2 == 0:
        parts.append(rf"\pi^{{{nu // 2}}}")
    elif nu > 0:
        parts.append(rf"\pi^{{{nu}/2}}")
    return "".join(parts) if parts else "1"


def _latex(identity: GammaProductIdentity) -> str:
    m = identity.modulus
    lhs = "".join(rf"\Gamma\left(\frac{{{x}}}{{{m}}}\right)" for x in identity.coset)
    return rf"\[{lhs} = {_rhs_latex(identity.b, identity.nu)}\]"


def _json(identity: GammaProductIdentity) -> str:
    return json.dumps({
        "n": int(identity.n),
        "modulus": identity.modulus,
        "coset": list(identity.coset),
        "nu": identity.nu,
        "b": identity.b,
        "rhs": {"pow2": identity.rhs.pow2, "pi_half_units": identity.rhs.pi_half_units},
    })


def render_identity(identity: GammaProductIdentity, fmt: str = "text",
                    ascii_symbols: bool = False) -> RenderedIdentity:
    """Render one identity as a single-line payload in the given format.

    ascii_symbols swaps the Unicode Gamma/pi/dot of the text format for
    pure ASCII spellings; it has no effect on latex or json.
    """
    if fmt == "text":
        payload = _text(identity, ascii_symbols)
    elif fmt == "latex":
        payload = _latex(identity)
    elif fmt == "json":
        payload = _json(identity)
    else:
        raise ValueError(f"unknown format {fmt!r}, expected one of {FORMATS}")
    return RenderedIdentity(format=fmt, payload=payload)
