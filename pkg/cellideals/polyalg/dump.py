"""Textual dump of polynomials and ideals.

One polynomial per line, terms as ``coefficient*var^exp`` products, e.g.
``1*x_{1,1}*x_{2,2} - 1*x_{1,2}*x_{2,1}``. Exponents of 1 are omitted.
"""

from typing import Iterable

from sympy.polys.rings import PolyElement

from cellideals.polyalg.groebner import GroebnerBasis
from cellideals.polyalg.ideal import Ideal


def format_term(coeff: object, monom: tuple[int, ...], names: tuple[str, ...]) -> str:
    factors = [str(abs(coeff))]  # type: ignore[arg-type]
    for name, exp in zip(names, monom):
        if exp == 1:
            factors.append(name)
        elif exp > 1:
            factors.append(f"{name}^{exp}")
    return "*".join(factors)


def format_polynomial(f: PolyElement) -> str:
    if not f:
        return "0"
    names = tuple(str(s) for s in f.ring.symbols)
    parts: list[str] = []
    for i, (monom, coeff) in enumerate(f.terms()):
        body = format_term(coeff, monom, names)
        if i == 0:
            parts.append(f"-{body}" if coeff < 0 else body)
        else:
            parts.append(f"- {body}" if coeff < 0 else f"+ {body}")
    return " ".join(parts)


def dump_polynomials(polys: Iterable[PolyElement]) -> str:
    return "\n".join(format_polynomial(p) for p in polys)


def dump_ideal(ideal: Ideal | GroebnerBasis) -> str:
    """Dumps generators, or basis elements in decreasing leading-term order."""
    polys = ideal.gens if isinstance(ideal, Ideal) else ideal.polys
    return dump_polynomials(polys)
