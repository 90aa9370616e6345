"""Defines polynomial ideals and the operations built on Gröbner bases."""

import functools
import logging
from typing import Iterable, Sequence

from sympy.polys.monomials import monomial_divides, monomial_lcm
from sympy.polys.rings import PolyElement

from cellideals.polyalg.budget import Budget
from cellideals.polyalg.groebner import DEFAULT_BUDGET, GroebnerBasis, buchberger
from cellideals.polyalg.orders import Monom, MonomialOrder, VariableContext, block_order, convert, degrevlex_last

logger = logging.getLogger(__name__)


def _fresh_name(context: VariableContext, base: str) -> str:
    name, suffix = base, 0
    while name in context:
        suffix += 1
        name = f"{base}{suffix}"
    return name


class Ideal:
    """An ideal of a polynomial ring, given by generators.

    Parameters:
        context: The variables of the ambient ring.
        gens: Generators; zero polynomials are dropped and the rest are
            moved into the degrevlex ring of ``context``.
    """

    def __init__(self, context: VariableContext, gens: Iterable[PolyElement] = ()) -> None:
        self.context = context
        gens = list(gens)
        if gens and not len(context):
            raise ValueError("An ideal over an empty variable set has no nonzero generators")
        self.gens: tuple[PolyElement, ...] = tuple(p for p in (convert(g, context.ring) for g in gens) if p)
        self._bases: dict[MonomialOrder, GroebnerBasis] = {}

    def __repr__(self) -> str:
        return f"Ideal({len(self.context)} variables, {len(self.gens)} generators)"

    def __add__(self, other: "Ideal") -> "Ideal":
        if other.context != self.context:
            raise ValueError("Sum of ideals needs a shared variable context")
        return Ideal(self.context, self.gens + other.gens)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @functools.cached_property
    def is_homogeneous(self) -> bool:
        return all(len({sum(m) for m in g.keys()}) == 1 for g in self.gens)

    @functools.cached_property
    def is_monomial(self) -> bool:
        return all(len(g) == 1 for g in self.gens)

    def default_order(self) -> MonomialOrder:
        return self.context.degrevlex()

    def groebner(self, order: MonomialOrder | None = None, budget: Budget = DEFAULT_BUDGET) -> GroebnerBasis:
        """Returns the reduced Gröbner basis under ``order``, caching it per order."""
        order = self.default_order() if order is None else order
        if set(order.variables) != set(self.context.names):
            raise ValueError("Order variables must match the ideal's variable context")
        if order not in self._bases:
            self._bases[order] = buchberger(self.gens, order, budget)
            logger.debug("Basis under %s has %d elements", order.kind, len(self._bases[order]))
        return self._bases[order]

    def contains(self, f: PolyElement, budget: Budget = DEFAULT_BUDGET) -> bool:
        if not f:
            return True
        if self.is_zero:
            return False
        return self.groebner(budget=budget).contains(f)

    def contains_ideal(self, other: "Ideal", budget: Budget = DEFAULT_BUDGET) -> bool:
        return all(self.contains(g, budget) for g in other.gens)

    def equals(self, other: "Ideal", budget: Budget = DEFAULT_BUDGET) -> bool:
        return self.contains_ideal(other, budget) and other.contains_ideal(self, budget)

    @property
    def is_unit(self) -> bool:
        return not self.is_zero and self.groebner().is_unit


def ideal_membership(f: PolyElement, ideal: Ideal, budget: Budget = DEFAULT_BUDGET) -> bool:
    return ideal.contains(f, budget)


def ideal_equal(first: Ideal, second: Ideal, budget: Budget = DEFAULT_BUDGET) -> bool:
    return first.equals(second, budget)


def radical_membership(f: PolyElement, ideal: Ideal, budget: Budget = DEFAULT_BUDGET) -> bool:
    """Decides ``f`` in the radical of ``ideal`` by checking ``1 in I + (1 - y f)``."""
    if not f:
        return True
    if ideal.is_zero:
        return False
    y = _fresh_name(ideal.context, "y")
    extended = ideal.context.extend(y)
    ring = extended.ring
    rabinowitsch = ring.one - ring.gens[-1] * convert(f, ring)
    basis = buchberger(list(ideal.gens) + [rabinowitsch], extended.degrevlex(), budget)
    return basis.is_unit


def eliminate(ideal: Ideal, variables: Sequence[str], budget: Budget = DEFAULT_BUDGET) -> Ideal:
    """Returns the elimination ideal ``I ∩ K[remaining variables]``.

    Args:
        ideal: The ideal to project
        variables: The variables to eliminate
        budget: Resource limits for the Gröbner run

    Returns:
        An ideal over the context with ``variables`` removed
    """
    remaining = ideal.context.without(variables)
    basis = ideal.groebner(block_order(ideal.context, variables), budget)
    drop = [basis.order.variables.index(v) for v in variables]
    kept = [g for g in basis if not any(m[i] for m in g.keys() for i in drop)]
    if not len(remaining):
        return Ideal(remaining)
    return Ideal(remaining, [convert(g, remaining.ring) for g in kept])


def _divide_out(g: PolyElement, index: int) -> PolyElement:
    power = min(m[index] for m in g.keys())
    if not power:
        return g
    return g.ring.from_dict({m[:index] + (m[index] - power,) + m[index + 1 :]: c for m, c in g.items()})


def saturate_variable(ideal: Ideal, variable: str, budget: Budget = DEFAULT_BUDGET) -> Ideal:
    """Returns ``I : x^∞`` for a single variable ``x``.

    Homogeneous input uses a degrevlex basis with ``x`` least significant,
    where dividing each element by its largest power of ``x`` gives a basis
    of the saturation. Other input adjoins ``y`` with ``x y - 1`` and
    eliminates ``y``.
    """
    if ideal.is_zero:
        return ideal
    if ideal.is_homogeneous:
        order = degrevlex_last(ideal.context, variable)
        basis = ideal.groebner(order, budget)
        index = order.variables.index(variable)
        return Ideal(ideal.context, [_divide_out(g, index) for g in basis])

    y = _fresh_name(ideal.context, "y")
    extended = ideal.context.extend(y)
    ring = extended.ring
    inverse = ring.gens[-1] * extended.variable(variable) - ring.one
    lifted = Ideal(extended, list(ideal.gens) + [inverse])
    return eliminate(lifted, [y], budget)


def saturate(ideal: Ideal, variables: Iterable[str], budget: Budget = DEFAULT_BUDGET) -> Ideal:
    """Returns ``I : (prod variables)^∞``.

    Saturates one variable at a time. Saturating by ``x`` and then by ``y``
    gives ``I : (xy)^∞``, so one sweep over ``variables`` reaches the fixpoint.
    """
    current = ideal
    for variable in variables:
        current = saturate_variable(current, variable, budget)
    return current


def _minimalize(monoms: Iterable[Monom]) -> list[Monom]:
    unique = sorted(set(monoms), key=lambda m: (sum(m), m))
    kept: list[Monom] = []
    for m in unique:
        if not any(monomial_divides(k, m) for k in kept):
            kept.append(m)
    return kept


def monomial_intersection(first: Ideal, second: Ideal) -> Ideal:
    """Intersects two monomial ideals through pairwise lcms of their generators."""
    if not (first.is_monomial and second.is_monomial):
        raise ValueError("Monomial intersection needs two monomial ideals")
    if first.context != second.context:
        raise ValueError("Intersection needs a shared variable context")
    if first.is_zero or second.is_zero:
        return Ideal(first.context)
    ring = first.context.ring
    lcms = (monomial_lcm(f.LM, g.LM) for f in first.gens for g in second.gens)
    return Ideal(first.context, [ring.from_dict({m: 1}) for m in _minimalize(lcms)])


def intersect(first: Ideal, second: Ideal, budget: Budget = DEFAULT_BUDGET) -> Ideal:
    """Returns ``I ∩ J``, computed as the elimination of ``t`` from ``t I + (1 - t) J``.

    Args:
        first: The ideal ``I``
        second: The ideal ``J``
        budget: Resource limits for the Gröbner run

    Returns:
        The intersection, over the shared variable context

    Raises:
        ValueError: If the two ideals live over different contexts
    """
    if first.context != second.context:
        raise ValueError("Intersection needs a shared variable context")
    if first.is_zero or second.is_zero:
        return Ideal(first.context)
    if first.is_monomial and second.is_monomial:
        return monomial_intersection(first, second)

    t = _fresh_name(first.context, "t")
    extended = first.context.extend(t)
    ring = extended.ring
    tvar = ring.gens[-1]
    gens = [tvar * convert(f, ring) for f in first.gens]
    gens += [(ring.one - tvar) * convert(g, ring) for g in second.gens]
    return eliminate(Ideal(extended, gens), [t], budget)


def intersect_all(ideals: Sequence[Ideal], budget: Budget = DEFAULT_BUDGET) -> Ideal:
    """Intersects a nonempty list of ideals, folding the monomial ones first."""
    if not ideals:
        raise ValueError("Cannot intersect an empty list of ideals")
    monomial = [i for i in ideals if i.is_monomial and not i.is_zero]
    rest = [i for i in ideals if not (i.is_monomial and not i.is_zero)]
    ordered: list[Ideal] = []
    if monomial:
        ordered.append(functools.reduce(monomial_intersection, monomial))
    ordered += rest
    result = ordered[0]
    for other in ordered[1:]:
        result = intersect(result, other, budget)
    return result
