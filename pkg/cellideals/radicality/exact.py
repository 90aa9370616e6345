"""Exact radicality test.

The radical of the adjacent-minor ideal is the intersection of its minimal
primes, so the ideal is radical iff every generator of that intersection lies
in the ideal. Cheaper certificates run first: a vertex-disjoint split is
decided part by part, and a reduced basis with squarefree leading monomials
under some order proves radicality outright.
"""

import functools
import logging
from typing import Literal, Sequence

from sympy.polys.rings import PolyElement

from cellideals.grid import CellCollection, vertex_disjoint_split
from cellideals.ideals import adjacent_minor_ideal
from cellideals.polyalg.budget import Budget, BudgetExceededError
from cellideals.polyalg.groebner import DEFAULT_BUDGET, leading_monomials_squarefree
from cellideals.polyalg.ideal import Ideal, intersect_all
from cellideals.polyalg.orders import MonomialOrder, convert, row_lex_order
from cellideals.primes import minimal_primes
from cellideals.radicality.verdict import RadicalVerdict

logger = logging.getLogger(__name__)

DEFAULT_MAX_EXACT_RANK = 5

OnBudget = Literal["raise", "unknown"]


def restrict_order(order: MonomialOrder, names: Sequence[str]) -> MonomialOrder | None:
    """The order induced on ``names``, or None if the order does not cover them."""
    if order.kind == "block" or not set(names) <= set(order.variables):
        return None
    keep = set(names)
    return MonomialOrder(order.kind, tuple(v for v in order.variables if v in keep))


def squarefree_certificate(
    collection: CellCollection,
    budget: Budget = DEFAULT_BUDGET,
    orders: Sequence[MonomialOrder] = (),
) -> MonomialOrder | None:
    """Finds an order whose reduced basis has squarefree leading monomials.

    Tries degrevlex in row-major variable order, the row-by-row lex order
    under which parallelogram paths have coprime leading terms, then the
    extra ``orders`` restricted to the variables of ``collection``.

    Args:
        collection: The collection of cells
        budget: Resource limits for each Gröbner run
        orders: Extra candidate orders

    Returns:
        The first certifying order, or None
    """
    ideal = adjacent_minor_ideal(collection)
    if ideal.is_zero:
        return ideal.default_order()
    names = ideal.context.names
    portfolio = [ideal.default_order(), row_lex_order(collection.vertices)]
    portfolio += [r for r in (restrict_order(o, names) for o in orders) if r is not None]
    for order in portfolio:
        if leading_monomials_squarefree(ideal.groebner(order, budget)):
            logger.debug("Squarefree initial ideal under %s", order.describe())
            return order
    return None


def sqrt_ideal(
    collection: CellCollection,
    budget: Budget = DEFAULT_BUDGET,
    max_rank: int = DEFAULT_MAX_EXACT_RANK,
) -> Ideal:
    """The radical of the adjacent-minor ideal as the intersection of its minimal primes.

    Args:
        collection: The collection of cells
        budget: Resource limits for each Gröbner run
        max_rank: Larger collections raise ``BudgetExceededError``

    Returns:
        The radical, over the variables of ``collection``

    Raises:
        BudgetExceededError: If the rank or a Gröbner run exceeds its budget
    """
    if len(collection) > max_rank:
        raise BudgetExceededError("max_exact_rank", len(collection), max_rank)
    if not collection:
        return adjacent_minor_ideal(collection)
    primes = minimal_primes(collection, budget, max_rank=max_rank)
    return intersect_all([p.ideal for p in primes], budget)


def _non_radical(ideal: Ideal, excess: PolyElement, reason: str, budget: Budget) -> RadicalVerdict:
    if ideal.contains(excess**2, budget):
        return RadicalVerdict("non-radical", "exact", witness=excess, reason=reason)
    return RadicalVerdict("non-radical", "exact", excess=excess, reason=reason)


def _decide(
    collection: CellCollection,
    budget: Budget,
    max_rank: int,
    orders: Sequence[MonomialOrder],
) -> RadicalVerdict:
    if not collection:
        return RadicalVerdict("radical", "exact", reason="zero ideal")

    parts = vertex_disjoint_split(collection)
    if len(parts) > 1:
        context = adjacent_minor_ideal(collection).context
        for part in parts:
            verdict = exact_radical(part, budget, max_rank, orders=orders)
            if verdict.status == "non-radical":
                certificate = verdict.witness if verdict.witness is not None else verdict.excess
                assert certificate is not None
                moved = convert(certificate, context.ring)
                reason = f"vertex-disjoint part {part} is not radical"
                if verdict.witness is not None:
                    return RadicalVerdict("non-radical", "exact", witness=moved, reason=reason)
                return RadicalVerdict("non-radical", "exact", excess=moved, reason=reason)
        return RadicalVerdict("radical", "exact", reason=f"all {len(parts)} vertex-disjoint parts are radical")

    order = squarefree_certificate(collection, budget, orders)
    if order is not None:
        return RadicalVerdict("radical", "exact", reason=f"squarefree initial ideal under {order.kind}")

    if len(collection) > max_rank:
        raise BudgetExceededError("max_exact_rank", len(collection), max_rank)

    ideal = adjacent_minor_ideal(collection)
    primes = minimal_primes(collection, budget, max_rank=max_rank)
    if len(primes) == 1:
        # The radical is the lattice ideal itself.
        for g in primes[0].ideal.gens:
            if not ideal.contains(g, budget):
                return _non_radical(ideal, g, "the lattice ideal is the only minimal prime", budget)
        return RadicalVerdict("radical", "exact", reason="equal to its only minimal prime")

    radical = intersect_all([p.ideal for p in primes], budget)
    for g in radical.gens:
        if not ideal.contains(g, budget):
            return _non_radical(ideal, g, f"intersection of {len(primes)} minimal primes is larger", budget)
    return RadicalVerdict("radical", "exact", reason=f"equal to the intersection of {len(primes)} minimal primes")


VERDICT_CACHE_SIZE = 4096


@functools.lru_cache(maxsize=VERDICT_CACHE_SIZE)
def _cached_decide(
    collection: CellCollection,
    budget: Budget,
    max_rank: int,
    orders: tuple[MonomialOrder, ...],
) -> RadicalVerdict:
    return _decide(collection, budget, max_rank, orders)


def exact_radical(
    collection: CellCollection,
    budget: Budget = DEFAULT_BUDGET,
    max_rank: int = DEFAULT_MAX_EXACT_RANK,
    on_budget: OnBudget = "raise",
    orders: Sequence[MonomialOrder] = (),
) -> RadicalVerdict:
    """Decides radicality exactly.

    Args:
        collection: The collection of cells
        budget: Resource limits for each Gröbner run
        max_rank: Rank limit for the minimal-prime intersection
        on_budget: ``raise`` propagates budget errors; ``unknown`` turns
            them into an undecided verdict
        orders: Extra orders to try for a squarefree initial ideal

    Returns:
        The verdict; the most recent ``VERDICT_CACHE_SIZE`` decided verdicts
        are cached per argument set

    Raises:
        BudgetExceededError: If a limit is hit and ``on_budget`` is ``raise``
    """
    try:
        return _cached_decide(collection, budget, max_rank, tuple(orders))
    except BudgetExceededError as error:
        if on_budget == "raise":
            raise
        logger.warning("Exact radicality of %s undecided: %s", collection, error)
        return RadicalVerdict("unknown", "exact", reason=str(error))
