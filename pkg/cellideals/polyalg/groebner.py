"""Buchberger's algorithm with a binomial fast path.

Both engines use the normal selection strategy, Buchberger's coprime
criterion and the Gebauer-Moeller chain criterion. Pairs are picked by the
total key (degree of lcm, order key of lcm, indices), so runs are
deterministic and the returned reduced basis is unique for its order.

The fast path covers generating sets made of monomials and pure-difference
binomials ``x^u - x^v``. That class is closed under S-polynomials and
reduction, so the engine works on exponent tuples and never touches a
coefficient.
"""

import functools
import logging
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from sympy.polys.monomials import monomial_div, monomial_divides, monomial_lcm, monomial_mul
from sympy.polys.rings import PolyElement, PolyRing

from cellideals.polyalg.budget import Budget, BudgetClock
from cellideals.polyalg.orders import Monom, MonomialOrder, convert

logger = logging.getLogger(__name__)

DEFAULT_BUDGET = Budget()

# (lead, tail); a tail of None marks a monomial element.
PureElement = tuple[Monom, Monom | None]


def degree(monom: Monom) -> int:
    return sum(monom)


def is_pure(f: PolyElement) -> bool:
    """True for monomials and pure-difference binomials ``x^u - x^v``."""
    if len(f) == 1:
        return True
    if len(f) != 2:
        return False
    return sorted(f.values()) == [-1, 1]


def _as_pure(f: PolyElement) -> PureElement:
    if len(f) == 1:
        return (f.LM, None)
    lead = f.LM
    tail = next(m for m in f.keys() if m != lead)
    return (lead, tail)


def _from_pure(element: PureElement, ring: PolyRing) -> PolyElement:
    lead, tail = element
    if tail is None:
        return ring.from_dict({lead: 1})
    return ring.from_dict({lead: 1, tail: -1})


class MonomialReducer:
    """Reduces monomials modulo a set of pure elements.

    Each reduction step divides by a leading monomial and substitutes the
    tail, so a monomial reduces to a single monomial or to zero (``None``).
    """

    def __init__(self, elements: Iterable[PureElement]) -> None:
        self.elements = list(elements)

    def reduce(self, monom: Monom) -> Monom | None:
        current = monom
        while True:
            for lead, tail in self.elements:
                quotient = monomial_div(current, lead)
                if quotient is None:
                    continue
                if tail is None:
                    return None
                current = monomial_mul(quotient, tail)
                break
            else:
                return current

    def reduce_pair(
        self,
        first: Monom | None,
        second: Monom | None,
        key: Callable[[Monom], tuple],
    ) -> PureElement | None:
        """Normal form of ``x^first - x^second`` (either side may be absent)."""
        a = None if first is None else self.reduce(first)
        b = None if second is None else self.reduce(second)
        if a is None and b is None:
            return None
        if a is None:
            return (b, None)  # type: ignore[return-value]
        if b is None:
            return (a, None)
        if a == b:
            return None
        return (a, b) if key(a) > key(b) else (b, a)


def _update(
    basis: set[int],
    pairs: set[tuple[int, int]],
    ih: int,
    leads: Sequence[Monom],
) -> tuple[set[int], set[tuple[int, int]]]:
    """Gebauer-Moeller update of the basis and the critical pairs for a new element ``ih``."""
    mh = leads[ih]

    candidates = sorted(basis, reverse=True)
    kept: list[tuple[int, int]] = []
    while candidates:
        ig = candidates.pop()
        lcm_hg = monomial_lcm(mh, leads[ig])

        def lcm_divides(ip: int, lcm_hg: Monom = lcm_hg) -> bool:
            return monomial_divides(monomial_lcm(mh, leads[ip]), lcm_hg)

        coprime = monomial_mul(mh, leads[ig]) == lcm_hg
        if coprime or (
            not any(lcm_divides(ipx) for ipx in candidates) and not any(lcm_divides(pr[1]) for pr in kept)
        ):
            kept.append((ih, ig))

    # Pairs with coprime leading monomials reduce to zero.
    fresh = {(ih, ig) for ih, ig in kept if monomial_mul(mh, leads[ig]) != monomial_lcm(mh, leads[ig])}

    surviving: set[tuple[int, int]] = set()
    for ig1, ig2 in pairs:
        lcm12 = monomial_lcm(leads[ig1], leads[ig2])
        if (
            not monomial_divides(mh, lcm12)
            or monomial_lcm(leads[ig1], mh) == lcm12
            or monomial_lcm(leads[ig2], mh) == lcm12
        ):
            surviving.add((ig1, ig2))
    surviving |= fresh

    new_basis = {ig for ig in basis if not monomial_divides(mh, leads[ig])}
    new_basis.add(ih)
    return new_basis, surviving


def _select(pairs: set[tuple[int, int]], leads: Sequence[Monom], key: Callable[[Monom], tuple]) -> tuple[int, int]:
    def pair_key(pair: tuple[int, int]) -> tuple:
        lcm = monomial_lcm(leads[pair[0]], leads[pair[1]])
        return (degree(lcm), key(lcm), pair)

    return min(pairs, key=pair_key)


def _pure_buchberger(elements: list[PureElement], order: MonomialOrder, clock: BudgetClock) -> list[PureElement]:
    key = order.ring.order
    store: list[PureElement] = []
    leads: list[Monom] = []
    basis: set[int] = set()
    pairs: set[tuple[int, int]] = set()

    def active() -> MonomialReducer:
        return MonomialReducer(store[i] for i in sorted(basis, key=lambda i: key(leads[i])))

    def add(element: PureElement) -> None:
        nonlocal basis, pairs
        store.append(element)
        leads.append(element[0])
        clock.check_degree(degree(element[0]))
        basis, pairs = _update(basis, pairs, len(store) - 1, leads)
        clock.check_basis(len(basis))

    for element in sorted(elements, key=lambda e: key(e[0])):
        reduced = active().reduce_pair(element[0], element[1], key)
        if reduced is not None:
            add(reduced)

    reductions_to_zero = 0
    while pairs:
        clock.check_time()
        i, j = _select(pairs, leads, key)
        pairs.remove((i, j))
        (u1, v1), (u2, v2) = store[i], store[j]
        lcm = monomial_lcm(u1, u2)
        m1 = monomial_div(lcm, u1)
        m2 = monomial_div(lcm, u2)
        s_first = None if v1 is None else monomial_mul(m1, v1)
        s_second = None if v2 is None else monomial_mul(m2, v2)
        reduced = active().reduce_pair(s_first, s_second, key)
        if reduced is None:
            reductions_to_zero += 1
        else:
            add(reduced)

    logger.debug("Binomial Buchberger: %d elements seen, %d zero reductions", len(store), reductions_to_zero)

    # Minimal basis, then tail reduction.
    minimal = [store[i] for i in sorted(basis, key=lambda i: key(leads[i]))]
    result: list[PureElement] = []
    for lead, tail in minimal:
        if tail is None:
            result.append((lead, None))
            continue
        others = MonomialReducer(e for e in minimal if e[0] != lead)
        new_tail = others.reduce(tail)
        result.append((lead, new_tail))
    return result


def _spoly(p1: PolyElement, p2: PolyElement) -> PolyElement:
    lcm = monomial_lcm(p1.LM, p2.LM)
    return p1.mul_monom(monomial_div(lcm, p1.LM)) - p2.mul_monom(monomial_div(lcm, p2.LM))


def _general_buchberger(polys: list[PolyElement], order: MonomialOrder, clock: BudgetClock) -> list[PolyElement]:
    key = order.ring.order
    store: list[PolyElement] = []
    leads: list[Monom] = []
    basis: set[int] = set()
    pairs: set[tuple[int, int]] = set()

    def active() -> list[PolyElement]:
        return [store[i] for i in sorted(basis, key=lambda i: key(leads[i]))]

    def add(poly: PolyElement) -> None:
        nonlocal basis, pairs
        store.append(poly)
        leads.append(poly.LM)
        clock.check_degree(degree(poly.LM))
        basis, pairs = _update(basis, pairs, len(store) - 1, leads)
        clock.check_basis(len(basis))

    for poly in sorted(polys, key=lambda p: key(p.LM)):
        current = active()
        reduced = poly.rem(current) if current else poly
        if reduced:
            add(reduced.monic())

    reductions_to_zero = 0
    while pairs:
        clock.check_time()
        i, j = _select(pairs, leads, key)
        pairs.remove((i, j))
        reduced = _spoly(store[i], store[j]).rem(active())
        if reduced:
            add(reduced.monic())
        else:
            reductions_to_zero += 1

    logger.debug("General Buchberger: %d elements seen, %d zero reductions", len(store), reductions_to_zero)

    minimal = active()
    result = []
    for poly in minimal:
        others = [g for g in minimal if g.LM != poly.LM]
        result.append((poly.rem(others) if others else poly).monic())
    return result


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced, monic Gröbner basis tagged with its order."""

    order: MonomialOrder
    polys: tuple[PolyElement, ...]

    def __len__(self) -> int:
        return len(self.polys)

    def __iter__(self):  # noqa: ANN204
        return iter(self.polys)

    @functools.cached_property
    def pure(self) -> bool:
        return all(is_pure(p) for p in self.polys)

    @functools.cached_property
    def _reducer(self) -> MonomialReducer:
        return MonomialReducer(_as_pure(p) for p in self.polys)

    @property
    def leading_monomials(self) -> list[Monom]:
        return [p.LM for p in self.polys]

    @property
    def is_unit(self) -> bool:
        return len(self.polys) == 1 and self.polys[0].LM == self.order.ring.zero_monom

    def normal_form(self, f: PolyElement) -> PolyElement:
        """Fully reduced remainder of ``f``; zero iff ``f`` is in the ideal."""
        ring = self.order.ring
        f = convert(f, ring)
        if not f or not self.polys:
            return f
        if not self.pure:
            return f.rem(list(self.polys))
        # Against pure elements every monomial reduces to a monomial or zero.
        terms: dict[Monom, object] = {}
        for monom, coeff in f.items():
            reduced = self._reducer.reduce(monom)
            if reduced is None:
                continue
            total = terms.get(reduced, 0) + coeff  # type: ignore[operator]
            if total:
                terms[reduced] = total
            else:
                terms.pop(reduced, None)
        return ring.from_dict(terms)

    def reduce_monomial(self, monom: Monom) -> Monom | None:
        """Normal form of a single monomial against a pure basis."""
        if not self.pure:
            raise ValueError("Monomial reduction to a single term needs a basis of monomials and binomials")
        return self._reducer.reduce(monom)

    def contains(self, f: PolyElement) -> bool:
        return not self.normal_form(f)


def buchberger(
    gens: Iterable[PolyElement],
    order: MonomialOrder,
    budget: Budget = DEFAULT_BUDGET,
) -> GroebnerBasis:
    """Computes the reduced Gröbner basis of the ideal generated by ``gens``.

    Args:
        gens: Generators, from any ring whose variables appear in ``order``
        order: The monomial order
        budget: Resource limits for this run

    Returns:
        The reduced monic basis, sorted by decreasing leading monomial

    Raises:
        BudgetExceededError: If the run exceeds the budget
    """
    ring = order.ring
    polys = [p for p in (convert(g, ring) for g in gens) if p]
    if not polys:
        return GroebnerBasis(order, ())
    clock = budget.start()
    key = ring.order

    if all(is_pure(p) for p in polys):
        elements = _pure_buchberger([_as_pure(p) for p in polys], order, clock)
        result = [_from_pure(e, ring) for e in elements]
        if not all(is_pure(p) for p in result):
            raise AssertionError("Binomial closure violated on the fast path")
    else:
        result = _general_buchberger(polys, order, clock)

    result.sort(key=lambda p: key(p.LM), reverse=True)
    return GroebnerBasis(order, tuple(result))


def normal_form(f: PolyElement, basis: GroebnerBasis) -> PolyElement:
    return basis.normal_form(f)


def leading_monomials_squarefree(basis: GroebnerBasis) -> bool:
    """A reduced basis with squarefree leading monomials certifies a radical ideal."""
    return all(max(p.LM, default=0) <= 1 for p in basis.polys)
