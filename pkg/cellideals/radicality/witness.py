"""Bounded search for witnesses of non-radicality.

A pure-difference binomial in the radical lies in the lattice ideal, so its
exponent difference lies in the lattice spanned by the cell vectors. The
search walks small integer combinations of cell vectors, and for each
binomial ``b`` outside the ideal tries monomial multiples ``m b`` by
increasing degree until ``(m b)^2`` falls into the ideal.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Iterator

import numpy as np
from sympy.polys.monomials import monomial_divides, monomial_mul
from sympy.polys.rings import PolyElement

from cellideals.grid import CellCollection
from cellideals.ideals import adjacent_minor_ideal, binomial_from_vector, lattice_vectors
from cellideals.polyalg.budget import Budget
from cellideals.polyalg.groebner import DEFAULT_BUDGET, GroebnerBasis
from cellideals.polyalg.orders import Monom

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WitnessSchedule:
    """Bounds for one witness search.

    Parameters:
        coefficient_bound: Cell-vector coefficients range over ``-k..k``.
        multiplier_degree: Largest degree of a monomial multiplier.
        degree_bound: Largest total degree of a candidate witness.
    """

    coefficient_bound: int = 2
    multiplier_degree: int = 4
    degree_bound: int = 12

    def __post_init__(self) -> None:
        if self.coefficient_bound < 1 or self.degree_bound < 1 or self.multiplier_degree < 0:
            raise ValueError(f"Witness bounds must be positive, got {self}")


QUICK_SCHEDULE = WitnessSchedule(coefficient_bound=1, multiplier_degree=2, degree_bound=12)


def coefficient_vectors(rank: int, bound: int) -> Iterator[tuple[int, ...]]:
    """Nonzero vectors in ``{-bound..bound}^rank`` up to sign.

    Yields by support size, then largest absolute entry, then
    lexicographically; the first nonzero entry is positive.
    """
    values = [v for v in range(-bound, bound + 1) if v]
    for support in range(1, rank + 1):
        level: list[tuple[int, tuple[int, ...]]] = []
        for positions in itertools.combinations(range(rank), support):
            for entries in itertools.product(values, repeat=support):
                if entries[0] < 0:
                    continue
                vector = [0] * rank
                for position, entry in zip(positions, entries):
                    vector[position] = entry
                level.append((max(abs(e) for e in entries), tuple(vector)))
        level.sort()
        for _, vector in level:
            yield vector


def _monomials(nvars: int, degree: int) -> Iterator[Monom]:
    for combo in itertools.combinations_with_replacement(range(nvars), degree):
        monom = [0] * nvars
        for i in combo:
            monom[i] += 1
        yield tuple(monom)


def _pair_vanishes(basis: GroebnerBasis, first: Monom, second: Monom) -> bool:
    return basis.reduce_monomial(first) == basis.reduce_monomial(second)


def _square_vanishes(basis: GroebnerBasis, multiplier: Monom, remainder: PolyElement) -> bool:
    # (m b)^2 = m^2 b^2 reduces to zero iff m^2 times the remainder of b^2 does.
    ring = remainder.ring
    square = monomial_mul(multiplier, multiplier)
    shifted = ring.from_dict({monomial_mul(square, m): c for m, c in remainder.items()})
    return not basis.normal_form(shifted)


def witness_search(
    collection: CellCollection,
    schedule: WitnessSchedule = WitnessSchedule(),
    budget: Budget = DEFAULT_BUDGET,
) -> PolyElement | None:
    """Searches for ``f`` outside the adjacent-minor ideal with ``f^2`` inside.

    Args:
        collection: The collection of cells
        schedule: The search bounds
        budget: Resource limits for the single Gröbner run

    Returns:
        A witness in the ring of ``collection``, or None if the bounded
        search finds nothing
    """
    ideal = adjacent_minor_ideal(collection)
    if ideal.is_zero:
        return None
    basis = ideal.groebner(budget=budget)
    ring = ideal.context.ring
    lattice = lattice_vectors(collection)
    nvars = len(ideal.context)
    tried = 0

    for coefficients in coefficient_vectors(len(collection), schedule.coefficient_bound):
        vector = np.asarray(coefficients, dtype=np.int64) @ lattice.matrix
        positive = tuple(int(max(v, 0)) for v in vector)
        negative = tuple(int(max(-v, 0)) for v in vector)
        degree = sum(positive)
        if not degree or degree > schedule.degree_bound:
            continue
        if _pair_vanishes(basis, positive, negative):
            continue
        binomial = binomial_from_vector(vector, ideal.context)
        remainder = basis.normal_form(binomial**2)
        tried += 1
        if not remainder:
            logger.debug("Witness from lattice combination %s", coefficients)
            return binomial

        dead: list[Monom] = []
        top = min(schedule.multiplier_degree, schedule.degree_bound - degree)
        for multiplier_degree in range(1, top + 1):
            for multiplier in _monomials(nvars, multiplier_degree):
                if any(monomial_divides(d, multiplier) for d in dead):
                    continue
                if _pair_vanishes(basis, monomial_mul(multiplier, positive), monomial_mul(multiplier, negative)):
                    dead.append(multiplier)
                    continue
                if _square_vanishes(basis, multiplier, remainder):
                    logger.debug("Witness from lattice combination %s times %s", coefficients, multiplier)
                    return ring.from_dict({multiplier: 1}) * binomial

    logger.debug("No witness among %d lattice binomials of %s", tried, collection)
    return None
