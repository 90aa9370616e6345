"""The D_t family of minimally non-radical collections.

For ``t >= 2`` the collection ``D_t`` has ``t + 4`` cells: a row of cells
``D_0 .. D_{t-1}`` along the bottom, ``E`` on top of ``D_0``, and the cells
``C``, ``B`` and ``A`` meeting ``D_{t-1}`` at a corner. Its vertices carry
the symbolic labels ``a0, a1`` (top row), ``b0, b1, b2``, ``c0 .. c_{t+2}``,
``d0 .. d_t`` and ``e0, e1``, which are used by the order specs and the
witness below.
"""

import logging
from dataclasses import dataclass, field

from sympy.polys.rings import PolyElement

from cellideals.grid import Cell, CellCollection, Vertex, weakly_connected_deletions
from cellideals.ideals import adjacent_minor_ideal, cell_minor, vertex_variables
from cellideals.polyalg.budget import Budget
from cellideals.polyalg.groebner import DEFAULT_BUDGET
from cellideals.polyalg.orders import MonomialOrder, convert, variable_name
from cellideals.radicality.exact import restrict_order

logger = logging.getLogger(__name__)


def _check(t: int) -> None:
    if t < 2:
        raise ValueError(f"The D_t family needs t >= 2, got {t}")


def dt_cells(t: int) -> dict[str, Cell]:
    """Named cells of ``D_t`` keyed ``A, B, C, E, D0 .. D{t-1}``."""
    _check(t)
    cells = {
        "A": Cell.at(t + 1, 3),
        "B": Cell.at(t + 2, 2),
        "C": Cell.at(t + 1, 2),
        "E": Cell.at(1, 2),
    }
    for i in range(t):
        cells[f"D{i}"] = Cell.at(i + 1, 1)
    return cells


def dt_family(t: int) -> CellCollection:
    """The rank ``t + 4`` collection ``D_t``.

    Raises:
        ValueError: If ``t < 2``
    """
    return CellCollection(frozenset(dt_cells(t).values()))


def dt_labels(t: int) -> dict[str, Vertex]:
    """Maps each symbolic label of ``D_t`` to its vertex."""
    _check(t)
    labels: dict[str, Vertex] = {
        "a0": (t + 1, 4),
        "a1": (t + 2, 4),
        "b0": (t + 1, 3),
        "b1": (t + 2, 3),
        "b2": (t + 3, 3),
        "e0": (1, 3),
        "e1": (2, 3),
    }
    for k in range(t + 3):
        labels[f"c{k}"] = (k + 1, 2)
    for k in range(t + 1):
        labels[f"d{k}"] = (k + 1, 1)
    return labels


def dt_label_names(t: int) -> dict[str, str]:
    """Maps each symbolic label to its variable name, for order specs."""
    return {label: variable_name(v) for label, v in dt_labels(t).items()}


def _lex(t: int, labels: list[str]) -> MonomialOrder:
    names = dt_label_names(t)
    return MonomialOrder("lex", tuple(names[label] for label in labels))


def dt_order(t: int) -> MonomialOrder:
    """Lex with ``a0 > a1 > b0 > b1 > b2 > c_{t+1} > c_{t+2} > d0 > .. > d_t > c0 > .. > c_t > e0 > e1``."""
    _check(t)
    labels = ["a0", "a1", "b0", "b1", "b2", f"c{t + 1}", f"c{t + 2}"]
    labels += [f"d{k}" for k in range(t + 1)]
    labels += [f"c{k}" for k in range(t + 1)]
    labels += ["e0", "e1"]
    return _lex(t, labels)


def dt_deletion_order(t: int) -> MonomialOrder:
    """Lex with ``a1 > a0 > b2 > b1 > b0 > c_{t+2} > c_{t+1} > e1 > e0 > c0 > .. > c_t > d0 > .. > d_t``."""
    _check(t)
    labels = ["a1", "a0", "b2", "b1", "b0", f"c{t + 2}", f"c{t + 1}", "e1", "e0"]
    labels += [f"c{k}" for k in range(t + 1)]
    labels += [f"d{k}" for k in range(t + 1)]
    return _lex(t, labels)


def _monomial(t: int, labels: list[str]) -> PolyElement:
    collection = dt_family(t)
    context = vertex_variables(collection)
    names = dt_label_names(t)
    result = context.ring.one
    for label in labels:
        result *= context.variable(names[label])
    return result


def dt_witness(t: int) -> PolyElement:
    """``f_t = a0 b2 c_{t+1} d1 .. d_{t-1} (d1 e0 - d0 e1)``, outside the ideal with its square inside."""
    _check(t)
    multiplier = ["a0", "b2", f"c{t + 1}"] + [f"d{k}" for k in range(1, t)]
    return _monomial(t, multiplier + ["d1", "e0"]) - _monomial(t, multiplier + ["d0", "e1"])


def dt_reduced_basis(t: int) -> list[PolyElement]:
    """The reduced basis of ``I(D_t)`` under ``dt_order(t)``: the minors and two cubic/quartic binomials."""
    collection = dt_family(t)
    ring = dt_order(t).ring
    gens = list(adjacent_minor_ideal(collection).gens)
    gens.append(_monomial(t, ["a0", "b2", f"c{t + 1}"]) - _monomial(t, ["b0", "a1", f"c{t + 2}"]))
    gens.append(_monomial(t, ["a1", "b0", "b0", f"c{t + 2}"]) - _monomial(t, ["a1", "b0", "b2", f"c{t}"]))
    return [convert(g, ring).monic() for g in gens]


def _polynomial_set(polys: list[PolyElement]) -> frozenset[frozenset]:
    return frozenset(frozenset(p.items()) for p in polys)


def _term_pair(f: PolyElement) -> frozenset[frozenset[str]]:
    names = f.ring.symbols
    return frozenset(frozenset(str(names[i]) for i, e in enumerate(m) if e) for m in f.keys())


def coprime_leading_terms(collection: CellCollection, order: MonomialOrder) -> bool:
    """Whether the minors of ``collection`` have pairwise coprime leading terms under ``order``.

    When they do, the minors themselves form a Gröbner basis with squarefree
    leading terms.
    """
    ideal = adjacent_minor_ideal(collection)
    restricted = restrict_order(order, ideal.context.names)
    if restricted is None:
        raise ValueError("The order does not cover the variables of the collection")
    ring = restricted.ring
    leads = [convert(g, ring).LM for g in ideal.gens]
    for i, first in enumerate(leads):
        for second in leads[i + 1 :]:
            if any(x and y for x, y in zip(first, second)):
                return False
    return True


@dataclass
class DtValidation:
    """Checks on ``D_t`` against its stated Gröbner basis and witness.

    Parameters:
        t: The family parameter.
        minor_pairs: The minors of ``A`` and ``B`` have the stated terms.
        basis_matches: The computed reduced basis equals the stated one.
        witness_outside: ``f_t`` is not in the ideal.
        witness_square_inside: ``f_t^2`` is in the ideal.
        deletions: Per weakly connected deletion, whether the remaining
            minors have coprime leading terms under the certifying order.
    """

    t: int
    minor_pairs: bool
    basis_matches: bool
    witness_outside: bool
    witness_square_inside: bool
    deletions: dict[str, bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return (
            self.minor_pairs
            and self.basis_matches
            and self.witness_outside
            and self.witness_square_inside
            and all(self.deletions.values())
        )


def validate_dt(t: int, budget: Budget = DEFAULT_BUDGET) -> DtValidation:
    """Runs every check on ``D_t``.

    Args:
        t: The family parameter, at least 2
        budget: Resource limits for the Gröbner run

    Returns:
        The individual check results

    Raises:
        ValueError: If ``t < 2``
    """
    collection = dt_family(t)
    cells = dt_cells(t)
    context = vertex_variables(collection)
    names = dt_label_names(t)

    def pair(*labels: str) -> frozenset[str]:
        return frozenset(names[label] for label in labels)

    minor_pairs = _term_pair(cell_minor(context, cells["A"])) == {pair("a0", "b1"), pair("a1", "b0")}
    minor_pairs &= _term_pair(cell_minor(context, cells["B"])) == {pair("b1", f"c{t + 2}"), pair("b2", f"c{t + 1}")}

    ideal = adjacent_minor_ideal(collection)
    basis = ideal.groebner(dt_order(t), budget)
    basis_matches = _polynomial_set(list(basis.polys)) == _polynomial_set(dt_reduced_basis(t))

    witness = dt_witness(t)
    outside = not basis.contains(witness)
    square_inside = basis.contains(witness**2)

    orders = {"A": dt_order(t), "B": dt_order(t), "E": dt_deletion_order(t), "D0": dt_deletion_order(t)}
    names_by_cell = {cell: name for name, cell in cells.items()}
    deletions: dict[str, bool] = {}
    for cell in weakly_connected_deletions(collection):
        name = names_by_cell[cell]
        order = orders.get(name)
        deletions[name] = order is not None and coprime_leading_terms(collection.without(cell), order)

    result = DtValidation(t, minor_pairs, basis_matches, outside, square_inside, deletions)
    logger.debug("D_%d validation: %s", t, result)
    return result


def dt_parameter(collection: CellCollection) -> int | None:
    """The ``t`` with ``collection`` equal to ``D_t`` in its standard placement, if any."""
    t = len(collection) - 4
    if t < 2 or collection != dt_family(t):
        return None
    return t
