"""Builds the binomial ideals attached to a collection of cells.

Variables are ``x_{i,j}``, one per vertex, indexed row-major (by ``y``, then
``x``) over the minimal bounding box of ``V(C)``.
"""

import functools
import logging
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np
from sympy import Matrix
from sympy.polys.rings import PolyElement

from cellideals.grid import Cell, CellCollection, Vertex, inner_intervals
from cellideals.polyalg.budget import Budget
from cellideals.polyalg.groebner import DEFAULT_BUDGET
from cellideals.polyalg.ideal import Ideal, saturate
from cellideals.polyalg.orders import VariableContext, variable_name

logger = logging.getLogger(__name__)


def sorted_vertices(vertices: frozenset[Vertex] | set[Vertex]) -> list[Vertex]:
    return sorted(vertices, key=lambda v: (v[1], v[0]))


def vertex_variables(collection: CellCollection) -> VariableContext:
    return VariableContext(tuple(variable_name(v) for v in sorted_vertices(collection.vertices)))


def _minor(context: VariableContext, a: Vertex, b: Vertex, c: Vertex, d: Vertex) -> PolyElement:
    x = {name: g for name, g in zip(context.names, context.ring.gens)}
    return x[variable_name(a)] * x[variable_name(b)] - x[variable_name(c)] * x[variable_name(d)]


def cell_minor(context: VariableContext, cell: Cell) -> PolyElement:
    """The adjacent 2-minor ``x_a x_b - x_c x_d`` of ``cell``."""
    return _minor(context, cell.a, cell.b, cell.c, cell.d)


def adjacent_minor_ideal(collection: CellCollection, context: VariableContext | None = None) -> Ideal:
    """One generator per cell, diagonal minus anti-diagonal; the zero ideal when empty."""
    context = vertex_variables(collection) if context is None else context
    return Ideal(context, [cell_minor(context, cell) for cell in collection.sorted_cells])


def inner_minor_ideal(collection: CellCollection) -> Ideal:
    """One generator per inner interval ``[a, b]``."""
    context = vertex_variables(collection)
    gens = [_minor(context, a, b, (a[0], b[1]), (b[0], a[1])) for a, b in inner_intervals(collection)]
    return Ideal(context, gens)


@dataclass(frozen=True)
class LatticeBasis:
    """The cell vectors ``v_a + v_b - v_c - v_d``, one row per cell.

    Parameters:
        vertices: Column labels, in variable order.
        matrix: Integer matrix of shape ``(|C|, |V(C)|)``.
    """

    vertices: tuple[Vertex, ...]
    matrix: np.ndarray

    @functools.cached_property
    def rank(self) -> int:
        if not self.matrix.size:
            return 0
        return int(Matrix(self.matrix.tolist()).rank())

    def vector(self, values: Mapping[Vertex, int]) -> np.ndarray:
        index = {v: i for i, v in enumerate(self.vertices)}
        out = np.zeros(len(self.vertices), dtype=np.int64)
        for v, value in values.items():
            out[index[v]] = value
        return out


def lattice_vectors(collection: CellCollection) -> LatticeBasis:
    vertices = tuple(sorted_vertices(collection.vertices))
    index = {v: i for i, v in enumerate(vertices)}
    matrix = np.zeros((len(collection), len(vertices)), dtype=np.int64)
    for row, cell in enumerate(collection.sorted_cells):
        for v in cell.diagonal:
            matrix[row, index[v]] = 1
        for v in cell.anti_diagonal:
            matrix[row, index[v]] = -1
    return LatticeBasis(vertices, matrix)


def lattice_membership(vector: Sequence[int] | np.ndarray, collection: CellCollection) -> bool:
    """Decides ``e`` in the lattice by an exact rational solve.

    The cell vectors are linearly independent, so the rational solution is
    unique when it exists and ``e`` is in the lattice iff it is integral.
    """
    basis = lattice_vectors(collection)
    target = [int(x) for x in vector]
    if len(target) != len(basis.vertices):
        raise ValueError(f"Expected a vector of length {len(basis.vertices)}, got {len(target)}")
    if not basis.matrix.size:
        return not any(target)
    system = Matrix(basis.matrix.tolist()).T
    try:
        solution, params = system.gauss_jordan_solve(Matrix(target))
    except ValueError:
        return False
    if params.shape[0]:
        raise AssertionError("Cell vectors must be linearly independent")
    return all(value.is_integer for value in solution)


def binomial_from_vector(vector: Sequence[int] | np.ndarray, context: VariableContext) -> PolyElement:
    """``x^{e+} - x^{e-}`` for an exponent difference ``e`` in variable order."""
    ring = context.ring
    plus = tuple(max(int(x), 0) for x in vector)
    minus = tuple(max(-int(x), 0) for x in vector)
    return ring.from_dict({plus: 1}) - ring.from_dict({minus: 1})


LATTICE_CACHE_SIZE = 4096


@functools.lru_cache(maxsize=LATTICE_CACHE_SIZE)
def lattice_ideal(collection: CellCollection, budget: Budget = DEFAULT_BUDGET) -> Ideal:
    """``L_C``, the saturation of the adjacent-minor ideal by all variables.

    The most recent ``LATTICE_CACHE_SIZE`` results are kept; failed runs are
    not cached.
    """
    adjacent = adjacent_minor_ideal(collection)
    lattice = saturate(adjacent, adjacent.context.names, budget)
    # Keeps only the reduced basis as generators.
    if not lattice.is_zero:
        lattice = Ideal(lattice.context, lattice.groebner(budget=budget).polys)
    logger.debug("Lattice ideal of %d cells has %d generators", len(collection), len(lattice.gens))
    return lattice


def inner_equals_lattice(collection: CellCollection, budget: Budget = DEFAULT_BUDGET) -> bool:
    """Decides ``I_C = L_C``, the primality criterion of the inner-minor ideal."""
    return inner_minor_ideal(collection).equals(lattice_ideal(collection, budget), budget)
