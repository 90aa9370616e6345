"""Tests the adjacent-minor, inner-minor and lattice ideals."""

import random

import numpy as np
import pytest

from cellideals.enumerate import EnumerationConfig, enumerate_collections
from cellideals.grid import Cell, CellCollection, rectangle
from cellideals.ideals import (
    LATTICE_CACHE_SIZE,
    adjacent_minor_ideal,
    binomial_from_vector,
    cell_minor,
    inner_equals_lattice,
    inner_minor_ideal,
    lattice_ideal,
    lattice_membership,
    lattice_vectors,
    vertex_variables,
)

L_TROMINO = CellCollection.from_lower_lefts([(1, 1), (2, 1), (1, 2)])
U_PENTOMINO = CellCollection.from_lower_lefts([(1, 1), (1, 2), (2, 1), (3, 1), (3, 2)])
SQUARE = rectangle(2, 2, origin=(1, 1))


def test_variables_are_row_major() -> None:
    context = vertex_variables(L_TROMINO)
    assert len(context) == 8
    assert context.names[:4] == ("x_{1,1}", "x_{2,1}", "x_{3,1}", "x_{1,2}")
    assert context.names[-1] == "x_{2,3}"


def test_adjacent_minor_ideal() -> None:
    ideal = adjacent_minor_ideal(L_TROMINO)
    assert len(ideal.gens) == 3
    assert ideal.is_homogeneous
    assert adjacent_minor_ideal(CellCollection()).is_zero
    assert len(inner_minor_ideal(L_TROMINO).gens) == 5


def test_lattice_membership() -> None:
    basis = lattice_vectors(SQUARE)
    assert basis.rank == 4
    outer = basis.vector({(1, 1): 1, (3, 3): 1, (1, 3): -1, (3, 1): -1})
    assert lattice_membership(outer, SQUARE)
    assert lattice_membership(-2 * outer, SQUARE)
    assert not lattice_membership(basis.vector({(1, 1): 1, (2, 1): -1}), SQUARE)
    assert not lattice_membership(basis.vector({(2, 2): 1}), SQUARE)
    with pytest.raises(ValueError):
        lattice_membership([1, -1], SQUARE)
    assert lattice_vectors(U_PENTOMINO).rank == 5


def test_binomial_from_vector() -> None:
    cell = rectangle(1, 1, origin=(1, 1))
    context = vertex_variables(cell)
    assert binomial_from_vector([1, -1, -1, 1], context) == cell_minor(context, Cell.at(1, 1))
    assert not binomial_from_vector([0, 0, 0, 0], context)


def test_lattice_ideal() -> None:
    adjacent = adjacent_minor_ideal(SQUARE)
    lattice = lattice_ideal(SQUARE)
    vector = lattice_vectors(SQUARE).vector({(1, 1): 1, (3, 3): 1, (1, 3): -1, (3, 1): -1})
    outer = binomial_from_vector(vector, lattice.context)
    assert lattice.contains(outer)
    assert not adjacent.contains(outer)
    assert lattice.contains_ideal(adjacent)


@pytest.mark.parametrize("collection", [L_TROMINO, SQUARE, rectangle(3, 1)])
def test_inner_ideal_is_lattice_ideal(collection: CellCollection) -> None:
    assert inner_equals_lattice(collection)


def _check_random_vectors(collection: CellCollection) -> None:
    basis = lattice_vectors(collection)
    lattice = lattice_ideal(collection)
    for _ in range(20):
        coefficients = np.array([random.randint(-2, 2) for _ in range(len(collection))], dtype=np.int64)
        inside = coefficients @ basis.matrix
        # Cell vectors sum to zero, so a unit step leaves the lattice.
        outside = inside.copy()
        outside[random.randrange(len(outside))] += random.choice((-1, 1))
        for vector, member in ((inside, True), (outside, False)):
            assert lattice_membership(vector, collection) is member
            assert lattice.contains(binomial_from_vector(vector, lattice.context)) is member, str(vector)


@pytest.mark.parametrize("rank", [1, 2, 3])
def test_lattice_membership_random(rank: int) -> None:
    for collection in enumerate_collections(EnumerationConfig(rank)):
        _check_random_vectors(collection)


@pytest.mark.slow
def test_lattice_membership_random_rank4() -> None:
    for collection in enumerate_collections(EnumerationConfig(4)):
        _check_random_vectors(collection)


def test_lattice_ideal_cache() -> None:
    lattice_ideal.cache_clear()
    first = lattice_ideal(L_TROMINO)
    assert lattice_ideal(L_TROMINO) is first
    info = lattice_ideal.cache_info()
    assert info.hits == 1 and info.misses == 1
    assert info.maxsize == LATTICE_CACHE_SIZE
