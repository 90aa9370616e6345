"""Tests the enumeration of weakly connected collections."""

import pytest

from cellideals.enumerate import (
    KNOWN_COUNTS,
    EnumerationConfig,
    census_row,
    count_collections,
    enumerate_collections,
    enumerate_fixed,
)
from cellideals.grid import canonical_form, collections_in_window, is_convex, is_weakly_connected, orbit_size
from cellideals.polyalg.budget import BudgetExceededError

FIXED_COUNTS = {1: 1, 2: 4, 3: 20, 4: 110, 5: 638}


def test_small_census() -> None:
    assert census_row(5) == {r: KNOWN_COUNTS[r] for r in range(1, 6)}


@pytest.mark.slow
@pytest.mark.parametrize("rank", [6, 7])
def test_large_census(rank: int) -> None:
    assert count_collections(EnumerationConfig(rank)) == KNOWN_COUNTS[rank]


@pytest.mark.parametrize("rank", [1, 2, 3, 4, 5])
def test_fixed_counts(rank: int) -> None:
    shapes = list(enumerate_fixed(rank))
    assert len(shapes) == FIXED_COUNTS[rank]
    assert len({s.lower_lefts for s in shapes}) == len(shapes)


@pytest.mark.parametrize("rank", [1, 2, 3, 4, 5])
def test_orbit_stabilizer(rank: int) -> None:
    free = list(enumerate_collections(EnumerationConfig(rank)))
    assert sum(orbit_size(c) for c in free) == FIXED_COUNTS[rank]


@pytest.mark.parametrize("rank", [1, 2, 3, 4])
def test_brute_force(rank: int) -> None:
    classes = {canonical_form(c) for c in collections_in_window(rank, rank) if is_weakly_connected(c)}
    found = set(enumerate_collections(EnumerationConfig(rank)))
    assert found == classes


def test_outputs_are_canonical() -> None:
    for collection in enumerate_collections(EnumerationConfig(4)):
        assert canonical_form(collection) == collection
        assert is_weakly_connected(collection)


def test_filters() -> None:
    convex = list(enumerate_collections(EnumerationConfig(4, filters=("convex",))))
    assert convex and all(is_convex(c) for c in convex)
    polyominoes = count_collections(EnumerationConfig(4, filters=("polyomino",)))
    assert polyominoes == 5
    pattern_free = count_collections(EnumerationConfig(4, filters=("pattern-free",)))
    assert pattern_free == KNOWN_COUNTS[4] - 1


def test_non_radical_filter() -> None:
    assert count_collections(EnumerationConfig(4, filters=("non-radical",))) == 2


def test_config_errors() -> None:
    with pytest.raises(ValueError):
        EnumerationConfig(0)
    with pytest.raises(ValueError):
        EnumerationConfig(3, filters=("bogus",))
    with pytest.raises(BudgetExceededError):
        list(enumerate_collections(EnumerationConfig(9)))
