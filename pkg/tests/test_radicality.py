"""Tests the radicality verdicts, certificates and the library of non-radical collections."""

import pytest

from cellideals.enumerate import EnumerationConfig, count_collections, enumerate_collections
from cellideals.grid import T_TETROMINO, CellCollection, canonical_form, rectangle, weakly_connected_deletions
from cellideals.ideals import adjacent_minor_ideal
from cellideals.polyalg import intersect_all, radical_membership
from cellideals.primes import min_admissible_height, minimal_primes
from cellideals.radicality import (
    ConfigLibrary,
    ConfigValidationError,
    RadicalVerdict,
    WitnessSchedule,
    discover_minimally_non_radical,
    dt_family,
    dt_witness,
    is_minimally_non_radical,
    is_radical,
    screen_nonradical,
    sqrt_ideal,
    squarefree_certificate,
    validate_dt,
    validate_entry,
    validate_library,
    witness_search,
)
from cellideals.radicality.exact import VERDICT_CACHE_SIZE, _cached_decide
from cellideals.radicality.family import coprime_leading_terms, dt_deletion_order, dt_order, dt_parameter
from cellideals.radicality.library import default_library, format_entries
from cellideals.radicality.witness import QUICK_SCHEDULE, coefficient_vectors

SQUARE = rectangle(2, 2, origin=(1, 1))
L_TROMINO = CellCollection.from_lower_lefts([(1, 1), (2, 1), (1, 2)])
T_SHAPE = T_TETROMINO.cells.shifted(1, 1)


def _assert_certificate(collection: CellCollection, verdict: RadicalVerdict) -> None:
    ideal = adjacent_minor_ideal(collection)
    if verdict.witness is not None:
        assert not ideal.contains(verdict.witness)
        assert ideal.contains(verdict.witness**2)
    else:
        assert verdict.excess is not None
        assert not ideal.contains(verdict.excess)


def test_verdict_invariants() -> None:
    with pytest.raises(ValueError):
        RadicalVerdict("non-radical", "exact")
    with pytest.raises(ValueError):
        RadicalVerdict("radical", "witness")
    assert not RadicalVerdict("unknown", "screen").decided


@pytest.mark.parametrize("rank", [1, 2, 3])
def test_small_ranks_are_radical(rank: int) -> None:
    for collection in enumerate_collections(EnumerationConfig(rank)):
        assert is_radical(collection, "exact").status == "radical"


def test_square_tetromino() -> None:
    assert squarefree_certificate(SQUARE) is None
    verdict = is_radical(SQUARE, "exact")
    assert verdict.status == "non-radical"
    _assert_certificate(SQUARE, verdict)

    ideal = adjacent_minor_ideal(SQUARE)
    radical = sqrt_ideal(SQUARE)
    assert radical.contains_ideal(ideal)
    assert not ideal.contains_ideal(radical)


def test_witness_search() -> None:
    found = witness_search(SQUARE)
    assert found is not None
    ideal = adjacent_minor_ideal(SQUARE)
    assert not ideal.contains(found)
    assert ideal.contains(found**2)
    assert witness_search(L_TROMINO, WitnessSchedule(coefficient_bound=1, multiplier_degree=2)) is None
    assert is_radical(L_TROMINO, "witness").status == "unknown"


def test_coefficient_vectors() -> None:
    vectors = list(coefficient_vectors(2, 1))
    assert vectors == [(0, 1), (1, 0), (1, -1), (1, 1)]
    assert all(next(v for v in vector if v) > 0 for vector in coefficient_vectors(3, 2))


def test_squarefree_certificate() -> None:
    assert squarefree_certificate(rectangle(3, 1)) is not None
    assert squarefree_certificate(CellCollection()) is not None


def test_vertex_disjoint_split() -> None:
    union = SQUARE.union(rectangle(1, 1, origin=(10, 10)))
    verdict = is_radical(union, "exact")
    assert verdict.status == "non-radical"
    _assert_certificate(union, verdict)

    apart = rectangle(1, 1).union(rectangle(1, 1, origin=(5, 5)))
    assert is_radical(apart, "exact").status == "radical"


def test_screen() -> None:
    extended = SQUARE.union(rectangle(1, 1, origin=(3, 1)))
    assert screen_nonradical(extended) == SQUARE
    verdict = is_radical(extended, "screen")
    assert verdict.status == "non-radical"
    assert verdict.subconfiguration == SQUARE
    assert screen_nonradical(L_TROMINO) is None
    assert is_radical(L_TROMINO, "screen").status == "unknown"
    assert is_radical(L_TROMINO).status == "radical"
    with pytest.raises(ValueError):
        is_radical(L_TROMINO, "guess")  # type: ignore[arg-type]


def test_minimally_non_radical() -> None:
    assert is_minimally_non_radical(SQUARE)
    assert is_minimally_non_radical(T_SHAPE)
    assert not is_minimally_non_radical(L_TROMINO)
    assert not is_minimally_non_radical(SQUARE.union(rectangle(1, 1, origin=(3, 1))))


def test_dt_family() -> None:
    with pytest.raises(ValueError):
        dt_family(1)
    for t in (2, 3, 4):
        collection = dt_family(t)
        assert len(collection) == t + 4
        assert dt_parameter(collection) == t
        assert min_admissible_height(collection)[0] == t + 4
    assert dt_parameter(SQUARE) is None


def test_dt_deletions_have_coprime_leads() -> None:
    collection = dt_family(2)
    cells = {"A": (3, 3), "B": (4, 2), "E": (1, 2), "D0": (1, 1)}
    orders = {"A": dt_order(2), "B": dt_order(2), "E": dt_deletion_order(2), "D0": dt_deletion_order(2)}
    for name, order in orders.items():
        smaller = CellCollection(frozenset(c for c in collection if c.lower_left != cells[name]))
        assert coprime_leading_terms(smaller, order), name
    assert not coprime_leading_terms(collection, dt_order(2))


def test_validate_d2() -> None:
    check = validate_dt(2)
    assert check.minor_pairs
    assert check.basis_matches
    assert check.witness_outside and check.witness_square_inside
    assert set(check.deletions) == {"A", "B", "E", "D0"}
    assert check.ok
    ideal = adjacent_minor_ideal(dt_family(2))
    assert not ideal.contains(dt_witness(2))


@pytest.mark.slow
@pytest.mark.parametrize("t", [3, 4])
def test_validate_dt(t: int) -> None:
    assert validate_dt(t).ok


def test_library() -> None:
    library = default_library()
    assert [e.name for e in library] == ["square-tetromino", "t-tetromino", "d2", "d3", "d4"]
    assert len(library.by_rank(4)) == 2
    assert library.by_rank(6)[0].collection == dt_family(2)
    for bad in ("no separator", "x: {{{1,1},{3,3}}}", "x: {}", "x: {{{1,1},{2,2}}}\nx: {{{0,0},{1,1}}}"):
        with pytest.raises(ConfigValidationError):
            ConfigLibrary.from_text(bad)


@pytest.mark.slow
def test_validate_library() -> None:
    library = ConfigLibrary(tuple(e for e in default_library() if e.rank <= 6))
    results = validate_library(library, strict=True)
    assert [r.name for r in results] == ["square-tetromino", "t-tetromino", "d2"]
    assert all(r.ok for r in results)


def test_discover_rank4() -> None:
    found = discover_minimally_non_radical(4)
    assert set(found) == {canonical_form(SQUARE), canonical_form(T_SHAPE)}


@pytest.mark.slow
def test_nonradical_census_rank5() -> None:
    assert count_collections(EnumerationConfig(5, filters=("non-radical",))) == 9


@pytest.mark.slow
@pytest.mark.parametrize("name", ["d3", "d4"])
def test_validate_large_entries(name: str) -> None:
    (entry,) = [e for e in default_library() if e.name == name]
    result = validate_entry(entry)
    assert result.non_radical
    assert result.method == "family witness"
    assert set(result.deletions) == {str(c.lower_left) for c in weakly_connected_deletions(entry.collection)}
    assert result.ok


def _check_soundness(rank: int) -> int:
    confirmed = 0
    for collection in enumerate_collections(EnumerationConfig(rank)):
        screened = is_radical(collection, "screen").status == "non-radical"
        found = witness_search(collection, QUICK_SCHEDULE)
        if found is not None:
            ideal = adjacent_minor_ideal(collection)
            assert not ideal.contains(found) and ideal.contains(found**2)
        if screened or found is not None:
            assert is_radical(collection, "exact").status == "non-radical", str(collection)
            confirmed += 1
    return confirmed


def test_screen_and_witness_are_sound_rank4() -> None:
    assert _check_soundness(4) == 2


@pytest.mark.slow
def test_screen_and_witness_are_sound_rank5() -> None:
    assert _check_soundness(5) > 0


@pytest.mark.parametrize("collection", [SQUARE, T_SHAPE, L_TROMINO])
def test_sqrt_ideal_is_idempotent(collection: CellCollection) -> None:
    radical = sqrt_ideal(collection)
    primes = [p.ideal for p in minimal_primes(collection)]
    assert all(p.contains_ideal(radical) for p in primes)
    assert intersect_all(primes).equals(radical)
    verdict = is_radical(collection, "exact")
    if verdict.witness is not None:
        assert radical.contains(verdict.witness)
        assert radical_membership(verdict.witness, adjacent_minor_ideal(collection))


def test_exact_verdicts_are_cached() -> None:
    _cached_decide.cache_clear()
    first = is_radical(SQUARE, "exact")
    assert is_radical(SQUARE, "exact") is first
    info = _cached_decide.cache_info()
    assert info.hits >= 1
    assert info.maxsize == VERDICT_CACHE_SIZE


def test_format_entries() -> None:
    library = default_library()
    text = format_entries([SQUARE, T_SHAPE, L_TROMINO, L_TROMINO.shifted(3, 3)], 4, library)
    assert text.splitlines() == [
        "# Minimally non-radical collections of rank 4.",
        "rank4-1: {{{1,1},{2,2}},{{2,1},{3,2}},{{1,2},{2,3}}}",
    ]
    (entry,) = ConfigLibrary.from_text(text).entries
    assert entry.name == "rank4-1"
    assert entry.collection == L_TROMINO


@pytest.mark.slow
def test_no_minimally_non_radical_rank5() -> None:
    assert discover_minimally_non_radical(5) == []
