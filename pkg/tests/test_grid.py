"""Tests cells, collections and their geometry."""

import pytest

from cellideals.grid import (
    SQUARE_TETROMINO,
    T_TETROMINO,
    X_PENTOMINO,
    Cell,
    CellCollection,
    bounding_box,
    build_collection,
    canonical_form,
    collections_in_window,
    connected_components,
    contains_pattern,
    dihedral_images,
    embeddings,
    inner_intervals,
    is_convex,
    is_parallelogram,
    is_parallelogram_path,
    is_polyomino,
    is_weakly_connected,
    orbit_size,
    rectangle,
    remove_cell,
    vertex_disjoint_split,
    weakly_connected_deletions,
)

L_TROMINO = CellCollection.from_lower_lefts([(1, 1), (2, 1), (1, 2)])
U_PENTOMINO = CellCollection.from_lower_lefts([(1, 1), (1, 2), (2, 1), (3, 1), (3, 2)])


def test_cell_corners() -> None:
    cell = Cell.at(1, 1)
    assert (cell.a, cell.b, cell.c, cell.d) == ((1, 1), (2, 2), (1, 2), (2, 1))
    assert cell.diagonal == ((1, 1), (2, 2))
    assert cell.anti_diagonal == ((1, 2), (2, 1))
    assert frozenset({(1, 1), (2, 1)}) in cell.edges
    assert frozenset({(1, 1), (2, 2)}) not in cell.edges


def test_vertices_and_box() -> None:
    assert len(L_TROMINO.vertices) == 8
    assert bounding_box(L_TROMINO) == ((1, 1), (3, 3))
    assert not CellCollection()
    assert CellCollection().vertices == frozenset()
    with pytest.raises(ValueError):
        bounding_box(CellCollection())


def test_build_collection_merges_duplicates() -> None:
    collection, merged = build_collection([(0, 0), (1, 0), (0, 0)])
    assert len(collection) == 2
    assert merged == 1


def test_connectivity() -> None:
    diagonal = CellCollection.from_lower_lefts([(0, 0), (1, 1)])
    apart = CellCollection.from_lower_lefts([(0, 0), (2, 0)])
    assert is_weakly_connected(diagonal)
    assert not is_polyomino(diagonal)
    assert len(connected_components(diagonal)) == 2
    assert not is_weakly_connected(apart)
    assert len(vertex_disjoint_split(apart)) == 2
    assert len(vertex_disjoint_split(diagonal)) == 1
    assert is_polyomino(L_TROMINO)


def test_convexity() -> None:
    assert is_convex(L_TROMINO)
    assert is_convex(rectangle(3, 2))
    assert not is_convex(U_PENTOMINO)


def test_symmetry() -> None:
    rotated = L_TROMINO.transformed((0, -1, 1, 0))
    assert canonical_form(rotated) == canonical_form(L_TROMINO)
    assert len(dihedral_images(rectangle(2, 2))) == 1
    assert orbit_size(L_TROMINO) == 4
    assert orbit_size(T_TETROMINO.cells) == 4
    assert len(T_TETROMINO.images) == 4


def test_patterns() -> None:
    assert len(embeddings(rectangle(3, 2), SQUARE_TETROMINO)) == 2
    assert contains_pattern(rectangle(3, 3), X_PENTOMINO)
    assert not contains_pattern(U_PENTOMINO, SQUARE_TETROMINO)
    assert not contains_pattern(U_PENTOMINO, X_PENTOMINO)
    flipped = CellCollection.from_lower_lefts([(1, 0), (0, 1), (1, 1), (2, 1)])
    assert contains_pattern(flipped, T_TETROMINO)


def test_inner_intervals() -> None:
    assert len(inner_intervals(rectangle(2, 2))) == 9
    assert len(inner_intervals(L_TROMINO)) == 5
    assert ((1, 1), (3, 2)) in inner_intervals(L_TROMINO)


def test_parallelograms() -> None:
    s_tetromino = CellCollection.from_lower_lefts([(0, 0), (1, 0), (1, 1), (2, 1)])
    assert is_parallelogram(s_tetromino)
    assert is_parallelogram_path(s_tetromino)
    assert not is_parallelogram(T_TETROMINO.cells)
    assert is_parallelogram(rectangle(2, 2))
    assert not is_parallelogram_path(rectangle(2, 2))


def test_deletions() -> None:
    line = CellCollection.from_lower_lefts([(0, 0), (1, 0), (2, 0)])
    assert weakly_connected_deletions(line) == [Cell.at(0, 0), Cell.at(2, 0)]
    assert remove_cell(line, Cell.at(1, 0)) == CellCollection.from_lower_lefts([(0, 0), (2, 0)])
    with pytest.raises(ValueError):
        remove_cell(line, Cell.at(5, 5))


def test_window() -> None:
    assert sum(1 for _ in collections_in_window(3, 2)) == 36
