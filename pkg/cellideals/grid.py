"""Defines cells, collections of cells and their geometry.

A cell is the unit square with lower-left corner ``(i, j)``. Its corners are
``a = (i, j)``, ``b = (i + 1, j + 1)``, ``c = (i, j + 1)`` and
``d = (i + 1, j)``; ``a, b`` are the diagonal corners and ``c, d`` the
anti-diagonal ones. Cells are ordered by ``(y, x)`` of their lower-left corner
throughout, which fixes the canonical form and the text encoding.
"""

import functools
import itertools
import logging
from dataclasses import dataclass
from typing import Iterable, Iterator, Literal

import networkx as nx

logger = logging.getLogger(__name__)

Vertex = tuple[int, int]
Edge = frozenset[Vertex]

SymmetryMode = Literal["translation", "translation+D4"]

# The symmetries of the square as integer matrices (a, b, c, d) acting by
# (x, y) -> (a x + b y, c x + d y).
DIHEDRAL_MAPS: tuple[tuple[int, int, int, int], ...] = (
    (1, 0, 0, 1),
    (0, -1, 1, 0),
    (-1, 0, 0, -1),
    (0, 1, -1, 0),
    (-1, 0, 0, 1),
    (1, 0, 0, -1),
    (0, 1, 1, 0),
    (0, -1, -1, 0),
)

KING_STEPS: tuple[Vertex, ...] = tuple((dx, dy) for dx in (-1, 0, 1) for dy in (-1, 0, 1) if (dx, dy) != (0, 0))
EDGE_STEPS: tuple[Vertex, ...] = ((1, 0), (-1, 0), (0, 1), (0, -1))


@dataclass(frozen=True)
class Cell:
    lower_left: Vertex

    @classmethod
    def at(cls, i: int, j: int) -> "Cell":
        return cls((i, j))

    @property
    def sort_key(self) -> tuple[int, int]:
        return (self.lower_left[1], self.lower_left[0])

    def __lt__(self, other: "Cell") -> bool:
        return self.sort_key < other.sort_key

    @property
    def a(self) -> Vertex:
        return self.lower_left

    @property
    def b(self) -> Vertex:
        return (self.lower_left[0] + 1, self.lower_left[1] + 1)

    @property
    def c(self) -> Vertex:
        return (self.lower_left[0], self.lower_left[1] + 1)

    @property
    def d(self) -> Vertex:
        return (self.lower_left[0] + 1, self.lower_left[1])

    @property
    def vertices(self) -> tuple[Vertex, Vertex, Vertex, Vertex]:
        return (self.a, self.b, self.c, self.d)

    @property
    def edges(self) -> tuple[Edge, Edge, Edge, Edge]:
        return (
            frozenset((self.a, self.c)),
            frozenset((self.c, self.b)),
            frozenset((self.b, self.d)),
            frozenset((self.a, self.d)),
        )

    @property
    def diagonal(self) -> tuple[Vertex, Vertex]:
        return (self.a, self.b)

    @property
    def anti_diagonal(self) -> tuple[Vertex, Vertex]:
        return (self.c, self.d)

    def shifted(self, dx: int, dy: int) -> "Cell":
        return Cell((self.lower_left[0] + dx, self.lower_left[1] + dy))

    def transformed(self, matrix: tuple[int, int, int, int]) -> "Cell":
        # Maps the doubled center, which stays on odd coordinates.
        a, b, c, d = matrix
        x, y = 2 * self.lower_left[0] + 1, 2 * self.lower_left[1] + 1
        return Cell(((a * x + b * y - 1) // 2, (c * x + d * y - 1) // 2))

    def __str__(self) -> str:
        return f"[{self.a}, {self.b}]"


@dataclass(frozen=True)
class CellCollection:
    """A finite, possibly empty, set of cells.

    Parameters:
        cells: The member cells.
    """

    cells: frozenset[Cell] = frozenset()

    @classmethod
    def from_lower_lefts(cls, corners: Iterable[Vertex]) -> "CellCollection":
        return cls(frozenset(Cell((int(i), int(j))) for i, j in corners))

    def __len__(self) -> int:
        return len(self.cells)

    def __iter__(self) -> Iterator[Cell]:
        return iter(self.sorted_cells)

    def __contains__(self, cell: object) -> bool:
        return cell in self.cells

    def __bool__(self) -> bool:
        return bool(self.cells)

    @property
    def rank(self) -> int:
        return len(self.cells)

    @functools.cached_property
    def sorted_cells(self) -> tuple[Cell, ...]:
        return tuple(sorted(self.cells, key=lambda c: c.sort_key))

    @functools.cached_property
    def lower_lefts(self) -> tuple[Vertex, ...]:
        return tuple(c.lower_left for c in self.sorted_cells)

    @functools.cached_property
    def vertices(self) -> frozenset[Vertex]:
        return frozenset(v for c in self.cells for v in c.vertices)

    @functools.cached_property
    def edges(self) -> frozenset[Edge]:
        return frozenset(e for c in self.cells for e in c.edges)

    def shifted(self, dx: int, dy: int) -> "CellCollection":
        return CellCollection(frozenset(c.shifted(dx, dy) for c in self.cells))

    def transformed(self, matrix: tuple[int, int, int, int]) -> "CellCollection":
        return CellCollection(frozenset(c.transformed(matrix) for c in self.cells))

    def normalized(self) -> "CellCollection":
        """Translates the collection so its lower-left corners start at x = 0 and y = 0."""
        if not self.cells:
            return self
        min_x = min(c.lower_left[0] for c in self.cells)
        min_y = min(c.lower_left[1] for c in self.cells)
        return self.shifted(-min_x, -min_y)

    def union(self, other: "CellCollection") -> "CellCollection":
        return CellCollection(self.cells | other.cells)

    def without(self, cell: Cell) -> "CellCollection":
        return CellCollection(self.cells - {cell})

    def __str__(self) -> str:
        return "{" + ", ".join(str(c.lower_left) for c in self.sorted_cells) + "}"


EMPTY = CellCollection()


def build_collection(corners: Iterable[Vertex]) -> tuple[CellCollection, int]:
    """Builds a collection from lower-left corners.

    Args:
        corners: Lower-left corners; duplicates are merged

    Returns:
        The collection and the number of merged duplicates
    """
    corners = [(int(i), int(j)) for i, j in corners]
    collection = CellCollection.from_lower_lefts(corners)
    merged = len(corners) - len(collection)
    if merged:
        logger.debug("Merged %d duplicate cells", merged)
    return collection, merged


def cell_graph(collection: CellCollection, weak: bool = True) -> nx.Graph:
    """Cells as nodes, joined when they share a vertex (``weak``) or an edge."""
    graph = nx.Graph()
    graph.add_nodes_from(collection.cells)
    steps = KING_STEPS if weak else EDGE_STEPS
    for cell in collection.cells:
        for dx, dy in steps:
            other = cell.shifted(dx, dy)
            if other in collection.cells:
                graph.add_edge(cell, other)
    return graph


def _sorted_parts(parts: Iterable[Iterable[Cell]]) -> list[CellCollection]:
    collections = [CellCollection(frozenset(p)) for p in parts]
    return sorted(collections, key=lambda c: c.sorted_cells[0].sort_key)


def is_weakly_connected(collection: CellCollection) -> bool:
    if len(collection) <= 1:
        return True
    return nx.is_connected(cell_graph(collection, weak=True))


def connected_components(collection: CellCollection) -> list[CellCollection]:
    """Edge-connected components, ordered by their first cell."""
    return _sorted_parts(nx.connected_components(cell_graph(collection, weak=False)))


def vertex_disjoint_split(collection: CellCollection) -> list[CellCollection]:
    """Finest partition into parts with pairwise disjoint vertex sets.

    Two cells share a vertex exactly when they are king-graph neighbours, so
    the parts are the weakly connected components.
    """
    return _sorted_parts(nx.connected_components(cell_graph(collection, weak=True)))


def is_polyomino(collection: CellCollection) -> bool:
    return len(connected_components(collection)) <= 1


def _runs_contiguous(groups: dict[int, list[int]]) -> bool:
    return all(max(values) - min(values) + 1 == len(values) for values in groups.values())


def is_convex(collection: CellCollection) -> bool:
    """Row and column convexity of the cells."""
    rows: dict[int, list[int]] = {}
    columns: dict[int, list[int]] = {}
    for i, j in collection.lower_lefts:
        rows.setdefault(j, []).append(i)
        columns.setdefault(i, []).append(j)
    return _runs_contiguous(rows) and _runs_contiguous(columns)


def bounding_box(collection: CellCollection) -> tuple[Vertex, Vertex]:
    """The minimal interval ``[a, b]`` containing ``V(C)``."""
    if not collection:
        raise ValueError("The empty collection has no bounding box")
    xs = [v[0] for v in collection.vertices]
    ys = [v[1] for v in collection.vertices]
    return (min(xs), min(ys)), (max(xs), max(ys))


def interval_cells(lower: Vertex, upper: Vertex) -> list[Cell]:
    """The cells of the interval ``[lower, upper]``."""
    if not (lower[0] < upper[0] and lower[1] < upper[1]):
        raise ValueError(f"Invalid interval [{lower}, {upper}]")
    return [Cell((i, j)) for j in range(lower[1], upper[1]) for i in range(lower[0], upper[0])]


def inner_intervals(collection: CellCollection) -> list[tuple[Vertex, Vertex]]:
    """Every interval ``[a, b]`` whose cells all belong to the collection.

    Intervals grow from each cell as lower-left corner, so the search stops
    in a direction as soon as a missing cell is met.
    """
    intervals: list[tuple[Vertex, Vertex]] = []
    for cell in collection.sorted_cells:
        i, j = cell.lower_left
        width_limit: int | None = None
        height = 0
        while Cell((i, j + height)) in collection.cells:
            width = 0
            while (width_limit is None or width < width_limit) and Cell((i + width, j + height)) in collection.cells:
                width += 1
                intervals.append(((i, j), (i + width, j + height + 1)))
            width_limit = width
            height += 1
    return sorted(intervals, key=lambda iv: (iv[0][1], iv[0][0], iv[1][1], iv[1][0]))


@dataclass(frozen=True)
class Pattern:
    """A reference collection matched up to translation, optionally up to D4.

    Parameters:
        name: A short name used in reports.
        cells: The reference collection, translation-normalized.
        symmetry_mode: Either ``translation`` or ``translation+D4``.
    """

    name: str
    cells: CellCollection
    symmetry_mode: SymmetryMode = "translation+D4"

    def __post_init__(self) -> None:
        if self.cells != self.cells.normalized():
            raise ValueError(f"Pattern {self.name!r} must be translation-normalized")

    @functools.cached_property
    def images(self) -> tuple[CellCollection, ...]:
        if self.symmetry_mode == "translation":
            return (self.cells,)
        return tuple(dihedral_images(self.cells))


def dihedral_images(collection: CellCollection) -> list[CellCollection]:
    """The distinct translation-normalized images under the 8 symmetries of the square."""
    images: dict[tuple[Vertex, ...], CellCollection] = {}
    for matrix in DIHEDRAL_MAPS:
        image = collection.transformed(matrix).normalized()
        images.setdefault(image.lower_lefts, image)
    return list(images.values())


def normalize_corners(corners: Iterable[Vertex]) -> tuple[Vertex, ...]:
    """Translation-normalized lower-left corners, sorted by ``(y, x)``."""
    corners = list(corners)
    if not corners:
        return ()
    min_x = min(i for i, _ in corners)
    min_y = min(j for _, j in corners)
    return tuple(sorted(((i - min_x, j - min_y) for i, j in corners), key=lambda v: (v[1], v[0])))


def canonical_corners(corners: Iterable[Vertex]) -> tuple[Vertex, ...]:
    """Corners of the canonical form, working on bare coordinates."""
    corners = list(corners)
    best: tuple[Vertex, ...] = ()
    best_key: list[Vertex] | None = None
    for a, b, c, d in DIHEDRAL_MAPS:
        image = []
        for i, j in corners:
            x, y = 2 * i + 1, 2 * j + 1
            image.append(((a * x + b * y - 1) // 2, (c * x + d * y - 1) // 2))
        normal = normalize_corners(image)
        key = [(v[1], v[0]) for v in normal]
        if best_key is None or key < best_key:
            best, best_key = normal, key
    return best


def canonical_form(collection: CellCollection) -> CellCollection:
    """The least translation-normalized dihedral image, comparing ``(y, x)`` cell lists."""
    if not collection:
        return collection
    return CellCollection.from_lower_lefts(canonical_corners(collection.lower_lefts))


def orbit_size(collection: CellCollection) -> int:
    """Number of distinct fixed shapes in the symmetry class, ``8 / |stabilizer|``."""
    return len(dihedral_images(collection))


def embeddings(collection: CellCollection, pattern: Pattern) -> list[frozenset[Cell]]:
    """Every distinct cell subset of ``collection`` that is a placed copy of ``pattern``."""
    if not pattern.cells:
        return []
    found: set[frozenset[Cell]] = set()
    for image in pattern.images:
        anchor = image.sorted_cells[0]
        for cell in collection.cells:
            dx = cell.lower_left[0] - anchor.lower_left[0]
            dy = cell.lower_left[1] - anchor.lower_left[1]
            placed = frozenset(c.shifted(dx, dy) for c in image.cells)
            if placed <= collection.cells:
                found.add(placed)
    return sorted(found, key=lambda s: sorted(c.sort_key for c in s))


def contains_pattern(collection: CellCollection, pattern: Pattern) -> bool:
    return bool(embeddings(collection, pattern))


def remove_cell(collection: CellCollection, cell: Cell) -> CellCollection:
    if cell not in collection.cells:
        raise ValueError(f"Cell {cell} is not in the collection")
    return collection.without(cell)


def weakly_connected_deletions(collection: CellCollection) -> list[Cell]:
    """Cells whose removal leaves a weakly connected collection."""
    return [c for c in collection.sorted_cells if is_weakly_connected(collection.without(c))]


def is_parallelogram(collection: CellCollection) -> bool:
    """A convex polyomino whose vertices include both diagonal, or both anti-diagonal, bounding-box corners."""
    if not collection or not is_polyomino(collection) or not is_convex(collection):
        return False
    (x0, y0), (x1, y1) = bounding_box(collection)
    vertices = collection.vertices
    diagonal = (x0, y0) in vertices and (x1, y1) in vertices
    anti_diagonal = (x0, y1) in vertices and (x1, y0) in vertices
    return diagonal or anti_diagonal


def is_parallelogram_path(collection: CellCollection) -> bool:
    return is_parallelogram(collection) and not contains_pattern(collection, SQUARE_TETROMINO)


def rectangle(width: int, height: int, origin: Vertex = (0, 0)) -> CellCollection:
    upper = (origin[0] + width, origin[1] + height)
    return CellCollection(frozenset(interval_cells(origin, upper)))


def collections_in_window(size: int, rank: int) -> Iterator[CellCollection]:
    """All rank-``rank`` subsets of a ``size`` by ``size`` window of cells."""
    window = [(i, j) for j in range(size) for i in range(size)]
    for corners in itertools.combinations(window, rank):
        yield CellCollection.from_lower_lefts(corners)


SQUARE_TETROMINO = Pattern("square-tetromino", rectangle(2, 2), "translation")
X_PENTOMINO = Pattern(
    "x-pentomino",
    CellCollection.from_lower_lefts([(1, 0), (0, 1), (1, 1), (2, 1), (1, 2)]),
    "translation",
)
T_TETROMINO = Pattern("t-tetromino", CellCollection.from_lower_lefts([(0, 0), (1, 0), (2, 0), (1, 1)]))
