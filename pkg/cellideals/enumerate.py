"""Enumerates weakly connected collections of cells.

Fixed shapes are grown with Redelmeier's method on the king graph, anchored
at their lowest-then-leftmost cell, so every translation class appears once.
A fixed shape stands for its symmetry class when its normalized corners equal
the canonical corners of the class, so no seen-set is needed.
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Iterator, Sequence

from tqdm import tqdm

from cellideals.grid import (
    KING_STEPS,
    SQUARE_TETROMINO,
    X_PENTOMINO,
    CellCollection,
    Vertex,
    canonical_corners,
    contains_pattern,
    is_convex,
    is_polyomino,
    normalize_corners,
)
from cellideals.logging import LOG_STATUS
from cellideals.polyalg.budget import BudgetExceededError

logger = logging.getLogger(__name__)

DEFAULT_MAX_RANK = 8

# Census counts of weakly connected collections up to symmetry, by rank.
KNOWN_COUNTS: dict[int, int] = {1: 1, 2: 2, 3: 5, 4: 22, 5: 94, 6: 524, 7: 3031, 8: 18770}

# Census counts of non-radical collections up to symmetry, by rank.
KNOWN_NONRADICAL_COUNTS: dict[int, int] = {1: 0, 2: 0, 3: 0, 4: 2, 5: 9, 6: 74, 7: 550, 8: 4210}

CollectionFilter = Callable[[CellCollection], bool]


def _is_pattern_free(collection: CellCollection) -> bool:
    return not contains_pattern(collection, SQUARE_TETROMINO) and not contains_pattern(collection, X_PENTOMINO)


def _is_non_radical(collection: CellCollection) -> bool:
    from cellideals.radicality import is_radical

    verdict = is_radical(collection, method="auto", on_budget="unknown")
    if verdict.status == "unknown":
        logger.warning("Radicality undecided for %s; not counted as non-radical", collection)
    return verdict.status == "non-radical"


def _is_radical(collection: CellCollection) -> bool:
    from cellideals.radicality import is_radical

    verdict = is_radical(collection, method="auto", on_budget="unknown")
    if verdict.status == "unknown":
        logger.warning("Radicality undecided for %s; not counted as radical", collection)
    return verdict.status == "radical"


def _is_unmixed(collection: CellCollection) -> bool:
    from cellideals.primes import classify

    return classify(collection).unmixed


FILTERS: dict[str, CollectionFilter] = {
    "convex": is_convex,
    "pattern-free": _is_pattern_free,
    "polyomino": is_polyomino,
    "non-radical": _is_non_radical,
    "radical": _is_radical,
    "unmixed": _is_unmixed,
}


@dataclass(frozen=True)
class EnumerationConfig:
    """Selects the collections to enumerate.

    Parameters:
        rank: Number of cells, at least 1.
        up_to_symmetry: If set, yields one representative per class under
            translations, rotations and reflections; otherwise one per
            translation class.
        filters: Names from ``FILTERS``; a collection must pass all of them.
        max_rank: Ranks above this raise ``BudgetExceededError``.
    """

    rank: int
    up_to_symmetry: bool = True
    filters: Sequence[str] = field(default_factory=tuple)
    max_rank: int = DEFAULT_MAX_RANK

    def __post_init__(self) -> None:
        if self.rank < 1:
            raise ValueError(f"Rank must be at least 1, got {self.rank}")
        unknown = [f for f in self.filters if f not in FILTERS]
        if unknown:
            raise ValueError(f"Unknown filters {unknown}; expected some of {sorted(FILTERS)}")


def _allowed(cell: Vertex) -> bool:
    return cell[1] > 0 or (cell[1] == 0 and cell[0] >= 0)


def fixed_shapes(rank: int) -> Iterator[tuple[Vertex, ...]]:
    """Yields every fixed weakly connected shape of ``rank`` cells exactly once.

    Shapes are lists of lower-left corners whose lowest-then-leftmost cell
    is the origin.
    """
    cells: list[Vertex] = []
    border: set[Vertex] = {(0, 0)}

    def grow(untried: list[Vertex]) -> Iterator[tuple[Vertex, ...]]:
        untried = list(untried)
        while untried:
            cell = untried.pop()
            cells.append(cell)
            if len(cells) == rank:
                yield tuple(cells)
            else:
                fresh = [
                    n
                    for n in ((cell[0] + dx, cell[1] + dy) for dx, dy in KING_STEPS)
                    if _allowed(n) and n not in border
                ]
                border.update(fresh)
                yield from grow(untried + fresh)
                border.difference_update(fresh)
            cells.pop()

    yield from grow([(0, 0)])


def _check_rank(cfg: EnumerationConfig) -> None:
    if cfg.rank > cfg.max_rank:
        raise BudgetExceededError("max_enumeration_rank", cfg.rank, cfg.max_rank)


def enumerate_fixed(rank: int, max_rank: int = DEFAULT_MAX_RANK) -> Iterator[CellCollection]:
    """Yields one translation-normalized collection per fixed shape."""
    yield from enumerate_collections(EnumerationConfig(rank, up_to_symmetry=False, max_rank=max_rank))


def enumerate_collections(cfg: EnumerationConfig) -> Iterator[CellCollection]:
    """Streams the weakly connected collections selected by ``cfg``.

    Args:
        cfg: The enumeration configuration

    Yields:
        Translation-normalized collections, in a deterministic order

    Raises:
        BudgetExceededError: If the rank exceeds the configured maximum
    """
    _check_rank(cfg)
    filters = [FILTERS[name] for name in cfg.filters]
    for shape in fixed_shapes(cfg.rank):
        normal = normalize_corners(shape)
        if cfg.up_to_symmetry and canonical_corners(normal) != normal:
            continue
        collection = CellCollection.from_lower_lefts(normal)
        if all(f(collection) for f in filters):
            yield collection


def count_collections(cfg: EnumerationConfig) -> int:
    return sum(1 for _ in enumerate_collections(cfg))


def census_row(
    rank_max: int,
    filters: Sequence[str] = (),
    max_rank: int = DEFAULT_MAX_RANK,
    progress: bool = False,
) -> dict[int, int]:
    """Counts collections up to symmetry for each rank from 1 to ``rank_max``.

    Args:
        rank_max: The largest rank to count
        filters: Filter names applied to every rank
        max_rank: The enumeration budget
        progress: If set, shows a progress bar per rank

    Returns:
        A mapping from rank to count
    """
    row: dict[int, int] = {}
    for rank in range(1, rank_max + 1):
        cfg = EnumerationConfig(rank, up_to_symmetry=True, filters=tuple(filters), max_rank=max_rank)
        stream = enumerate_collections(cfg)
        if progress:
            stream = tqdm(stream, desc=f"rank {rank}", unit="shape", leave=False)
        row[rank] = sum(1 for _ in stream)
        logger.log(LOG_STATUS, "Rank %d: %d collections", rank, row[rank])
    return row
