"""Admissible sets, prime candidates, minimal primes and unmixedness.

Every minimal prime of the adjacent-minor ideal is some ``P_W`` with ``W``
admissible, ``ht P_W = |W| + |C_W|`` and ``P_∅ = L_C`` is a minimal prime of
height ``|C|``. By Krull's bound no minimal prime is higher than ``|C|``, so
the ideal is unmixed exactly when no admissible set has height below ``|C|``.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Iterator

from sympy.polys.rings import PolyElement

from cellideals.grid import (
    EDGE_STEPS,
    SQUARE_TETROMINO,
    T_TETROMINO,
    X_PENTOMINO,
    Cell,
    CellCollection,
    Vertex,
    contains_pattern,
    embeddings,
    is_convex,
)
from cellideals.ideals import inner_equals_lattice, lattice_ideal, sorted_vertices, vertex_variables
from cellideals.polyalg.budget import Budget, BudgetExceededError
from cellideals.polyalg.groebner import DEFAULT_BUDGET
from cellideals.polyalg.ideal import Ideal
from cellideals.polyalg.orders import VariableContext, convert, variable_name

logger = logging.getLogger(__name__)

DEFAULT_MAX_RANK = 6


class PredicateNotApplicableError(ValueError):
    """Raised when a predicate is asked about a collection outside its domain."""


@dataclass(frozen=True)
class AdmissibleSet:
    """A vertex set meeting every cell in nothing or in at least one edge.

    Parameters:
        vertices: The set ``W``.
        residual: The cells disjoint from ``W``.
    """

    vertices: frozenset[Vertex]
    residual: CellCollection

    @property
    def height(self) -> int:
        return len(self.vertices) + len(self.residual)

    @property
    def sorted_vertices(self) -> tuple[Vertex, ...]:
        return tuple(sorted(self.vertices))

    @property
    def tie_key(self) -> tuple[int, int, tuple[Vertex, ...]]:
        return (self.height, len(self.vertices), self.sorted_vertices)


def residual_collection(collection: CellCollection, vertices: frozenset[Vertex] | set[Vertex]) -> CellCollection:
    return CellCollection(frozenset(c for c in collection.cells if not any(v in vertices for v in c.vertices)))


def _meets_properly(cell: Cell, vertices: frozenset[Vertex] | set[Vertex]) -> bool:
    if not any(v in vertices for v in cell.vertices):
        return True
    return any(edge <= vertices for edge in cell.edges)


def is_admissible(collection: CellCollection, vertices: frozenset[Vertex] | set[Vertex]) -> bool:
    """Checks every cell meets ``W`` in nothing or in a full edge; diagonals never count.

    Raises:
        ValueError: If ``W`` is not a subset of ``V(C)``
    """
    outside = set(vertices) - collection.vertices
    if outside:
        raise ValueError(f"Vertices {sorted(outside)} are not vertices of the collection")
    return all(_meets_properly(cell, vertices) for cell in collection.cells)


def admissible_set(collection: CellCollection, vertices: frozenset[Vertex] | set[Vertex]) -> AdmissibleSet:
    if not is_admissible(collection, vertices):
        raise ValueError(f"{sorted(vertices)} is not an admissible set")
    return AdmissibleSet(frozenset(vertices), residual_collection(collection, vertices))


class _AdmissibleSearch:
    """Depth-first search over vertices in ``(y, x)`` order, excluding before including.

    A cell is checked as soon as its last vertex is decided. The partial
    height ``|W| + (finished cells disjoint from W)`` never decreases along a
    branch, so it bounds every completion from below.
    """

    def __init__(self, collection: CellCollection) -> None:
        self.collection = collection
        self.vertices = sorted_vertices(collection.vertices)
        position = {v: k for k, v in enumerate(self.vertices)}
        self.finished: list[list[Cell]] = [[] for _ in self.vertices]
        self.last: dict[Cell, int] = {}
        for cell in collection.sorted_cells:
            k = max(position[v] for v in cell.vertices)
            self.finished[k].append(cell)
            self.last[cell] = k
        self.chosen: set[Vertex] = set()

    def step(self, k: int) -> tuple[bool, int]:
        disjoint = 0
        for cell in self.finished[k]:
            hits = sum(v in self.chosen for v in cell.vertices)
            if not hits:
                disjoint += 1
            elif not any(edge <= self.chosen for edge in cell.edges):
                return False, 0
        return True, disjoint

    def pending_bound(self, k: int) -> int:
        # Each new vertex lies in at most four cells; an untouched open cell
        # needs two incidences or its own residual slot, a deficient one needs one.
        untouched = deficient = 0
        for cell, last in self.last.items():
            if last <= k:
                continue
            hits = sum(v in self.chosen for v in cell.vertices)
            if not hits:
                untouched += 1
            elif not any(edge <= self.chosen for edge in cell.edges):
                deficient += 1
        return math.ceil((deficient + 2 * untouched) / 4)

    def search(self, limit: int | None) -> Iterator[tuple[frozenset[Vertex], int]]:
        """Yields ``(W, height)`` for every admissible ``W`` with height at most ``limit``."""
        n = len(self.vertices)

        def visit(k: int, residual: int) -> Iterator[tuple[frozenset[Vertex], int]]:
            if k == n:
                yield frozenset(self.chosen), len(self.chosen) + residual
                return
            vertex = self.vertices[k]
            for include in (False, True):
                if include:
                    self.chosen.add(vertex)
                ok, disjoint = self.step(k)
                if ok:
                    bound = len(self.chosen) + residual + disjoint
                    if limit is None or bound <= limit:
                        yield from visit(k + 1, residual + disjoint)
                if include:
                    self.chosen.discard(vertex)

        yield from visit(0, 0)


def enumerate_admissible_sets(collection: CellCollection, max_height: int | None = None) -> Iterator[AdmissibleSet]:
    """Yields every admissible set exactly once, the empty set first.

    Args:
        collection: The collection of cells
        max_height: If given, only sets of height at most this are yielded,
            and branches that cannot stay below it are pruned

    Yields:
        Admissible sets in search order
    """
    for vertices, _ in _AdmissibleSearch(collection).search(max_height):
        yield AdmissibleSet(vertices, residual_collection(collection, vertices))


def min_admissible_height(collection: CellCollection) -> tuple[int, AdmissibleSet]:
    """Branch and bound for the least ``|W| + |C_W|``.

    Ties are broken by ``(|W|, sorted W)``, so the certificate is reproducible.
    """
    best = AdmissibleSet(frozenset(), collection)
    search = _AdmissibleSearch(collection)

    def improves(vertices: frozenset[Vertex], height: int) -> bool:
        key = (height, len(vertices), tuple(sorted(vertices)))
        return key < best.tie_key

    n = len(search.vertices)

    def visit(k: int, residual: int) -> None:
        nonlocal best
        if k == n:
            vertices = frozenset(search.chosen)
            height = len(vertices) + residual
            if improves(vertices, height):
                best = AdmissibleSet(vertices, residual_collection(collection, vertices))
            return
        vertex = search.vertices[k]
        for include in (False, True):
            if include:
                search.chosen.add(vertex)
            ok, disjoint = search.step(k)
            if ok:
                bound = len(search.chosen) + residual + disjoint + search.pending_bound(k)
                if bound <= best.height:
                    visit(k + 1, residual + disjoint)
            if include:
                search.chosen.discard(vertex)

    visit(0, 0)
    return best.height, best


@dataclass
class PrimeCandidate:
    """The prime ``P_W = (x_w : w in W) + L_{C_W}`` in the ring of ``C``.

    Parameters:
        admissible: The admissible set ``W`` with its residual collection.
        ideal: The ideal over the variables of ``C``.
    """

    admissible: AdmissibleSet
    ideal: Ideal

    @property
    def height(self) -> int:
        return self.admissible.height

    @property
    def vertices(self) -> frozenset[Vertex]:
        return self.admissible.vertices

    @property
    def variable_names(self) -> list[str]:
        return [variable_name(v) for v in sorted(self.admissible.vertices)]


def _lattice_part(
    admissible: AdmissibleSet,
    context: VariableContext,
    budget: Budget,
) -> list[PolyElement]:
    if not admissible.residual:
        return []
    lattice = lattice_ideal(admissible.residual, budget)
    return [convert(g, context.ring) for g in lattice.gens]


def build_prime_candidate(
    collection: CellCollection,
    admissible: AdmissibleSet,
    budget: Budget = DEFAULT_BUDGET,
) -> PrimeCandidate:
    if not is_admissible(collection, admissible.vertices):
        raise ValueError(f"{sorted(admissible.vertices)} is not an admissible set")
    context = vertex_variables(collection)
    if not len(context):
        return PrimeCandidate(admissible, Ideal(context))
    variables = [context.variable(variable_name(v)) for v in sorted(admissible.vertices)]
    return PrimeCandidate(admissible, Ideal(context, variables + _lattice_part(admissible, context, budget)))


def _kill(f: PolyElement, indices: list[int]) -> PolyElement:
    if not indices:
        return f
    return f.ring.from_dict({m: c for m, c in f.items() if not any(m[i] for i in indices)})


@dataclass
class _ContainmentOracle:
    """Decides ``P_{W'} ⊆ P_W`` for primes of one collection."""

    budget: Budget = DEFAULT_BUDGET
    residual_bases: dict[frozenset[Cell], Ideal] = field(default_factory=dict)

    def _residual_ideal(self, big: PrimeCandidate) -> Ideal:
        key = big.admissible.residual.cells
        if key not in self.residual_bases:
            context = big.ideal.context
            self.residual_bases[key] = Ideal(context, _lattice_part(big.admissible, context, self.budget))
        return self.residual_bases[key]

    def contains(self, small: PrimeCandidate, big: PrimeCandidate) -> bool:
        if not small.vertices <= big.vertices:
            return False
        if not small.admissible.residual:
            return True
        context = big.ideal.context
        killed = [context.index(variable_name(v)) for v in big.vertices]
        residual = self._residual_ideal(big)
        for g in _lattice_part(small.admissible, context, self.budget):
            reduced = _kill(g, killed)
            if reduced and not residual.contains(reduced, self.budget):
                return False
        return True


def prime_contains(small: PrimeCandidate, big: PrimeCandidate, budget: Budget = DEFAULT_BUDGET) -> bool:
    """Decides ``P_{W'} ⊆ P_W``; requires ``W' ⊆ W``, then checks the lattice generators modulo ``P_W``."""
    return _ContainmentOracle(budget).contains(small, big)


def _candidate_sets(collection: CellCollection) -> list[AdmissibleSet]:
    # Among sets sharing a residual only the inclusion-minimal ones can give minimal primes.
    by_residual: dict[frozenset[Cell], list[AdmissibleSet]] = {}
    for admissible in enumerate_admissible_sets(collection):
        by_residual.setdefault(admissible.residual.cells, []).append(admissible)
    kept: list[AdmissibleSet] = []
    for group in by_residual.values():
        group.sort(key=lambda a: (len(a.vertices), a.sorted_vertices))
        minimal: list[AdmissibleSet] = []
        for admissible in group:
            if not any(m.vertices < admissible.vertices for m in minimal):
                minimal.append(admissible)
        kept += minimal
    return sorted(kept, key=lambda a: (len(a.vertices), a.sorted_vertices))


def minimal_primes(
    collection: CellCollection,
    budget: Budget = DEFAULT_BUDGET,
    max_rank: int = DEFAULT_MAX_RANK,
) -> list[PrimeCandidate]:
    """The minimal primes of the adjacent-minor ideal, as prime candidates.

    Args:
        collection: The collection of cells
        budget: Resource limits for the Gröbner runs
        max_rank: Larger collections raise ``BudgetExceededError``

    Returns:
        The inclusion-minimal ``P_W``, ordered by ``(|W|, sorted W)``; ``P_∅`` comes first

    Raises:
        BudgetExceededError: If the rank or a Gröbner run exceeds its budget
    """
    if len(collection) > max_rank:
        raise BudgetExceededError("minimal_primes_max_rank", len(collection), max_rank)
    oracle = _ContainmentOracle(budget)
    kept: list[PrimeCandidate] = []
    for admissible in _candidate_sets(collection):
        candidate = build_prime_candidate(collection, admissible, budget)
        if any(oracle.contains(prime, candidate) for prime in kept if prime.vertices < candidate.vertices):
            continue
        if candidate.height > len(collection):
            raise AssertionError(f"Minimal prime {candidate.variable_names} exceeds the Krull bound")
        kept.append(candidate)
    logger.debug("Found %d minimal primes for %s", len(kept), collection)
    return kept


def is_minimal_prime(
    collection: CellCollection,
    vertices: frozenset[Vertex] | set[Vertex],
    budget: Budget = DEFAULT_BUDGET,
) -> bool:
    """Decides whether ``P_W`` is a minimal prime, for a single admissible ``W``."""
    candidate = build_prime_candidate(collection, admissible_set(collection, vertices), budget)
    oracle = _ContainmentOracle(budget)
    for admissible in enumerate_admissible_sets(collection):
        if admissible.vertices < candidate.vertices:
            smaller = build_prime_candidate(collection, admissible, budget)
            if oracle.contains(smaller, candidate):
                return False
    return True


def x_pentomino_certificate(collection: CellCollection) -> AdmissibleSet | None:
    """``W = V(center)`` of an embedded X-pentomino whose four corner cells are absent.

    Such a set has height ``|C| - 1``.
    """
    for placed in embeddings(collection, X_PENTOMINO):
        center = next(c for c in placed if all(c.shifted(dx, dy) in placed for dx, dy in EDGE_STEPS))
        corners = [center.shifted(dx, dy) for dx in (-1, 1) for dy in (-1, 1)]
        if any(c in collection.cells for c in corners):
            continue
        vertices = frozenset(center.vertices)
        if is_admissible(collection, vertices):
            return AdmissibleSet(vertices, residual_collection(collection, vertices))
    return None


@dataclass
class ClassificationReport:
    """Unmixedness verdict with its certificate and shape flags.

    Parameters:
        rank: Number of cells.
        min_height: Least height of an admissible set.
        unmixed: Whether the ideal is unmixed, equivalently a complete
            intersection, Cohen-Macaulay, Gorenstein and level.
        certificate: A deficient admissible set when not unmixed.
        convex: Row and column convexity.
        square_tetromino: Whether a square tetromino embeds.
        x_pentomino: Whether an X-pentomino embeds.
        t_tetromino: Whether a T-tetromino embeds, up to symmetry.
        x_certificate: The center vertices of an embedded X-pentomino with
            no corner cells, a deficient admissible set of height ``|C| - 1``.
        primes: Optional minimal primes as (sorted W, height) pairs.
        inner_prime: With primes, whether the inner-minor ideal equals the
            lattice ideal.
    """

    rank: int
    min_height: int
    unmixed: bool
    certificate: tuple[Vertex, ...] | None
    convex: bool
    square_tetromino: bool
    x_pentomino: bool
    t_tetromino: bool = False
    x_certificate: tuple[Vertex, ...] | None = None
    primes: list[tuple[tuple[Vertex, ...], int]] | None = None
    inner_prime: bool | None = None


def classify(
    collection: CellCollection,
    with_primes: bool = False,
    budget: Budget = DEFAULT_BUDGET,
    max_rank: int = DEFAULT_MAX_RANK,
) -> ClassificationReport:
    height, witness = min_admissible_height(collection)
    unmixed = height == len(collection)
    x_certificate = x_pentomino_certificate(collection)
    primes = None
    inner_prime = None
    if with_primes:
        found = minimal_primes(collection, budget, max_rank)
        primes = [(p.admissible.sorted_vertices, p.height) for p in found]
        inner_prime = inner_equals_lattice(collection, budget)
    return ClassificationReport(
        rank=len(collection),
        min_height=height,
        unmixed=unmixed,
        certificate=None if unmixed else witness.sorted_vertices,
        convex=is_convex(collection),
        square_tetromino=contains_pattern(collection, SQUARE_TETROMINO),
        x_pentomino=contains_pattern(collection, X_PENTOMINO),
        t_tetromino=contains_pattern(collection, T_TETROMINO),
        x_certificate=None if x_certificate is None else x_certificate.sorted_vertices,
        primes=primes,
        inner_prime=inner_prime,
    )


def convex_unmixed_predicate(collection: CellCollection) -> bool:
    """For convex collections, unmixed iff neither a square tetromino nor an X-pentomino embeds.

    Raises:
        PredicateNotApplicableError: If the collection is not convex
    """
    if not is_convex(collection):
        raise PredicateNotApplicableError("The pattern criterion only applies to convex collections")
    return not contains_pattern(collection, SQUARE_TETROMINO) and not contains_pattern(collection, X_PENTOMINO)
