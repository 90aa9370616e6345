"""Radicality front door, minimality checks and library validation."""

import dataclasses
import logging
from dataclasses import dataclass, field
from typing import Literal, Sequence

from tqdm import tqdm

from cellideals.config import BudgetConfig
from cellideals.enumerate import EnumerationConfig, enumerate_collections
from cellideals.grid import CellCollection, weakly_connected_deletions
from cellideals.logging import LOG_STATUS
from cellideals.polyalg.budget import BudgetExceededError
from cellideals.polyalg.orders import MonomialOrder
from cellideals.radicality.exact import OnBudget, exact_radical, squarefree_certificate
from cellideals.radicality.family import dt_deletion_order, dt_order, dt_parameter, validate_dt
from cellideals.radicality.library import ConfigLibrary, ConfigValidationError, LibraryEntry, screen_nonradical
from cellideals.radicality.verdict import RadicalVerdict
from cellideals.radicality.witness import QUICK_SCHEDULE, WitnessSchedule, witness_search

logger = logging.getLogger(__name__)

RadicalMethod = Literal["auto", "exact", "witness", "screen"]
METHODS: tuple[RadicalMethod, ...] = ("auto", "exact", "witness", "screen")


def witness_schedule(config: BudgetConfig) -> WitnessSchedule:
    return WitnessSchedule(
        coefficient_bound=config.witness_coefficient_bound,
        multiplier_degree=config.witness_multiplier_degree,
        degree_bound=config.witness_degree_bound,
    )


def _witness(collection: CellCollection, schedule: WitnessSchedule, config: BudgetConfig) -> RadicalVerdict | None:
    found = witness_search(collection, schedule, config.to_budget())
    if found is None:
        return None
    return RadicalVerdict("non-radical", "witness", witness=found, reason="f is outside the ideal, f^2 inside")


def _screen(collection: CellCollection, library: ConfigLibrary | None) -> RadicalVerdict | None:
    sub = screen_nonradical(collection, library)
    if sub is None:
        return None
    return RadicalVerdict("non-radical", "screen", subconfiguration=sub, reason="embeds a non-radical entry")


def is_radical(
    collection: CellCollection,
    method: RadicalMethod = "auto",
    library: ConfigLibrary | None = None,
    config: BudgetConfig | None = None,
    on_budget: OnBudget = "raise",
    orders: Sequence[MonomialOrder] = (),
) -> RadicalVerdict:
    """Decides whether the adjacent-minor ideal of ``collection`` is radical.

    The ``screen`` and ``witness`` methods only ever report ``non-radical``
    or ``unknown``. ``auto`` runs the screen, a squarefree-initial-ideal
    certificate, a witness search and finally the exact test.

    Args:
        collection: The collection of cells
        method: One of ``auto``, ``exact``, ``witness`` or ``screen``
        library: Library for the screen; defaults to the packaged one
        config: Budgets; defaults to ``BudgetConfig()``
        on_budget: ``raise`` propagates budget errors from the exact test;
            ``unknown`` reports them as an undecided verdict
        orders: Extra orders for the squarefree certificate

    Returns:
        The verdict

    Raises:
        BudgetExceededError: If the exact test runs out of budget and
            ``on_budget`` is ``raise``
        ValueError: On an unknown method
    """
    config = BudgetConfig() if config is None else config
    budget = config.to_budget()
    limit = config.exact_rank_limit

    match method:
        case "screen":
            return _screen(collection, library) or RadicalVerdict("unknown", "screen", reason="no entry applies")
        case "witness":
            found = _witness(collection, witness_schedule(config), config)
            return found or RadicalVerdict("unknown", "witness", reason="no witness within the search bounds")
        case "exact":
            return exact_radical(collection, budget, limit, on_budget, orders)
        case "auto":
            if (screened := _screen(collection, library)) is not None:
                return screened
            try:
                if squarefree_certificate(collection, budget, orders) is not None:
                    return RadicalVerdict("radical", "exact", reason="squarefree initial ideal")
            except BudgetExceededError:
                if on_budget == "raise":
                    raise
            if (found := _witness(collection, QUICK_SCHEDULE, config)) is not None:
                return found
            return exact_radical(collection, budget, limit, on_budget, orders)
        case _:
            raise ValueError(f"Unknown radicality method: {method}")


def _require_decided(verdict: RadicalVerdict, collection: CellCollection, config: BudgetConfig) -> None:
    if not verdict.decided:
        raise BudgetExceededError("max_exact_rank", len(collection), config.exact_rank_limit)


def is_minimally_non_radical(
    collection: CellCollection,
    library: ConfigLibrary | None = None,
    config: BudgetConfig | None = None,
    orders: Sequence[MonomialOrder] = (),
) -> bool:
    """Non-radical, while every weakly connected single-cell deletion is radical.

    Deletions are decided first, so a collection with a non-radical deletion
    never reaches the exact test at its own rank.

    Raises:
        BudgetExceededError: If some radicality verdict cannot be decided
    """
    config = BudgetConfig() if config is None else config
    for cell in weakly_connected_deletions(collection):
        smaller = collection.without(cell)
        deleted = is_radical(smaller, "auto", library, config, orders=orders)
        _require_decided(deleted, smaller, config)
        if deleted.status != "radical":
            return False
    verdict = is_radical(collection, "auto", library, config, orders=orders)
    _require_decided(verdict, collection, config)
    return verdict.status == "non-radical"


def discover_minimally_non_radical(
    rank: int,
    config: BudgetConfig | None = None,
    library: ConfigLibrary | None = None,
    progress: bool = False,
) -> list[CellCollection]:
    """Scans all collections of ``rank`` up to symmetry for minimally non-radical ones.

    Collections whose verdicts exceed the budget are skipped with a warning.
    """
    config = BudgetConfig() if config is None else config
    stream = enumerate_collections(EnumerationConfig(rank, max_rank=config.max_enumeration_rank))
    if progress:
        stream = tqdm(stream, desc=f"rank {rank}", unit="shape", leave=False)
    found: list[CellCollection] = []
    skipped = 0
    for collection in stream:
        try:
            if is_minimally_non_radical(collection, library, config):
                found.append(collection)
        except BudgetExceededError as error:
            skipped += 1
            logger.warning("Skipping %s: %s", collection, error)
    logger.log(LOG_STATUS, "Rank %d: %d minimally non-radical, %d undecided", rank, len(found), skipped)
    return found


@dataclass
class EntryValidation:
    """Self-validation outcome of one library entry.

    Parameters:
        name: The entry name.
        rank: The entry rank.
        non_radical: Whether non-radicality was certified.
        method: How non-radicality was certified.
        deletions: Per weakly connected deletion, whether it was shown radical.
    """

    name: str
    rank: int
    non_radical: bool
    method: str
    deletions: dict[str, bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.non_radical and all(self.deletions.values())


def validate_entry(entry: LibraryEntry, config: BudgetConfig | None = None) -> EntryValidation:
    """Certifies an entry as minimally non-radical without using the library itself.

    Entries equal to ``D_t`` are checked against their known witness and get
    the family's orders as certificate hints. Other entries need a witness
    or the exact test, which is allowed up to rank 6 here.
    """
    config = BudgetConfig() if config is None else config
    config = dataclasses.replace(config, allow_exact_rank6=True)
    collection = entry.collection
    orders: tuple[MonomialOrder, ...] = ()

    t = dt_parameter(collection)
    if t is not None:
        check = validate_dt(t, config.to_budget())
        non_radical = check.witness_outside and check.witness_square_inside
        method = "family witness"
        orders = (dt_order(t), dt_deletion_order(t))
    else:
        verdict = is_radical(collection, "witness", config=config)
        if verdict.status != "non-radical":
            verdict = is_radical(collection, "exact", config=config, on_budget="unknown")
        non_radical = verdict.status == "non-radical"
        method = verdict.method

    deletions: dict[str, bool] = {}
    for cell in weakly_connected_deletions(collection):
        verdict = is_radical(collection.without(cell), "exact", config=config, on_budget="unknown", orders=orders)
        deletions[str(cell.lower_left)] = verdict.status == "radical"
    result = EntryValidation(entry.name, entry.rank, non_radical, method, deletions)
    logger.log(LOG_STATUS, "Entry %s: %s", entry.name, "ok" if result.ok else "FAILED")
    return result


def validate_library(
    library: ConfigLibrary,
    config: BudgetConfig | None = None,
    strict: bool = False,
) -> list[EntryValidation]:
    """Validates every entry.

    Raises:
        ConfigValidationError: If ``strict`` and some entry fails
    """
    results = [validate_entry(entry, config) for entry in library]
    failed = [r.name for r in results if not r.ok]
    if strict and failed:
        raise ConfigValidationError(f"Library entries failed validation: {failed}")
    return results
