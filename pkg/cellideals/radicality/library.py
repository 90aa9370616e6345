"""The library of known minimally non-radical collections and the embedding screen.

Entries live in ``configs/rank*.txt``, one per line as ``name: encoding``;
blank lines and lines starting with ``#`` are ignored.

A collection containing an embedded non-radical ``C'`` is itself non-radical
as soon as every cell outside ``C'`` has an edge whose two vertices avoid
``V(C')``.
"""

import functools
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import TYPE_CHECKING, Iterable, Iterator

from cellideals.formats.text import CollectionParseError, format_collection, parse_collection
from cellideals.grid import CellCollection, Pattern, canonical_form, embeddings

if TYPE_CHECKING:
    from cellideals.config import BudgetConfig
    from cellideals.radicality.core import EntryValidation

logger = logging.getLogger(__name__)

CONFIG_DIR = Path(__file__).resolve().parent.parent / "configs"


class ConfigValidationError(ValueError):
    """Raised when a library entry is malformed or fails self-validation."""


@dataclass(frozen=True)
class LibraryEntry:
    """A named non-radical collection.

    Parameters:
        name: The entry name, unique within the library.
        collection: The collection as transcribed.
        source: Where the entry was read from.
    """

    name: str
    collection: CellCollection
    source: str = ""

    @property
    def rank(self) -> int:
        return len(self.collection)

    @functools.cached_property
    def pattern(self) -> Pattern:
        return Pattern(self.name, self.collection.normalized(), "translation+D4")


def _parse_line(line: str, source: str, lineno: int) -> LibraryEntry:
    name, sep, body = line.partition(":")
    if not sep or not name.strip():
        raise ConfigValidationError(f"{source}:{lineno}: expected 'name: encoding'")
    try:
        collection = parse_collection(body)
    except CollectionParseError as error:
        raise ConfigValidationError(f"{source}:{lineno}: {error}") from error
    if not collection:
        raise ConfigValidationError(f"{source}:{lineno}: entry {name.strip()!r} is empty")
    return LibraryEntry(name.strip(), collection, f"{source}:{lineno}")


@dataclass(frozen=True)
class ConfigLibrary:
    entries: tuple[LibraryEntry, ...] = ()

    def __post_init__(self) -> None:
        names = [e.name for e in self.entries]
        duplicates = sorted({n for n in names if names.count(n) > 1})
        if duplicates:
            raise ConfigValidationError(f"Duplicate library entries: {duplicates}")

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[LibraryEntry]:
        return iter(self.entries)

    @classmethod
    def from_text(cls, text: str, source: str = "<string>") -> "ConfigLibrary":
        entries = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            entries.append(_parse_line(line, source, lineno))
        return cls(tuple(entries))

    @classmethod
    def load(cls, directory: str | Path | None = None) -> "ConfigLibrary":
        """Reads every ``rank*.txt`` file of ``directory``, in rank order.

        Args:
            directory: The config directory; defaults to the packaged one

        Returns:
            The library

        Raises:
            ConfigValidationError: If an entry is malformed
        """
        root = CONFIG_DIR if directory is None else Path(directory)
        entries: list[LibraryEntry] = []
        for path in sorted(root.glob("rank*.txt"), key=lambda p: (len(p.stem), p.stem)):
            entries += cls.from_text(path.read_text(encoding="utf-8"), path.name).entries
        logger.debug("Loaded %d library entries from %s", len(entries), root)
        return cls(tuple(entries))

    def by_rank(self, rank: int) -> list[LibraryEntry]:
        return [e for e in self.entries if e.rank == rank]

    def validate(self, config: "BudgetConfig | None" = None) -> list["EntryValidation"]:
        """Checks that every entry is minimally non-radical; see ``validate_library``."""
        from cellideals.radicality.core import validate_library

        return validate_library(self, config)


def format_entries(
    collections: Iterable[CellCollection],
    rank: int,
    known: ConfigLibrary | None = None,
) -> str:
    """Renders collections as the contents of a ``rank*.txt`` file.

    Collections equal up to symmetry to an entry of ``known`` are left out.
    New entries are named ``rank<N>-<index>``.
    """
    seen = {canonical_form(e.collection) for e in (known or ConfigLibrary())}
    lines = [f"# Minimally non-radical collections of rank {rank}."]
    index = 0
    for collection in collections:
        canonical = canonical_form(collection)
        if canonical in seen:
            continue
        seen.add(canonical)
        index += 1
        lines.append(f"rank{rank}-{index}: {format_collection(collection)}")
    return "\n".join(lines) + "\n"


@functools.lru_cache(maxsize=None)
def default_library() -> ConfigLibrary:
    return ConfigLibrary.load()


def _edge_supported(collection: CellCollection, placed: CellCollection) -> bool:
    outside = collection.vertices - placed.vertices
    for cell in collection.cells - placed.cells:
        if not any(edge <= outside for edge in cell.edges):
            return False
    return True


def screen_nonradical(collection: CellCollection, library: ConfigLibrary | None = None) -> CellCollection | None:
    """Looks for a library entry that certifies ``collection`` non-radical.

    Args:
        collection: The collection of cells
        library: The library to match; defaults to the packaged one

    Returns:
        The embedded entry whose outside cells are all edge-supported away
        from it, or None when the screen is inconclusive
    """
    library = default_library() if library is None else library
    for entry in library:
        if entry.rank > len(collection):
            continue
        for placed in embeddings(collection, entry.pattern):
            sub = CellCollection(placed)
            if _edge_supported(collection, sub):
                logger.debug("Screen: %s embeds %s", collection, entry.name)
                return sub
    return None
