"""Parses and formats the brace encoding of collections of cells.

A collection is a list of cells, each given by its two diagonal corners, as
in ``{{{1,1},{2,2}},{{2,1},{3,2}}}``. Whitespace is ignored.
"""

from cellideals.grid import CellCollection, Vertex


class CollectionParseError(ValueError):
    """Raised on malformed collection text.

    Parameters:
        message: What went wrong.
        offset: Byte offset of the failure in the input.
    """

    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} at offset {offset}")
        self.message = message
        self.offset = offset


class _Reader:
    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, char: str) -> None:
        found = self.peek()
        if found != char:
            shown = repr(found) if found else "end of input"
            raise CollectionParseError(f"Expected {char!r}, found {shown}", self.offset)
        self.pos += 1

    @property
    def offset(self) -> int:
        return len(self.text[: self.pos].encode("utf-8"))

    def integer(self) -> int:
        self.skip()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        token = self.text[start : self.pos]
        if not token.lstrip("+-"):
            self.pos = start
            raise CollectionParseError("Expected an integer coordinate", self.offset)
        return int(token)

    def point(self) -> Vertex:
        self.expect("{")
        x = self.integer()
        self.expect(",")
        y = self.integer()
        self.expect("}")
        return (x, y)

    def items(self) -> list[tuple[Vertex, Vertex, int]]:
        """Reads ``{cell, cell, ...}``, recording the offset of each cell."""
        cells: list[tuple[Vertex, Vertex, int]] = []
        self.expect("{")
        if self.peek() == "}":
            self.pos += 1
            return cells
        while True:
            self.skip()
            start = self.offset
            self.expect("{")
            first = self.point()
            self.expect(",")
            second = self.point()
            self.expect("}")
            cells.append((first, second, start))
            if self.peek() == ",":
                self.pos += 1
                continue
            self.expect("}")
            return cells


def parse_collection(text: str) -> CellCollection:
    """Parses the brace encoding.

    Args:
        text: The encoded collection

    Returns:
        The collection; repeated cells are merged

    Raises:
        CollectionParseError: On malformed braces, non-integer coordinates,
            trailing input, or a cell whose corners are not unit-diagonal
    """
    reader = _Reader(text)
    items = reader.items()
    if reader.peek():
        raise CollectionParseError("Unexpected trailing input", reader.offset)
    corners: list[Vertex] = []
    for first, second, offset in items:
        if second != (first[0] + 1, first[1] + 1):
            raise CollectionParseError(f"Cell {{{first},{second}}} is not a unit cell", offset)
        corners.append(first)
    return CellCollection.from_lower_lefts(corners)


def format_collection(collection: CellCollection) -> str:
    """Formats a collection with cells sorted by ``(y, x)`` and no whitespace."""
    parts = [f"{{{{{c.a[0]},{c.a[1]}}},{{{c.b[0]},{c.b[1]}}}}}" for c in collection.sorted_cells]
    return "{" + ",".join(parts) + "}"
