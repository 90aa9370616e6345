"""Defines the report schema and the JSON-lines and CSV writers."""

import csv
import json
from typing import IO, Iterable, Literal

from pydantic import BaseModel

from cellideals.formats.text import format_collection
from cellideals.grid import CellCollection
from cellideals.polyalg.dump import format_polynomial
from cellideals.primes import ClassificationReport
from cellideals.radicality.verdict import RadicalVerdict

ReportFormat = Literal["jsonl", "csv"]


class PrimeRecord(BaseModel):
    vertices: list[tuple[int, int]]
    height: int


class ReportRecord(BaseModel):
    collection: str
    rank: int
    min_height: int | None = None
    unmixed: bool | None = None
    certificate: list[tuple[int, int]] | None = None
    convex: bool | None = None
    square_tetromino: bool | None = None
    x_pentomino: bool | None = None
    t_tetromino: bool | None = None
    x_certificate: list[tuple[int, int]] | None = None
    primes: list[PrimeRecord] | None = None
    inner_prime: bool | None = None
    radical: str | None = None
    method: str | None = None
    witness: str | None = None
    excess: str | None = None
    subconfiguration: str | None = None
    reason: str | None = None
    seconds: float | None = None

    @classmethod
    def for_collection(cls, collection: CellCollection) -> "ReportRecord":
        return cls(collection=format_collection(collection), rank=len(collection))

    def with_classification(self, report: ClassificationReport) -> "ReportRecord":
        primes = None
        if report.primes is not None:
            primes = [PrimeRecord(vertices=list(w), height=h) for w, h in report.primes]
        return self.model_copy(
            update={
                "min_height": report.min_height,
                "unmixed": report.unmixed,
                "certificate": None if report.certificate is None else list(report.certificate),
                "convex": report.convex,
                "square_tetromino": report.square_tetromino,
                "x_pentomino": report.x_pentomino,
                "t_tetromino": report.t_tetromino,
                "x_certificate": None if report.x_certificate is None else list(report.x_certificate),
                "primes": primes,
                "inner_prime": report.inner_prime,
            }
        )

    def with_verdict(self, verdict: RadicalVerdict) -> "ReportRecord":
        sub = verdict.subconfiguration
        return self.model_copy(
            update={
                "radical": verdict.status,
                "method": verdict.method,
                "witness": None if verdict.witness is None else format_polynomial(verdict.witness),
                "excess": None if verdict.excess is None else format_polynomial(verdict.excess),
                "subconfiguration": None if sub is None else format_collection(sub),
                "reason": verdict.reason or None,
            }
        )


CSV_COLUMNS = list(ReportRecord.model_fields)


def _csv_value(value: object) -> object:
    if value is None:
        return ""
    if isinstance(value, (list, tuple, dict)):
        return json.dumps(value, separators=(",", ":"))
    return value


def write_records(records: Iterable[ReportRecord], stream: IO[str], fmt: ReportFormat = "jsonl") -> int:
    """Writes records one per line and returns the number written.

    Args:
        records: The records, in output order
        stream: The text stream to write to
        fmt: ``jsonl`` drops unset fields; ``csv`` writes every column

    Returns:
        The number of records written
    """
    count = 0
    match fmt:
        case "jsonl":
            for record in records:
                stream.write(record.model_dump_json(exclude_none=True) + "\n")
                count += 1
        case "csv":
            writer = csv.DictWriter(stream, fieldnames=CSV_COLUMNS, lineterminator="\n")
            writer.writeheader()
            for record in records:
                writer.writerow({k: _csv_value(v) for k, v in record.model_dump(mode="json").items()})
                count += 1
        case _:
            raise ValueError(f"Unknown report format: {fmt}")
    stream.flush()
    return count


def write_table(rows: Iterable[dict[str, object]], stream: IO[str], fmt: ReportFormat = "csv") -> None:
    """Writes a small table, such as a census row, as CSV or JSON lines."""
    rows = list(rows)
    match fmt:
        case "csv":
            if not rows:
                return
            writer = csv.DictWriter(stream, fieldnames=list(rows[0]), lineterminator="\n")
            writer.writeheader()
            writer.writerows({k: _csv_value(v) for k, v in row.items()} for row in rows)
        case "jsonl":
            for row in rows:
                stream.write(json.dumps(row, separators=(",", ":")) + "\n")
        case _:
            raise ValueError(f"Unknown report format: {fmt}")
    stream.flush()


def read_records(lines: Iterable[str]) -> list[ReportRecord]:
    return [ReportRecord.model_validate_json(line) for line in lines if line.strip()]
