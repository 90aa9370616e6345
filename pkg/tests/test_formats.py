"""Tests the brace encoding and the report writers."""

import io

import pytest

from cellideals.formats.report import ReportRecord, read_records, write_records, write_table
from cellideals.formats.text import CollectionParseError, format_collection, parse_collection
from cellideals.grid import CellCollection, rectangle
from cellideals.primes import classify
from cellideals.radicality.verdict import RadicalVerdict

SQUARE_TEXT = "{{{1,1},{2,2}},{{2,1},{3,2}},{{1,2},{2,3}},{{2,2},{3,3}}}"


def test_parse_square() -> None:
    assert parse_collection(SQUARE_TEXT) == rectangle(2, 2, origin=(1, 1))


def test_parse_whitespace_and_order() -> None:
    text = " { {{1,2}, {2,3}} ,\n{{1,1},{2,2}} } "
    collection = parse_collection(text)
    assert collection == CellCollection.from_lower_lefts([(1, 1), (1, 2)])
    assert format_collection(collection) == "{{{1,1},{2,2}},{{1,2},{2,3}}}"


def test_empty_and_negative() -> None:
    assert parse_collection("{}") == CellCollection()
    assert format_collection(CellCollection()) == "{}"
    assert parse_collection("{{{-1,-2},{0,-1}}}") == CellCollection.from_lower_lefts([(-1, -2)])


def test_format_reparses() -> None:
    collection = CellCollection.from_lower_lefts([(3, 0), (0, 0), (1, 1), (2, 1)])
    assert parse_collection(format_collection(collection)) == collection
    assert format_collection(parse_collection(SQUARE_TEXT)) == SQUARE_TEXT


@pytest.mark.parametrize(
    "text, offset",
    [
        ("{{{1,1},{3,3}}}", 1),
        ("{{{1,1},{2,2}}", 14),
        ("{{{1,a},{2,2}}}", 5),
        ("{{{1,1},{2,2}}} x", 16),
        ("", 0),
    ],
)
def test_parse_errors(text: str, offset: int) -> None:
    with pytest.raises(CollectionParseError) as error:
        parse_collection(text)
    assert error.value.offset == offset


def test_jsonl_round_trip() -> None:
    collection = rectangle(2, 2)
    record = ReportRecord.for_collection(collection).with_classification(classify(collection, with_primes=True))
    record = record.with_verdict(RadicalVerdict("non-radical", "screen", subconfiguration=collection))
    stream = io.StringIO()
    assert write_records([record], stream, "jsonl") == 1
    (parsed,) = read_records(stream.getvalue().splitlines())
    assert parsed == record
    assert parse_collection(parsed.collection) == collection
    assert parsed.unmixed is False
    assert parsed.radical == "non-radical"


def test_csv() -> None:
    stream = io.StringIO()
    write_records([ReportRecord.for_collection(rectangle(1, 1))], stream, "csv")
    header, row = stream.getvalue().splitlines()
    assert header.startswith("collection,rank,")
    assert row.startswith('"{{{0,0},{1,1}}}",1,')
    table = io.StringIO()
    write_table([{"rank": 2, "count": 2}], table, "csv")
    assert table.getvalue() == "rank,count\n2,2\n"
