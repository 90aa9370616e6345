"""Text encodings and report formats."""

from cellideals.formats.text import CollectionParseError, format_collection, parse_collection
