"""
Files - arrangement text format
"""

from hyperfree.files.arrangement_file import (
    FORMAT_VERSION,
    ArrangementFile,
    load_arrangement,
    parse_arrangement,
    parse_multiplicity,
    save_arrangement,
    serialize_arrangement,
)

__all__ = [
    "FORMAT_VERSION",
    "ArrangementFile",
    "load_arrangement",
    "parse_arrangement",
    "parse_multiplicity",
    "save_arrangement",
    "serialize_arrangement",
]
