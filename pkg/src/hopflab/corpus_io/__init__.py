"""Example builders, file formats, suite runner and CLI."""

from .builders import BUILDER_NAMES, InvalidParameters, build, bundled_exact_sequences, default_corpus
from .format import FormatError, parse, parse_hopf, parse_map, parse_yd, serialize, serialize_map, serialize_yd
from .suite import run_suite, report_text

__all__ = [
    "BUILDER_NAMES", "InvalidParameters", "build", "bundled_exact_sequences", "default_corpus",
    "FormatError", "parse", "parse_hopf", "parse_map", "parse_yd", "serialize", "serialize_map",
    "serialize_yd", "run_suite", "report_text",
]
