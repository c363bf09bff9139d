"""Concrete syntax: parsers and printers for terms, contexts, renamings and FV sequences."""

from .parser import (
    ParseError,
    SourceSpan,
    parse_context,
    parse_dbterm,
    parse_fvseq,
    parse_many,
    parse_name,
    parse_renaming,
    parse_term,
    read_lines,
)
from .printer import (
    print_context,
    print_dbterm,
    print_derivation,
    print_fvseq,
    print_renaming,
    print_term,
)

__all__ = [
    "ParseError",
    "SourceSpan",
    "parse_context",
    "parse_dbterm",
    "parse_fvseq",
    "parse_many",
    "parse_name",
    "parse_renaming",
    "parse_term",
    "print_context",
    "print_dbterm",
    "print_derivation",
    "print_fvseq",
    "print_renaming",
    "print_term",
    "read_lines",
]
