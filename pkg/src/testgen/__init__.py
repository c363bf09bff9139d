"""Generators and the property suites behind ``selftest``."""

from .generators import (
    TermGenerator,
    count_terms,
    enumerate_terms,
    random_context,
    random_dbterm,
    random_renaming,
    random_term,
)
from .properties import SUITES, run_selftest, run_suite

__all__ = [
    "SUITES",
    "TermGenerator",
    "count_terms",
    "enumerate_terms",
    "random_context",
    "random_dbterm",
    "random_renaming",
    "random_term",
    "run_selftest",
    "run_suite",
]
