"""Term algebra for lambda terms with explicit weakenings."""

from .alpha import alpha_axiom_rename, alpha_eq, db_named, random_alpha_walk
from .debruijn import (
    Derivation,
    DbTerm,
    alpha_eq_via_context,
    chain_rename,
    db_named_generalized,
    derive,
    translate,
)
from .freevars import FvSeq, fv_dbterm, fv_term
from .kernel import App, Lam, Renaming, Term, Up, Var, apply_renaming, lift_renaming

__all__ = [
    "App",
    "DbTerm",
    "Derivation",
    "FvSeq",
    "Lam",
    "Renaming",
    "Term",
    "Up",
    "Var",
    "alpha_axiom_rename",
    "alpha_eq",
    "alpha_eq_via_context",
    "apply_renaming",
    "chain_rename",
    "db_named",
    "db_named_generalized",
    "derive",
    "fv_dbterm",
    "fv_term",
    "lift_renaming",
    "random_alpha_walk",
    "translate",
]
