"""
Alpha-conversion decided through the ``db_z`` canonical form.

The relation is the smallest compatible equivalence generated by
``\\x. M = \\y. {y x}M`` with no freshness condition. Two terms are
alpha-equivalent exactly when their ``db_z`` forms are identical, for any
choice of ``z``. The single-axiom rewriter below is kept only as an
independent soundness oracle; it is never used to answer "distinct".
"""

import random
from typing import Sequence

from .kernel import (
    App,
    Lam,
    Path,
    Renaming,
    Term,
    Up,
    Var,
    VarName,
    apply_renaming,
    replace_at,
    subterms,
    term_eq,
)

DEFAULT_VAR: VarName = "z"


class NotALambda(TypeError):
    """Raised when the alpha axiom is applied to a term whose root is not a lambda."""


def db_named(z: VarName, m: Term) -> Term:
    """
    Rename every binder of ``m`` to ``z``.

    Args:
        z: Canonicalization variable (may occur free in ``m``)
        m: Term to canonicalize

    Returns:
        A term alpha-equivalent to ``m`` whose lambdas all bind ``z``
    """
    match m:
        case Var():
            return m
        case Up(inner):
            return Up(db_named(z, inner))
        case App(fun, arg):
            return App(db_named(z, fun), db_named(z, arg))
        case Lam(binder, body):
            return Lam(z, apply_renaming(Renaming(z, binder), db_named(z, body)))

    raise TypeError(f"Unexpected term in db_named: {m!r}")


def alpha_eq(m: Term, n: Term, z: VarName = DEFAULT_VAR) -> bool:
    """Decide alpha-equivalence; the answer does not depend on ``z``."""
    return term_eq(db_named(z, m), db_named(z, n))


def alpha_axiom_rename(m: Term, y: VarName) -> Term:
    """
    Apply the axiom ``\\x. B = \\y. {y x}B`` at the root.

    Raises:
        NotALambda: If ``m`` is not a lambda
    """
    if not isinstance(m, Lam):
        raise NotALambda(f"Alpha axiom needs a lambda at the root, got {type(m).__name__}")
    return Lam(y, apply_renaming(Renaming(y, m.binder), m.body))


def alpha_closure_step(m: Term, path: Path, y: VarName) -> Term:
    """Rewrite the lambda at ``path`` with the axiom, leaving the context intact."""
    for position, sub in subterms(m):
        if position == path:
            return replace_at(m, path, alpha_axiom_rename(sub, y))
    raise IndexError(f"Invalid position {path}")


def random_alpha_walk(
    m: Term, steps: int, name_pool: Sequence[VarName], seed: int
) -> Term:
    """
    Apply ``steps`` random axiom rewrites anywhere inside ``m``.

    Positions are enumerated in pre-order and drawn uniformly, then a name is
    drawn uniformly from ``name_pool``. The generator is ``random.Random``
    (Mersenne Twister MT19937) seeded with ``seed``, so the walk is
    deterministic for fixed inputs.

    Args:
        m: Starting term
        steps: Number of rewrites
        name_pool: Candidate binder names
        seed: PRNG seed

    Returns:
        A term alpha-equivalent to ``m``

    Raises:
        ValueError: If name_pool is empty
    """
    if not name_pool:
        raise ValueError("name_pool must not be empty")

    rng = random.Random(seed % 2**64)
    pool = list(name_pool)
    current = m
    for _ in range(steps):
        positions = [path for path, sub in subterms(current) if isinstance(sub, Lam)]
        if not positions:
            return current
        path = positions[rng.randrange(len(positions))]
        name = pool[rng.randrange(len(pool))]
        current = alpha_closure_step(current, path, name)

    return current
