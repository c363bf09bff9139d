"""
Deterministic random and exhaustive generators for terms, contexts and renamings.

Random generation uses ``random.Random`` (Mersenne Twister MT19937) seeded
from ``GenConfig.seed``; there is no global PRNG state. Small name pools are
the point: shadowing, ``{x x}`` and capture-adjacent shapes show up often.
"""

import random
from functools import lru_cache
from typing import Iterator, Sequence, Tuple

from calculus.debruijn import ONE, DbApp, DbLam, DbTerm, DbUp, DbVar
from calculus.kernel import App, Context, Lam, Renaming, Term, Up, Var, VarName
from schema import GenConfig


class TermGenerator:
    """One PRNG stream shared by all draws; equal configs give equal sequences."""

    def __init__(self, cfg: GenConfig):
        self.cfg = cfg
        # random.Random seeds with abs(); the modulus keeps s and -s apart
        self.rng = random.Random(cfg.seed % 2**64)
        self.pool = list(cfg.name_pool)

    def name(self) -> VarName:
        return self.pool[self.rng.randrange(len(self.pool))]

    def size(self) -> int:
        return self.rng.randint(1, self.cfg.max_size)

    def term(self) -> Term:
        """A term of size drawn uniformly from ``1..max_size``."""
        return self._term(self.size())

    def _term(self, n: int) -> Term:
        if n == 1:
            return Var(self.name())
        kind = self.rng.randrange(3 if n >= 3 else 2)
        if kind == 0:
            return Up(self._term(n - 1))
        if kind == 1:
            return Lam(self.name(), self._term(n - 1))
        left = self.rng.randint(1, n - 2)
        return App(self._term(left), self._term(n - 1 - left))

    def dbterm(self) -> DbTerm:
        return self._dbterm(self.size())

    def _dbterm(self, n: int) -> DbTerm:
        if n == 1:
            pick = self.rng.randrange(len(self.pool) + 1)
            return ONE if pick == len(self.pool) else DbVar(self.pool[pick])
        kind = self.rng.randrange(3 if n >= 3 else 2)
        if kind == 0:
            return DbUp(self._dbterm(n - 1))
        if kind == 1:
            return DbLam(self._dbterm(n - 1))
        left = self.rng.randint(1, n - 2)
        return DbApp(self._dbterm(left), self._dbterm(n - 1 - left))

    def context(self) -> Context:
        """A context of length ``0..max_size``; the empty context is always reachable."""
        length = self.rng.randint(0, self.cfg.max_size)
        return tuple(self.name() for _ in range(length))

    def renaming(self) -> Renaming:
        return Renaming(self.name(), self.name(), self.context())


def random_term(cfg: GenConfig) -> Term:
    return TermGenerator(cfg).term()


def random_dbterm(cfg: GenConfig) -> DbTerm:
    return TermGenerator(cfg).dbterm()


def random_context(cfg: GenConfig) -> Context:
    return TermGenerator(cfg).context()


def random_renaming(cfg: GenConfig) -> Renaming:
    return TermGenerator(cfg).renaming()


@lru_cache(maxsize=None)
def _terms_of_size(n: int, pool: Tuple[VarName, ...]) -> Tuple[Term, ...]:
    if n == 1:
        return tuple(Var(name) for name in pool)
    smaller = _terms_of_size(n - 1, pool)
    terms = [Up(t) for t in smaller]
    terms += [Lam(name, t) for name in pool for t in smaller]
    for left in range(1, n - 1):
        for fun in _terms_of_size(left, pool):
            for arg in _terms_of_size(n - 1 - left, pool):
                terms.append(App(fun, arg))
    return tuple(terms)


def enumerate_terms(max_size: int, name_pool: Sequence[VarName]) -> Iterator[Term]:
    """
    Yield every term over ``name_pool`` with size at most ``max_size``, each once.

    Order: by size; within a size Var, then Up, then Lam, then App; names follow
    pool order; App is ordered by the size of its function part, then by the
    function, then by the argument, each in this same order.

    Raises:
        ValueError: If name_pool is empty
    """
    if not name_pool:
        raise ValueError("name_pool must not be empty")
    pool = tuple(name_pool)
    for n in range(1, max_size + 1):
        yield from _terms_of_size(n, pool)


def count_terms(max_size: int, pool_size: int) -> int:
    """
    Number of terms of size at most ``max_size`` over ``pool_size`` names.

    Counts by the recurrence T(1) = p, T(n) = (1 + p) T(n-1) + sum T(i) T(n-1-i).
    """
    counts = [0, pool_size]
    for n in range(2, max_size + 1):
        total = (1 + pool_size) * counts[n - 1]
        total += sum(counts[i] * counts[n - 1 - i] for i in range(1, n - 1))
        counts.append(total)
    return sum(counts[1 : max_size + 1])
