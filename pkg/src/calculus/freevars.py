"""
Level-indexed free-variable sequences.

``FV_i(M)`` is the set of variables occurring free in ``M`` under exactly
``i`` effective weakenings. Sequences are stored as tuples with an implicit
empty tail and are trimmed after every operation, so tuple equality is
sequence equality.
"""

from dataclasses import dataclass
from typing import FrozenSet, Iterable, Tuple

from .debruijn import DbApp, DbLam, DbTerm, DbUp, DbVar, One
from .kernel import App, Lam, Term, Up, Var, VarName

Level = FrozenSet[VarName]

_EMPTY: Level = frozenset()


@dataclass(frozen=True, slots=True)
class FvSeq:
    levels: Tuple[Level, ...] = ()

    @classmethod
    def of(cls, levels: Iterable[Iterable[VarName]]) -> "FvSeq":
        """Build a canonical sequence, dropping trailing empty levels."""
        sets = [frozenset(level) for level in levels]
        while sets and not sets[-1]:
            sets.pop()
        return cls(tuple(sets))

    @classmethod
    def single(cls, name: VarName) -> "FvSeq":
        return cls((frozenset({name}),))

    def at(self, i: int) -> Level:
        """Level ``i``; empty beyond the stored length."""
        return self.levels[i] if i < len(self.levels) else _EMPTY

    def shift(self) -> "FvSeq":
        """Sequence of ``^M`` from the sequence of ``M``."""
        if not self.levels:
            return self
        return FvSeq((_EMPTY,) + self.levels)

    def union(self, other: "FvSeq") -> "FvSeq":
        width = max(len(self.levels), len(other.levels))
        return FvSeq.of(self.at(i) | other.at(i) for i in range(width))

    def bind(self, x: VarName) -> "FvSeq":
        """Sequence of ``\\x. M``: level 0 loses ``x`` and absorbs level 1."""
        head = (self.at(0) - {x}) | self.at(1)
        return FvSeq.of((head,) + self.levels[2:])

    def collapse(self) -> "FvSeq":
        """Sequence of a nameless lambda: levels 0 and 1 merge."""
        head = self.at(0) | self.at(1)
        return FvSeq.of((head,) + self.levels[2:])

    def names(self) -> Level:
        """Union over all levels."""
        return frozenset().union(*self.levels)


def fv_term(m: Term) -> FvSeq:
    """Free-variable sequence of a named term."""
    match m:
        case Var(name):
            return FvSeq.single(name)
        case Up(inner):
            return fv_term(inner).shift()
        case App(fun, arg):
            return fv_term(fun).union(fv_term(arg))
        case Lam(binder, body):
            return fv_term(body).bind(binder)

    raise TypeError(f"Unexpected term in fv_term: {m!r}")


def fv_dbterm(a: DbTerm) -> FvSeq:
    """Free-variable sequence of a generalized de Bruijn term."""
    match a:
        case DbVar(name):
            return FvSeq.single(name)
        case One():
            return FvSeq()
        case DbUp(inner):
            return fv_dbterm(inner).shift()
        case DbApp(fun, arg):
            return fv_dbterm(fun).union(fv_dbterm(arg))
        case DbLam(body):
            return fv_dbterm(body).collapse()

    raise TypeError(f"Unexpected term in fv_dbterm: {a!r}")
