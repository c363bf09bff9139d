"""
Context-indexed derivations and generalized de Bruijn terms.

A judgment ``G |- M`` has exactly one derivation for every context ``G`` and
term ``M``. Reading that derivation bottom-up gives the generalized de Bruijn
term ``||G |- M||``: bound occurrences become ``One`` under the right number
of ``DbUp`` wrappers, free variables keep their names.

Two list orientations meet in this module. ``Renaming.lifts`` is peeled from
the END (innermost binder first); ``chain_rename`` peels its context from the
FRONT, following ``{z/x,D}M = {z/D}{z x}_D M``.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Tuple, Union

from .kernel import (
    NIL,
    App,
    Context,
    Lam,
    Renaming,
    Term,
    Up,
    Var,
    VarName,
    apply_renaming,
)


@dataclass(frozen=True, slots=True)
class DbVar:
    name: VarName


@dataclass(frozen=True, slots=True)
class One:
    """Reference to the nearest enclosing binder."""


@dataclass(frozen=True, slots=True)
class DbApp:
    fun: "DbTerm"
    arg: "DbTerm"


@dataclass(frozen=True, slots=True)
class DbLam:
    body: "DbTerm"


@dataclass(frozen=True, slots=True)
class DbUp:
    inner: "DbTerm"


DbTerm = Union[DbVar, One, DbApp, DbLam, DbUp]

ONE = One()


class Rule(str, Enum):
    """
    Inference rules for ``G |- M``.

    - AX_NIL:  nil |- x
    - AX_HERE: G,x |- x
    - WEAK:    G |- x  gives  G,z |- x   (z != x)
    - APP:     G |- M and G |- N  give  G |- M N
    - UP_NIL:  nil |- M  gives  nil |- ^M
    - UP_CONS: G |- M  gives  G,x |- ^M
    - LAM:     G,x |- M  gives  G |- \\x. M
    """

    AX_NIL = "AxNil"
    AX_HERE = "AxHere"
    WEAK = "Weak"
    APP = "AppR"
    UP_NIL = "UpNil"
    UP_CONS = "UpCons"
    LAM = "LamR"

    @property
    def arity(self) -> int:
        """Number of premises the rule takes."""
        if self in (Rule.AX_NIL, Rule.AX_HERE):
            return 0
        if self == Rule.APP:
            return 2
        return 1


@dataclass(frozen=True, slots=True)
class Derivation:
    rule: Rule
    context: Context
    subject: Term
    premises: Tuple["Derivation", ...] = field(default=())

    def size(self) -> int:
        """Number of judgments in the tree."""
        return 1 + sum(p.size() for p in self.premises)


class InvalidDerivation(ValueError):
    """Raised when a derivation node does not instantiate its rule."""


def derive(g: Context, m: Term) -> Derivation:
    """
    Build the unique derivation of ``g |- m``.

    Args:
        g: Context, outermost binder first
        m: Subject term

    Returns:
        Derivation whose root judgment is ``g |- m``
    """
    g = tuple(g)
    match m:
        case Var(name):
            if not g:
                return Derivation(Rule.AX_NIL, g, m)
            if g[-1] == name:
                return Derivation(Rule.AX_HERE, g, m)
            return Derivation(Rule.WEAK, g, m, (derive(g[:-1], m),))
        case App(fun, arg):
            return Derivation(Rule.APP, g, m, (derive(g, fun), derive(g, arg)))
        case Up(inner):
            if not g:
                return Derivation(Rule.UP_NIL, g, m, (derive(g, inner),))
            return Derivation(Rule.UP_CONS, g, m, (derive(g[:-1], inner),))
        case Lam(binder, body):
            return Derivation(Rule.LAM, g, m, (derive(g + (binder,), body),))

    raise TypeError(f"Unexpected term in derive: {m!r}")


def _expect(condition: bool, d: Derivation, reason: str):
    if not condition:
        raise InvalidDerivation(f"{d.rule.value} at {d.context} |- {d.subject!r}: {reason}")


def validate_derivation(d: Derivation) -> None:
    """
    Check that every node instantiates its rule.

    Raises:
        InvalidDerivation: On the first node whose premises do not fit the rule
    """
    _expect(len(d.premises) == d.rule.arity, d, "wrong number of premises")
    g, m = d.context, d.subject

    match d.rule:
        case Rule.AX_NIL:
            _expect(not g and isinstance(m, Var), d, "needs nil |- x")
        case Rule.AX_HERE:
            _expect(isinstance(m, Var) and bool(g) and g[-1] == m.name, d, "needs G,x |- x")
        case Rule.WEAK:
            (p,) = d.premises
            _expect(isinstance(m, Var) and bool(g), d, "needs G,z |- x")
            _expect(g[-1] != m.name, d, "side condition z != x violated")
            _expect(p.context == g[:-1] and p.subject == m, d, "premise must be G |- x")
        case Rule.APP:
            left, right = d.premises
            _expect(isinstance(m, App), d, "needs an application")
            _expect(left.context == g and left.subject == m.fun, d, "bad function premise")
            _expect(right.context == g and right.subject == m.arg, d, "bad argument premise")
        case Rule.UP_NIL:
            (p,) = d.premises
            _expect(not g and isinstance(m, Up), d, "needs nil |- ^M")
            _expect(p.context == NIL and p.subject == m.inner, d, "premise must be nil |- M")
        case Rule.UP_CONS:
            (p,) = d.premises
            _expect(bool(g) and isinstance(m, Up), d, "needs G,x |- ^M")
            _expect(p.context == g[:-1] and p.subject == m.inner, d, "premise must be G |- M")
        case Rule.LAM:
            (p,) = d.premises
            _expect(isinstance(m, Lam), d, "needs a lambda")
            _expect(
                p.context == g + (m.binder,) and p.subject == m.body,
                d,
                "premise must be G,x |- M",
            )

    for premise in d.premises:
        validate_derivation(premise)


def fold_derivation(d: Derivation) -> DbTerm:
    """Read the generalized de Bruijn term off a derivation tree."""
    match d.rule:
        case Rule.AX_NIL:
            return DbVar(d.subject.name)
        case Rule.AX_HERE:
            return ONE
        case Rule.WEAK | Rule.UP_NIL | Rule.UP_CONS:
            return DbUp(fold_derivation(d.premises[0]))
        case Rule.APP:
            return DbApp(fold_derivation(d.premises[0]), fold_derivation(d.premises[1]))
        case Rule.LAM:
            return DbLam(fold_derivation(d.premises[0]))

    raise InvalidDerivation(f"Unknown rule {d.rule!r}")


def translate(g: Context, m: Term) -> DbTerm:
    """
    Compute ``||g |- m||`` by recursion on the term, without building the derivation.

    Args:
        g: Context, outermost binder first
        m: Term to translate

    Returns:
        Generalized de Bruijn term
    """
    match m:
        case Var(name):
            # Innermost occurrence wins; each skipped entry adds one weakening.
            depth = 0
            for entry in reversed(g):
                if entry == name:
                    return _wrap_up(ONE, depth)
                depth += 1
            return _wrap_up(DbVar(name), depth)
        case App(fun, arg):
            return DbApp(translate(g, fun), translate(g, arg))
        case Up(inner):
            return DbUp(translate(tuple(g)[:-1], inner))
        case Lam(binder, body):
            return DbLam(translate(tuple(g) + (binder,), body))

    raise TypeError(f"Unexpected term in translate: {m!r}")


def _wrap_up(a: DbTerm, times: int) -> DbTerm:
    for _ in range(times):
        a = DbUp(a)
    return a


def db_named_generalized(z: VarName, a: DbTerm) -> Term:
    """Name every nameless binder ``z``; ``One`` becomes ``z``."""
    match a:
        case DbVar(name):
            return Var(name)
        case One():
            return Var(z)
        case DbLam(body):
            return Lam(z, db_named_generalized(z, body))
        case DbApp(fun, arg):
            return App(db_named_generalized(z, fun), db_named_generalized(z, arg))
        case DbUp(inner):
            return Up(db_named_generalized(z, inner))

    raise TypeError(f"Unexpected term in db_named_generalized: {a!r}")


def chain_rename(z: VarName, g: Context, m: Term) -> Term:
    """
    Apply ``{z/g}``: send every variable of ``g`` to ``z`` at its lifting depth.

    Args:
        z: Target variable
        g: Context; its FIRST element is renamed first
        m: Term

    Returns:
        ``m`` unchanged for the empty context, otherwise
        ``chain_rename(z, rest, {z first}_rest m)``
    """
    g = tuple(g)
    while g:
        x, g = g[0], g[1:]
        m = apply_renaming(Renaming(z, x, g), m)
    return m


def dbterm_eq(a: DbTerm, b: DbTerm) -> bool:
    """Structural identity on generalized de Bruijn terms, compared without recursion."""
    stack = [(a, b)]
    while stack:
        left, right = stack.pop()
        if left is right:
            continue
        if type(left) is not type(right):
            return False
        match left:
            case DbVar(name):
                if name != right.name:
                    return False
            case DbUp(inner):
                stack.append((inner, right.inner))
            case DbLam(body):
                stack.append((body, right.body))
            case DbApp(fun, arg):
                stack.append((arg, right.arg))
                stack.append((fun, right.fun))
    return True


def alpha_eq_via_context(m: Term, n: Term) -> bool:
    """Decide alpha-equivalence by comparing ``||nil |- m||`` and ``||nil |- n||``."""
    return dbterm_eq(translate(NIL, m), translate(NIL, n))
