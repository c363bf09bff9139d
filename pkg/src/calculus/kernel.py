"""
Core term representation and the renaming-function family.

Terms are the set of named lambda terms extended with the explicit weakening
constructor ``Up`` (written ``^M``). A renaming ``{y x}_G`` maps ``x`` to ``y``
and wraps every other free variable in ``Up``; each lift in ``G`` records one
binder the renaming has been pushed under.
"""

import re
from dataclasses import dataclass
from typing import Iterator, Tuple, Union

VarName = str
Context = Tuple[VarName, ...]
Path = Tuple[int, ...]

NIL: Context = ()

RESERVED_NAMES = frozenset({"1", "nil"})

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_']*")


class InvalidName(ValueError):
    """Raised when a string cannot be used as a variable name."""


def is_valid_name(name: str) -> bool:
    """Check a candidate variable name without raising."""
    return (
        isinstance(name, str)
        and _NAME_RE.fullmatch(name) is not None
        and name not in RESERVED_NAMES
    )


def validate_name(name: str) -> VarName:
    """
    Validate a variable name.

    Args:
        name: Candidate name

    Returns:
        The name unchanged

    Raises:
        InvalidName: If the name is empty, malformed, or reserved
    """
    if not is_valid_name(name):
        raise InvalidName(f"Invalid variable name: {name!r}")
    return name


@dataclass(frozen=True, slots=True)
class Var:
    name: VarName

    def __str__(self):
        return self.name


@dataclass(frozen=True, slots=True)
class App:
    fun: "Term"
    arg: "Term"


@dataclass(frozen=True, slots=True)
class Lam:
    binder: VarName
    body: "Term"


@dataclass(frozen=True, slots=True)
class Up:
    """Explicit weakening: ``inner`` does not see the nearest enclosing binder."""

    inner: "Term"


Term = Union[Var, App, Lam, Up]


@dataclass(frozen=True, slots=True)
class Renaming:
    """
    The function ``{target source}_lifts``.

    Lifts are stored outermost-first; application peels the LAST lift, the
    one added by the innermost binder.
    """

    target: VarName
    source: VarName
    lifts: Context = NIL

    def __post_init__(self):
        if not isinstance(self.lifts, tuple):
            object.__setattr__(self, "lifts", tuple(self.lifts))


def lift_renaming(f: Renaming, x: VarName) -> Renaming:
    """Push ``f`` under a binder for ``x`` (``F`` becomes ``F_x``)."""
    return Renaming(f.target, f.source, f.lifts + (x,))


def lower_renaming(f: Renaming) -> Renaming:
    """Drop the innermost lift (``F_x`` becomes ``F``)."""
    return Renaming(f.target, f.source, f.lifts[:-1])


def apply_renaming(f: Renaming, m: Term) -> Term:
    """
    Apply a renaming to a term by structural recursion.

    Each recursive call shrinks the term or the lift list, so the function is
    total. Binder names are never changed.

    Args:
        f: Renaming to apply
        m: Term to rename

    Returns:
        The renamed term
    """
    match m:
        case App(fun, arg):
            return App(apply_renaming(f, fun), apply_renaming(f, arg))
        case Lam(binder, body):
            return Lam(binder, apply_renaming(lift_renaming(f, binder), body))
        case Up(inner):
            if not f.lifts:
                return m
            return Up(apply_renaming(lower_renaming(f), inner))
        case Var(name):
            if not f.lifts:
                return Var(f.target) if name == f.source else Up(m)
            if name == f.lifts[-1]:
                return m
            return Up(apply_renaming(lower_renaming(f), m))

    raise TypeError(f"Unexpected term in apply_renaming: {m!r}")


def term_size(m: Term) -> int:
    """Count constructors."""
    match m:
        case Var():
            return 1
        case Up(inner):
            return 1 + term_size(inner)
        case Lam(_, body):
            return 1 + term_size(body)
        case App(fun, arg):
            return 1 + term_size(fun) + term_size(arg)

    raise TypeError(f"Unexpected term in term_size: {m!r}")


def term_eq(a: Term, b: Term) -> bool:
    """
    Structural identity; binder names are compared literally.

    Walks both terms with an explicit stack, so long application spines and
    weakening chains compare without deep recursion.
    """
    stack = [(a, b)]
    while stack:
        left, right = stack.pop()
        if left is right:
            continue
        if type(left) is not type(right):
            return False
        match left:
            case Var(name):
                if name != right.name:
                    return False
            case Up(inner):
                stack.append((inner, right.inner))
            case Lam(binder, body):
                if binder != right.binder:
                    return False
                stack.append((body, right.body))
            case App(fun, arg):
                stack.append((arg, right.arg))
                stack.append((fun, right.fun))
    return True


def subterms(m: Term, path: Path = ()) -> Iterator[Tuple[Path, Term]]:
    """Yield ``(path, subterm)`` pairs in pre-order."""
    yield path, m
    match m:
        case App(fun, arg):
            yield from subterms(fun, path + (0,))
            yield from subterms(arg, path + (1,))
        case Lam(_, body):
            yield from subterms(body, path + (0,))
        case Up(inner):
            yield from subterms(inner, path + (0,))


def replace_at(m: Term, path: Path, replacement: Term) -> Term:
    """
    Replace the subterm at ``path``.

    Raises:
        IndexError: If the path does not address a subterm of ``m``
    """
    if not path:
        return replacement
    head, rest = path[0], path[1:]
    match m:
        case App(fun, arg) if head == 0:
            return App(replace_at(fun, rest, replacement), arg)
        case App(fun, arg) if head == 1:
            return App(fun, replace_at(arg, rest, replacement))
        case Lam(binder, body) if head == 0:
            return Lam(binder, replace_at(body, rest, replacement))
        case Up(inner) if head == 0:
            return Up(replace_at(inner, rest, replacement))

    raise IndexError(f"Invalid position {path} in {m!r}")


def free_names(m: Term) -> frozenset:
    """All names occurring as variable leaves, bound or not."""
    return frozenset(sub.name for _, sub in subterms(m) if isinstance(sub, Var))


def binder_names(m: Term) -> Tuple[VarName, ...]:
    """Binder names in pre-order."""
    return tuple(sub.binder for _, sub in subterms(m) if isinstance(sub, Lam))
