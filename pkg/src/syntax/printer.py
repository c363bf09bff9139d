"""
Pretty-printers; every printed value parses back to an identical value.

Parentheses are added only where the grammar needs them, plus one visual
convention: a weakened term at the head of an application is parenthesized,
so the head of ``(^1) 1 ^^z`` reads as one operand.
"""

from typing import Callable, List, Tuple

from calculus.debruijn import DbApp, DbLam, DbTerm, DbUp, DbVar, Derivation, One
from calculus.freevars import FvSeq
from calculus.kernel import App, Context, Lam, Renaming, Term, Up, Var

# Node views shared by both term languages:
#   ("atom", text) | ("lam", header, body) | ("app", fun, arg) | ("up", inner)


def _view_term(m: Term) -> tuple:
    match m:
        case Var(name):
            return ("atom", name)
        case Lam(binder, body):
            return ("lam", f"\\{binder}.", body)
        case App(fun, arg):
            return ("app", fun, arg)
        case Up(inner):
            return ("up", inner)
    raise TypeError(f"Unexpected term in print_term: {m!r}")


def _view_dbterm(a: DbTerm) -> tuple:
    match a:
        case DbVar(name):
            return ("atom", name)
        case One():
            return ("atom", "1")
        case DbLam(body):
            return ("lam", "\\.", body)
        case DbApp(fun, arg):
            return ("app", fun, arg)
        case DbUp(inner):
            return ("up", inner)
    raise TypeError(f"Unexpected term in print_dbterm: {a!r}")


class _Printer:
    def __init__(self, view: Callable[[object], tuple]):
        self.view = view

    def term(self, node) -> str:
        shape = self.view(node)
        if shape[0] == "lam":
            _, header, body = shape
            if self.view(body)[0] == "lam":
                return header + self.term(body)
            return f"{header} {self.term(body)}"
        if shape[0] == "app":
            return self.spine(node)
        return self.operand(node)

    def spine(self, node) -> str:
        args: List[object] = []
        head = node
        while (shape := self.view(head))[0] == "app":
            args.append(shape[2])
            head = shape[1]
        args.reverse()
        parts = [self.head(head)] + [self.argument(arg) for arg in args]
        return " ".join(parts)

    def head(self, node) -> str:
        kind = self.view(node)[0]
        if kind == "atom":
            return self.operand(node)
        return f"({self.term(node)})"

    def argument(self, node) -> str:
        kind = self.view(node)[0]
        if kind in ("atom", "up"):
            return self.operand(node)
        return f"({self.term(node)})"

    def operand(self, node) -> str:
        shape = self.view(node)
        if shape[0] == "atom":
            return shape[1]
        if shape[0] == "up":
            return "^" + self.operand(shape[1])
        return f"({self.term(node)})"


_TERM_PRINTER = _Printer(_view_term)
_DBTERM_PRINTER = _Printer(_view_dbterm)


def print_term(m: Term) -> str:
    return _TERM_PRINTER.term(m)


def print_dbterm(a: DbTerm) -> str:
    return _DBTERM_PRINTER.term(a)


def print_context(g: Context) -> str:
    return ",".join(g) if g else "nil"


def print_renaming(f: Renaming) -> str:
    text = f"{{{f.target} {f.source}}}"
    if f.lifts:
        text += "_" + ",".join(f.lifts)
    return text


def print_fvseq(fv: FvSeq) -> str:
    """Nonempty levels as ``i:{a,b}`` in increasing order; ``{}`` when all are empty."""
    parts = [
        f"{i}:{{{','.join(sorted(level))}}}"
        for i, level in enumerate(fv.levels)
        if level
    ]
    return " ".join(parts) if parts else "{}"


def print_derivation(d: Derivation) -> str:
    """One judgment per line, root first, premises indented by two spaces."""
    lines: List[str] = []
    stack: List[Tuple[Derivation, int]] = [(d, 0)]
    while stack:
        node, depth = stack.pop()
        lines.append(
            f"{'  ' * depth}{node.rule.value}: "
            f"{print_context(node.context)} ⊢ {print_term(node.subject)}"
        )
        for premise in reversed(node.premises):
            stack.append((premise, depth + 1))
    return "\n".join(lines)
