"""
Parsers for the ASCII surface syntax.

Grammar (terms; DbTerms replace ``'\\' VAR '.'`` by ``'\\' '.'`` and admit
the atom ``1``)::

    term    ::= '\\' VAR '.' term | app
    app     ::= operand+                 (left-associative)
    operand ::= '^'* atom
    atom    ::= VAR | '(' term ')'

A lambda body extends as far right as possible. ``^`` applies to the atom
right after it. ``λ``, ``↑`` and ``1̲`` are accepted as input aliases.
"""

import re
from dataclasses import dataclass
from typing import Callable, List, Optional, Tuple

from calculus.debruijn import ONE, DbApp, DbLam, DbTerm, DbUp, DbVar
from calculus.freevars import FvSeq
from calculus.kernel import (
    App,
    Context,
    Lam,
    Renaming,
    Term,
    Up,
    Var,
    VarName,
    is_valid_name,
)

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
    | (?P<lam>\\|λ)
    | (?P<dot>\.)
    | (?P<up>\^|↑)
    | (?P<lpar>\()
    | (?P<rpar>\))
    | (?P<one>1\u0332?)
    | (?P<name>[A-Za-z_][A-Za-z0-9_']*)
    """,
    re.VERBOSE,
)

_TOKEN_LABELS = {
    "lam": "'\\'",
    "dot": "'.'",
    "up": "'^'",
    "lpar": "'('",
    "rpar": "')'",
    "one": "'1'",
    "name": "variable",
}


@dataclass(frozen=True, slots=True)
class SourceSpan:
    """Half-open range of UTF-8 byte offsets into the parsed input."""

    start: int
    end: int

    @classmethod
    def from_chars(cls, text: str, start: int, end: int) -> "SourceSpan":
        start = max(0, min(start, len(text)))
        end = max(start, min(end, len(text)))
        return cls(
            len(text[:start].encode("utf-8")),
            len(text[:end].encode("utf-8")),
        )

    def __str__(self):
        return f"{self.start}-{self.end}"


class ParseError(ValueError):
    """Malformed input, with the offending span."""

    def __init__(self, message: str, span: SourceSpan):
        super().__init__(message)
        self.message = message
        self.span = span

    def __str__(self):
        return f"{self.message} at bytes {self.span}"


def _error(text: str, message: str, start: int, end: int) -> ParseError:
    return ParseError(message, SourceSpan.from_chars(text, start, end))


@dataclass(frozen=True, slots=True)
class _Token:
    kind: str
    text: str
    start: int
    end: int


def _tokenize(text: str) -> List[_Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            raise _error(text, f"unexpected character {text[pos]!r}", pos, pos + 1)
        kind = match.lastgroup
        if kind != "ws":
            tokens.append(_Token(kind, match.group(), match.start(), match.end()))
        pos = match.end()
    return tokens


class _TermParser:
    """Recursive descent over the token list; ``nameless`` selects the DbTerm grammar."""

    def __init__(self, text: str, nameless: bool):
        self.text = text
        self.nameless = nameless
        self.tokens = _tokenize(text)
        self.pos = 0

    def parse(self):
        if not self.tokens:
            raise _error(self.text, "empty input", 0, len(self.text))
        result = self.term()
        token = self.peek()
        if token is not None:
            if token.kind == "rpar":
                raise self.fail(token, "unbalanced parentheses: unexpected ')'")
            if token.kind == "lam":
                raise self.fail(token, "lambda in argument position must be parenthesized")
            raise self.fail(token, f"unexpected {_TOKEN_LABELS[token.kind]}")
        return result

    def peek(self) -> Optional[_Token]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def advance(self) -> _Token:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def fail(self, token: Optional[_Token], message: str) -> ParseError:
        if token is None:
            end = len(self.text)
            return _error(self.text, f"{message} (unexpected end of input)", end, end)
        return _error(self.text, message, token.start, token.end)

    def expect(self, kind: str) -> _Token:
        token = self.peek()
        if token is None or token.kind != kind:
            found = "end of input" if token is None else _TOKEN_LABELS[token.kind]
            raise self.fail(token, f"expected {_TOKEN_LABELS[kind]}, found {found}")
        return self.advance()

    def term(self):
        token = self.peek()
        if token is not None and token.kind == "lam":
            self.advance()
            if self.nameless:
                self.expect("dot")
                return DbLam(self.term())
            binder = self.name(self.expect("name"))
            self.expect("dot")
            return Lam(binder, self.term())
        return self.app()

    def app(self):
        result = self.operand()
        while (token := self.peek()) is not None and token.kind in ("up", "lpar", "name", "one"):
            arg = self.operand()
            result = DbApp(result, arg) if self.nameless else App(result, arg)
        return result

    def operand(self):
        ups = 0
        while (token := self.peek()) is not None and token.kind == "up":
            self.advance()
            ups += 1
        result = self.atom()
        wrap = DbUp if self.nameless else Up
        for _ in range(ups):
            result = wrap(result)
        return result

    def atom(self):
        token = self.peek()
        if token is None:
            raise self.fail(None, "expected a term")
        if token.kind == "name":
            self.advance()
            name = self.name(token)
            return DbVar(name) if self.nameless else Var(name)
        if token.kind == "one":
            self.advance()
            if not self.nameless:
                raise self.fail(token, "'1' is reserved and cannot name a variable")
            return ONE
        if token.kind == "lpar":
            self.advance()
            inner = self.term()
            closing = self.peek()
            if closing is None or closing.kind != "rpar":
                if closing is None:
                    raise _error(
                        self.text, "unbalanced parentheses: '(' is never closed",
                        token.start, token.end,
                    )
                raise self.fail(closing, f"expected ')', found {_TOKEN_LABELS[closing.kind]}")
            self.advance()
            return inner
        if token.kind == "lam":
            raise self.fail(token, "lambda in argument position must be parenthesized")
        raise self.fail(token, f"unexpected {_TOKEN_LABELS[token.kind]}")

    def name(self, token: _Token) -> VarName:
        if not is_valid_name(token.text):
            raise self.fail(token, f"{token.text!r} is reserved and cannot name a variable")
        return token.text


def _parse(text: str, nameless: bool):
    try:
        return _TermParser(text, nameless).parse()
    except RecursionError:
        raise _error(text, "term nesting too deep", 0, len(text)) from None


def parse_term(text: str) -> Term:
    """
    Parse a named term.

    Raises:
        ParseError: On empty input, unexpected tokens, unbalanced parentheses
            or nesting deeper than the recursion limit allows
    """
    return _parse(text, nameless=False)


def parse_dbterm(text: str) -> DbTerm:
    """
    Parse a generalized de Bruijn term (``\\.`` for nameless lambda, ``1`` for the bound index).

    Raises:
        ParseError: On empty input, unexpected tokens or unbalanced parentheses
    """
    return _parse(text, nameless=True)


def _parse_names(text: str, start: int, end: int) -> Context:
    """Parse a comma-separated name list occupying ``text[start:end]``."""
    body = text[start:end]
    if body.strip() in ("", "nil"):
        return ()

    names = []
    offset = start
    for part in body.split(","):
        stripped = part.strip()
        lead = len(part) - len(part.lstrip())
        if not is_valid_name(stripped):
            label = "missing variable name" if not stripped else f"invalid variable name {stripped!r}"
            raise _error(text, label, offset + lead, offset + lead + max(len(stripped), 1))
        names.append(stripped)
        offset += len(part) + 1
    return tuple(names)


def parse_context(text: str) -> Context:
    """
    Parse a context: comma-separated names, or ``nil``/empty for the empty context.

    Raises:
        ParseError: On malformed names
    """
    return _parse_names(text, 0, len(text))


_RENAMING_RE = re.compile(r"\s*\{\s*(?P<target>[^\s{}]+)\s+(?P<source>[^\s{}]+)\s*\}(?:_(?P<lifts>.*?))?\s*\Z", re.S)


def parse_renaming(text: str) -> Renaming:
    """
    Parse ``{y x}`` or ``{y x}_a,b,c`` (lifts outermost-first).

    Raises:
        ParseError: On malformed braces or names
    """
    match = _RENAMING_RE.match(text)
    if match is None:
        raise _error(text, "expected a renaming of the form {y x} or {y x}_a,b", 0, len(text))

    for group in ("target", "source"):
        if not is_valid_name(match.group(group)):
            raise _error(
                text, f"invalid variable name {match.group(group)!r}",
                match.start(group), match.end(group),
            )

    lifts: Tuple[VarName, ...] = ()
    if match.group("lifts") is not None:
        if not match.group("lifts").strip():
            raise _error(text, "missing lifts after '_'", match.start("lifts") - 1, match.end("lifts"))
        lifts = _parse_names(text, match.start("lifts"), match.end("lifts"))

    return Renaming(match.group("target"), match.group("source"), lifts)


_LEVEL_RE = re.compile(r"\s*(?P<index>\d+):\{(?P<names>[^{}]*)\}")


def parse_fvseq(text: str) -> FvSeq:
    """
    Parse ``0:{x} 2:{y,z}`` (nonempty levels, increasing) or ``{}``.

    Raises:
        ParseError: On malformed levels, empty sets or out-of-order indices
    """
    if text.strip() == "{}":
        return FvSeq()

    levels = {}
    pos = 0
    stripped_end = len(text.rstrip())
    while pos < stripped_end:
        match = _LEVEL_RE.match(text, pos)
        if match is None:
            raise _error(text, "expected a level of the form i:{x,y}", pos, stripped_end)
        index = int(match.group("index"))
        if levels and index <= max(levels):
            raise _error(text, "level indices must increase", match.start("index"), match.end("index"))
        names = _parse_names(text, match.start("names"), match.end("names"))
        if not names:
            raise _error(text, "levels must be nonempty", match.start(), match.end())
        levels[index] = names
        pos = match.end()

    if not levels:
        raise _error(text, "empty input", 0, len(text))

    width = max(levels) + 1
    return FvSeq.of(levels.get(i, ()) for i in range(width))


def read_lines(text: str) -> List[str]:
    """Split fixture text into items: one per line, blank lines and ``#`` comments dropped."""
    items = []
    for line in text.splitlines():
        content = line.split("#", 1)[0].strip()
        if content:
            items.append(content)
    return items


def parse_many(text: str, parser: Callable[[str], object]) -> list:
    """Parse every item of a fixture text with ``parser``."""
    return [parser(item) for item in read_lines(text)]


def parse_name(text: str) -> VarName:
    """
    Parse a single variable name, ignoring surrounding whitespace.

    Raises:
        ParseError: If the text is not a valid, unreserved name
    """
    stripped = text.strip()
    if not is_valid_name(stripped):
        start = len(text) - len(text.lstrip())
        raise _error(text, f"invalid variable name {stripped!r}", start, start + max(len(stripped), 1))
    return stripped
