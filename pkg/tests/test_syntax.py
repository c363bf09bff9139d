from pathlib import Path

import pytest
from hypothesis import given

from calculus.alpha import db_named
from calculus.debruijn import ONE, DbApp, DbLam, DbUp, DbVar, derive, translate
from calculus.freevars import FvSeq, fv_term
from calculus.kernel import NIL, App, Lam, Renaming, Up, Var
from syntax import (
    ParseError,
    parse_context,
    parse_dbterm,
    parse_fvseq,
    parse_many,
    parse_name,
    parse_renaming,
    parse_term,
    print_context,
    print_dbterm,
    print_derivation,
    print_fvseq,
    print_renaming,
    print_term,
    read_lines,
)
from strategies import contexts, dbterms, renamings, terms

GOLDEN = Path(__file__).parent / "golden"

x, y, z = Var("x"), Var("y"), Var("z")
XYZ_DB = DbLam(DbLam(DbApp(DbApp(DbUp(ONE), ONE), DbUp(DbUp(DbVar("z"))))))


class TestParseTerm:
    def test_lambda_body_extends_right(self):
        assert parse_term(r"\x.\y. x y z") == Lam("x", Lam("y", App(App(x, y), z)))

    def test_up_binds_tightest(self):
        assert parse_term("^^z") == Up(Up(z))
        assert parse_term("(^x) y") == App(Up(x), y)
        assert parse_term("^x y") == App(Up(x), y)
        assert parse_term(r"^(\x. x)") == Up(Lam("x", x))

    def test_application_is_left_associative(self):
        assert parse_term("x y z") == App(App(x, y), z)
        assert parse_term("x (y z)") == App(x, App(y, z))

    def test_unicode_aliases(self):
        assert parse_term("λx. ↑x") == Lam("x", Up(x))

    def test_whitespace_is_insignificant(self):
        assert parse_term("  \\x .  x  ") == Lam("x", x)


class TestParseDbTerm:
    def test_example(self):
        assert parse_dbterm(r"\.\. (^1) 1 ^^z") == XYZ_DB

    def test_unicode_aliases(self):
        assert parse_dbterm("λ.λ. (↑1̲) 1̲ ↑↑z") == XYZ_DB

    def test_one(self):
        assert parse_dbterm("1") == ONE


@pytest.mark.parametrize(
    "text, message, span",
    [
        ("", "empty input", "0-0"),
        ("(x", "unbalanced parentheses", "0-1"),
        ("x )", "unbalanced parentheses", "2-3"),
        (r"\x. x \y. y", "must be parenthesized", "6-7"),
        ("x $", "unexpected character", "2-3"),
        ("1", "reserved", "0-1"),
        (r"\nil. x", "reserved", "1-4"),
        (r"\x x", "expected '.'", "3-4"),
        ("λx. x)", "unbalanced parentheses", "6-7"),
        (r"\x.", "expected a term", "3-3"),
    ],
)
def test_parse_term_errors(text, message, span):
    with pytest.raises(ParseError) as info:
        parse_term(text)
    assert message in str(info.value)
    assert str(info.value.span) == span
    assert str(info.value).endswith(f"at bytes {span}")


def test_nesting_past_the_recursion_limit_is_a_parse_error():
    text = "(" * 10000 + "x" + ")" * 10000
    with pytest.raises(ParseError, match="too deep") as info:
        parse_term(text)
    assert str(info.value.span) == f"0-{len(text)}"


def test_long_spines_and_chains_parse_iteratively():
    spine = parse_term(" ".join(["x"] * 3000))
    depth = 0
    while isinstance(spine, App):
        spine, depth = spine.fun, depth + 1
    assert depth == 2999
    chain = parse_dbterm("^" * 3000 + "1")
    for _ in range(3000):
        chain = chain.inner
    assert chain == ONE


def test_parse_dbterm_rejects_named_binder():
    with pytest.raises(ParseError) as info:
        parse_dbterm(r"\x. 1")
    assert str(info.value.span) == "1-2"


class TestContextsAndRenamings:
    def test_contexts(self):
        assert parse_context("nil") == NIL
        assert parse_context("") == NIL
        assert parse_context("x, y") == ("x", "y")
        assert print_context(NIL) == "nil"
        assert print_context(("x", "y")) == "x,y"

    def test_context_errors(self):
        with pytest.raises(ParseError, match="missing variable name"):
            parse_context("x,,y")
        with pytest.raises(ParseError, match="invalid variable name"):
            parse_context("x,1")

    def test_renamings(self):
        assert parse_renaming("{y x}") == Renaming("y", "x")
        assert parse_renaming("{y x}_a,b") == Renaming("y", "x", ("a", "b"))
        assert print_renaming(Renaming("y", "x", ("a", "b"))) == "{y x}_a,b"

    def test_renaming_errors(self):
        with pytest.raises(ParseError, match="missing lifts"):
            parse_renaming("{y x}_")
        with pytest.raises(ParseError, match="form"):
            parse_renaming("{y}")
        with pytest.raises(ParseError, match="invalid variable name"):
            parse_renaming("{nil x}")

    def test_names(self):
        assert parse_name(" z ") == "z"
        with pytest.raises(ParseError):
            parse_name("1")


class TestFvSeqSyntax:
    def test_print(self):
        assert print_fvseq(FvSeq.of([{"x"}, set(), {"z", "y"}])) == "0:{x} 2:{y,z}"
        assert print_fvseq(FvSeq()) == "{}"

    def test_parse(self):
        assert parse_fvseq("0:{x} 2:{y,z}") == FvSeq.of([{"x"}, set(), {"y", "z"}])
        assert parse_fvseq("{}") == FvSeq()

    @pytest.mark.parametrize("text", ["2:{x} 1:{y}", "0:{}", "0:x", ""])
    def test_parse_errors(self, text):
        with pytest.raises(ParseError):
            parse_fvseq(text)


class TestPrinter:
    @pytest.mark.parametrize(
        "term, text",
        [
            (Lam("x", Lam("y", App(App(x, y), z))), r"\x.\y. x y z"),
            (App(Lam("x", x), y), r"(\x. x) y"),
            (App(x, App(y, z)), "x (y z)"),
            (App(x, Lam("y", y)), r"x (\y. y)"),
            (Up(Lam("x", x)), r"^(\x. x)"),
            (App(Up(x), y), "(^x) y"),
            (App(x, Up(Up(y))), "x ^^y"),
            (Lam("x", Up(x)), r"\x. ^x"),
        ],
    )
    def test_print_term(self, term, text):
        assert print_term(term) == text

    def test_print_dbterm(self):
        assert print_dbterm(XYZ_DB) == r"\.\. (^1) 1 ^^z"

    def test_print_derivation(self):
        assert print_derivation(derive(("x",), x)) == "AxHere: x ⊢ x"
        assert print_derivation(derive(NIL, Lam("x", x))) == (
            "LamR: nil ⊢ \\x. x\n  AxHere: x ⊢ x"
        )


def test_read_lines_drops_comments_and_blanks():
    text = "# header\n\nx  # trailing\n  \\x. x\n"
    assert read_lines(text) == ["x", r"\x. x"]
    assert parse_many(text, parse_term) == [x, Lam("x", x)]


def _golden(name: str):
    return read_lines((GOLDEN / name).read_text(encoding="utf-8"))


def test_golden_fixtures():
    sources = parse_many((GOLDEN / "terms.txt").read_text(encoding="utf-8"), parse_term)
    translated = _golden("terms.translate.golden")
    canonical = _golden("terms.db.golden")
    free = _golden("terms.fv.golden")
    assert len(sources) == len(translated) == len(canonical) == len(free)

    for m, want_db, want_named, want_fv in zip(sources, translated, canonical, free):
        assert print_dbterm(translate(NIL, m)) == want_db
        assert print_term(db_named("z", m)) == want_named
        assert print_fvseq(fv_term(m)) == want_fv


@given(m=terms)
def test_term_roundtrip(m):
    assert parse_term(print_term(m)) == m


@given(a=dbterms)
def test_dbterm_roundtrip(a):
    assert parse_dbterm(print_dbterm(a)) == a


@given(g=contexts)
def test_context_roundtrip(g):
    assert parse_context(print_context(g)) == g


@given(f=renamings)
def test_renaming_roundtrip(f):
    assert parse_renaming(print_renaming(f)) == f


@given(m=terms)
def test_fvseq_roundtrip(m):
    assert parse_fvseq(print_fvseq(fv_term(m))) == fv_term(m)
