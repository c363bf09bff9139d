import io
import logging
import sys

import pytest

from main import EXIT_INPUT_ERROR, EXIT_NEGATIVE, EXIT_OK, run, setup_logging


def invoke(*argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdin=io.StringIO(stdin), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["alpha", r"\x. z", r"\y. ^z"], "equivalent"),
        (["translate", "--ctx", "nil", r"\x.\y. x y z"], r"\.\. (^1) 1 ^^z"),
        (["translate", "--ctx", "x,y", "x"], "^1"),
        (["db", "--var", "z", r"\x.\y. y"], r"\z.\z. z"),
        (["db", r"\x.\y. x"], r"\z.\z. ^z"),
        (["undb", r"\.\. (^1) 1 ^^z"], r"\z.\z. (^z) z ^^z"),
        (["undb", "--var", "x", r"\.\. (^1) 1 ^^z"], r"\x.\x. (^x) x ^^z"),
        (["rename", "{y x}", r"\z. x"], r"\z. ^y"),
        (["rename", "{y x}_z", "z"], "z"),
        (["chain", "z", "x,y", "x"], "^z"),
        (["fv", "x"], "0:{x}"),
        (["fv", "^x"], "1:{x}"),
        (["fv", r"\x. ^x"], "0:{x}"),
        (["fvdb", r"\. ^x"], "0:{x}"),
        (["fv", r"\x.\x. ^x"], "{}"),
        (["fvdb", r"\.\. ^x"], "0:{x}"),
        (["fvdb", "1"], "{}"),
        (["derive", "--ctx", "x", "x"], "AxHere: x ⊢ x"),
    ],
)
def test_commands(argv, expected):
    code, out, err = invoke(*argv)
    assert code == EXIT_OK, err
    assert out == expected + "\n"
    assert err == ""


def test_distinct_terms_exit_one():
    code, out, _ = invoke("alpha", r"\x. x", r"\x. ^x")
    assert code == EXIT_NEGATIVE
    assert out == "distinct\n"


def test_derive_prints_whole_tree():
    code, out, _ = invoke("derive", r"\x.\y. x y z")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert len(lines) == 10
    assert lines[0] == r"LamR: nil ⊢ \x.\y. x y z"
    assert lines[1].startswith("  LamR: x ⊢ ")


def test_parse_error_reports_span():
    code, out, err = invoke("alpha", "(x", "x")
    assert code == EXIT_INPUT_ERROR
    assert out == ""
    assert "parse error" in err
    assert "bytes 0-1" in err


def test_usage_errors():
    assert invoke("nonsense")[0] == EXIT_INPUT_ERROR
    assert invoke("alpha", "x")[0] == EXIT_INPUT_ERROR
    code, _, err = invoke("db", "--var", "1", "x")
    assert code == EXIT_INPUT_ERROR
    assert "invalid variable name" in err


def test_stdin_argument():
    code, out, _ = invoke("translate", "-", stdin="# comment\n\\x. x\n")
    assert code == EXIT_OK
    assert out == "\\. 1\n"


def test_stdin_may_be_read_once():
    code, _, err = invoke("alpha", "-", "-", stdin="x\n")
    assert code == EXIT_INPUT_ERROR
    assert "stdin" in err


def test_file_argument(tmp_path):
    path = tmp_path / "term.txt"
    path.write_text("# the identity\n\\y. y\n", encoding="utf-8")
    code, out, _ = invoke("alpha", f"@{path}", r"\x. x")
    assert code == EXIT_OK
    assert out == "equivalent\n"


def test_file_argument_errors(tmp_path):
    path = tmp_path / "two.txt"
    path.write_text("x\ny\n", encoding="utf-8")
    code, _, err = invoke("fv", f"@{path}")
    assert code == EXIT_INPUT_ERROR
    assert "exactly one item" in err
    code, _, err = invoke("fv", f"@{tmp_path / 'missing.txt'}")
    assert code == EXIT_INPUT_ERROR
    assert "cannot read" in err


def test_selftest_small_run():
    code, out, _ = invoke(
        "selftest", "--cases", "20", "--max-size", "8", "--exhaustive-size", "3"
    )
    assert code == EXIT_OK
    assert out.splitlines()[-1].startswith("PASSED")


def test_selftest_single_suite():
    code, out, _ = invoke("selftest", "--cases", "5", "--suite", "renaming-transitivity")
    assert code == EXIT_OK
    assert "renaming-transitivity" in out
    assert out.splitlines()[-1] == "PASSED: 1/1 suites"


def test_selftest_rejects_bad_case_count():
    assert invoke("selftest", "--cases", "0")[0] == EXIT_INPUT_ERROR


class _Tty(io.StringIO):
    def isatty(self):
        return True


def test_selftest_progress_goes_to_given_stderr():
    out, err = _Tty(), _Tty()
    code = run(
        ["selftest", "--cases", "3", "--suite", "renaming-transitivity"],
        stdin=io.StringIO(),
        stdout=out,
        stderr=err,
    )
    assert code == EXIT_OK
    assert "\r" in err.getvalue()
    assert "\r" not in out.getvalue()


class TestDeepTerms:
    def test_long_application_spine(self):
        spine = " ".join(["x"] * 3000)
        code, out, err = invoke("translate", spine)
        assert code == EXIT_OK, err
        assert out == spine + "\n"

    def test_long_spine_alpha(self):
        spine = " ".join(["y"] * 3000)
        code, out, _ = invoke("alpha", spine, spine)
        assert code == EXIT_OK
        assert out == "equivalent\n"

    def test_long_weakening_chain(self):
        code, out, err = invoke("fv", "^" * 1500 + "x")
        assert code == EXIT_OK, err
        assert out == "1500:{x}\n"

    def test_deep_parentheses(self):
        code, out, err = invoke("db", "(" * 600 + "x" + ")" * 600)
        assert code == EXIT_OK, err
        assert out == "x\n"

    def test_nesting_beyond_limit_is_an_input_error(self):
        code, out, err = invoke("fv", "^" * 30000 + "x")
        assert code == EXIT_INPUT_ERROR
        assert out == ""
        assert "too deep" in err
        assert "internal error" not in err

    def test_recursion_limit_is_restored(self):
        before = sys.getrecursionlimit()
        invoke("fv", "^" * 1500 + "x")
        assert sys.getrecursionlimit() == before


def test_setup_logging_configures_logging_components():
    stream = io.StringIO()
    cli = setup_logging(True, stream=stream)
    assert cli.name == "cli"
    assert cli.level == logging.DEBUG
    testgen = logging.getLogger("testgen")
    assert testgen.level == logging.DEBUG
    assert [h.stream for h in testgen.handlers] == [stream]
    logging.getLogger("testgen.properties").debug("suite started")
    assert "suite started" in stream.getvalue()
