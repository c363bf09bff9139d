"""
Command-line front end for the weakening kernel.
Decides alpha-equivalence, prints canonical forms, translations, derivations
and free-variable sequences, and ships the property suite as ``selftest``.
"""

import argparse
import logging
import os
import sys
from pathlib import Path
from typing import Callable, List, Optional, TextIO

from dotenv import load_dotenv
from pydantic import ValidationError

from calculus.alpha import DEFAULT_VAR, alpha_eq, db_named
from calculus.debruijn import chain_rename, db_named_generalized, derive, translate
from calculus.freevars import fv_dbterm, fv_term
from calculus.kernel import apply_renaming
from schema import SelftestConfig
from syntax import (
    ParseError,
    parse_context,
    parse_dbterm,
    parse_name,
    parse_renaming,
    parse_term,
    print_dbterm,
    print_derivation,
    print_fvseq,
    print_term,
    read_lines,
)
from testgen.properties import SUITES, run_selftest
from utils.logger import setup_logger
from utils.spinner import Spinner

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT_ERROR = 2

# Python frames only; terms nested a few thousand levels deep stay well inside it.
RECURSION_LIMIT = 20_000


class UsageError(Exception):
    """Bad command line, unreadable argument file, or similar input problem."""


class _ArgumentParser(argparse.ArgumentParser):
    """Raise instead of printing usage and exiting, so ``run`` owns stderr and the exit code."""

    def error(self, message):
        raise UsageError(message)


def setup_logging(verbose: bool = False, stream: Optional[TextIO] = None) -> logging.Logger:
    """
    Configure logging for all components.

    Args:
        verbose: Enable debug logging if True
        stream: Destination for diagnostics (stderr when None)

    Returns:
        Logger instance for the CLI
    """
    log_level = logging.DEBUG if verbose else logging.WARNING

    # calculus and syntax are pure and never log
    setup_logger("testgen", level=log_level, stream=stream)

    return setup_logger("cli", level=log_level, stream=stream)


class _Inputs:
    """Resolves ``-`` (stdin) and ``@file`` arguments to text."""

    def __init__(self, stdin: Optional[TextIO]):
        self.stdin = stdin
        self.stdin_used = False

    def read(self, arg: str) -> str:
        if arg == "-":
            if self.stdin_used:
                raise UsageError("only one argument may be read from stdin")
            self.stdin_used = True
            if self.stdin is None:
                raise UsageError("no stdin available for '-'")
            return self.single(self.stdin.read(), "stdin")
        if arg.startswith("@") and len(arg) > 1:
            path = Path(arg[1:])
            try:
                text = path.read_text(encoding="utf-8")
            except OSError as e:
                raise UsageError(f"cannot read {path}: {e.strerror or e}") from e
            return self.single(text, str(path))
        return arg

    @staticmethod
    def single(text: str, origin: str) -> str:
        items = read_lines(text)
        if len(items) != 1:
            raise UsageError(f"{origin} must contain exactly one item, found {len(items)}")
        return items[0]


def _build_parser() -> _ArgumentParser:
    parser = _ArgumentParser(
        prog="weaken",
        description="Lambda terms with explicit weakenings: alpha-equivalence and de Bruijn forms",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=r"""
        Examples:
          # Decide alpha-equivalence
            python src/main.py alpha "\x. z" "\y. ^z"

          # Translate under the empty context
            python src/main.py translate --ctx nil "\x.\y. x y z"

          # Run the property suite
            python src/main.py selftest --cases 1000
        """,
    )
    parser.add_argument(
        "-v",
        "--verbose",
        action="store_true",
        help="Enable verbose output for debugging",
    )
    commands = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    alpha = commands.add_parser("alpha", help="Decide alpha-equivalence of two terms")
    alpha.add_argument("left")
    alpha.add_argument("right")
    alpha.add_argument("--var", default=DEFAULT_VAR, help="Canonicalization variable (default: z)")

    db = commands.add_parser("db", help="Rename every binder to one variable")
    db.add_argument("--var", default=DEFAULT_VAR)
    db.add_argument("term")

    tr = commands.add_parser("translate", help="Generalized de Bruijn form under a context")
    tr.add_argument("--ctx", default="nil", help="Context, e.g. x,y (default: nil)")
    tr.add_argument("term")

    undb = commands.add_parser("undb", help="Name every nameless binder of a de Bruijn term")
    undb.add_argument("--var", default=DEFAULT_VAR)
    undb.add_argument("dbterm")

    der = commands.add_parser("derive", help="Print the unique derivation of CTX |- TERM")
    der.add_argument("--ctx", default="nil")
    der.add_argument("term")

    rename = commands.add_parser("rename", help="Apply a renaming such as {y x}_a,b")
    rename.add_argument("renaming")
    rename.add_argument("term")

    chain = commands.add_parser("chain", help="Apply the renaming chain {VAR/CTX}")
    chain.add_argument("var")
    chain.add_argument("ctx")
    chain.add_argument("term")

    fv = commands.add_parser("fv", help="Free-variable sequence of a term")
    fv.add_argument("term")

    fvdb = commands.add_parser("fvdb", help="Free-variable sequence of a de Bruijn term")
    fvdb.add_argument("dbterm")

    defaults = SelftestConfig()
    selftest = commands.add_parser("selftest", help="Run the property suite")
    selftest.add_argument(
        "--max-size", type=int, default=int(os.getenv("SELFTEST_MAX_SIZE", defaults.max_size))
    )
    selftest.add_argument(
        "--cases", type=int, default=int(os.getenv("SELFTEST_CASES", defaults.cases))
    )
    selftest.add_argument("--seed", type=int, default=int(os.getenv("SELFTEST_SEED", defaults.seed)))
    selftest.add_argument("--exhaustive-size", type=int, default=defaults.exhaustive_size)
    selftest.add_argument(
        "--suite",
        action="append",
        choices=sorted(SUITES),
        help="Run only this suite (repeatable)",
    )

    return parser


def _cmd_alpha(args, inputs: _Inputs, out: TextIO) -> int:
    left = parse_term(inputs.read(args.left))
    right = parse_term(inputs.read(args.right))
    equivalent = alpha_eq(left, right, parse_name(args.var))
    print("equivalent" if equivalent else "distinct", file=out)
    return EXIT_OK if equivalent else EXIT_NEGATIVE


def _cmd_db(args, inputs: _Inputs, out: TextIO) -> int:
    z = parse_name(args.var)
    print(print_term(db_named(z, parse_term(inputs.read(args.term)))), file=out)
    return EXIT_OK


def _cmd_translate(args, inputs: _Inputs, out: TextIO) -> int:
    g = parse_context(inputs.read(args.ctx))
    print(print_dbterm(translate(g, parse_term(inputs.read(args.term)))), file=out)
    return EXIT_OK


def _cmd_undb(args, inputs: _Inputs, out: TextIO) -> int:
    z = parse_name(args.var)
    print(print_term(db_named_generalized(z, parse_dbterm(inputs.read(args.dbterm)))), file=out)
    return EXIT_OK


def _cmd_derive(args, inputs: _Inputs, out: TextIO) -> int:
    g = parse_context(inputs.read(args.ctx))
    print(print_derivation(derive(g, parse_term(inputs.read(args.term)))), file=out)
    return EXIT_OK


def _cmd_rename(args, inputs: _Inputs, out: TextIO) -> int:
    f = parse_renaming(inputs.read(args.renaming))
    print(print_term(apply_renaming(f, parse_term(inputs.read(args.term)))), file=out)
    return EXIT_OK


def _cmd_chain(args, inputs: _Inputs, out: TextIO) -> int:
    z = parse_name(inputs.read(args.var))
    g = parse_context(inputs.read(args.ctx))
    print(print_term(chain_rename(z, g, parse_term(inputs.read(args.term)))), file=out)
    return EXIT_OK


def _cmd_fv(args, inputs: _Inputs, out: TextIO) -> int:
    print(print_fvseq(fv_term(parse_term(inputs.read(args.term)))), file=out)
    return EXIT_OK


def _cmd_fvdb(args, inputs: _Inputs, out: TextIO) -> int:
    print(print_fvseq(fv_dbterm(parse_dbterm(inputs.read(args.dbterm)))), file=out)
    return EXIT_OK


def _cmd_selftest(args, inputs: _Inputs, out: TextIO) -> int:
    config = SelftestConfig(
        cases=args.cases,
        max_size=args.max_size,
        seed=args.seed,
        exhaustive_size=args.exhaustive_size,
        suites=args.suite,
    )
    with Spinner("Running property suites", stream=args.progress_stream) as spinner:
        report = run_selftest(config, on_suite=lambda name: spinner.update(f"Running {name}"))

    for line in report.summary_lines():
        print(line, file=out)
    for result in report.results:
        if result.failures:
            print(f"counterexample [{result.name}]: {result.counterexample}", file=out)
    return EXIT_OK if report.passed else EXIT_NEGATIVE


COMMANDS: dict[str, Callable[[argparse.Namespace, _Inputs, TextIO], int]] = {
    "alpha": _cmd_alpha,
    "db": _cmd_db,
    "translate": _cmd_translate,
    "undb": _cmd_undb,
    "derive": _cmd_derive,
    "rename": _cmd_rename,
    "chain": _cmd_chain,
    "fv": _cmd_fv,
    "fvdb": _cmd_fvdb,
    "selftest": _cmd_selftest,
}


def run(
    argv: List[str],
    stdin: Optional[TextIO] = None,
    stdout: Optional[TextIO] = None,
    stderr: Optional[TextIO] = None,
) -> int:
    """
    Run one CLI command.

    Args:
        argv: Arguments without the program name
        stdin: Source for ``-`` arguments
        stdout: Destination for results
        stderr: Destination for diagnostics

    Returns:
        0 on success (or "equivalent"), 1 for a negative answer, 2 for input errors
    """
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    verbose = "-v" in argv or "--verbose" in argv
    logger = setup_logging(verbose, stream=stderr)
    previous_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(previous_limit, RECURSION_LIMIT))

    try:
        parser = _build_parser()
        try:
            args = parser.parse_args(argv)
        except SystemExit as e:
            # --help prints and exits through argparse
            return int(e.code or 0)

        args.progress_stream = stderr
        logger.debug(f"Command: {args.command}")
        return COMMANDS[args.command](args, _Inputs(stdin), stdout)

    except ParseError as e:
        logger.error(f"parse error: {e}")
        return EXIT_INPUT_ERROR
    except (UsageError, ValidationError, ValueError) as e:
        logger.error(f"usage error: {_one_line(str(e))}")
        return EXIT_INPUT_ERROR
    except RecursionError:
        logger.error(f"input error: term nesting too deep (limit {RECURSION_LIMIT} levels)")
        return EXIT_INPUT_ERROR
    except Exception as e:
        logger.error(f"internal error: {_one_line(str(e))}")
        if verbose:
            logger.exception("Full traceback:")
        return EXIT_INPUT_ERROR
    finally:
        sys.setrecursionlimit(previous_limit)


def _one_line(text: str) -> str:
    return " ".join(text.split())


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point."""
    load_dotenv()
    return run(sys.argv[1:] if argv is None else argv, stdin=sys.stdin)


if __name__ == "__main__":
    sys.exit(main())
