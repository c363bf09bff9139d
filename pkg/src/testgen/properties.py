"""
Property suites run by ``selftest``.

Each suite checks one law of the calculus on random cases (and, where the
law is cheap enough, on every small term over ``x, y``). Suites are
registered by name and always reported in name order.
"""

import logging
import time
import zlib
from typing import Callable, Dict, Iterable, List, Optional

from calculus.alpha import alpha_eq, db_named, random_alpha_walk
from calculus.debruijn import (
    alpha_eq_via_context,
    chain_rename,
    db_named_generalized,
    derive,
    fold_derivation,
    translate,
    validate_derivation,
    InvalidDerivation,
)
from calculus.freevars import fv_dbterm, fv_term
from calculus.kernel import NIL, Lam, Renaming, Term, Up, Var, apply_renaming
from schema import DEFAULT_POOL, GenConfig, SelftestConfig, SelftestReport, SuiteResult
from syntax import (
    parse_context,
    parse_dbterm,
    parse_fvseq,
    parse_renaming,
    parse_term,
    print_context,
    print_dbterm,
    print_fvseq,
    print_renaming,
    print_term,
)
from testgen.generators import TermGenerator, enumerate_terms

logger = logging.getLogger(__name__)

EXHAUSTIVE_POOL = ("x", "y")
Z_POOL = ("x", "y", "z", "w")


class _Tally:
    """Counts cases and keeps the first counterexample."""

    def __init__(self):
        self.cases = 0
        self.failures = 0
        self.counterexample: Optional[str] = None

    def check(self, ok: bool, describe: Callable[[], str]):
        self.cases += 1
        if not ok:
            self.failures += 1
            if self.counterexample is None:
                self.counterexample = describe()


SuiteFn = Callable[[SelftestConfig, _Tally], None]

SUITES: Dict[str, SuiteFn] = {}


def suite(name: str) -> Callable[[SuiteFn], SuiteFn]:
    """Register a property suite under ``name``."""

    def register(fn: SuiteFn) -> SuiteFn:
        SUITES[name] = fn
        return fn

    return register


def _generator(config: SelftestConfig, name: str) -> TermGenerator:
    seed = (config.seed + zlib.crc32(name.encode("utf-8"))) % 2**64
    return TermGenerator(
        GenConfig(max_size=config.max_size, name_pool=DEFAULT_POOL, seed=seed)
    )


def _walk(gen: TermGenerator, config: SelftestConfig, m: Term) -> Term:
    steps = gen.rng.randint(0, config.walk_steps)
    return random_alpha_walk(m, steps, DEFAULT_POOL, gen.rng.getrandbits(64))


def _small_terms(config: SelftestConfig) -> Iterable[Term]:
    return enumerate_terms(config.exhaustive_size, EXHAUSTIVE_POOL)


def _show(*parts) -> str:
    rendered = []
    for part in parts:
        if isinstance(part, Renaming):
            rendered.append(print_renaming(part))
        elif isinstance(part, tuple):
            rendered.append(print_context(part))
        elif isinstance(part, str):
            rendered.append(part)
        else:
            rendered.append(print_term(part))
    return " | ".join(rendered)


@suite("renaming-transitivity")
def check_trans(config: SelftestConfig, tally: _Tally):
    gen = _generator(config, "renaming-transitivity")
    for _ in range(config.cases):
        x1, x2, x3 = gen.name(), gen.name(), gen.name()
        g, m = gen.context(), gen.term()
        lhs = apply_renaming(Renaming(x1, x2, g), apply_renaming(Renaming(x2, x3, g), m))
        rhs = apply_renaming(Renaming(x1, x3, g), m)
        tally.check(lhs == rhs, lambda: _show(x1, x2, x3, g, m))


@suite("renaming-commutation")
def check_commute(config: SelftestConfig, tally: _Tally):
    gen = _generator(config, "renaming-commutation")
    for _ in range(config.cases):
        x, y = gen.name(), gen.name()
        f, g, m = gen.renaming(), gen.context(), gen.term()
        yx = Renaming(y, x, g)
        f_x = Renaming(f.target, f.source, f.lifts + (x,) + g)
        f_y = Renaming(f.target, f.source, f.lifts + (y,) + g)
        lhs = apply_renaming(yx, apply_renaming(f_x, m))
        rhs = apply_renaming(f_y, apply_renaming(yx, m))
        tally.check(lhs == rhs, lambda: _show(x, y, f, g, m))


@suite("db-alpha-roundtrip")
def check_db_roundtrip(config: SelftestConfig, tally: _Tally):
    gen = _generator(config, "db-alpha-roundtrip")
    for _ in range(config.cases):
        m = gen.term()
        for z in DEFAULT_POOL:
            canonical = db_named(z, m)
            ok = alpha_eq(canonical, m) and alpha_eq_via_context(canonical, m)
            tally.check(ok, lambda: _show(z, m))


@suite("db-commutes-renaming")
def check_db_commutes(config: SelftestConfig, tally: _Tally):
    gen = _generator(config, "db-commutes-renaming")
    for _ in range(config.cases):
        f, m, z = gen.renaming(), gen.term(), gen.name()
        lhs = apply_renaming(f, db_named(z, m))
        rhs = db_named(z, apply_renaming(f, m))
        tally.check(lhs == rhs, lambda: _show(f, m, z))


@suite("renaming-preserves-alpha")
def check_renaming_preserves_alpha(config: SelftestConfig, tally: _Tally):
    gen = _generator(config, "renaming-preserves-alpha")
    for _ in range(config.cases):
        f, m = gen.renaming(), gen.term()
        n = _walk(gen, config, m)
        ok = alpha_eq(apply_renaming(f, m), apply_renaming(f, n))
        tally.check(ok, lambda: _show(f, m, n))


@suite("binder-unpacking")
def check_binder_unpacking(config: SelftestConfig, tally: _Tally):
    gen = _generator(config, "binder-unpacking")
    for case in range(config.cases):
        x, z, m = gen.name(), gen.name(), gen.term()
        if case % 2:
            y, n = gen.name(), gen.term()
        else:
            walked = _walk(gen, config, Lam(x, m))
            y, n = walked.binder, walked.body
        outer = alpha_eq(Lam(x, m), Lam(y, n))
        inner = alpha_eq(apply_renaming(Renaming(z, x), m), apply_renaming(Renaming(z, y), n))
        tally.check(outer == inner, lambda: _show(x, y, z, m, n))


def _check_partitions_agree(terms: Iterable[Term], tally: _Tally):
    """Both deciders must induce the same partition of ``terms``."""
    by_db: Dict[Term, object] = {}
    by_context: Dict[object, Term] = {}
    for m in terms:
        db_key, ctx_key = db_named("z", m), translate(NIL, m)
        seen_ctx = by_db.setdefault(db_key, ctx_key)
        seen_db = by_context.setdefault(ctx_key, db_key)
        tally.check(
            seen_ctx == ctx_key and seen_db == db_key,
            lambda: _show(m, "deciders split this class differently"),
        )


@suite("two-route-agreement")
def check_two_routes(config: SelftestConfig, tally: _Tally):
    small = list(_small_terms(config))
    for m in small:
        for z in DEFAULT_POOL:
            ok = db_named_generalized(z, translate(NIL, m)) == db_named(z, m)
            tally.check(ok, lambda: _show(z, m))
    _check_partitions_agree(small, tally)

    gen = _generator(config, "two-route-agreement")
    for case in range(config.cases):
        m, z = gen.term(), gen.name()
        n = _walk(gen, config, m) if case % 2 else gen.term()
        ok = db_named_generalized(z, translate(NIL, m)) == db_named(z, m)
        ok = ok and alpha_eq_via_context(m, n) == alpha_eq(m, n)
        tally.check(ok, lambda: _show(z, m, n))


@suite("generalized-route")
def check_generalized_route(config: SelftestConfig, tally: _Tally):
    gen = _generator(config, "generalized-route")
    for _ in range(config.cases):
        z, g, m = gen.name(), gen.context(), gen.term()
        ok = db_named_generalized(z, translate(g, m)) == chain_rename(z, g, db_named(z, m))
        tally.check(ok, lambda: _show(z, g, m))


@suite("chain-under-binder")
def check_chain_under_binder(config: SelftestConfig, tally: _Tally):
    gen = _generator(config, "chain-under-binder")
    for _ in range(config.cases):
        z, x, g, m = gen.name(), gen.name(), gen.context(), gen.term()
        lhs = chain_rename(z, g, Lam(z, apply_renaming(Renaming(z, x), m)))
        rhs = Lam(z, chain_rename(z, g + (x,), m))
        tally.check(lhs == rhs, lambda: _show(z, g, x, m))


@suite("chain-rename-notes")
def check_chain_notes(config: SelftestConfig, tally: _Tally):
    gen = _generator(config, "chain-rename-notes")
    for _ in range(config.cases):
        z, x, y = gen.name(), gen.name(), gen.name()
        delta, n = gen.context(), gen.term()
        g = delta + (x,)
        ok = chain_rename(z, g, Up(n)) == Up(chain_rename(z, delta, n))
        ok = ok and chain_rename(z, g, Var(x)) == Var(z)
        if y != x:
            ok = ok and chain_rename(z, g, Var(y)) == Up(chain_rename(z, delta, Var(y)))
        example = alpha_eq(Lam(x, Lam(y, n)), Lam(z, Lam(z, chain_rename(z, (x, y), n))))
        tally.check(ok and example, lambda: _show(z, x, y, delta, n))


@suite("alpha-walk-soundness")
def check_walk_soundness(config: SelftestConfig, tally: _Tally):
    gen = _generator(config, "alpha-walk-soundness")
    for _ in range(max(1, config.cases // 5)):
        m = gen.term()
        n = _walk(gen, config, m)
        tally.check(alpha_eq(m, n), lambda: _show(m, n))


@suite("z-independence")
def check_z_independence(config: SelftestConfig, tally: _Tally):
    gen = _generator(config, "z-independence")
    for case in range(max(1, config.cases // 5)):
        m = gen.term()
        n = _walk(gen, config, m) if case % 2 else gen.term()
        answers = {alpha_eq(m, n, z) for z in Z_POOL}
        tally.check(len(answers) == 1, lambda: _show(m, n))


@suite("derivation-shape")
def check_derivations(config: SelftestConfig, tally: _Tally):
    gen = _generator(config, "derivation-shape")
    for _ in range(config.cases):
        g, m = gen.context(), gen.term()
        d = derive(g, m)
        try:
            validate_derivation(d)
            ok = d == derive(g, m) and fold_derivation(d) == translate(g, m)
        except InvalidDerivation:
            ok = False
        tally.check(ok, lambda: _show(g, m))


@suite("fv-translation")
def check_fv_translation(config: SelftestConfig, tally: _Tally):
    for m in _small_terms(config):
        tally.check(fv_dbterm(translate(NIL, m)) == fv_term(m), lambda: _show(m))
    gen = _generator(config, "fv-translation")
    for _ in range(config.cases):
        m = gen.term()
        tally.check(fv_dbterm(translate(NIL, m)) == fv_term(m), lambda: _show(m))


@suite("fv-alpha-invariance")
def check_fv_alpha(config: SelftestConfig, tally: _Tally):
    gen = _generator(config, "fv-alpha-invariance")
    for _ in range(config.cases):
        m = gen.term()
        n = _walk(gen, config, m)
        tally.check(fv_term(m) == fv_term(n), lambda: _show(m, n))


@suite("syntax-roundtrip")
def check_syntax_roundtrip(config: SelftestConfig, tally: _Tally):
    gen = _generator(config, "syntax-roundtrip")
    for _ in range(config.cases):
        m, a, g, f = gen.term(), gen.dbterm(), gen.context(), gen.renaming()
        fv = fv_term(gen.term())
        tally.check(parse_term(print_term(m)) == m, lambda: print_term(m))
        tally.check(parse_dbterm(print_dbterm(a)) == a, lambda: print_dbterm(a))
        tally.check(parse_context(print_context(g)) == g, lambda: print_context(g))
        tally.check(parse_renaming(print_renaming(f)) == f, lambda: print_renaming(f))
        tally.check(parse_fvseq(print_fvseq(fv)) == fv, lambda: print_fvseq(fv))


def run_suite(name: str, config: SelftestConfig) -> SuiteResult:
    """
    Run one registered suite.

    Raises:
        KeyError: If no suite has that name
    """
    fn = SUITES[name]
    tally = _Tally()
    started = time.perf_counter()
    fn(config, tally)
    elapsed = time.perf_counter() - started

    result = SuiteResult(
        name=name,
        cases=tally.cases,
        failures=tally.failures,
        counterexample=tally.counterexample,
        seconds=elapsed,
    )
    logger.debug(f"Suite {name}: {tally.cases} cases in {elapsed:.2f}s")
    if result.failures:
        logger.warning(
            f"Suite {name} failed {result.failures} of {result.cases} cases; "
            f"first counterexample: {result.counterexample}"
        )
    return result


def run_selftest(
    config: SelftestConfig, on_suite: Optional[Callable[[str], None]] = None
) -> SelftestReport:
    """
    Run the selected suites (all by default) in name order.

    Args:
        config: Case counts, bounds and seed
        on_suite: Called with each suite name before it starts

    Returns:
        Report with one result per suite

    Raises:
        ValueError: If config names an unknown suite
    """
    names: List[str] = sorted(config.suites if config.suites else SUITES)
    unknown = [name for name in names if name not in SUITES]
    if unknown:
        raise ValueError(f"Unknown suite(s): {', '.join(unknown)}")

    results = []
    for name in names:
        if on_suite is not None:
            on_suite(name)
        results.append(run_suite(name, config))
    return SelftestReport(results=results)
