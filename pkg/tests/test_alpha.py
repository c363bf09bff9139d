import pytest
from hypothesis import given
from hypothesis import strategies as st

from calculus.alpha import (
    NotALambda,
    alpha_axiom_rename,
    alpha_closure_step,
    alpha_eq,
    db_named,
    random_alpha_walk,
)
from calculus.kernel import App, Lam, Renaming, Up, Var, apply_renaming
from strategies import POOL, names, renamings, terms

x, y, z = Var("x"), Var("y"), Var("z")


@pytest.mark.parametrize(
    "term, expected",
    [
        (Lam("x", Lam("y", y)), Lam("z", Lam("z", z))),
        (Lam("x", Lam("y", x)), Lam("z", Lam("z", Up(z)))),
        (Lam("y", x), Lam("z", Up(x))),
        (x, x),
    ],
)
def test_db_named_examples(term, expected):
    assert db_named("z", term) == expected


@pytest.mark.parametrize(
    "left, right",
    [
        (Lam("x", z), Lam("y", Up(z))),
        (Lam("x", Lam("z", x)), Lam("y", Lam("z", y))),
        (Lam("x", z), Lam("z", Up(z))),
        (Lam("x", z), Lam("x", Up(z))),
    ],
)
def test_alpha_equivalent_pairs(left, right):
    assert alpha_eq(left, right)


def test_renaming_chain_is_one_class():
    chain = [Lam("x", z), Lam("y", z), Lam("z", Up(z)), Lam("x", Up(z)), Lam("y", Up(z))]
    for left in chain:
        for right in chain:
            assert alpha_eq(left, right)


def test_bound_and_weakened_are_distinct():
    assert not alpha_eq(Lam("x", x), Lam("x", Up(x)))


def test_structurally_different_binders_are_not_identical_but_equivalent():
    assert Lam("x", x) != Lam("y", y)
    assert alpha_eq(Lam("x", x), Lam("y", y))


@pytest.mark.parametrize(
    "term, name, expected",
    [
        (Lam("x", x), "y", Lam("y", y)),
        (Lam("x", z), "z", Lam("z", Up(z))),
        (Lam("x", z), "x", Lam("x", Up(z))),
    ],
)
def test_alpha_axiom_rename(term, name, expected):
    assert alpha_axiom_rename(term, name) == expected


def test_alpha_axiom_needs_lambda():
    with pytest.raises(NotALambda):
        alpha_axiom_rename(App(x, y), "z")


def test_closure_step_rewrites_inside_context():
    m = App(y, Lam("x", x))
    assert alpha_closure_step(m, (1,), "z") == App(y, Lam("z", z))
    with pytest.raises(IndexError):
        alpha_closure_step(m, (2,), "z")


def test_random_walk_edge_cases():
    m = Lam("x", App(x, y))
    assert random_alpha_walk(m, 0, ["y"], 7) == m
    assert random_alpha_walk(x, 5, ["y"], 42) == x
    for seed in range(10):
        assert random_alpha_walk(Lam("x", x), 1, ["y"], seed) == Lam("y", y)


def test_random_walk_is_deterministic():
    m = Lam("x", Lam("y", App(x, Lam("z", App(y, z)))))
    assert random_alpha_walk(m, 6, POOL, 3) == random_alpha_walk(m, 6, POOL, 3)


def test_random_walk_rejects_empty_pool():
    with pytest.raises(ValueError):
        random_alpha_walk(Lam("x", x), 1, [], 0)


@given(m=terms, steps=st.integers(0, 6), seed=st.integers(0, 2**32))
def test_random_walk_stays_in_class(m, steps, seed):
    assert alpha_eq(m, random_alpha_walk(m, steps, POOL, seed))


@given(m=terms, z_=names)
def test_db_named_is_equivalent_and_idempotent(m, z_):
    canonical = db_named(z_, m)
    assert alpha_eq(canonical, m)
    assert db_named(z_, canonical) == canonical


@given(m=terms, n=terms)
def test_answer_does_not_depend_on_canonical_name(m, n):
    assert len({alpha_eq(m, n, name) for name in ("x", "y", "z", "w")}) == 1


@given(f=renamings, m=terms, z_=names)
def test_db_commutes_with_renaming(f, m, z_):
    assert apply_renaming(f, db_named(z_, m)) == db_named(z_, apply_renaming(f, m))


@given(x_=names, y_=names, z_=names, m=terms, n=terms)
def test_binder_unpacking(x_, y_, z_, m, n):
    outer = alpha_eq(Lam(x_, m), Lam(y_, n))
    inner = alpha_eq(
        apply_renaming(Renaming(z_, x_), m), apply_renaming(Renaming(z_, y_), n)
    )
    assert outer == inner
