"""Hypothesis strategies over a deliberately small name pool."""

from hypothesis import strategies as st

from calculus.debruijn import ONE, DbApp, DbLam, DbUp, DbVar
from calculus.kernel import App, Lam, Renaming, Up, Var

POOL = ["x", "y", "z"]

names = st.sampled_from(POOL)

terms = st.recursive(
    st.builds(Var, names),
    lambda children: st.one_of(
        st.builds(App, children, children),
        st.builds(Lam, names, children),
        st.builds(Up, children),
    ),
    max_leaves=12,
)

dbterms = st.recursive(
    st.one_of(st.builds(DbVar, names), st.just(ONE)),
    lambda children: st.one_of(
        st.builds(DbApp, children, children),
        st.builds(DbLam, children),
        st.builds(DbUp, children),
    ),
    max_leaves=12,
)

contexts = st.lists(names, max_size=4).map(tuple)

renamings = st.builds(Renaming, names, names, contexts)
