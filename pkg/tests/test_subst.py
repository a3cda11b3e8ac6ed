"""Substitution against the independent naive-renaming oracle."""

import hypothesis.strategies as st
from hypothesis import given, settings

from mfhott.kernel import Lam, Pi, Star, Var, shift, subst, inst_branch_values

from oracle_subst import subst_named, to_db

AMBIENT = ["x0", "x1", "x2", "x3"]

names = st.sampled_from(AMBIENT + ["a", "b", "c"])
free = st.sampled_from(AMBIENT)


def named_terms(depth=3):
    base = st.one_of(
        st.builds(lambda n: ("var", n), free),
        st.just(("star",)),
    )

    def extend(children):
        return st.one_of(
            st.builds(lambda v, b: ("lam", v, b), names, children),
            st.builds(lambda d, v, c: ("pi", d, v, c), children, names, children),
            st.builds(lambda d, v, c: ("sigma", d, v, c), children, names, children),
            st.builds(lambda f, a: ("app", f, a), children, children),
            st.builds(lambda a, b: ("pair", a, b), children, children),
            st.builds(lambda s, mn, m, x, y, b: ("indsigma", s, mn, m, x, y, b),
                      children, names, children, names, names, children),
            st.builds(lambda t, a, b: ("id", t, a, b), children, children, children),
            st.builds(lambda a: ("refl", a), children),
            st.builds(
                lambda s, a, b, p, m, x, br: ("indid", s, a, b, p, m, x, br),
                children, names, names, names, children, names, children),
            st.builds(lambda a: ("trunc", a), children),
            st.builds(lambda a: ("tin", a), children),
        )

    return st.recursive(base, extend, max_leaves=12)


@settings(max_examples=300, deadline=None)
@given(named_terms(), named_terms())
def test_subst_matches_naive_renaming_oracle(t, s):
    """Both routes from named to nameless substitution agree."""
    if "x0" in _names(s):
        return  # replacement must live in the context without x0
    db_t = to_db(t, AMBIENT)
    db_s = to_db(s, AMBIENT[1:])
    named = subst_named(t, "x0", s)
    assert to_db(named, AMBIENT[1:]) == subst(db_t, db_s, 0)


def _names(t):
    from oracle_subst import free_names
    return free_names(t)


def test_subst_identity_case():
    assert subst(Var(0), Star(), 0) == Star()


def test_subst_under_binder_shifts():
    # substituting for the ambient variable under a lambda: the replacement
    # is shifted past the binder
    assert subst(Lam(Var(1)), Star(), 0) == Lam(Star())
    assert subst(Lam(Var(1)), Var(3), 0) == Lam(Var(4))
    # bound occurrences are untouched, higher frees decrement
    assert subst(Lam(Var(0)), Star(), 0) == Lam(Var(0))
    assert subst(Lam(Var(2)), Star(), 0) == Lam(Var(1))


def test_shift_cutoff():
    t = Pi(Var(0), Var(0))  # cod's Var(0) is bound
    assert shift(t, 5) == Pi(Var(5), Var(0))
    assert shift(Lam(Var(1)), 2, 0) == Lam(Var(3))
    assert shift(Lam(Var(0)), 2, 0) == Lam(Var(0))


def test_inst_branch_values_outer_first():
    # branch binding (x at 1, y at 0): dom refers to x, cod to y (index 1
    # under the pi binder); apply x := Var(7), y := Star
    body = Pi(Var(1), Var(1))
    got = inst_branch_values(body, Var(7), Star())
    assert got == Pi(Var(7), Star())
    # ambient references shift out unchanged
    body2 = Pi(Var(2), Var(3))
    assert inst_branch_values(body2, Star(), Star()) == Pi(Var(0), Var(1))
