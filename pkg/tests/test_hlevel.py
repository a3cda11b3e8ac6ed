"""Stdlib combinators: types, computation laws, round-trips."""

import pytest

from mfhott.hlevel import StdCombinator, build_stdlib, stdlib
from mfhott.kernel import (App, Const, EMPTY, HContext, Id, One, Pair, Star,
                           Sum, Trunc, TruncIn, Univ, Var, Zero, app, arrow,
                           check, conv, mk_isprop, mk_isset, parse_term,
                           print_term, times, whnf)


@pytest.fixture(scope="module")
def lib():
    return stdlib()


def test_every_combinator_rechecks(lib):
    table, combs = lib
    assert len(combs) == 36
    for comb in combs:
        check(table, EMPTY, comb.term, comb.ty)


def test_inventory_names_fixed(lib):
    _, combs = lib
    names = [comb.name for comb in combs]
    assert names == [
        "p0", "p1", "p_imp", "p_times", "p_pi", "p_trunc", "p_or", "p_ex",
        "p_trunc_times", "p_trunc_imp", "p_trunc_pi", "p_id", "s_coe", "s0",
        "s1", "s_nat", "s_pi", "s_sigma", "s_sum", "s_list", "s_quot",
        "s_prop0", "inl_or", "inr_or", "ind_or", "pair_ex", "ind_ex",
        "pair_and", "fst_and", "snd_and", "lam_imp", "app_imp", "lam_all",
        "app_all", "untrunc", "apd",
    ]


def test_p1_checks_at_isprop_unit(lib):
    table, _ = lib
    check(table, EMPTY, Const("p1"), mk_isprop(One()))


def test_s_coe_instance_checks_at_isset_unit(lib):
    table, _ = lib
    check(table, EMPTY, app(Const("s_coe"), One(), Const("p1")),
          mk_isset(One()))


def test_disjunction_beta_laws(lib):
    # eliminating an injected disjunct computes to the matching arm
    table, _ = lib
    ctx_terms = dict(a=Var(8), b=Var(7), cc=Var(6), s=Var(5), l1=Var(4),
                     l2=Var(3), p=Var(1))
    got = app(Const("ind_or"), ctx_terms["a"], ctx_terms["b"],
              ctx_terms["cc"], ctx_terms["s"], ctx_terms["l1"],
              ctx_terms["l2"],
              app(Const("inl_or"), ctx_terms["a"], ctx_terms["b"],
                  ctx_terms["p"]))
    assert conv(table, got, App(ctx_terms["l1"], ctx_terms["p"]))


def test_existential_beta_law(lib):
    table, _ = lib
    a, b, cc, s, l, x, y = (Var(k) for k in range(6, -1, -1))
    got = app(Const("ind_ex"), a, b, cc, s, l,
              app(Const("pair_ex"), a, b, x, y))
    assert conv(table, got, app(l, x, y))


def test_conjunction_projection_beta(lib):
    table, _ = lib
    a, b, s, x, y = (Var(k) for k in range(4, -1, -1))
    got = app(Const("fst_and"), a, b, s, app(Const("pair_and"), a, b, x, y))
    assert conv(table, got, x)


def test_truncation_inverse_is_definitional_retraction(lib):
    # the boxed-value inverse computes away on canonical elements
    table, _ = lib
    p, s, x = Var(2), Var(1), Var(0)
    assert conv(table, app(Const("untrunc"), p, s, TruncIn(x)), x)


def test_untrunc_type_checks_on_closed_prop(lib):
    table, _ = lib
    ty = arrow(Trunc(One()), One())
    term = app(Const("untrunc"), One(), Const("p1"))
    check(table, EMPTY, term, ty)


def test_p_times_on_closed_props(lib):
    table, _ = lib
    witness = app(Const("p_times"), One(), One(), Const("p1"), Const("p1"))
    check(table, EMPTY, witness, mk_isprop(times(One(), One())))


def test_axioms_inert_definitions_unfold(lib):
    table, _ = lib
    assert whnf(table, Const("funext")) == Const("funext")
    assert table.is_axiom("propext")
    assert not table.is_axiom("s_coe")


def test_roundtrip_every_combinator(lib):
    table, combs = lib
    for comb in combs:
        t2 = parse_term(print_term(comb.term))
        ty2 = parse_term(print_term(comb.ty))
        assert t2 == comb.term and ty2 == comb.ty
        check(table, EMPTY, t2, ty2)


def test_mk_isprop_displayed_shapes():
    from mfhott.kernel import Pi
    assert mk_isprop(One()) == Pi(One(), Pi(One(), Id(One(), Var(1), Var(0))))
    got = mk_isset(Zero())
    inner = Id(Zero(), Var(1), Var(0))
    assert got.dom == Zero()
    # applying the encoder twice just nests; no rewriting happens
    assert mk_isprop(mk_isprop(One())).dom == mk_isprop(One())


def test_apd_instance(lib):
    # transporting f(x) along p lands on f(y), here at a reflexivity path
    table, _ = lib
    from mfhott.kernel import Lam, lam
    f = lam(lambda x: x)
    famb = lam(lambda _: One())
    inst = app(Const("apd"), One(), famb, f, Star(), Star(), Refl_(Star()))
    ty = Id(App(famb, Star()),
            App(app(Const("transport"), One(), famb, Star(), Star(),
                    Refl_(Star())), App(f, Star())),
            App(f, Star()))
    check(table, EMPTY, inst, ty)


def Refl_(x):
    from mfhott.kernel import Refl
    return Refl(x)
