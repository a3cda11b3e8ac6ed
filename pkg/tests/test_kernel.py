"""Kernel reduction, conversion and checking basics."""

import pytest

from mfhott.kernel import (App, AxiomTable, CannotInfer, Cons, Const, EMPTY,
                           HContext, Id, IndId, IndList, IndNat, IndOne,
                           IndSigma, IndSum, IndTrunc, IndZero, Inl, Inr,
                           KernelError, Lam, ListT, Nat, Nil, One, Pair, Pi,
                           QEff, QMap, Quot, Refl, Sigma, Star, Succ, Sum,
                           Trunc, TruncIn, TypeMismatch, Univ, UniverseError,
                           Var, Zero, ZeroN, app, arrow, check, conv, infer,
                           lam, mk_equiv_rel, mk_isprop, mk_isset, pi,
                           prop_u0, times, whnf)


@pytest.fixture
def table():
    t = AxiomTable()
    t.declare("funext", Univ(0))  # placeholder type; reduction-only tests
    return t


def ctx(*tys):
    return HContext(tys)


def test_whnf_beta(table):
    assert whnf(table, App(Lam(Var(0)), Star())) == Star()


def test_whnf_truncation_computation(table):
    # eliminating a boxed value computes to the branch on the payload
    t = IndTrunc(TruncIn(Star()), One(), Var(0), Lam(Lam(Refl(Star()))))
    assert whnf(table, t) == Star()


def test_whnf_quotient_computation(table):
    from mfhott.kernel import IndQuot
    t = IndQuot(QMap(Star()), One(), Var(0), Star())
    assert whnf(table, t) == Star()


def test_whnf_axiom_constant_inert(table):
    assert whnf(table, Const("funext")) == Const("funext")


def test_whnf_definition_unfolds():
    t = AxiomTable()
    t.define("idfun", arrow(One(), One()), Lam(Var(0)))
    assert whnf(t, App(Const("idfun"), Star())) == Star()


def test_conv_sigma_projection_beta(table):
    p = Pair(Star(), ZeroN())
    fst = IndSigma(p, One(), Var(1))
    assert conv(table, fst, Star())


def test_conv_no_eta(table):
    # identity vs. pointwise-equal unit eliminator: distinct normal forms
    a = Lam(Var(0))
    b = Lam(IndOne(Var(0), One(), Star()))
    assert not conv(table, a, b)


def test_conv_equivalence_on_samples(table):
    terms = [Star(), App(Lam(Var(0)), Star()),
             IndOne(Star(), One(), Star())]
    for t in terms:
        assert conv(table, t, t)
    for a in terms:
        for b in terms:
            assert conv(table, a, b) == conv(table, b, a)


def test_infer_star(table):
    assert infer(table, EMPTY, Star()) == One()
    check(table, EMPTY, Star(), One())


def test_check_universe_cumulativity(table):
    check(table, EMPTY, One(), Univ(0))
    check(table, EMPTY, One(), Univ(1))  # level 0 <= level 1


def test_prop_classifier_lives_one_level_up(table):
    check(table, EMPTY, prop_u0(), Univ(1))
    with pytest.raises(KernelError):
        check(table, EMPTY, prop_u0(), Univ(0))


def test_large_combinator_types_are_types(table):
    # Pi over Univ(1) classifies at the internal kind but is a valid type
    from mfhott.kernel import level_of_type
    big = pi(Univ(1), lambda a: mk_isprop(a))
    assert level_of_type(table, EMPTY, big) == 2


def test_lambda_checks_against_pi(table):
    idt = lam(lambda x: x)
    check(table, EMPTY, idt, arrow(One(), One()))
    with pytest.raises(CannotInfer):
        infer(table, EMPTY, idt)


def test_eliminators_need_matching_motive(table):
    bad = IndOne(Star(), One(), ZeroN())  # branch Nat against motive One
    with pytest.raises(KernelError):
        infer(table, EMPTY, bad)


def test_truncation_eliminator_requires_witness(table):
    from mfhott.kernel import MissingWitness
    t = IndTrunc(Var(0), One(), Star(), Star())  # Star is not an IsProp proof
    with pytest.raises(MissingWitness):
        infer(table, ctx(Trunc(One())), t)


def test_nat_and_list_reduction(table):
    two = Succ(Succ(ZeroN()))
    plus = lambda a, b: IndNat(a, Nat(), b, Succ(Var(0)))
    assert conv(table, plus(two, two), Succ(Succ(Succ(Succ(ZeroN())))))
    l = Cons(Cons(Nil(), Star()), Star())
    length = IndList(l, Nat(), ZeroN(), Succ(Var(0)))
    assert conv(table, length, Succ(Succ(ZeroN())))


def test_id_elim_transport(table):
    # transport along refl computes to the identity
    tr = IndId(Refl(Star()), arrow(One(), One()), Lam(Var(0)))
    assert conv(table, App(tr, Star()), Star())


def trivial_quot():
    # quotient of the unit type by the constantly-unit relation
    rel = Lam(Lam(One()))
    refl_w = Lam(Star())
    sym_w = Lam(Lam(Lam(Star())))
    trans_w = Lam(Lam(Lam(Lam(Lam(Star())))))
    equiv = Pair(refl_w, Pair(sym_w, trans_w))
    return Quot(One(), rel, equiv)


def test_quotient_formation_checks(table):
    q = trivial_quot()
    assert infer(table, EMPTY, q) == Univ(0)
    check(table, EMPTY, QMap(Star()), q)


def test_quotient_requires_equivalence_witness(table):
    from mfhott.kernel import MissingWitness
    bad = Quot(One(), Lam(Lam(One())), Star())
    with pytest.raises(MissingWitness):
        infer(table, EMPTY, bad)


def test_qeff_types_at_relation(table):
    q = trivial_quot()
    c = ctx(Id(q, QMap(Star()), QMap(Star())))
    t = QEff(Star(), Star(), Var(0))
    got = infer(table, c, t)
    assert conv(table, got, One())


def test_subject_reduction_samples():
    table = AxiomTable()
    table.define("idfun", arrow(One(), One()), Lam(Var(0)))
    samples = [
        (App(Const("idfun"), Star()), One()),
        (IndOne(Star(), One(), Star()), One()),
        (IndNat(Succ(ZeroN()), Nat(), ZeroN(), Var(1)), Nat()),
    ]
    for term, ty in samples:
        check(table, EMPTY, term, ty)
        check(table, EMPTY, whnf(table, term), ty)


def test_scope_error(table):
    from mfhott.kernel import ScopeError
    with pytest.raises(ScopeError):
        infer(table, EMPTY, Var(0))


def test_mk_isprop_shape():
    assert mk_isprop(One()) == Pi(One(), Pi(One(), Id(One(), Var(1), Var(0))))


def test_mk_isset_checks_as_type(table):
    from mfhott.kernel import level_of_type
    assert level_of_type(table, EMPTY, mk_isset(Zero())) == 0
    assert level_of_type(table, EMPTY, mk_isprop(prop_u0())) == 1
