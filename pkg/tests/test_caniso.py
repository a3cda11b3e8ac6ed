"""Universe membership, transports, and canonical isomorphism synthesis."""

import pytest

from mfhott.caniso import (CanIso, CanisoError, NotInSetMf, WitnessStore,
                           caniso_subst, compose_caniso, enumerate_elements,
                           identity_iso, in_setmf, invert_caniso,
                           mk_transport, pointwise_id_proof, synth_caniso)
from mfhott.hlevel import stdlib
from mfhott.kernel import (App, Const, EMPTY, HContext, Id, Lam, ListT, Nat,
                           One, Pair, Pi, Quot, Refl, Sigma, Star, Sum,
                           Trunc, TruncIn, Univ, Var, Zero, app, arrow,
                           check, check_is_type, conv, level_of_type,
                           prop_u0, shift, subst, times, whnf)


@pytest.fixture(scope="module")
def table():
    return stdlib()[0]


def assert_iso_checks(table, iso: CanIso):
    ctx = iso.ctx
    check(table, ctx, iso.fwd, arrow(iso.src, iso.tgt))
    check(table, ctx, iso.inv, arrow(iso.tgt, iso.src))
    g1, g2 = iso.obligations()
    check_is_type(table, ctx, g1)
    check_is_type(table, ctx, g2)
    if iso.proof_fwd is not None:
        check(table, ctx, iso.proof_fwd, g1)
    if iso.proof_bwd is not None:
        check(table, ctx, iso.proof_bwd, g2)


def trivial_quot(base):
    # quotient by the constantly-unit relation
    rel = Lam(Lam(One()))
    equiv = Pair(Lam(Star()), Pair(Lam(Lam(Lam(Star()))),
                                   Lam(Lam(Lam(Lam(Lam(Star())))))))
    return Quot(base, rel, equiv)


# --- membership ---------------------------------------------------------------


def test_in_setmf_ground(table):
    assert in_setmf(table, EMPTY, One()).clause == "ground"
    assert in_setmf(table, EMPTY, prop_u0()).clause == "prop-classifier"


def test_in_setmf_truncation(table):
    d = in_setmf(table, EMPTY, Trunc(Zero()))
    assert d.clause == "trunc"
    from mfhott.kernel import mk_isset
    check(table, EMPTY, d.pr_s, mk_isset(Trunc(Zero())))


def test_in_setmf_rejects_universe(table):
    with pytest.raises(NotInSetMf):
        in_setmf(table, EMPTY, Univ(0))


def test_in_setmf_structured(table):
    from mfhott.kernel import mk_isset
    ty = Sigma(Sum(One(), One()), ListT(One()))
    d = in_setmf(table, EMPTY, ty)
    check(table, EMPTY, d.pr_s, mk_isset(ty))
    q = trivial_quot(One())
    dq = in_setmf(table, EMPTY, q)
    check(table, EMPTY, dq.pr_s, mk_isset(q))


# --- transports ----------------------------------------------------------------


def test_transport_depth_one_checks(table):
    # family over x : Sum(1,1): the family value moves along the path
    ctx = HContext([Sum(One(), One())])
    b = Id(Sum(One(), One()), Var(0), Var(0))
    op = mk_transport(table, ctx, b, 1)
    check_is_type(table, ctx, op.ty)
    check(table, ctx, op.term, op.ty)


def test_transport_at_reflexivity_is_identity(table):
    ctx = HContext([One()])
    b = Id(One(), Var(0), Var(0))
    op = mk_transport(table, ctx, b, 1)
    applied = app(op.term, Var(0), Refl(Var(0)), Refl(Var(0)))
    assert conv(table, applied, Refl(Var(0)))


def test_transport_depth_two_checks(table):
    # entries: x : 1, y : Nat (independent of x)
    ctx = HContext([One(), Nat()])
    b = Id(Nat(), Var(0), Var(0))   # depends on y
    op = mk_transport(table, ctx, b, 2)
    check_is_type(table, ctx, op.ty)
    check(table, ctx, op.term, op.ty)


def test_transport_reverse_composes_to_identity(table):
    # the inverse transport at a reflexivity instance computes back
    ctx = HContext([One()])
    b = Id(One(), Var(0), Var(0))
    op = mk_transport(table, ctx, b, 1)
    fwd = app(op.term, Var(0), Refl(Var(0)))
    # forward then (trivially) back at refl: composite reduces to identity
    assert conv(table, App(fwd, Refl(Var(0))), Refl(Var(0)))


# --- synthesis -----------------------------------------------------------------


def test_identity_synthesis(table):
    iso = synth_caniso(table, EMPTY, One(), One())
    assert iso.clause == "identity"
    assert_iso_checks(table, iso)


def test_distinct_ground_heads_rejected(table):
    with pytest.raises(CanisoError):
        synth_caniso(table, EMPTY, Nat(), One())


def test_truncation_iso_with_witness(table):
    # boxed unit versus boxed pair-of-units, with chosen maps both ways
    a = Trunc(One())
    b = Trunc(times(One(), One()))
    ws = WitnessStore()
    ws.add_trunc(0, a, b, Lam(TruncIn(Pair(Star(), Star()))),
                 Lam(TruncIn(Star())))
    iso = synth_caniso(table, EMPTY, a, b, ws)
    assert iso.clause == "trunc"
    assert iso.discharged()
    assert_iso_checks(table, iso)


def test_truncation_missing_witness(table):
    with pytest.raises(CanisoError):
        synth_caniso(table, EMPTY, Trunc(One()), Trunc(Zero()))


def fixture_trunc_pair():
    a = Trunc(One())
    b = Trunc(times(One(), One()))
    ws = WitnessStore()
    ws.add_trunc(0, a, b, Lam(TruncIn(Pair(Star(), Star()))),
                 Lam(TruncIn(Star())))
    return a, b, ws


def test_sigma_iso_over_identity_base(table):
    a, b, ws = fixture_trunc_pair()
    src = Sigma(One(), shift(a, 1))
    tgt = Sigma(One(), shift(b, 1))
    ws.add_trunc(1, shift(a, 1), shift(b, 1),
                 Lam(TruncIn(Pair(Star(), Star()))), Lam(TruncIn(Star())))
    iso = synth_caniso(table, EMPTY, src, tgt, ws)
    assert iso.clause == "sigma"
    assert iso.discharged()
    assert_iso_checks(table, iso)


def test_pi_iso_over_identity_base(table):
    a, b, ws = fixture_trunc_pair()
    src = Pi(One(), shift(a, 1))
    tgt = Pi(One(), shift(b, 1))
    ws.add_trunc(1, shift(a, 1), shift(b, 1),
                 Lam(TruncIn(Pair(Star(), Star()))), Lam(TruncIn(Star())))
    iso = synth_caniso(table, EMPTY, src, tgt, ws)
    assert iso.clause == "pi"
    assert iso.discharged()
    assert_iso_checks(table, iso)


def test_sum_iso(table):
    a, b, ws = fixture_trunc_pair()
    src = Sum(a, One())
    tgt = Sum(b, One())
    iso = synth_caniso(table, EMPTY, src, tgt, ws)
    assert iso.clause == "sum"
    assert iso.discharged()
    assert_iso_checks(table, iso)


def test_list_iso(table):
    a, b, ws = fixture_trunc_pair()
    iso = synth_caniso(table, EMPTY, ListT(a), ListT(b), ws)
    assert iso.clause == "list"
    assert iso.discharged()
    assert_iso_checks(table, iso)


def quot_pair(table):
    # same base, relations constantly-unit on both sides
    q1 = trivial_quot(One())
    q2 = trivial_quot(Sum(One(), Zero()))
    return q1, q2


def test_quot_iso(table):
    base1 = One()
    q1 = trivial_quot(base1)
    q2 = trivial_quot(base1)
    # force distinct quotients by varying the witness shape
    from mfhott.kernel import Pair as KPair
    rel = Lam(Lam(One()))
    equiv2 = Pair(Lam(IndOne_()), Pair(Lam(Lam(Lam(Star()))),
                                       Lam(Lam(Lam(Lam(Lam(Star())))))))
    q2 = Quot(base1, rel, equiv2)
    ws = WitnessStore()
    ws.add_quot(0, q1, q2, Lam(Lam(Lam(Var(0)))), Lam(Lam(Lam(Var(0)))))
    iso = synth_caniso(table, EMPTY, q1, q2, ws)
    assert iso.clause == "quot"
    assert iso.discharged()
    assert_iso_checks(table, iso)


def IndOne_():
    from mfhott.kernel import IndOne
    return IndOne(Var(0), One(), Star())


def test_compose_and_invert(table):
    a, b, ws = fixture_trunc_pair()
    f = synth_caniso(table, EMPTY, a, b, ws)
    g = invert_caniso(f)
    h = compose_caniso(table, f, g)
    assert h.src == a and h.tgt == a
    assert h.discharged()
    assert_iso_checks(table, h)
    # composing the identity with itself converts to the identity pointwise
    i = identity_iso(EMPTY, One())
    ii = compose_caniso(table, i, i)
    assert conv(table, App(ii.fwd, Star()), Star())


def test_caniso_subst(table):
    ctx = HContext([One()])
    iso = identity_iso(ctx, Trunc(One()))
    sub = caniso_subst(iso, Star())
    assert len(sub.ctx) == 0
    assert_iso_checks(table, sub)


def test_enumerate_elements(table):
    assert enumerate_elements(table, Zero()) == []
    assert len(enumerate_elements(table, Sum(One(), One()))) == 2
    assert len(enumerate_elements(table, times(Sum(One(), One()),
                                               Sum(One(), One())))) == 4
    assert enumerate_elements(table, Nat()) is None


def test_pointwise_id_proof(table):
    p = pointwise_id_proof(table, One(), Star(), Star())
    check(table, EMPTY, p, Id(One(), Star(), Star()))
    a = Trunc(One())
    p2 = pointwise_id_proof(table, a, TruncIn(Star()), TruncIn(Star()))
    check(table, EMPTY, p2, Id(a, TruncIn(Star()), TruncIn(Star())))


def test_pointwise_roundtrip_on_elements(table):
    a, b, ws = fixture_trunc_pair()
    src = Sigma(Sum(One(), One()), shift(a, 1))
    tgt = Sigma(Sum(One(), One()), shift(b, 1))
    ws.add_trunc(1, shift(a, 1), shift(b, 1),
                 Lam(TruncIn(Pair(Star(), Star()))), Lam(TruncIn(Star())))
    iso = synth_caniso(table, EMPTY, src, tgt, ws)
    for e in enumerate_elements(table, src):
        round_trip = App(iso.inv, App(iso.fwd, e))
        proof = pointwise_id_proof(table, src, round_trip, e)
        assert proof is not None
        check(table, EMPTY, proof, Id(src, round_trip, e))
