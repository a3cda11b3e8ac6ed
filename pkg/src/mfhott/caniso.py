"""Membership in the interpreting universe of h-sets, canonical transports,
and synthesis of canonical isomorphisms.

The universe is generated by the prop classifier, the finite ground sets
and naturals, truncations, dependent sums and products, binary sums,
lists, and quotients of members by member-valued relations.  Isomorphisms
between members are synthesized structurally: syntactically equal types
get the identity, truncation pairs accept any caller-supplied inverse
pair, and the other formers recurse componentwise with inverses built by
transporting along the component round trips.  Synthesis returns one
deterministic representative (leftmost structural choice); round-trip
proofs are discharged alongside where a strategy applies and left as open
obligations otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass

from .hlevel import stdlib
from .kernel import (App, Const, HContext, HTerm, Id, IndList, IndQuot,
                     IndSum, Inl, Inr, KernelError, Lam, ListT, Nat, Nil,
                     One, Pair, Pi, QMap, Quot, Refl, Sigma, Sum, Trunc,
                     Univ, Var, Zero, app, arrow, level_of_type, prop_u0,
                     reopen, shift, subst, uses_var, whnf)
from .kernel import Cons as KCons
from .witness import prop_witness, set_witness


class CanisoError(KernelError):
    pass


class NotInSetMf(CanisoError):
    pass


GROUND = (Zero, One, Nat)


@dataclass(frozen=True)
class SetMfDeriv:
    """Derivation that a type lies in the interpreting universe, with a
    synthesized h-set witness."""

    clause: str
    ty: HTerm
    pr_s: HTerm
    children: tuple = ()


def in_setmf(table, ctx: HContext, ty: HTerm) -> SetMfDeriv:
    t = whnf(table, ty)
    if t == prop_u0():
        return SetMfDeriv("prop-classifier", t, Const("s_prop0"))
    if isinstance(t, GROUND):
        name = {Zero: "s0", One: "s1", Nat: "s_nat"}[type(t)]
        return SetMfDeriv("ground", t, Const(name))
    if isinstance(t, Trunc):
        level_of_type(table, ctx, t.inner)
        prp = app(Const("p_trunc"), t.inner)
        return SetMfDeriv("trunc", t, app(Const("s_coe"), t, prp))
    if isinstance(t, Sigma):
        d = in_setmf(table, ctx, t.dom)
        c = in_setmf(table, ctx.extend(t.dom), t.cod)
        prs = app(Const("s_sigma"), t.dom, Lam(t.cod), d.pr_s, Lam(c.pr_s))
        return SetMfDeriv("sigma", t, prs, (d, c))
    if isinstance(t, Pi):
        d = in_setmf(table, ctx, t.dom)
        c = in_setmf(table, ctx.extend(t.dom), t.cod)
        prs = app(Const("s_pi"), t.dom, Lam(t.cod), Lam(c.pr_s))
        return SetMfDeriv("pi", t, prs, (d, c))
    if isinstance(t, Sum):
        l = in_setmf(table, ctx, t.left)
        r = in_setmf(table, ctx, t.right)
        prs = app(Const("s_sum"), t.left, t.right, l.pr_s, r.pr_s)
        return SetMfDeriv("sum", t, prs, (l, r))
    if isinstance(t, ListT):
        e = in_setmf(table, ctx, t.elem)
        return SetMfDeriv("list", t,
                          app(Const("s_list"), t.elem, e.pr_s), (e,))
    if isinstance(t, Quot):
        b = in_setmf(table, ctx, t.base)
        rctx = ctx.extend(t.base).extend(shift(t.base, 1))
        rbody = whnf(table, app(shift(t.rel, 2), Var(1), Var(0)))
        rv = in_setmf(table, rctx, rbody)
        prp = prop_witness(table, rbody)
        if prp is None:
            raise NotInSetMf(
                "quotient relation values are not recognizably "
                f"propositional: {rbody!r}")
        prs = app(Const("s_quot"), t.base, t.rel, b.pr_s, Lam(Lam(prp)),
                  t.equiv)
        return SetMfDeriv("quot", t, prs, (b, rv))
    raise NotInSetMf(f"no membership clause for head {type(t).__name__}")


# ---------------------------------------------------------------------------
# canonical transports


@dataclass(frozen=True)
class TransportOp:
    depth: int
    term: HTerm
    ty: HTerm


def mk_transport(table, ctx: HContext, b_ty: HTerm, depth: int = 1
                 ) -> TransportOp:
    """Depth-indexed transport for a dependent type over the context.

    For depth one this is the usual transport along a path in the
    innermost entry.  Deeper operations additionally move the later
    telescope entries by the lower transports; they are supported when
    those entries do not themselves depend on the moved variable.
    """
    if not 1 <= depth <= len(ctx):
        raise CanisoError("transport depth exceeds the context length")
    e_ty = ctx.entries[-depth]
    e_here = shift(e_ty, depth)
    for i in range(1, depth):
        d_i = ctx.entries[len(ctx) - depth + i]
        if uses_var(d_i, i - 1):
            raise CanisoError(
                "transport with intermediate entries depending on the "
                "moved variable is not supported")
    if depth == 1:
        fam = Lam(reopen(b_ty, Var(0), 1))
        term = Lam(Lam(app(Const("transport"), shift(e_ty, 2),
                           shift(fam, 2), Var(2), Var(1), Var(0))))
    else:
        # binders inside the motive: a, b, q over x', p over the context
        src_m = _moved(ctx, b_ty, depth, Var(2), None, None, None, 5)
        tgt_m = _moved(ctx, b_ty, depth, Var(1), Var(2), Var(1), Var(0), 5)
        from .kernel import IndId
        motive = arrow(src_m, tgt_m)
        term = Lam(Lam(IndId(Var(0), motive, Lam(Var(0)))))
    moved_ty = _moved(ctx, b_ty, depth, Var(1), Var(depth + 1), Var(1),
                      Var(0), 2)
    full_ty = Pi(e_here,
                 Pi(Id(shift(e_here, 1), Var(depth), Var(0)),
                    arrow(shift(b_ty, 2), moved_ty)))
    return TransportOp(depth, term, full_ty)


def _moved(ctx, b_ty, depth, xnew, xsrc, xtgt, path, lift):
    """B shifted by ``lift`` with the moved variable replaced by ``xnew``;
    when a ``path`` is given, each later entry y_i is additionally moved
    by a constant-family transport along it (the entries are independent
    of the moved variable, so their families are constant)."""
    t = shift(b_ty, lift)
    t = _replace_var(t, depth - 1 + lift, xnew)
    if path is None:
        return t
    e_lift = shift(ctx.entries[-depth], depth + lift)
    for i in range(1, depth):
        d_i = ctx.entries[len(ctx) - depth + i]
        # D_i over its prefix of length L-depth+i; here at lift extra
        d_here = shift(d_i, (depth - i) + lift)
        yi = Var(depth - 1 - i + lift)
        mover = app(Const("transport"), e_lift, Lam(shift(d_here, 1)),
                    xsrc, xtgt, path)
        t = _replace_var(t, depth - 1 - i + lift, App(mover, yi))
    return t


def _replace_var(t, index, value, depth=0):
    from .kernel.terms import map_children
    if isinstance(t, Var):
        if t.index == index + depth:
            return shift(value, depth)
        return t
    return map_children(t, lambda c, nb: _replace_var(c, index, value,
                                                      depth + nb))


# ---------------------------------------------------------------------------
# canonical isomorphisms


def bapp(f, a):
    """Application that beta-contracts a literal lambda head, keeping
    manufactured terms in checkable shape."""
    if isinstance(f, Lam):
        return subst(f.body, a)
    return App(f, a)


@dataclass(frozen=True)
class CanIso:
    ctx: HContext
    src: HTerm
    tgt: HTerm
    fwd: HTerm
    inv: HTerm
    clause: str
    proof_fwd: HTerm = None   # forall x: src, inv (fwd x) = x
    proof_bwd: HTerm = None   # forall y: tgt, fwd (inv y) = y

    def obligations(self):
        g1 = Pi(self.src, Id(shift(self.src, 1),
                             bapp(shift(self.inv, 1),
                                  bapp(shift(self.fwd, 1), Var(0))),
                             Var(0)))
        g2 = Pi(self.tgt, Id(shift(self.tgt, 1),
                             bapp(shift(self.fwd, 1),
                                  bapp(shift(self.inv, 1), Var(0))),
                             Var(0)))
        return g1, g2

    def discharged(self):
        return self.proof_fwd is not None and self.proof_bwd is not None


class WitnessStore:
    """Caller-supplied data for the non-structural clauses: inverse pairs
    for truncation pairs, relation bridges for quotient pairs."""

    def __init__(self):
        self.trunc = []   # (ctx_len, src, tgt, fwd, inv)
        self.quot = []    # (ctx_len, src, tgt, rel_fwd, rel_bwd)

    def add_trunc(self, ctx_len, src, tgt, fwd, inv):
        self.trunc.append((ctx_len, src, tgt, fwd, inv))

    def add_quot(self, ctx_len, src, tgt, rel_fwd, rel_bwd):
        self.quot.append((ctx_len, src, tgt, rel_fwd, rel_bwd))

    @staticmethod
    def _find(entries, ctx_len, src, tgt):
        for n, s, t, a, b in entries:
            if n <= ctx_len:
                d = ctx_len - n
                if shift(s, d) == src and shift(t, d) == tgt:
                    return shift(a, d), shift(b, d)
        return None

    def find_trunc(self, ctx_len, src, tgt):
        return self._find(self.trunc, ctx_len, src, tgt)

    def find_quot(self, ctx_len, src, tgt):
        return self._find(self.quot, ctx_len, src, tgt)


def _c(n):
    return Const(n)


def identity_iso(ctx, ty) -> CanIso:
    idf = Lam(Var(0))
    pf = Lam(Refl(Var(0)))
    return CanIso(ctx, ty, ty, idf, idf, "identity", pf, pf)


def synth_caniso(table, ctx: HContext, a: HTerm, b: HTerm,
                 witnesses: WitnessStore | None = None) -> CanIso:
    witnesses = witnesses or WitnessStore()
    in_setmf(table, ctx, a)
    in_setmf(table, ctx, b)
    return _synth(table, ctx, whnf(table, a), whnf(table, b), witnesses)


def _synth(table, ctx, a, b, ws) -> CanIso:
    if a == b:
        return identity_iso(ctx, a)
    if isinstance(a, Trunc) and isinstance(b, Trunc):
        hit = ws.find_trunc(len(ctx), a, b)
        if hit is None:
            raise CanisoError(
                f"missing truncation witness for the pair ({a!r}, {b!r})")
        fwd, inv = hit
        pf = Lam(app(_c("sq"), shift(a.inner, 1),
                     bapp(shift(inv, 1), bapp(shift(fwd, 1), Var(0))),
                     Var(0)))
        pb = Lam(app(_c("sq"), shift(b.inner, 1),
                     bapp(shift(fwd, 1), bapp(shift(inv, 1), Var(0))),
                     Var(0)))
        return CanIso(ctx, a, b, fwd, inv, "trunc", pf, pb)
    if isinstance(a, Sigma) and isinstance(b, Sigma):
        return _synth_sigma(table, ctx, a, b, ws)
    if isinstance(a, Pi) and isinstance(b, Pi):
        return _synth_pi(table, ctx, a, b, ws)
    if isinstance(a, Sum) and isinstance(b, Sum):
        return _synth_sum(table, ctx, a, b, ws)
    if isinstance(a, ListT) and isinstance(b, ListT):
        return _synth_list(table, ctx, a, b, ws)
    if isinstance(a, Quot) and isinstance(b, Quot):
        return _synth_quot(table, ctx, a, b, ws)
    raise CanisoError(
        f"no clause relates {type(a).__name__} with {type(b).__name__}")


def _fst(b1, c1, z, lift):
    return app(_c("elim_pair"), shift(b1, lift), Lam(shift(c1, lift, 1)),
               Lam(shift(b1, lift + 1)), Lam(Lam(Var(1))), z)


def _snd(b1, c1, z, lift):
    motive = Lam(reopen(shift(c1, lift + 1, 1),
                        _fst(b1, c1, Var(0), lift + 1), 1))
    return app(_c("elim_pair"), shift(b1, lift), Lam(shift(c1, lift, 1)),
               motive, Lam(Lam(Var(0))), z)


def _compose_terms(f, g):
    """The function sending x to g (f x), beta-contracted."""
    return Lam(bapp(shift(g, 1), bapp(shift(f, 1), Var(0))))


def _synth_sigma(table, ctx, a, b, ws):
    b1, c1 = a.dom, a.cod
    b2, c2 = b.dom, b.cod
    mu_b = _synth(table, ctx, whnf(table, b1), whnf(table, b2), ws)
    fib_ctx = ctx.extend(b1)
    c2_at = reopen(c2, App(shift(mu_b.fwd, 1), Var(0)), 1)
    mu_c = _synth(table, fib_ctx, whnf(table, c1), whnf(table, c2_at), ws)
    if mu_b.proof_bwd is None:
        raise CanisoError("sigma clause needs the base round trip")
    fwd = Lam(Pair(App(shift(mu_b.fwd, 1), _fst(b1, c1, Var(0), 1)),
                   App(reopen(mu_c.fwd, _fst(b1, c1, Var(0), 1), 1),
                       _snd(b1, c1, Var(0), 1))))
    z1 = _fst(b2, c2, Var(0), 1)
    invb_z1 = App(shift(mu_b.inv, 1), z1)
    p_mu = App(shift(mu_b.proof_bwd, 1), z1)
    trp_back = app(_c("transport"), shift(b2, 1), Lam(shift(c2, 1, 1)),
                   z1, App(shift(mu_b.fwd, 1), invb_z1),
                   app(_c("path_sym"), shift(b2, 1),
                       App(shift(mu_b.fwd, 1), invb_z1), z1, p_mu))
    inv = Lam(Pair(invb_z1,
                   App(reopen(mu_c.inv, invb_z1, 1),
                       App(trp_back, _snd(b2, c2, Var(0), 1)))))
    pf = pb = None
    if mu_b.clause == "identity" and mu_c.discharged():
        pf = _sigma_roundtrip(table, b1, c1, mu_c.fwd, mu_c.inv,
                              mu_c.proof_fwd)
        pb = _sigma_roundtrip(table, b1, c2, mu_c.inv, mu_c.fwd,
                              mu_c.proof_bwd)
    return CanIso(ctx, a, b, fwd, inv, "sigma", pf, pb)


def _sigma_roundtrip(table, base, fiber, f_c, g_c, comp_proof):
    """Round trip over Sigma(base, fiber) for an identity base map: a
    componentwise path on the second coordinate, then propositional eta.
    The stated goal's composite converts to the direct composite used
    here."""
    z = Var(0)
    fst_z = _fst(base, fiber, z, 1)
    snd_z = _snd(base, fiber, z, 1)
    gof = bapp(reopen(g_c, fst_z, 1), bapp(reopen(f_c, fst_z, 1), snd_z))
    comp_at = App(reopen(comp_proof, fst_z, 1), snd_z)
    sig = Sigma(shift(base, 1), shift(fiber, 1, 1))
    part1 = app(_c("pair_path_snd"), shift(base, 1),
                Lam(shift(fiber, 1, 1)), fst_z, gof, snd_z, comp_at)
    part2 = app(_c("sigma_eta"), shift(base, 1), Lam(shift(fiber, 1, 1)),
                z)
    body = app(_c("path_trans"), sig, Pair(fst_z, gof),
               Pair(fst_z, snd_z), z, part1, part2)
    return Lam(body)


def _synth_pi(table, ctx, a, b, ws):
    b1, c1 = a.dom, a.cod
    b2, c2 = b.dom, b.cod
    mu_b = _synth(table, ctx, whnf(table, b1), whnf(table, b2), ws)
    fib_ctx = ctx.extend(b1)
    c2_at = reopen(c2, App(shift(mu_b.fwd, 1), Var(0)), 1)
    mu_c = _synth(table, fib_ctx, whnf(table, c1), whnf(table, c2_at), ws)
    if mu_b.proof_bwd is None:
        raise CanisoError("pi clause needs the base round trip")
    invb_x = App(shift(mu_b.inv, 2), Var(0))
    p_mu = App(shift(mu_b.proof_bwd, 2), Var(0))
    trp = app(_c("transport"), shift(b2, 2), Lam(shift(c2, 2, 1)),
              App(shift(mu_b.fwd, 2), invb_x), Var(0), p_mu)
    fwd = Lam(Lam(App(trp, App(reopen(shift(mu_c.fwd, 1, 1), invb_x, 2),
                               App(Var(1), invb_x)))))
    inv = Lam(Lam(App(reopen(shift(mu_c.inv, 1, 1), Var(0), 2),
                      App(Var(1), App(shift(mu_b.fwd, 2), Var(0))))))
    pf = pb = None
    if mu_b.clause == "identity" and mu_c.discharged():
        pf = _pi_roundtrip(table, b1, c1, fwd, inv, mu_c.proof_fwd)
        pb = _pi_roundtrip(table, b1, c2, inv, fwd, mu_c.proof_bwd)
    return CanIso(ctx, a, b, fwd, inv, "pi", pf, pb)


def _pi_roundtrip(table, base, fiber, first, second, comp_proof):
    """Round trip over Pi(base, fiber) for an identity base map, by
    function extensionality over the componentwise round trips."""
    f = Var(0)
    composite = bapp(shift(second, 1), bapp(shift(first, 1), f))
    pointwise = Lam(bapp(reopen(shift(comp_proof, 1, 1), Var(0), 1),
                         App(shift(f, 1), Var(0))))
    body = app(_c("funext"), shift(base, 1), Lam(shift(fiber, 1, 1)),
               composite, f, pointwise)
    return Lam(body)


def _synth_sum(table, ctx, a, b, ws):
    l = _synth(table, ctx, whnf(table, a.left), whnf(table, b.left), ws)
    r = _synth(table, ctx, whnf(table, a.right), whnf(table, b.right), ws)
    fwd = _sum_map(b, l.fwd, r.fwd)
    inv = _sum_map(a, l.inv, r.inv)
    pf = pb = None
    if l.discharged() and r.discharged():
        pf = _sum_roundtrip(table, a, fwd, inv, l.fwd, l.inv, r.fwd, r.inv,
                            l.proof_fwd, r.proof_fwd)
        pb = _sum_roundtrip(table, b, inv, fwd, l.inv, l.fwd, r.inv, r.fwd,
                            l.proof_bwd, r.proof_bwd)
    return CanIso(ctx, a, b, fwd, inv, "sum", pf, pb)


def _sum_map(tgt, fl, fr):
    return Lam(IndSum(Var(0), shift(tgt, 2),
                      Inl(App(shift(fl, 2), Var(0))),
                      Inr(App(shift(fr, 2), Var(0)))))


def _sum_roundtrip(table, src, first, second, fl, gl, fr, gr, pl, pr):
    comp = _compose_terms(first, second)
    goal_fam = Lam(Id(shift(src, 1),
                      App(shift(comp, 1), Var(0)), Var(0)))
    left = Lam(app(_c("ap"), shift(src.left, 1), shift(src, 1),
                   Lam(Inl(Var(0))),
                   bapp(shift(gl, 1), bapp(shift(fl, 1), Var(0))), Var(0),
                   bapp(shift(pl, 1), Var(0))))
    right = Lam(app(_c("ap"), shift(src.right, 1), shift(src, 1),
                    Lam(Inr(Var(0))),
                    bapp(shift(gr, 1), bapp(shift(fr, 1), Var(0))), Var(0),
                    bapp(shift(pr, 1), Var(0))))
    return app(_c("elim_sum"), src.left, src.right, goal_fam, left, right)


def _synth_list(table, ctx, a, b, ws):
    e = _synth(table, ctx, whnf(table, a.elem), whnf(table, b.elem), ws)
    fwd = _list_map(b.elem, e.fwd)
    inv = _list_map(a.elem, e.inv)
    pf = pb = None
    if e.discharged():
        pf = _list_roundtrip(table, a.elem, fwd, inv, e.fwd, e.inv,
                             e.proof_fwd)
        pb = _list_roundtrip(table, b.elem, inv, fwd, e.inv, e.fwd,
                             e.proof_bwd)
    return CanIso(ctx, a, b, fwd, inv, "list", pf, pb)


def _list_map(tgt_e, f):
    return Lam(IndList(Var(0), ListT(shift(tgt_e, 2)), Nil(),
                       KCons(Var(0), App(shift(f, 4), Var(1)))))


def _list_roundtrip(table, src_e, first, second, fe, ge, pe):
    comp = _compose_terms(first, second)
    la = ListT(src_e)
    goal_fam = Lam(Id(shift(la, 1), App(shift(comp, 1), Var(0)), Var(0)))
    nil_case = Refl(Nil())
    gof_h = bapp(shift(ge, 3), bapp(shift(fe, 3), Var(1)))
    cons_case = app(_c("cons_path"), shift(src_e, 3),
                    bapp(shift(comp, 3), Var(2)), Var(2), gof_h, Var(1),
                    Var(0), bapp(shift(pe, 3), Var(1)))
    return app(_c("elim_list"), src_e, goal_fam, nil_case,
               Lam(Lam(Lam(cons_case))))


def _synth_quot(table, ctx, a, b, ws):
    mu_b = _synth(table, ctx, whnf(table, a.base), whnf(table, b.base), ws)
    bridge = ws.find_quot(len(ctx), a, b)
    if bridge is None:
        raise CanisoError(
            f"missing relation bridge for the quotient pair "
            f"({a!r}, {b!r})")
    rf, rb = bridge
    if not mu_b.discharged():
        raise CanisoError("quotient clause needs the base round trips")
    fwd = _quot_map(b, mu_b.fwd, rf)
    inv = _quot_map(a, mu_b.inv, rb)
    pf = _quot_roundtrip(table, a, fwd, inv, mu_b.fwd, mu_b.inv,
                         mu_b.proof_fwd)
    pb = _quot_roundtrip(table, b, inv, fwd, mu_b.inv, mu_b.fwd,
                         mu_b.proof_bwd)
    return CanIso(ctx, a, b, fwd, inv, "quot", pf, pb)


def _quot_map(tgt, f, rel_bridge):
    respects = Lam(Lam(Lam(app(
        _c("qglue"), shift(tgt.base, 3), shift(tgt.rel, 3),
        shift(tgt.equiv, 3), App(shift(f, 3), Var(2)),
        App(shift(f, 3), Var(1)),
        app(shift(rel_bridge, 3), Var(2), Var(1), Var(0))))))
    return Lam(IndQuot(Var(0), shift(tgt, 1),
                       QMap(App(shift(f, 2), Var(0))),
                       shift(respects, 1)))


def _quot_roundtrip(table, src, first, second, f_b, g_b, base_proof):
    comp = _compose_terms(first, second)
    fam = Lam(Id(shift(src, 1), App(shift(comp, 1), Var(0)), Var(0)))
    sw = set_witness(table, src)
    if sw is None:
        return None
    prp = Lam(app(_c("p_id"), shift(src, 1), shift(sw, 1),
                  App(shift(comp, 1), Var(0)), Var(0)))
    point = Lam(app(_c("ap"), shift(src.base, 1), shift(src, 1),
                    Lam(QMap(Var(0))),
                    bapp(shift(g_b, 1), bapp(shift(f_b, 1), Var(0))),
                    Var(0), bapp(shift(base_proof, 1), Var(0))))
    return app(_c("qind_prop"), src.base, src.rel, src.equiv, fam, prp,
               point)


# ---------------------------------------------------------------------------
# composition, inversion, substitution


def compose_caniso(table, f: CanIso, g: CanIso) -> CanIso:
    """The composite isomorphism (g after f)."""
    if f.tgt != g.src:
        raise CanisoError("composition endpoints do not align")
    fwd = _compose_terms(f.fwd, g.fwd)
    inv = _compose_terms(g.inv, f.inv)
    pf = pb = None
    if f.discharged() and g.discharged():
        pf = _compose_roundtrip(table, f.src, f.tgt, f.fwd, f.inv, g.fwd,
                                g.inv, g.proof_fwd, f.proof_fwd)
        pb = _compose_roundtrip(table, g.tgt, g.src, g.inv, g.fwd, f.inv,
                                f.fwd, f.proof_bwd, g.proof_bwd)
    return CanIso(f.ctx, f.src, g.tgt, fwd, inv, "compose", pf, pb)


def _compose_roundtrip(table, a_ty, mid_ty, f1, g1, f2, g2, inner_proof,
                       outer_proof):
    """Round trip of (g1 . g2) after (f2 . f1) at a point of a_ty: cancel
    the inner pair first, then the outer."""
    x = Var(0)
    f1x = bapp(shift(f1, 1), x)
    inner = bapp(shift(inner_proof, 1), f1x)
    step = app(_c("ap"), shift(mid_ty, 1), shift(a_ty, 1), shift(g1, 1),
               bapp(shift(g2, 1), bapp(shift(f2, 1), f1x)), f1x, inner)
    total = app(_c("path_trans"), shift(a_ty, 1),
                bapp(shift(g1, 1),
                     bapp(shift(g2, 1), bapp(shift(f2, 1), f1x))),
                bapp(shift(g1, 1), f1x), x, step,
                bapp(shift(outer_proof, 1), x))
    return Lam(total)


def invert_caniso(f: CanIso) -> CanIso:
    return CanIso(f.ctx, f.tgt, f.src, f.inv, f.fwd,
                  f"inverse({f.clause})", f.proof_bwd, f.proof_fwd)


def caniso_subst(f: CanIso, value: HTerm) -> CanIso:
    """Substitute for the innermost context variable throughout."""
    if len(f.ctx) == 0:
        raise CanisoError("no context variable to substitute")
    new_ctx = HContext(f.ctx.entries[:-1])

    def s(t):
        return None if t is None else subst(t, value)

    return CanIso(new_ctx, s(f.src), s(f.tgt), s(f.fwd), s(f.inv),
                  f.clause, s(f.proof_fwd), s(f.proof_bwd))


# ---------------------------------------------------------------------------
# finite enumeration and pointwise equality


def enumerate_elements(table, ty: HTerm, limit: int = 64):
    """All closed canonical elements of a finite-shaped type, or None."""
    t = whnf(table, ty)
    if isinstance(t, Zero):
        return []
    if isinstance(t, One):
        from .kernel import Star
        return [Star()]
    if isinstance(t, Sum):
        l = enumerate_elements(table, t.left, limit)
        r = enumerate_elements(table, t.right, limit)
        if l is None or r is None:
            return None
        out = [Inl(x) for x in l] + [Inr(y) for y in r]
        return out if len(out) <= limit else None
    if isinstance(t, Sigma):
        l = enumerate_elements(table, t.dom, limit)
        if l is None:
            return None
        out = []
        for x in l:
            cod = enumerate_elements(table, subst(t.cod, x), limit)
            if cod is None:
                return None
            out.extend(Pair(x, y) for y in cod)
        return out if len(out) <= limit else None
    if isinstance(t, Trunc):
        from .kernel import TruncIn
        inner = enumerate_elements(table, t.inner, limit)
        if inner is None:
            return None
        return [TruncIn(x) for x in inner]
    if isinstance(t, Quot):
        base = enumerate_elements(table, t.base, limit)
        if base is None:
            return None
        return [QMap(x) for x in base]
    return None


def pointwise_id_proof(table, ty: HTerm, lhs: HTerm, rhs: HTerm):
    """A closed proof of Id(ty, lhs, rhs) for canonical points, or None."""
    from .kernel import conv, TruncIn
    t = whnf(table, ty)
    if conv(table, lhs, rhs):
        return Refl(whnf(table, lhs))
    pw = prop_witness(table, t)
    if pw is not None:
        return app(pw, lhs, rhs)
    l, r = whnf(table, lhs), whnf(table, rhs)
    if isinstance(t, Sigma) and isinstance(l, Pair) and isinstance(r, Pair):
        if conv(table, l.fst, r.fst):
            inner = pointwise_id_proof(table, subst(t.cod, l.fst), l.snd,
                                       r.snd)
            if inner is None:
                return None
            return app(_c("pair_path_snd"), t.dom, Lam(t.cod), l.fst,
                       l.snd, r.snd, inner)
        inner1 = pointwise_id_proof(table, t.dom, l.fst, r.fst)
        # dependent first components beyond conversion are out of scope
        return None
    if isinstance(t, Sum):
        if isinstance(l, Inl) and isinstance(r, Inl):
            inner = pointwise_id_proof(table, t.left, l.arg, r.arg)
            if inner is None:
                return None
            return app(_c("ap"), t.left, t, Lam(Inl(Var(0))), l.arg, r.arg,
                       inner)
        if isinstance(l, Inr) and isinstance(r, Inr):
            inner = pointwise_id_proof(table, t.right, l.arg, r.arg)
            if inner is None:
                return None
            return app(_c("ap"), t.right, t, Lam(Inr(Var(0))), l.arg,
                       r.arg, inner)
        return None
    if isinstance(t, Quot) and isinstance(l, QMap) and isinstance(r, QMap):
        inner = pointwise_id_proof(table, t.base, l.arg, r.arg)
        if inner is not None:
            return app(_c("ap"), t.base, t, Lam(QMap(Var(0))), l.arg,
                       r.arg, inner)
        return None
    return None
