"""Translation of the extensional level into the kernel fragment.

Propositions translate truncation-headed throughout (falsum to the boxed
empty type, connectives to boxed products/functions/sums, the extensional
equality to the boxed identity type); the unique proposition proof
translates per rule to a reconstructed realizer.  Definitional type
equalities translate to canonical isomorphisms between the two sides;
terms crossing such an equality are coerced along the isomorphism.
Reflection turns a boxed-identity realizer into an identity proof by
unboxing; quotient effectiveness maps a class equation to the relation
via the effectiveness form; classifications of logically equivalent
propositions are identified through propositional extensionality.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..caniso import (CanIso, CanisoError, WitnessStore, bapp,
                      compose_caniso, identity_iso, invert_caniso,
                      synth_caniso)
from ..hlevel import stdlib
from ..kernel import (App, Const, HContext, HTerm, Id, IndQuot, IndTrunc,
                      IndZero, Inl, Inr, KernelError, Lam, ListT, Nil, One,
                      Pair, Pi, QEff, QMap, Quot, Refl, Sigma, Star, Sum,
                      Trunc, TruncIn, Univ, Var, Zero, app, arrow, check,
                      conv, mk_isprop, mk_isset, prop_u0, reopen, shift,
                      subst, times, whnf)
from ..kernel import Cons as KCons
from ..source import terms as S
from ..source.judgements import (CtxWF, EqTerm, EqType, HasType, IsType,
                                 Telescope)
from ..witness import prop_witness, set_witness

PROP_SORTS = ("prop", "props")


class TranslationError(Exception):
    pass


def _c(name):
    return Const(name)


@dataclass
class TType:
    hott: HTerm
    pr_s: HTerm
    pr_p: HTerm = None


@dataclass
class ExtEq:
    """A definitional type equality, realized as a canonical isomorphism
    between the two translated sides (context isos are identities: both
    sides live in the same translated telescope)."""

    lhs: TType
    rhs: TType
    iso: CanIso
    sort: str = None


@dataclass
class SigClosure:
    sig: HTerm
    projections: list


@dataclass
class TransOutExt:
    kind: str                 # ctx | type | term | type-eq | term-eq
    ctx: HContext
    subject: HTerm = None
    ty: HTerm = None
    pr_p: HTerm = None
    pr_s: HTerm = None
    target_level: int = 0
    sort: str = None
    rhs: HTerm = None
    eq_proof: HTerm = None    # identity proof for term equalities
    ext_eq: ExtEq = None
    realizer: HTerm = None    # for canonical-proof judgements
    coercions: list = field(default_factory=list)
    obligations: list = field(default_factory=list)
    in_d: SigClosure = None


def s_coe(ty, prp):
    return app(_c("s_coe"), ty, prp)


class EmttTranslator:
    def __init__(self):
        self.table, _ = stdlib()
        self.term_memo = {}
        self.type_memo = {}
        self.quot_equiv = {}      # raw (base, rel) -> (ctx_len, kernel term)
        self.witnesses = WitnessStore()
        self.coercion_log = []
        self.obligations = []
        self.node_out = {}

    # ------------------------------------------------------------------
    # raw types

    def trans_type(self, t: S.STerm) -> TType:
        hit = self.type_memo.get(t)
        if hit is not None:
            return hit
        out = self._trans_type(t)
        self.type_memo[t] = out
        return out

    def _prop(self, hott, pr_p):
        return TType(hott, s_coe(hott, pr_p), pr_p)

    def _trans_type(self, t: S.STerm) -> TType:
        if isinstance(t, S.N0):
            return TType(Zero(), _c("s0"))
        if isinstance(t, S.N1):
            return TType(One(), _c("s1"))
        if isinstance(t, S.MList):
            e = self.trans_type(t.elem)
            return TType(ListT(e.hott), app(_c("s_list"), e.hott, e.pr_s))
        if isinstance(t, S.MSigma):
            a, b = self.trans_type(t.dom), self.trans_type(t.cod)
            return TType(Sigma(a.hott, b.hott),
                         app(_c("s_sigma"), a.hott, Lam(b.hott), a.pr_s,
                             Lam(b.pr_s)))
        if isinstance(t, S.MPi):
            a, b = self.trans_type(t.dom), self.trans_type(t.cod)
            return TType(Pi(a.hott, b.hott),
                         app(_c("s_pi"), a.hott, Lam(b.hott), Lam(b.pr_s)))
        if isinstance(t, S.MPlus):
            a, b = self.trans_type(t.left), self.trans_type(t.right)
            return TType(Sum(a.hott, b.hott),
                         app(_c("s_sum"), a.hott, b.hott, a.pr_s, b.pr_s))
        if isinstance(t, S.PowerOne):
            return TType(prop_u0(), _c("s_prop0"))
        if isinstance(t, S.PowerFun):
            a = self.trans_type(t.dom)
            cod = shift(prop_u0(), 1)
            return TType(Pi(a.hott, cod),
                         app(_c("s_pi"), a.hott, Lam(cod),
                             Lam(_c("s_prop0"))))
        if isinstance(t, S.Bot):
            return self._prop(Trunc(Zero()), app(_c("p_trunc"), Zero()))
        if isinstance(t, S.MOr):
            a, b = self.trans_type(t.left), self.trans_type(t.right)
            return self._prop(Trunc(Sum(a.hott, b.hott)),
                              app(_c("p_or"), a.hott, b.hott))
        if isinstance(t, S.MAnd):
            a, b = self.trans_type(t.left), self.trans_type(t.right)
            return self._prop(Trunc(times(a.hott, b.hott)),
                              app(_c("p_trunc_times"), a.hott, b.hott))
        if isinstance(t, S.MImp):
            a, b = self.trans_type(t.left), self.trans_type(t.right)
            return self._prop(Trunc(arrow(a.hott, b.hott)),
                              app(_c("p_trunc_imp"), a.hott, b.hott))
        if isinstance(t, S.MForall):
            a, b = self.trans_type(t.dom), self.trans_type(t.body)
            return self._prop(Trunc(Pi(a.hott, b.hott)),
                              app(_c("p_trunc_pi"), a.hott, Lam(b.hott)))
        if isinstance(t, S.MExists):
            a, b = self.trans_type(t.dom), self.trans_type(t.body)
            return self._prop(Trunc(Sigma(a.hott, b.hott)),
                              app(_c("p_ex"), a.hott, Lam(b.hott)))
        if isinstance(t, S.EqProp):
            a = self.trans_type(t.ty)
            l, r = self.trans_term(t.lhs), self.trans_term(t.rhs)
            idt = Id(a.hott, l, r)
            return self._prop(Trunc(idt), app(_c("p_trunc"), idt))
        if isinstance(t, S.MQuot):
            base = self.trans_type(t.base)
            rel_body = self._rel_body(t.rel)
            rel_fn = Lam(Lam(rel_body.hott))
            equiv = self._lookup_quot_equiv(t.base, t.rel)
            q = Quot(base.hott, rel_fn, equiv)
            prs = app(_c("s_quot"), base.hott, rel_fn, base.pr_s,
                      Lam(Lam(rel_body.pr_p)), equiv)
            return TType(q, prs)
        raise TranslationError(f"no type clause for {type(t).__name__}")

    def _rel_body(self, rel: S.STerm) -> TType:
        return self.trans_type(rel)

    def _lookup_quot_equiv(self, base, rel):
        hit = self.quot_equiv.get((base, rel))
        if hit is None:
            raise TranslationError(
                "quotient used before its formation derivation; the "
                "equivalence witness is built at the formation node")
        return hit

    # ------------------------------------------------------------------
    # raw terms (compositional part)

    def trans_term(self, t: S.STerm) -> HTerm:
        if isinstance(t, S.SVar):
            return Var(t.index)
        if isinstance(t, S.MStar):
            return Star()
        if isinstance(t, S.Eps):
            return Nil()
        if isinstance(t, S.MPair):
            return Pair(self.trans_term(t.fst), self.trans_term(t.snd))
        if isinstance(t, S.MLam):
            return Lam(self.trans_term(t.body))
        if isinstance(t, S.MAp):
            return App(self.trans_term(t.fn), self.trans_term(t.arg))
        if isinstance(t, S.MInl):
            return Inl(self.trans_term(t.arg))
        if isinstance(t, S.MInr):
            return Inr(self.trans_term(t.arg))
        if isinstance(t, S.MCons):
            return KCons(self.trans_term(t.tail), self.trans_term(t.head))
        if isinstance(t, S.QClass):
            return QMap(self.trans_term(t.arg))
        if isinstance(t, S.PCls):
            tt = self.trans_type(t.arg)
            return Pair(tt.hott, tt.pr_p)
        hit = self.term_memo.get(t)
        if hit is not None:
            return hit
        if isinstance(t, S.TrueTm):
            raise TranslationError(
                "the canonical proof occurs outside a judgement position; "
                "realizers are reconstructed per rule")
        raise TranslationError(
            f"no applicable clause for {type(t).__name__}; eliminator "
            f"translations are supplied by their derivation nodes")

    # ------------------------------------------------------------------
    # derivation walk

    def run(self, script) -> TransOutExt:
        self._walk(script)
        out = self.node_out[id(script)]
        out.coercions = self.coercion_log
        out.obligations = self.obligations
        if out.kind == "type" and len(out.ctx) >= 0:
            out.in_d = self._in_d(out)
        return out

    def _walk(self, node):
        if id(node) in self.node_out:
            return
        for p in node.premises:
            self._walk(p)
        rule = node.rule.split("/", 1)[1]
        handler = getattr(self, f"_tr_{rule.replace('-', '_')}", None)
        if handler is None:
            raise TranslationError(f"no translation clause for {node.rule}")
        self.node_out[id(node)] = handler(node)

    def _prem(self, node, i):
        return self.node_out[id(node.premises[i])]

    def _ctx_of(self, j) -> HContext:
        return HContext([self.trans_type(t).hott for t in j.ctx.types])

    # judgement packagers ------------------------------------------------

    def _type_out(self, node, tt=None):
        j = node.conclusion
        tt = tt or self.trans_type(j.ty)
        level = 0 if j.sort in ("set", "props") else 1
        return TransOutExt("type", self._ctx_of(j), tt.hott, pr_p=tt.pr_p,
                           pr_s=tt.pr_s, target_level=level, sort=j.sort)

    def _term_out(self, node, term, ty: TType = None):
        j = node.conclusion
        ty = ty or self.trans_type(j.ty)
        return TransOutExt("term", self._ctx_of(j), term, ty=ty.hott,
                           pr_p=ty.pr_p, pr_s=ty.pr_s,
                           realizer=term if j.term == S.TrueTm() else None)

    def _term_eq_out(self, node, lhs, rhs, proof, ty: TType = None):
        j = node.conclusion
        ty = ty or self.trans_type(j.ty)
        out = TransOutExt("term-eq", self._ctx_of(j), lhs, ty=ty.hott,
                          pr_p=ty.pr_p, pr_s=ty.pr_s, rhs=rhs,
                          eq_proof=proof)
        return out

    def _type_eq_out(self, node, ext: ExtEq):
        j = node.conclusion
        level = 0 if j.sort in ("set", "props") else 1
        g1, g2 = ext.iso.obligations()
        ctx = self._ctx_of(j)
        self.obligations.append((ctx, g1, ext.iso.proof_fwd))
        self.obligations.append((ctx, g2, ext.iso.proof_bwd))
        return TransOutExt("type-eq", ctx, ext.lhs.hott,
                           pr_p=ext.lhs.pr_p, pr_s=ext.lhs.pr_s,
                           target_level=level, sort=j.sort,
                           rhs=ext.rhs.hott, ext_eq=ext)

    def _mk_ext_eq(self, node, lt: TType, rt: TType) -> ExtEq:
        ctx = self._ctx_of(node.conclusion)
        iso = synth_caniso(self.table, ctx, lt.hott, rt.hott,
                           self.witnesses)
        return ExtEq(lt, rt, iso, node.conclusion.sort)

    def coerce_ext(self, term: HTerm, src: HTerm, ext: ExtEq) -> HTerm:
        """Insert the canonical coercion; identity isomorphisms vanish."""
        if ext.iso.clause == "identity" or src == ext.rhs.hott:
            return term
        self.coercion_log.append((ext.lhs.hott, ext.rhs.hott))
        return bapp(ext.iso.fwd, term)

    def _in_d(self, out: TransOutExt) -> SigClosure:
        entries = list(out.ctx.entries) + [out.subject]
        return mk_sig_entries(entries)

    # ------------------------------------------------------------------
    # structural rules

    def _tr_ctx_emp(self, node):
        return TransOutExt("ctx", HContext())

    def _tr_ctx_ext(self, node):
        return TransOutExt("ctx", self._ctx_of(node.conclusion))

    def _tr_var(self, node):
        j = node.conclusion
        return self._term_out(node, Var(j.term.index))

    def _resort(self, node):
        inner = self._prem(node, 0)
        j = node.conclusion
        level = 0 if j.sort in ("set", "props") else 1
        out = TransOutExt(inner.kind, inner.ctx, inner.subject,
                          pr_p=inner.pr_p, pr_s=inner.pr_s,
                          target_level=level, sort=j.sort, rhs=inner.rhs,
                          ext_eq=inner.ext_eq)
        return out

    _tr_sub_props_set = _resort
    _tr_sub_props_prop = _resort
    _tr_sub_set_col = _resort
    _tr_sub_prop_col = _resort
    _tr_eq_sub_props_set = _resort
    _tr_eq_sub_props_prop = _resort
    _tr_eq_sub_set_col = _resort
    _tr_eq_sub_prop_col = _resort

    def _tr_conv(self, node):
        a = self._prem(node, 0)
        e = self._prem(node, 1)
        coerced = self.coerce_ext(a.subject, a.ty, e.ext_eq)
        return self._term_out(node, coerced, ty=e.ext_eq.rhs)

    def _tr_conv_eq(self, node):
        a = self._prem(node, 0)
        e = self._prem(node, 1)
        ext = e.ext_eq
        lhs = self.coerce_ext(a.subject, a.ty, ext)
        rhs = self.coerce_ext(a.rhs, a.ty, ext)
        if ext.iso.clause == "identity":
            proof = a.eq_proof
        else:
            proof = app(_c("ap"), ext.lhs.hott, ext.rhs.hott, ext.iso.fwd,
                        a.subject, a.rhs, a.eq_proof)
        return self._term_eq_out(node, lhs, rhs, proof, ty=ext.rhs)

    def _tr_eq_refl(self, node):
        a = self._prem(node, 0)
        return self._term_eq_out(node, a.subject, a.subject,
                                 Refl(a.subject))

    def _tr_eq_sym(self, node):
        a = self._prem(node, 0)
        proof = app(_c("path_sym"), a.ty, a.subject, a.rhs, a.eq_proof)
        return self._term_eq_out(node, a.rhs, a.subject, proof)

    def _tr_eq_trans(self, node):
        a = self._prem(node, 0)
        b = self._prem(node, 1)
        proof = app(_c("path_trans"), a.ty, a.subject, a.rhs, b.rhs,
                    a.eq_proof, b.eq_proof)
        return self._term_eq_out(node, a.subject, b.rhs, proof)

    def _tr_ty_eq_refl(self, node):
        a = self._prem(node, 0)
        tt = TType(a.subject, a.pr_s, a.pr_p)
        return self._type_eq_out(node, ExtEq(tt, tt,
                                             identity_iso(a.ctx, a.subject),
                                             node.conclusion.sort))

    def _tr_ty_eq_sym(self, node):
        a = self._prem(node, 0).ext_eq
        return self._type_eq_out(node, ExtEq(a.rhs, a.lhs,
                                             invert_caniso(a.iso), a.sort))

    def _tr_ty_eq_trans(self, node):
        a = self._prem(node, 0).ext_eq
        b = self._prem(node, 1).ext_eq
        iso = compose_caniso(self.table, a.iso, b.iso)
        return self._type_eq_out(node, ExtEq(a.lhs, b.rhs, iso, a.sort))

    # ------------------------------------------------------------------
    # proof irrelevance and reflection

    def _tr_prop_mono(self, node):
        phi = self._prem(node, 0)
        p = self._prem(node, 1)
        q = self._prem(node, 2)
        proof = app(phi.pr_p, p.subject, q.subject)
        return self._term_eq_out(node, p.subject, q.subject, proof,
                                 ty=TType(phi.subject, phi.pr_s, phi.pr_p))

    def _tr_prop_true(self, node):
        p = self._prem(node, 1)
        phi = self._prem(node, 0)
        return self._term_out(node, p.subject,
                              ty=TType(phi.subject, phi.pr_s, phi.pr_p))

    def _tr_i_eq(self, node):
        a = self._prem(node, 0)
        return self._term_out(node, TruncIn(Refl(a.subject)))

    def _tr_e_eq(self, node):
        p = self._prem(node, 0)
        j = node.premises[0].conclusion
        a_tt = self.trans_type(j.ty.ty)
        l = self.trans_term(j.ty.lhs)
        r = self.trans_term(j.ty.rhs)
        idt = Id(a_tt.hott, l, r)
        proof = app(_c("untrunc"), idt,
                    app(_c("p_id"), a_tt.hott, a_tt.pr_s, l, r), p.subject)
        return self._term_eq_out(node, l, r, proof, ty=a_tt)

    # ------------------------------------------------------------------
    # congruence under binders

    def _tr_xi(self, node):
        a = self._prem(node, 0)
        e = self._prem(node, 1)
        j = node.conclusion
        pity = self.trans_type(j.ty)
        cod = self.trans_type(node.premises[1].conclusion.ty)
        proof = app(_c("funext"), a.subject, Lam(cod.hott),
                    Lam(e.subject), Lam(e.rhs), Lam(e.eq_proof))
        return self._term_eq_out(node, Lam(e.subject), Lam(e.rhs), proof,
                                 ty=pity)

    def _tr_ap_cong(self, node):
        f = self._prem(node, 0)
        a = self._prem(node, 1)
        fj = node.premises[0].conclusion
        cod_raw = fj.ty.cod
        try:
            cod_plain = S.shift(cod_raw, -1)
        except S.SourceError:
            raise TranslationError(
                "application congruence with a dependent codomain needs "
                "transport bookkeeping; out of scope") from None
        cod = self.trans_type(cod_plain)
        fn_ty = self.trans_type(fj.ty)
        first = app(_c("ap"), fn_ty.hott, cod.hott,
                    Lam(App(Var(0), shift(a.subject, 1))),
                    f.subject, f.rhs, f.eq_proof)
        second = app(_c("ap"), a.ty, cod.hott, f.rhs, a.subject, a.rhs,
                     a.eq_proof)
        proof = app(_c("path_trans"), cod.hott,
                    App(f.subject, a.subject), App(f.rhs, a.subject),
                    App(f.rhs, a.rhs), first, second)
        return self._term_eq_out(node, App(f.subject, a.subject),
                                 App(f.rhs, a.rhs), proof, ty=cod)

    def _tr_pair_cong(self, node):
        b = self._prem(node, 0)
        ea = self._prem(node, 1)
        eb = self._prem(node, 2)
        j = node.conclusion
        sig = self.trans_type(j.ty)
        fam_raw = node.premises[0].conclusion.ty
        if ea.subject == ea.rhs:
            proof = app(_c("pair_path_snd"), ea.ty,
                        Lam(self.trans_type(fam_raw).hott), ea.subject,
                        eb.subject, eb.rhs, eb.eq_proof)
        else:
            try:
                plain = S.shift(fam_raw, -1)
            except S.SourceError:
                raise TranslationError(
                    "pair congruence with dependent family and distinct "
                    "first components; out of scope") from None
            proof = app(_c("pair_path"), ea.ty,
                        self.trans_type(plain).hott, ea.subject, ea.rhs,
                        eb.subject, eb.rhs, ea.eq_proof, eb.eq_proof)
        return self._term_eq_out(node, Pair(ea.subject, eb.subject),
                                 Pair(ea.rhs, eb.rhs), proof, ty=sig)

    def _tr_qcls_cong(self, node):
        q = self._prem(node, 0)
        e = self._prem(node, 1)
        qt = TType(q.subject, q.pr_s, q.pr_p)
        proof = app(_c("ap"), e.ty, q.subject, Lam(QMap(Var(0))),
                    e.subject, e.rhs, e.eq_proof)
        return self._term_eq_out(node, QMap(e.subject), QMap(e.rhs),
                                 proof, ty=qt)

    # ------------------------------------------------------------------
    # formations (compositional)

    def _formation(self, node):
        return self._type_out(node)

    _tr_n0_f = _formation
    _tr_n1_f = _formation
    _tr_list_f = _formation
    _tr_sigma_f = _formation
    _tr_pi_f = _formation
    _tr_plus_f = _formation
    _tr_bot_f = _formation
    _tr_or_f = _formation
    _tr_and_f = _formation
    _tr_imp_f = _formation
    _tr_forall_f = _formation
    _tr_exists_f = _formation
    _tr_eq_f = _formation
    _tr_p1_f = _formation
    _tr_pfun_f = _formation

    def _tr_quot_f(self, node):
        j = node.conclusion
        base_raw, rel_raw = j.ty.base, j.ty.rel
        refl_r = self._prem(node, 2)
        sym_r = self._prem(node, 3)
        trans_r = self._prem(node, 4)
        refl_plain = self._plainify(refl_r.ty, refl_r.subject)
        sym_plain = self._plainify(sym_r.ty, sym_r.subject)
        trans_plain = self._plainify(trans_r.ty, trans_r.subject)
        equiv = Pair(refl_plain, Pair(sym_plain, trans_plain))
        self.quot_equiv[(base_raw, rel_raw)] = equiv
        return self._type_out(node)

    def _plainify(self, ty: HTerm, tm: HTerm) -> HTerm:
        """Strip truncations off a Pi skeleton, unboxing pointwise."""
        t = whnf(self.table, ty)
        if isinstance(t, Trunc):
            inner = whnf(self.table, t.inner)
            if isinstance(inner, Pi):
                pw = prop_witness(self.table, inner)
                if pw is None:
                    return tm
                return self._plainify(inner,
                                      app(_c("untrunc"), inner, pw, tm))
            return tm
        if isinstance(t, Pi):
            body = self._plainify(t.cod, App(shift(tm, 1), Var(0)))
            return Lam(body)
        return tm

    # ------------------------------------------------------------------
    # set-level terms

    def _tr_n1_i(self, node):
        return self._term_out(node, Star())

    def _tr_list_i_nil(self, node):
        return self._term_out(node, Nil())

    def _tr_list_i_cons(self, node):
        l = self._prem(node, 0)
        a = self._prem(node, 1)
        return self._term_out(node, KCons(l.subject, a.subject))

    def _tr_sigma_i(self, node):
        ta = self._prem(node, 1)
        tb = self._prem(node, 2)
        return self._term_out(node, Pair(ta.subject, tb.subject))

    def _tr_pi_i(self, node):
        b = self._prem(node, 1)
        return self._term_out(node, Lam(b.subject))

    def _tr_pi_e(self, node):
        f = self._prem(node, 0)
        a = self._prem(node, 1)
        return self._term_out(node, App(f.subject, a.subject))

    def _tr_plus_i_inl(self, node):
        t = self._prem(node, 2)
        return self._term_out(node, Inl(t.subject))

    def _tr_plus_i_inr(self, node):
        t = self._prem(node, 2)
        return self._term_out(node, Inr(t.subject))

    # eliminators through the wrapper constants

    def _mk_unit_elim(self, scrut, motive, branch):
        return app(_c("elim_unit"), Lam(motive), branch, scrut)

    def _mk_empty_elim(self, scrut, motive):
        return app(_c("elim_empty"), Lam(motive), scrut)

    def _mk_pair_elim(self, a, b, scrut, motive, branch):
        return app(_c("elim_pair"), a, Lam(b), Lam(motive),
                   Lam(Lam(branch)), scrut)

    def _mk_sum_elim(self, a, b, scrut, motive, lb, rb):
        return app(_c("elim_sum"), a, b, Lam(motive), Lam(lb), Lam(rb),
                   scrut)

    def _mk_list_elim(self, a, scrut, motive, nb, cb):
        return app(_c("elim_list"), a, Lam(motive), nb, Lam(Lam(Lam(cb))),
                   scrut)

    def _register_term(self, raw, term):
        self.term_memo.setdefault(raw, term)

    def _tr_n1_e(self, node):
        t = self._prem(node, 0)
        m = node.premises[1].conclusion
        b = self._prem(node, 2)
        term = self._mk_unit_elim(t.subject, self.trans_type(m.ty).hott,
                                  b.subject)
        self._register_term(node.conclusion.term, term)
        return self._term_out(node, term)

    def _tr_n1_c(self, node):
        m = node.premises[0].conclusion
        b = self._prem(node, 1)
        term = self._mk_unit_elim(Star(), self.trans_type(m.ty).hott,
                                  b.subject)
        raw_lhs = node.conclusion.lhs
        self._register_term(raw_lhs, term)
        return self._term_eq_out(node, term, b.subject, Refl(b.subject))

    def _tr_n0_e(self, node):
        a = self._prem(node, 0)
        m = node.premises[1].conclusion
        term = self._mk_empty_elim(a.subject, self.trans_type(m.ty).hott)
        self._register_term(node.conclusion.term, term)
        return self._term_out(node, term)

    def _tr_sigma_e(self, node):
        d = self._prem(node, 0)
        dj = node.premises[0].conclusion
        m = node.premises[1].conclusion
        br = self._prem(node, 2)
        at = self.trans_type(dj.ty.dom)
        bt = self.trans_type(dj.ty.cod)
        term = self._mk_pair_elim(at.hott, bt.hott, d.subject,
                                  self.trans_type(m.ty).hott, br.subject)
        self._register_term(node.conclusion.term, term)
        return self._term_out(node, term)

    def _tr_sigma_c(self, node):
        m = node.premises[0].conclusion
        br = self._prem(node, 1)
        ta = self._prem(node, 2)
        tb = self._prem(node, 3)
        sig_raw = m.ctx.types[-1]
        at = self.trans_type(sig_raw.dom)
        bt = self.trans_type(sig_raw.cod)
        pair = Pair(ta.subject, tb.subject)
        term = self._mk_pair_elim(at.hott, bt.hott, pair,
                                  self.trans_type(m.ty).hott, br.subject)
        self._register_term(node.conclusion.lhs, term)
        from ..kernel import inst_branch_values
        rhs = inst_branch_values(br.subject, ta.subject, tb.subject)
        return self._term_eq_out(node, term, rhs, Refl(rhs))

    def _tr_pi_c(self, node):
        b = self._prem(node, 0)
        a = self._prem(node, 1)
        lhs = App(Lam(b.subject), a.subject)
        rhs = subst(b.subject, a.subject)
        return self._term_eq_out(node, lhs, rhs, Refl(rhs))

    def _tr_plus_e(self, node):
        d = self._prem(node, 0)
        dj = node.premises[0].conclusion
        m = node.premises[1].conclusion
        l = self._prem(node, 2)
        r = self._prem(node, 3)
        at = self.trans_type(dj.ty.left)
        bt = self.trans_type(dj.ty.right)
        term = self._mk_sum_elim(at.hott, bt.hott, d.subject,
                                 self.trans_type(m.ty).hott, l.subject,
                                 r.subject)
        self._register_term(node.conclusion.term, term)
        return self._term_out(node, term)

    def _plus_comp(self, node, which):
        d = self._prem(node, 0)
        dj = node.premises[0].conclusion
        m = node.premises[1].conclusion
        l = self._prem(node, 2)
        r = self._prem(node, 3)
        at = self.trans_type(dj.ty.left)
        bt = self.trans_type(dj.ty.right)
        term = self._mk_sum_elim(at.hott, bt.hott, d.subject,
                                 self.trans_type(m.ty).hott, l.subject,
                                 r.subject)
        self._register_term(node.conclusion.lhs, term)
        inner = d.subject.arg
        branch = (l if which == "l" else r).subject
        rhs = subst(branch, inner)
        return self._term_eq_out(node, term, rhs, Refl(rhs))

    def _tr_plus_c_inl(self, node):
        return self._plus_comp(node, "l")

    def _tr_plus_c_inr(self, node):
        return self._plus_comp(node, "r")

    def _tr_list_e(self, node):
        sc = self._prem(node, 0)
        scj = node.premises[0].conclusion
        m = node.premises[1].conclusion
        d = self._prem(node, 2)
        s = self._prem(node, 3)
        at = self.trans_type(scj.ty.elem)
        term = self._mk_list_elim(at.hott, sc.subject,
                                  self.trans_type(m.ty).hott, d.subject,
                                  s.subject)
        self._register_term(node.conclusion.term, term)
        return self._term_out(node, term)

    def _tr_list_c_nil(self, node):
        sc = self._prem(node, 0)
        m = node.premises[1].conclusion
        d = self._prem(node, 2)
        s = self._prem(node, 3)
        scj = node.premises[0].conclusion
        at = self.trans_type(scj.ty.elem)
        term = self._mk_list_elim(at.hott, Nil(),
                                  self.trans_type(m.ty).hott, d.subject,
                                  s.subject)
        self._register_term(node.conclusion.lhs, term)
        return self._term_eq_out(node, term, d.subject, Refl(d.subject))

    def _tr_list_c_cons(self, node):
        sc = self._prem(node, 0)
        scj = node.premises[0].conclusion
        m = node.premises[1].conclusion
        d = self._prem(node, 2)
        s = self._prem(node, 3)
        at = self.trans_type(scj.ty.elem)
        mt = self.trans_type(m.ty).hott
        tl = self.trans_term(scj.term.tail)
        hd = self.trans_term(scj.term.head)
        ih_raw = S.ElList(scj.term.tail, node.premises[2].conclusion.term,
                          node.premises[3].conclusion.term)
        ih = self._mk_list_elim(at.hott, tl, mt, d.subject, s.subject)
        self._register_term(ih_raw, ih)
        term = self._mk_list_elim(at.hott, KCons(tl, hd), mt, d.subject,
                                  s.subject)
        self._register_term(node.conclusion.lhs, term)
        from ..kernel import inst_branch_values
        rhs = inst_branch_values(s.subject, tl, hd, ih)
        return self._term_eq_out(node, term, rhs, Refl(term))

    # ------------------------------------------------------------------
    # connectives: canonical-proof realizers

    def _tr_bot_e(self, node):
        a = self._prem(node, 0)
        m = self._prem(node, 1)
        mt = TType(m.subject, m.pr_s, m.pr_p)
        realizer = IndTrunc(a.subject, mt.hott,
                            IndZero(Var(0), shift(mt.hott, 1)), mt.pr_p)
        return self._term_out(node, realizer, ty=mt)

    def _or_parts(self, node, ia, ib):
        a = self._prem(node, ia)
        b = self._prem(node, ib)
        return (TType(a.subject, a.pr_s, a.pr_p),
                TType(b.subject, b.pr_s, b.pr_p))

    def _tr_or_i_l(self, node):
        at, bt = self._or_parts(node, 0, 1)
        t = self._prem(node, 2)
        return self._term_out(node, app(_c("inl_or"), at.hott, bt.hott,
                                        t.subject))

    def _tr_or_i_r(self, node):
        at, bt = self._or_parts(node, 0, 1)
        t = self._prem(node, 2)
        return self._term_out(node, app(_c("inr_or"), at.hott, bt.hott,
                                        t.subject))

    def _tr_or_e(self, node):
        d = self._prem(node, 0)
        dj = node.premises[0].conclusion
        m = self._prem(node, 1)
        l = self._prem(node, 2)
        r = self._prem(node, 3)
        pt = self.trans_type(dj.ty.left)
        qt = self.trans_type(dj.ty.right)
        realizer = app(_c("ind_or"), pt.hott, qt.hott, m.subject, m.pr_p,
                       Lam(l.subject), Lam(r.subject), d.subject)
        return self._term_out(node, realizer,
                              ty=TType(m.subject, m.pr_s, m.pr_p))

    def _tr_and_i(self, node):
        at, bt = self._or_parts(node, 0, 1)
        ta = self._prem(node, 2)
        tb = self._prem(node, 3)
        return self._term_out(node, app(_c("pair_and"), at.hott, bt.hott,
                                        ta.subject, tb.subject))

    def _and_proj(self, node, side):
        at, bt = self._or_parts(node, 0, 1)
        d = self._prem(node, 2)
        name = "fst_and" if side == 1 else "snd_and"
        prp = at.pr_p if side == 1 else bt.pr_p
        want = at if side == 1 else bt
        return self._term_out(node, app(_c(name), at.hott, bt.hott, prp,
                                        d.subject), ty=want)

    def _tr_and_e_1(self, node):
        return self._and_proj(node, 1)

    def _tr_and_e_2(self, node):
        return self._and_proj(node, 2)

    def _tr_imp_i(self, node):
        a = self._prem(node, 0)
        b = self._prem(node, 1)
        bj = node.premises[1].conclusion
        cod = self.trans_type(S.shift(bj.ty, -1))
        at = TType(a.subject, a.pr_s, a.pr_p)
        return self._term_out(node, app(_c("lam_imp"), at.hott, cod.hott,
                                        Lam(b.subject)))

    def _tr_imp_e(self, node):
        f = self._prem(node, 0)
        fj = node.premises[0].conclusion
        a = self._prem(node, 1)
        pt = self.trans_type(fj.ty.left)
        qt = self.trans_type(fj.ty.right)
        return self._term_out(node, app(_c("app_imp"), pt.hott, qt.hott,
                                        qt.pr_p, f.subject, a.subject),
                              ty=qt)

    def _tr_forall_i(self, node):
        a = self._prem(node, 0)
        b = self._prem(node, 1)
        bj = node.premises[1].conclusion
        bt = self.trans_type(bj.ty)
        return self._term_out(node, app(_c("lam_all"), a.subject,
                                        Lam(bt.hott), Lam(b.subject)))

    def _tr_forall_e(self, node):
        f = self._prem(node, 0)
        fj = node.premises[0].conclusion
        a = self._prem(node, 1)
        at = self.trans_type(fj.ty.dom)
        bt = self.trans_type(fj.ty.body)
        realizer = app(_c("app_all"), at.hott, Lam(bt.hott), Lam(bt.pr_p),
                       f.subject, a.subject)
        return self._term_out(node, realizer)

    def _tr_exists_i(self, node):
        p = node.premises[0].conclusion
        a = self._prem(node, 1)
        w = self._prem(node, 2)
        pt = self.trans_type(p.ty)
        aj = node.premises[1].conclusion
        at = self.trans_type(aj.ty)
        return self._term_out(node, app(_c("pair_ex"), at.hott,
                                        Lam(pt.hott), a.subject,
                                        w.subject))

    def _tr_exists_e(self, node):
        d = self._prem(node, 0)
        dj = node.premises[0].conclusion
        m = self._prem(node, 1)
        br = self._prem(node, 2)
        at = self.trans_type(dj.ty.dom)
        pt = self.trans_type(dj.ty.body)
        realizer = app(_c("ind_ex"), at.hott, Lam(pt.hott), m.subject,
                       m.pr_p, Lam(Lam(br.subject)), d.subject)
        return self._term_out(node, realizer,
                              ty=TType(m.subject, m.pr_s, m.pr_p))

    # ------------------------------------------------------------------
    # the power collection of the singleton

    def _tr_i_p(self, node):
        a = self._prem(node, 0)
        return self._term_out(node, Pair(a.subject, a.pr_p))

    def _iff_parts(self, node, t_out, at: TType, bt: TType):
        """From a realizer of the translated logical equivalence, extract
        the two plain maps."""
        conj_l = Trunc(arrow(at.hott, bt.hott))
        conj_r = Trunc(arrow(bt.hott, at.hott))
        fst = app(_c("fst_and"), conj_l, conj_r,
                  app(_c("p_trunc"), arrow(at.hott, bt.hott)), t_out)
        snd = app(_c("snd_and"), conj_l, conj_r,
                  app(_c("p_trunc"), arrow(bt.hott, at.hott)), t_out)
        f = app(_c("untrunc"), arrow(at.hott, bt.hott),
                app(_c("p_imp"), at.hott, bt.hott, at.pr_p, bt.pr_p), fst)
        g = app(_c("untrunc"), arrow(bt.hott, at.hott),
                app(_c("p_imp"), bt.hott, at.hott, bt.pr_p, at.pr_p), snd)
        return f, g

    def _tr_eq_p1(self, node):
        a = self._prem(node, 0)
        b = self._prem(node, 1)
        t = self._prem(node, 2)
        at = TType(a.subject, a.pr_s, a.pr_p)
        bt = TType(b.subject, b.pr_s, b.pr_p)
        f, g = self._iff_parts(node, t.subject, at, bt)
        pa = Pair(at.hott, at.pr_p)
        pb = Pair(bt.hott, bt.pr_p)
        proof = app(_c("propext"), pa, pb, Pair(f, g))
        # remember the equivalence for later type-level isomorphisms
        self.witnesses.add_trunc(len(t.ctx), at.hott, bt.hott, f, g)
        return self._term_eq_out(node, pa, pb, proof,
                                 ty=TType(prop_u0(), _c("s_prop0")))

    def _tr_eff_p1(self, node):
        a = self._prem(node, 0)
        b = self._prem(node, 1)
        e = self._prem(node, 2)
        at = TType(a.subject, a.pr_s, a.pr_p)
        bt = TType(b.subject, b.pr_s, b.pr_p)
        pa = Pair(at.hott, at.pr_p)
        pb = Pair(bt.hott, bt.pr_p)
        fam_fwd = Lam(arrow(shift(at.hott, 1), App(_c("prop_fst"),
                                                   Var(0))))
        fwd = App(app(_c("transport"), prop_u0(), fam_fwd, pa, pb,
                      e.eq_proof), Lam(Var(0)))
        fam_bwd = Lam(arrow(App(_c("prop_fst"), Var(0)),
                            shift(at.hott, 1)))
        bwd = App(app(_c("transport"), prop_u0(), fam_bwd, pa, pb,
                      e.eq_proof), Lam(Var(0)))
        realizer = TruncIn(Pair(TruncIn(fwd), TruncIn(bwd)))
        return self._term_out(node, realizer)

    def _tr_pfun_i(self, node):
        p = self._prem(node, 1)
        return self._term_out(node, Lam(p.subject))

    def _tr_pfun_e(self, node):
        f = self._prem(node, 0)
        a = self._prem(node, 1)
        return self._term_out(node, App(f.subject, a.subject))

    def _tr_pfun_c(self, node):
        p = self._prem(node, 0)
        a = self._prem(node, 1)
        lhs = App(Lam(p.subject), a.subject)
        rhs = subst(p.subject, a.subject)
        return self._term_eq_out(node, lhs, rhs, Refl(rhs))

    # ------------------------------------------------------------------
    # quotients

    def _tr_quot_i(self, node):
        a = self._prem(node, 0)
        q = self._prem(node, 1)
        return self._term_out(node, QMap(a.subject),
                              ty=TType(q.subject, q.pr_s))

    def _quot_elim_term(self, node, scrut_term):
        pj = node.premises[0].conclusion
        m = self._prem(node, 1)
        l = self._prem(node, 2)
        side = self._prem(node, 3)
        q = whnf(self.table, self.trans_type(pj.ty).hott)
        respects = Lam(Lam(Lam(side.eq_proof)))
        return app(_c("elim_quot"), q.base, q.rel, q.equiv, m.subject,
                   Lam(l.subject), respects, scrut_term)

    def _tr_quot_e(self, node):
        pterm = self._prem(node, 0)
        m = self._prem(node, 1)
        term = self._quot_elim_term(node, pterm.subject)
        self._register_term(node.conclusion.term, term)
        return self._term_out(node, term,
                              ty=TType(m.subject, m.pr_s, m.pr_p))

    def _tr_quot_c(self, node):
        a = self._prem(node, 4)
        m = self._prem(node, 1)
        l = self._prem(node, 2)
        term = self._quot_elim_term(node, QMap(a.subject))
        self._register_term(node.conclusion.lhs, term)
        rhs = subst(l.subject, a.subject)
        return self._term_eq_out(node, term, rhs, Refl(rhs),
                                 ty=TType(m.subject, m.pr_s, m.pr_p))

    def _tr_eq_q(self, node):
        a = self._prem(node, 0)
        b = self._prem(node, 1)
        q = self._prem(node, 2)
        t = self._prem(node, 3)
        qt = whnf(self.table, q.subject)
        proof = app(_c("qglue"), qt.base, qt.rel, qt.equiv, a.subject,
                    b.subject, t.subject)
        return self._term_eq_out(node, QMap(a.subject), QMap(b.subject),
                                 proof, ty=TType(q.subject, q.pr_s))

    def _tr_eff_q(self, node):
        a = self._prem(node, 0)
        b = self._prem(node, 1)
        e = self._prem(node, 2)
        realizer = QEff(a.subject, b.subject, e.eq_proof)
        return self._term_out(node, realizer)

    # ------------------------------------------------------------------
    # type-former congruences

    def _cong(self, node, n_premises):
        j = node.conclusion
        lt = self.trans_type(j.lhs)
        rt = self.trans_type(j.rhs)
        self._bridge_from_components(node, j, lt, rt)
        return self._type_eq_out(node, self._mk_ext_eq(node, lt, rt))

    def _bridge_from_components(self, node, j, lt: TType, rt: TType):
        """For truncation-headed congruences, manufacture the inverse pair
        from the component isomorphisms and register it."""
        lw = whnf(self.table, lt.hott)
        rw = whnf(self.table, rt.hott)
        if lw == rw or not (isinstance(lw, Trunc) and isinstance(rw, Trunc)):
            return
        if self.witnesses.find_trunc(len(j.ctx), lw, rw) is not None:
            return
        maps = self._element_maps(node, j)
        if maps is None:
            return
        fwd_el, bwd_el = maps
        fwd = Lam(IndTrunc(Var(0), shift(rw, 1),
                           TruncIn(reopen(fwd_el, Var(0), 2)),
                           app(_c("p_trunc"), shift(rw.inner, 1))))
        bwd = Lam(IndTrunc(Var(0), shift(lw, 1),
                           TruncIn(reopen(bwd_el, Var(0), 2)),
                           app(_c("p_trunc"), shift(lw.inner, 1))))
        self.witnesses.add_trunc(len(j.ctx), lw, rw, fwd, bwd)

    def _element_maps(self, node, j):
        """Open terms (one binder: an element of the untruncated side)
        mapping between the truncation payloads, built per connective."""
        rule = node.rule.split("/", 1)[1]
        if rule == "eq-eq":
            a = self._prem(node, 0).ext_eq
            l = self._prem(node, 1)
            r = self._prem(node, 2)
            if a.iso.clause != "identity":
                return None
            aty = a.lhs.hott
            fwd = app(_c("path_trans"), shift(aty, 1), shift(l.rhs, 1),
                      shift(l.subject, 1), shift(r.rhs, 1),
                      app(_c("path_sym"), shift(aty, 1),
                          shift(l.subject, 1), shift(l.rhs, 1),
                          shift(l.eq_proof, 1)),
                      app(_c("path_trans"), shift(aty, 1),
                          shift(l.subject, 1), shift(r.subject, 1),
                          shift(r.rhs, 1), Var(0), shift(r.eq_proof, 1)))
            bwd = app(_c("path_trans"), shift(aty, 1), shift(l.subject, 1),
                      shift(l.rhs, 1), shift(r.subject, 1),
                      shift(l.eq_proof, 1),
                      app(_c("path_trans"), shift(aty, 1), shift(l.rhs, 1),
                          shift(r.rhs, 1), shift(r.subject, 1), Var(0),
                          app(_c("path_sym"), shift(aty, 1),
                              shift(r.subject, 1), shift(r.rhs, 1),
                              shift(r.eq_proof, 1))))
            return fwd, bwd
        if rule in ("and-eq", "or-eq", "imp-eq", "forall-eq", "exists-eq"):
            a = self._prem(node, 0).ext_eq
            b = self._prem(node, 1).ext_eq
            la = a.lhs.hott
            ra = a.rhs.hott
            lb = b.lhs.hott
            rb = b.rhs.hott
            if rule == "and-eq":
                def mk(ma, mb, sa, sb):
                    return Pair(bapp(shift(ma, 1),
                                     _fst_nd(sa, sb, Var(0))),
                                bapp(shift(mb, 1),
                                     _snd_nd(sa, sb, Var(0))))
                return (mk(a.iso.fwd, b.iso.fwd, la, lb),
                        mk(a.iso.inv, b.iso.inv, ra, rb))
            if rule == "or-eq":
                def mk(ma, mb, tgt_l, tgt_r):
                    from ..kernel import IndSum
                    return IndSum(Var(0),
                                  Sum(shift(tgt_l, 2), shift(tgt_r, 2)),
                                  Inl(bapp(shift(ma, 2), Var(0))),
                                  Inr(bapp(shift(mb, 2), Var(0))))
                return (mk(a.iso.fwd, b.iso.fwd, ra, rb),
                        mk(a.iso.inv, b.iso.inv, la, lb))
            if rule == "imp-eq":
                def mk(inv_a, fwd_b):
                    return Lam(bapp(shift(fwd_b, 2),
                                    App(Var(1),
                                        bapp(shift(inv_a, 2), Var(0)))))
                return (mk(a.iso.inv, b.iso.fwd),
                        mk(a.iso.fwd, b.iso.inv))
            if rule == "forall-eq":
                if a.iso.clause != "identity":
                    return None

                def mk(fwd_b):
                    return Lam(bapp(reopen(shift(fwd_b, 1, 1), Var(0), 2),
                                    App(Var(1), Var(0))))
                return mk(b.iso.fwd), mk(b.iso.inv)
            if rule == "exists-eq":
                if a.iso.clause != "identity":
                    return None

                def mk(fwd_b, src_fam, tgt_fam):
                    inner = Pair(_fst_dep(a.lhs.hott, src_fam, Var(0), 1),
                                 bapp(reopen(shift(fwd_b, 1, 1),
                                             _fst_dep(a.lhs.hott, src_fam,
                                                      Var(0), 1), 1),
                                      _snd_dep(a.lhs.hott, src_fam,
                                               Var(0), 1)))
                    return inner
                lf = whnf(self.table, self.trans_type(j.lhs).hott)
                rf = whnf(self.table, self.trans_type(j.rhs).hott)
                return (mk(b.iso.fwd, lf.inner.cod, rf.inner.cod),
                        mk(b.iso.inv, rf.inner.cod, lf.inner.cod))
        return None

    _tr_sigma_eq = lambda self, node: self._cong(node, 2)
    _tr_pi_eq = lambda self, node: self._cong(node, 2)
    _tr_plus_eq = lambda self, node: self._cong(node, 2)
    _tr_list_eq = lambda self, node: self._cong(node, 1)
    _tr_or_eq = lambda self, node: self._cong(node, 2)
    _tr_and_eq = lambda self, node: self._cong(node, 2)
    _tr_imp_eq = lambda self, node: self._cong(node, 2)
    _tr_forall_eq = lambda self, node: self._cong(node, 2)
    _tr_exists_eq = lambda self, node: self._cong(node, 2)
    _tr_eq_eq = lambda self, node: self._cong(node, 3)
    _tr_pfun_eq = lambda self, node: self._cong(node, 1)

    def _tr_quot_eq(self, node):
        j = node.conclusion
        a = self._prem(node, 0).ext_eq
        r = self._prem(node, 1).ext_eq
        lt = self.trans_type(j.lhs)
        rt = self.trans_type(j.rhs)
        lw = whnf(self.table, lt.hott)
        rw = whnf(self.table, rt.hott)
        if lw != rw and self.witnesses.find_quot(len(j.ctx), lw,
                                                 rw) is None:
            if a.iso.clause != "identity":
                raise TranslationError(
                    "quotient congruence over distinct bases is out of "
                    "scope")
            bridge_f = Lam(Lam(r.iso.fwd))
            bridge_b = Lam(Lam(r.iso.inv))
            self.witnesses.add_quot(len(j.ctx), lw, rw, bridge_f, bridge_b)
        return self._type_eq_out(node, self._mk_ext_eq(node, lt, rt))


def _fst_nd(a, b, z):
    return app(_c("elim_pair"), a, Lam(shift(b, 1)), Lam(shift(a, 1)),
               Lam(Lam(Var(1))), z)


def _snd_nd(a, b, z):
    return app(_c("elim_pair"), a, Lam(shift(b, 1)), Lam(shift(b, 1)),
               Lam(Lam(Var(0))), z)


def _fst_dep(a, cod, z, lift):
    return app(_c("elim_pair"), shift(a, lift), Lam(shift(cod, lift, 1)),
               Lam(shift(a, lift + 1)), Lam(Lam(Var(1))), z)


def _snd_dep(a, cod, z, lift):
    motive = Lam(reopen(shift(cod, lift + 1, 1),
                        _fst_dep(a, cod, Var(0), lift + 1), 1))
    return app(_c("elim_pair"), shift(a, lift), Lam(shift(cod, lift, 1)),
               motive, Lam(Lam(Var(0))), z)


def _pack_entry(last, n, projections):
    """Rewrite an entry over an n-entry telescope into one over the
    packaged prefix: each telescope variable becomes a projection of the
    single package variable."""
    from ..kernel.terms import map_children

    def go(t, depth):
        if isinstance(t, Var):
            k = t.index
            if depth <= k < depth + n:
                proj = projections[n - 1 - (k - depth)]
                return bapp(shift(proj, depth + 1), Var(depth))
            if k >= depth + n:
                return Var(k - n + 1)
            return t
        return map_children(t, lambda c, nb: go(c, depth + nb))

    return go(last, 0)


def mk_sig_entries(entries) -> SigClosure:
    """Sigma-packaging of a translated telescope with projections.

    A single entry is its own packaging with the identity projection; a
    closed telescope packages as the unit type.
    """
    if not entries:
        return SigClosure(One(), [])
    if len(entries) == 1:
        return SigClosure(entries[0], [Lam(Var(0))])
    prev = mk_sig_entries(entries[:-1])
    n = len(entries) - 1
    packed_last = _pack_entry(entries[-1], n, prev.projections)
    sig = Sigma(prev.sig, packed_last)
    projections = []
    for i in range(n):
        proj = Lam(bapp(shift(prev.projections[i], 1),
                        _fst_dep(prev.sig, packed_last, Var(0), 1)))
        projections.append(proj)
    projections.append(Lam(_snd_dep(prev.sig, packed_last, Var(0), 1)))
    return SigClosure(sig, projections)


def mk_sig(ctx: HContext) -> SigClosure:
    if len(ctx) == 0:
        raise TranslationError(
            "the empty context packages as the unit type at the "
            "interpretation level")
    return mk_sig_entries(list(ctx.entries))


def translate_emtt(script) -> TransOutExt:
    return EmttTranslator().run(script)


def recheck_ext(out: TransOutExt) -> dict:
    """Kernel re-verification plus obligation discharge accounting."""
    table, _ = stdlib()
    stats = {"checks": 0, "conv_goals": 0, "obligations": 0,
             "undischarged": 0, "coercions": len(out.coercions)}

    def chk(ctx, t, ty):
        check(table, ctx, t, ty)
        stats["checks"] += 1

    ctx = out.ctx
    if out.kind == "type":
        chk(ctx, out.subject, Univ(out.target_level))
        chk(ctx, out.pr_s, mk_isset(out.subject))
        if out.sort in PROP_SORTS:
            chk(ctx, out.pr_p, mk_isprop(out.subject))
    elif out.kind == "term":
        chk(ctx, out.subject, out.ty)
    elif out.kind == "term-eq":
        chk(ctx, out.subject, out.ty)
        chk(ctx, out.rhs, out.ty)
        chk(ctx, out.eq_proof, _id_goal(out.ty, out.subject, out.rhs))
    elif out.kind == "type-eq":
        chk(ctx, out.subject, Univ(out.target_level))
        chk(ctx, out.rhs, Univ(out.target_level))
        iso = out.ext_eq.iso
        chk(ctx, iso.fwd, arrow(out.subject, out.rhs))
        chk(ctx, iso.inv, arrow(out.rhs, out.subject))
    for octx, goal, proof in out.obligations:
        stats["obligations"] += 1
        if proof is None:
            stats["undischarged"] += 1
        else:
            chk(octx, proof, goal)
    return stats


def _id_goal(ty, l, r):
    return Id(ty, l, r)
