"""Translation of the intensional level into the kernel fragment.

Sets and small propositions land in the first universe, collections and
propositions in the second; small propositions are pairs of a type and a
propositionhood witness under the prop classifier, decoded by projection.
Every translated type comes with a synthesized h-set witness (and an
h-proposition witness for propositions), built by name from the fixed
combinator library so that equal source judgements receive syntactically
equal witnesses.  Definitional equality judgements translate to kernel
conversion goals on (type, witness) pairs.

Two modes: the default leaves conjunction/implication/universal/equality
untruncated; the alternative mode truncates them (matching the shapes the
extensional translation needs) and adjusts eliminators accordingly.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..hlevel import stdlib
from ..kernel import (App, Const, HContext, HTerm, Id, IndId, IndList,
                      IndOne, IndSigma, IndSum, IndTrunc, IndZero, Inl, Inr,
                      Lam, ListT, Nil, One, Pair, Pi, Refl, Sigma, Star, Sum,
                      Trunc, TruncIn, Univ, Var, Zero, app, arrow, conv,
                      check, inst_branch_values, mk_isprop, mk_isset,
                      prop_u0, shift, times)
from ..kernel import Cons as KCons
from ..source import terms as S
from ..source.judgements import (CtxWF, EqTerm, EqType, HasType, IsType,
                                 Telescope)

PROP_SORTS = ("prop", "props")


class TranslationError(Exception):
    pass


@dataclass
class TransOut:
    """One translated judgement."""

    kind: str                     # ctx | type | term | type-eq | term-eq
    ctx: HContext
    subject: HTerm = None         # type, term, or left-hand side
    ty: HTerm = None              # for term judgements
    pr_p: HTerm = None
    pr_s: HTerm = None
    target_level: int = 0
    rhs: HTerm = None             # for equality judgements
    rhs_pr_p: HTerm = None
    rhs_pr_s: HTerm = None
    sort: str = None


@dataclass
class TType:
    """Raw translation of a source type: target plus chosen witnesses."""

    hott: HTerm
    pr_s: HTerm
    pr_p: HTerm = None  # present exactly for propositions


def _c(name):
    return Const(name)


def p_fst(t):
    return App(_c("prop_fst"), t)


def p_snd(t):
    return App(_c("prop_snd"), t)


def s_coe(ty, prp):
    return app(_c("s_coe"), ty, prp)


class MttTranslator:
    """Derivation-directed translation; defined on raw syntax except that
    eliminator forms take their motives from the derivation nodes."""

    def __init__(self, mode: str = "A"):
        if mode not in ("A", "B"):
            raise TranslationError(f"unknown mode {mode!r}")
        self.mode = mode
        self.table, _ = stdlib()
        self.term_memo = {}
        self.type_memo = {}

    # -- raw types ------------------------------------------------------------

    def trans_type(self, t: S.STerm) -> TType:
        key = t
        hit = self.type_memo.get(key)
        if hit is not None:
            return hit
        out = self._trans_type(t)
        self.type_memo[key] = out
        return out

    def _prop(self, hott, pr_p) -> TType:
        return TType(hott, s_coe(hott, pr_p), pr_p)

    def _trans_type(self, t: S.STerm) -> TType:
        mode_b = self.mode == "B"
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
        if isinstance(t, S.PropColl):
            return TType(prop_u0(), _c("s_prop0"))
        if isinstance(t, S.PropFun):
            a = self.trans_type(t.dom)
            cod = shift(prop_u0(), 1)
            return TType(Pi(a.hott, cod),
                         app(_c("s_pi"), a.hott, Lam(cod),
                             Lam(_c("s_prop0"))))
        if isinstance(t, S.Tau):
            code = self.trans_term(t.code)
            return self._prop(p_fst(code), p_snd(code))
        if isinstance(t, S.Bot):
            if mode_b:
                # kept untruncated: the decoding equations and the
                # mode-agreement property pin this clause to the default
                pass
            return self._prop(Zero(), _c("p0"))
        if isinstance(t, S.MOr):
            a, b = self.trans_type(t.left), self.trans_type(t.right)
            return self._prop(Trunc(Sum(a.hott, b.hott)),
                              app(_c("p_or"), a.hott, b.hott))
        if isinstance(t, S.MExists):
            a, b = self.trans_type(t.dom), self.trans_type(t.body)
            return self._prop(Trunc(Sigma(a.hott, b.hott)),
                              app(_c("p_ex"), a.hott, Lam(b.hott)))
        if isinstance(t, S.MAnd):
            a, b = self.trans_type(t.left), self.trans_type(t.right)
            if mode_b:
                return self._prop(Trunc(times(a.hott, b.hott)),
                                  app(_c("p_trunc_times"), a.hott, b.hott))
            return self._prop(times(a.hott, b.hott),
                              app(_c("p_times"), a.hott, b.hott,
                                  a.pr_p, b.pr_p))
        if isinstance(t, S.MImp):
            a, b = self.trans_type(t.left), self.trans_type(t.right)
            if mode_b:
                return self._prop(Trunc(arrow(a.hott, b.hott)),
                                  app(_c("p_trunc_imp"), a.hott, b.hott))
            return self._prop(arrow(a.hott, b.hott),
                              app(_c("p_imp"), a.hott, b.hott,
                                  a.pr_p, b.pr_p))
        if isinstance(t, S.MForall):
            a, b = self.trans_type(t.dom), self.trans_type(t.body)
            if mode_b:
                return self._prop(Trunc(Pi(a.hott, b.hott)),
                                  app(_c("p_trunc_pi"), a.hott, Lam(b.hott)))
            return self._prop(Pi(a.hott, b.hott),
                              app(_c("p_pi"), a.hott, Lam(b.hott),
                                  Lam(b.pr_p)))
        if isinstance(t, S.MId):
            a = self.trans_type(t.ty)
            l, r = self.trans_term(t.lhs), self.trans_term(t.rhs)
            idt = Id(a.hott, l, r)
            if mode_b:
                return self._prop(Trunc(idt), app(_c("p_trunc"), idt))
            return self._prop(idt, app(_c("p_id"), a.hott, a.pr_s, l, r))
        raise TranslationError(f"no type clause for {type(t).__name__}")

    # -- raw terms ------------------------------------------------------------

    def trans_term(self, t: S.STerm) -> HTerm:
        mode_b = self.mode == "B"
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
        if isinstance(t, S.IdIntro):
            r = Refl(self.trans_term(t.arg))
            return TruncIn(r) if mode_b else r
        if not mode_b:
            if isinstance(t, S.LamImp) or isinstance(t, S.LamAll):
                return Lam(self.trans_term(t.body))
            if isinstance(t, (S.ApImp, S.ApAll)):
                return App(self.trans_term(t.fn), self.trans_term(t.arg))
            if isinstance(t, S.PairAnd):
                return Pair(self.trans_term(t.fst), self.trans_term(t.snd))
        # encodings (falsum's code stays untruncated in both modes, in
        # lockstep with the falsum clause, so its decoding equation holds)
        if isinstance(t, S.BotHat):
            return Pair(Zero(), _c("p0"))
        if isinstance(t, S.TopHat):
            if mode_b:
                return Pair(Trunc(One()), app(_c("p_trunc"), One()))
            return Pair(One(), _c("p1"))
        if isinstance(t, S.OrHat):
            p, q = self.trans_term(t.left), self.trans_term(t.right)
            ty = Trunc(Sum(p_fst(p), p_fst(q)))
            return Pair(ty, app(_c("p_or"), p_fst(p), p_fst(q)))
        if isinstance(t, S.AndHat):
            p, q = self.trans_term(t.left), self.trans_term(t.right)
            if mode_b:
                ty = Trunc(times(p_fst(p), p_fst(q)))
                return Pair(ty, app(_c("p_trunc_times"), p_fst(p), p_fst(q)))
            ty = times(p_fst(p), p_fst(q))
            return Pair(ty, app(_c("p_times"), p_fst(p), p_fst(q),
                                p_snd(p), p_snd(q)))
        if isinstance(t, S.ImpHat):
            p, q = self.trans_term(t.left), self.trans_term(t.right)
            if mode_b:
                ty = Trunc(arrow(p_fst(p), p_fst(q)))
                return Pair(ty, app(_c("p_trunc_imp"), p_fst(p), p_fst(q)))
            ty = arrow(p_fst(p), p_fst(q))
            return Pair(ty, app(_c("p_imp"), p_fst(p), p_fst(q),
                                p_snd(p), p_snd(q)))
        if isinstance(t, S.ForallHat):
            a = self.trans_type(t.dom)
            p = self.trans_term(t.body)
            if mode_b:
                ty = Trunc(Pi(a.hott, p_fst(p)))
                return Pair(ty, app(_c("p_trunc"), Pi(a.hott, p_fst(p))))
            ty = Pi(a.hott, p_fst(p))
            return Pair(ty, app(_c("p_pi"), a.hott, Lam(p_fst(p)),
                                Lam(p_snd(p))))
        if isinstance(t, S.ExistsHat):
            a = self.trans_type(t.dom)
            p = self.trans_term(t.body)
            ty = Trunc(Sigma(a.hott, p_fst(p)))
            return Pair(ty, app(_c("p_ex"), a.hott, Lam(p_fst(p))))
        if isinstance(t, S.IdHat):
            a = self.trans_type(t.ty)
            l, r = self.trans_term(t.lhs), self.trans_term(t.rhs)
            idt = Id(a.hott, l, r)
            if mode_b:
                return Pair(Trunc(idt), app(_c("p_trunc"), idt))
            return Pair(idt, app(_c("p_id"), a.hott, a.pr_s, l, r))
        hit = self.term_memo.get(t)
        if hit is not None:
            return hit
        raise TranslationError(
            f"no applicable clause for {type(t).__name__}; eliminator "
            f"translations are supplied by their derivation nodes")

    # -- derivation walk --------------------------------------------------------

    def run(self, script) -> TransOut:
        self._walk(script)
        return self.trans_judgement(script.conclusion)

    def _walk(self, node):
        for p in node.premises:
            self._walk(p)
        self._register(node)

    def _register(self, node):
        c = node.conclusion
        rule = node.rule.split("/", 1)[1]
        if isinstance(c, HasType):
            t = c.term
        elif isinstance(c, EqTerm):
            t = c.lhs
        else:
            return
        if t in self.term_memo:
            return
        handler = getattr(self, f"_el_{rule.replace('-', '_')}", None)
        if handler is not None:
            out = handler(node)
            if out is not None:
                self.term_memo[t] = out

    # eliminator clauses: motives and type arguments come from the premises

    def _concl(self, node, idx):
        return node.premises[idx].conclusion

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

    def _mk_path_elim(self, a, lhs, rhs, scrut, motive2, branch):
        # motive2 binds the two endpoints; the path argument is unused
        mfun = Lam(Lam(Lam(shift(motive2, 1))))
        return app(_c("elim_path"), a, lhs, rhs, mfun, Lam(branch), scrut)

    def _mk_boxed_path_elim(self, a, lhs, rhs, scrut, motive2, prp2,
                            branch):
        return app(_c("elim_boxed_path"), a, lhs, rhs, Lam(Lam(motive2)),
                   Lam(Lam(prp2)), Lam(branch), scrut)

    def _el_n0_e(self, node):
        a = self._concl(node, 0)
        m = self._concl(node, 1)
        return self._mk_empty_elim(self.trans_term(a.term),
                                   self.trans_type(m.ty).hott)

    def _el_bot_e(self, node):
        # falsum stays untruncated in both modes (the decoding equations
        # and the mode-agreement property pin this down)
        a = self._concl(node, 0)
        m = self._concl(node, 1)
        mt = self.trans_type(m.ty)
        return self._mk_empty_elim(self.trans_term(a.term),
                                   shift(mt.hott, 1))

    def _unit_elim_from(self, m, t_term, b_term):
        return self._mk_unit_elim(self.trans_term(t_term),
                                  self.trans_type(m.ty).hott,
                                  self.trans_term(b_term))

    def _el_n1_e(self, node):
        t, m, bb = (p.conclusion for p in node.premises)
        return self._unit_elim_from(m, t.term, bb.term)

    def _el_n1_c(self, node):
        m, bb = (p.conclusion for p in node.premises)
        return self._unit_elim_from(m, S.MStar(), bb.term)

    def _sigma_elim_from(self, sig_ty, m, d_term, br_term):
        a = self.trans_type(sig_ty.dom)
        b = self.trans_type(sig_ty.cod)
        return self._mk_pair_elim(a.hott, b.hott, self.trans_term(d_term),
                                  self.trans_type(m.ty).hott,
                                  self.trans_term(br_term))

    def _el_sigma_e(self, node):
        d, m, br = (p.conclusion for p in node.premises)
        return self._sigma_elim_from(d.ty, m, d.term, br.term)

    def _el_sigma_c(self, node):
        m, br, ta, tb = (p.conclusion for p in node.premises)
        sig_ty = m.ctx.types[-1]
        pair = S.MPair(ta.term, tb.term)
        return self._sigma_elim_from(sig_ty, m, pair, br.term)

    def _sum_elim_from(self, sum_ty, m, d_term, l_term, r_term):
        a = self.trans_type(sum_ty.left)
        b = self.trans_type(sum_ty.right)
        return self._mk_sum_elim(a.hott, b.hott, self.trans_term(d_term),
                                 self.trans_type(m.ty).hott,
                                 self.trans_term(l_term),
                                 self.trans_term(r_term))

    def _el_plus_e(self, node):
        d, m, l, r = (p.conclusion for p in node.premises)
        return self._sum_elim_from(d.ty, m, d.term, l.term, r.term)

    _el_plus_c_inl = _el_plus_e
    _el_plus_c_inr = _el_plus_e

    def _list_elim_from(self, list_ty, m, sc_term, nb_term, cb_term):
        a = self.trans_type(list_ty.elem)
        return self._mk_list_elim(a.hott, self.trans_term(sc_term),
                                  self.trans_type(m.ty).hott,
                                  self.trans_term(nb_term),
                                  self.trans_term(cb_term))

    def _el_list_e(self, node):
        sc, m, d, s = (p.conclusion for p in node.premises)
        return self._list_elim_from(sc.ty, m, sc.term, d.term, s.term)

    _el_list_c_nil = _el_list_e

    def _el_list_c_cons(self, node):
        # the step equation mentions the recursive call on the tail
        sc, m, d, s = (p.conclusion for p in node.premises)
        tl, hd = sc.term.tail, sc.term.head
        ih = S.ElList(tl, d.term, s.term)
        if ih not in self.term_memo:
            self.term_memo[ih] = self._list_elim_from(sc.ty, m, tl, d.term,
                                                      s.term)
        return self._list_elim_from(sc.ty, m, sc.term, d.term, s.term)

    def _id_elim_from(self, id_ty, m, p_term, d_term):
        a = self.trans_type(id_ty.ty)
        lhs = self.trans_term(id_ty.lhs)
        rhs = self.trans_term(id_ty.rhs)
        m2 = self.trans_type(m.ty)
        scrut = self.trans_term(p_term)
        branch = self.trans_term(d_term)
        if self.mode == "A":
            return self._mk_path_elim(a.hott, lhs, rhs, scrut, m2.hott,
                                      branch)
        return self._mk_boxed_path_elim(a.hott, lhs, rhs, scrut, m2.hott,
                                        m2.pr_p, branch)

    def _el_id_e(self, node):
        p, m, d = (p.conclusion for p in node.premises)
        return self._id_elim_from(p.ty, m, p.term, d.term)

    def _el_id_c(self, node):
        m, d, a = (p.conclusion for p in node.premises)
        id_ty = S.MId(a.ty, a.term, a.term)
        return self._id_elim_from(id_ty, m, S.IdIntro(a.term), d.term)

    def _or_elim_from(self, or_ty, m, d_term, l_term, r_term):
        pt = self.trans_type(or_ty.left)
        qt = self.trans_type(or_ty.right)
        mt = self.trans_type(m.ty)
        return app(_c("ind_or"), pt.hott, qt.hott, mt.hott, mt.pr_p,
                   Lam(self.trans_term(l_term)),
                   Lam(self.trans_term(r_term)),
                   self.trans_term(d_term))

    def _el_or_e(self, node):
        d, m, l, r = (p.conclusion for p in node.premises)
        return self._or_elim_from(d.ty, m, d.term, l.term, r.term)

    _el_or_c_l = _el_or_e
    _el_or_c_r = _el_or_e

    def _ex_elim_from(self, ex_ty, m, d_term, br_term):
        at = self.trans_type(ex_ty.dom)
        pt = self.trans_type(ex_ty.body)
        mt = self.trans_type(m.ty)
        return app(_c("ind_ex"), at.hott, Lam(pt.hott), mt.hott, mt.pr_p,
                   Lam(Lam(self.trans_term(br_term))),
                   self.trans_term(d_term))

    def _el_exists_e(self, node):
        d, m, br = (p.conclusion for p in node.premises)
        return self._ex_elim_from(d.ty, m, d.term, br.term)

    def _el_exists_c(self, node):
        m, br, a, w = (p.conclusion for p in node.premises)
        body = self._exists_body(m, br)
        pair = S.PairEx(a.term, w.term)
        if pair not in self.term_memo:
            self.term_memo[pair] = app(
                _c("pair_ex"), self.trans_type(a.ty).hott,
                Lam(self.trans_type(body).hott),
                self.trans_term(a.term), self.trans_term(w.term))
        return self._ex_elim_from(S.MExists(a.ty, body), m, pair, br.term)

    def _exists_body(self, m, br):
        # the existential body is the innermost branch-context entry
        return br.ctx.types[-1]

    def _and_proj_from(self, and_ty, side, c_term):
        pt = self.trans_type(and_ty.left)
        qt = self.trans_type(and_ty.right)
        ct = self.trans_term(c_term)
        if self.mode == "B":
            name = "fst_and" if side == 1 else "snd_and"
            prp = pt.pr_p if side == 1 else qt.pr_p
            return app(_c(name), pt.hott, qt.hott, prp, ct)
        motive = shift(pt.hott if side == 1 else qt.hott, 1)
        branch = Var(1) if side == 1 else Var(0)
        return self._mk_pair_elim(pt.hott, shift(qt.hott, 1), ct, motive,
                                  branch)

    def _el_and_e_1(self, node):
        (d,) = (p.conclusion for p in node.premises)
        return self._and_proj_from(d.ty, 1, d.term)

    def _el_and_e_2(self, node):
        (d,) = (p.conclusion for p in node.premises)
        return self._and_proj_from(d.ty, 2, d.term)

    def _and_comp(self, node, side):
        ta, tb = (p.conclusion for p in node.premises)
        and_ty = S.MAnd(ta.ty, tb.ty)
        pair = S.PairAnd(ta.term, tb.term)
        if self.mode == "B" and pair not in self.term_memo:
            self.term_memo[pair] = app(
                _c("pair_and"), self.trans_type(ta.ty).hott,
                self.trans_type(tb.ty).hott,
                self.trans_term(ta.term), self.trans_term(tb.term))
        return self._and_proj_from(and_ty, side, pair)

    def _el_and_c_1(self, node):
        return self._and_comp(node, 1)

    def _el_and_c_2(self, node):
        return self._and_comp(node, 2)

    def _el_or_i_l(self, node):
        a, b, t = (p.conclusion for p in node.premises)
        return app(_c("inl_or"), self.trans_type(a.ty).hott,
                   self.trans_type(b.ty).hott, self.trans_term(t.term))

    def _el_or_i_r(self, node):
        a, b, t = (p.conclusion for p in node.premises)
        return app(_c("inr_or"), self.trans_type(a.ty).hott,
                   self.trans_type(b.ty).hott, self.trans_term(t.term))

    def _el_exists_i(self, node):
        p, a, w = (p.conclusion for p in node.premises)
        at = self.trans_type(a.ty)
        pt = self.trans_type(p.ty)
        return app(_c("pair_ex"), at.hott, Lam(pt.hott),
                   self.trans_term(a.term), self.trans_term(w.term))

    def _el_and_i(self, node):
        if self.mode == "A":
            return None
        a, b, ta, tb = (p.conclusion for p in node.premises)
        return app(_c("pair_and"), self.trans_type(a.ty).hott,
                   self.trans_type(b.ty).hott,
                   self.trans_term(ta.term), self.trans_term(tb.term))

    def _imp_parts(self, imp_ty):
        return (self.trans_type(imp_ty.left), self.trans_type(imp_ty.right))

    def _el_imp_i(self, node):
        if self.mode == "A":
            return None
        a, bb = (p.conclusion for p in node.premises)
        cod = S.shift(bb.ty, -1)
        return app(_c("lam_imp"), self.trans_type(a.ty).hott,
                   self.trans_type(cod).hott,
                   Lam(self.trans_term(bb.term)))

    def _el_imp_e(self, node):
        if self.mode == "A":
            return None
        f, a = (p.conclusion for p in node.premises)
        pt, qt = self._imp_parts(f.ty)
        return app(_c("app_imp"), pt.hott, qt.hott, qt.pr_p,
                   self.trans_term(f.term), self.trans_term(a.term))

    def _el_imp_c(self, node):
        if self.mode == "A":
            return None
        bb, a = (p.conclusion for p in node.premises)
        imp_ty = S.MImp(a.ty, S.shift(bb.ty, -1))
        pt, qt = self._imp_parts(imp_ty)
        lam = app(_c("lam_imp"), pt.hott, qt.hott,
                  Lam(self.trans_term(bb.term)))
        self.term_memo.setdefault(S.LamImp(bb.term), lam)
        return app(_c("app_imp"), pt.hott, qt.hott, qt.pr_p, lam,
                   self.trans_term(a.term))

    def _el_forall_i(self, node):
        if self.mode == "A":
            return None
        a, bb = (p.conclusion for p in node.premises)
        return app(_c("lam_all"), self.trans_type(a.ty).hott,
                   Lam(self.trans_type(bb.ty).hott),
                   Lam(self.trans_term(bb.term)))

    def _el_forall_e(self, node):
        if self.mode == "A":
            return None
        f, a = (p.conclusion for p in node.premises)
        at = self.trans_type(f.ty.dom)
        pt = self.trans_type(f.ty.body)
        return app(_c("app_all"), at.hott, Lam(pt.hott), Lam(pt.pr_p),
                   self.trans_term(f.term), self.trans_term(a.term))

    def _el_forall_c(self, node):
        if self.mode == "A":
            return None
        bb, a = (p.conclusion for p in node.premises)
        at = self.trans_type(a.ty)
        pt = self.trans_type(bb.ty)
        lam = app(_c("lam_all"), at.hott, Lam(pt.hott),
                  Lam(self.trans_term(bb.term)))
        self.term_memo.setdefault(S.LamAll(bb.term), lam)
        return app(_c("app_all"), at.hott, Lam(pt.hott), Lam(pt.pr_p), lam,
                   self.trans_term(a.term))

    # -- judgements ---------------------------------------------------------------

    def trans_ctx(self, tel: Telescope) -> HContext:
        return HContext([self.trans_type(t).hott for t in tel.types])

    def trans_judgement(self, j) -> TransOut:
        if isinstance(j, CtxWF):
            return TransOut("ctx", self.trans_ctx(j.ctx))
        ctx = self.trans_ctx(j.ctx)
        if isinstance(j, IsType):
            tt = self.trans_type(j.ty)
            level = 0 if j.sort in ("set", "props") else 1
            pr_s = tt.pr_s
            return TransOut("type", ctx, tt.hott, pr_p=tt.pr_p, pr_s=pr_s,
                            target_level=level, sort=j.sort)
        if isinstance(j, HasType):
            tt = self.trans_type(j.ty)
            return TransOut("term", ctx, self.trans_term(j.term),
                            ty=tt.hott, pr_p=tt.pr_p, pr_s=tt.pr_s)
        if isinstance(j, EqType):
            lt = self.trans_type(j.lhs)
            rt = self.trans_type(j.rhs)
            level = 0 if j.sort in ("set", "props") else 1
            return TransOut("type-eq", ctx, lt.hott, pr_p=lt.pr_p,
                            pr_s=lt.pr_s, target_level=level, rhs=rt.hott,
                            rhs_pr_p=rt.pr_p, rhs_pr_s=rt.pr_s, sort=j.sort)
        if isinstance(j, EqTerm):
            tt = self.trans_type(j.ty)
            return TransOut("term-eq", ctx, self.trans_term(j.lhs),
                            ty=tt.hott, pr_p=tt.pr_p, pr_s=tt.pr_s,
                            rhs=self.trans_term(j.rhs))
        raise TranslationError(f"unknown judgement {j!r}")


def translate_mtt(script, mode: str = "A") -> TransOut:
    """Translate a checked derivation's conclusion."""
    return MttTranslator(mode).run(script)


def recheck(out: TransOut) -> dict:
    """Kernel re-verification of a translated judgement; returns stats."""
    table, _ = stdlib()
    stats = {"conv_goals": 0, "checks": 0}

    def chk(ctx, t, ty):
        check(table, ctx, t, ty)
        stats["checks"] += 1

    ctx = out.ctx
    if out.kind == "ctx":
        pass
    elif out.kind == "type":
        chk(ctx, out.subject, Univ(out.target_level))
        chk(ctx, out.pr_s, mk_isset(out.subject))
        if out.sort in PROP_SORTS:
            chk(ctx, out.pr_p, mk_isprop(out.subject))
    elif out.kind == "term":
        chk(ctx, out.subject, out.ty)
    elif out.kind == "type-eq":
        chk(ctx, out.subject, Univ(out.target_level))
        chk(ctx, out.rhs, Univ(out.target_level))
        if out.sort in PROP_SORTS:
            pair_l = Pair(out.subject, out.pr_p)
            pair_r = Pair(out.rhs, out.rhs_pr_p)
        else:
            pair_l = Pair(out.subject, out.pr_s)
            pair_r = Pair(out.rhs, out.rhs_pr_s)
        stats["conv_goals"] += 1
        if not conv(table, pair_l, pair_r):
            raise TranslationError(
                "translated definitional type equality does not convert")
    elif out.kind == "term-eq":
        chk(ctx, out.subject, out.ty)
        chk(ctx, out.rhs, out.ty)
        stats["conv_goals"] += 1
        if not conv(table, out.subject, out.rhs):
            raise TranslationError(
                "translated definitional term equality does not convert")
    return stats


def subst_commutes_mtt(ty_or_term: S.STerm, replacement: S.STerm,
                       mode: str = "A", is_type: bool = True) -> bool:
    """Substitute-then-translate versus translate-then-substitute, on the
    compositional fragment; returns syntactic equality of the trees."""
    from ..kernel import subst as ksubst
    from ..source.terms import subst as ssubst
    tr = MttTranslator(mode)
    repl_h = tr.trans_term(replacement)
    if is_type:
        left = tr.trans_type(ssubst(ty_or_term, replacement)).hott
        right = ksubst(tr.trans_type(ty_or_term).hott, repl_h)
    else:
        left = tr.trans_term(ssubst(ty_or_term, replacement))
        right = ksubst(tr.trans_term(ty_or_term), repl_h)
    return left == right
