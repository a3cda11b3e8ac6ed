"""Forward derivation builders for corpus authoring.

Each method constructs one rule node, computing the conclusion from the
premises, and validates it against the level's rule table immediately, so
generation failures point at the construction site.
"""

from __future__ import annotations

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from mfhott.source import terms as S
from mfhott.source.checker import RuleError
from mfhott.source.judgements import (CtxWF, EqTerm, EqType, HasType, IsType,
                                      Node, Telescope, print_script)
from mfhott.source.terms import SVar, shift, subst, subst_many


class Builder:
    def __init__(self, registry, grammar):
        self.registry = registry
        self.prefix = registry.prefix
        self.grammar = grammar

    def node(self, rule, premises, conclusion):
        full = f"{self.prefix}/{rule}"
        n = Node(full, tuple(premises), conclusion)
        fn = self.registry.rules.get(full)
        if fn is None:
            raise ValueError(f"no rule {full}")
        try:
            fn(n)
        except RuleError as e:
            raise ValueError(f"building {full}: {e}\n"
                             f"  conclusion {conclusion}\n  premises "
                             + "\n  ".join(str(p.conclusion)
                                           for p in premises)) from e
        return n

    # --- structure ---

    def ctx_emp(self):
        return self.node("ctx-emp", (), CtxWF(Telescope()))

    def ctx_ext(self, wf, tynode, name):
        tel = wf.conclusion.ctx.extend(tynode.conclusion.ty, name)
        return self.node("ctx-ext", (wf, tynode), CtxWF(tel))

    def ctx_chain(self, *tynodes_names):
        """Build nested context extensions: (tynode_fn, name) pairs where
        tynode_fn maps the current ctx-wf node to a formation node."""
        wf = self.ctx_emp()
        for fn, name in tynodes_names:
            wf = self.ctx_ext(wf, fn(wf), name)
        return wf

    def var(self, wf, index):
        tel = wf.conclusion.ctx
        return self.node("var", (wf,),
                         HasType(SVar(index), tel.lookup(index), tel))

    def sub(self, which, p):
        c = p.conclusion
        tgt = {"props-set": "set", "props-prop": "prop",
               "set-col": "col", "prop-col": "col"}[which]
        return self.node(f"sub-{which.replace('-', '-', 1)}"
                         if False else f"sub-{which}",
                         (p,), IsType(tgt, c.ty, c.ctx))

    def eq_sub(self, which, p):
        c = p.conclusion
        tgt = {"props-set": "set", "props-prop": "prop",
               "set-col": "col", "prop-col": "col"}[which]
        return self.node(f"eq-sub-{which}", (p,),
                         EqType(tgt, c.lhs, c.rhs, c.ctx))

    def conv(self, a, e):
        return self.node("conv", (a, e),
                         HasType(a.conclusion.term, e.conclusion.rhs,
                                 a.conclusion.ctx))

    def conv_eq(self, a, e):
        c = a.conclusion
        return self.node("conv-eq", (a, e),
                         EqTerm(c.lhs, c.rhs, e.conclusion.rhs, c.ctx))

    def eq_refl(self, a):
        c = a.conclusion
        return self.node("eq-refl", (a,), EqTerm(c.term, c.term, c.ty, c.ctx))

    def eq_sym(self, a):
        c = a.conclusion
        return self.node("eq-sym", (a,), EqTerm(c.rhs, c.lhs, c.ty, c.ctx))

    def eq_trans(self, a, b):
        c, d = a.conclusion, b.conclusion
        return self.node("eq-trans", (a, b),
                         EqTerm(c.lhs, d.rhs, c.ty, c.ctx))

    def ty_eq_refl(self, a):
        c = a.conclusion
        return self.node("ty-eq-refl", (a,),
                         EqType(c.sort, c.ty, c.ty, c.ctx))

    def ty_eq_sym(self, a):
        c = a.conclusion
        return self.node("ty-eq-sym", (a,),
                         EqType(c.sort, c.rhs, c.lhs, c.ctx))

    def ty_eq_trans(self, a, b):
        c, d = a.conclusion, b.conclusion
        return self.node("ty-eq-trans", (a, b),
                         EqType(c.sort, c.lhs, d.rhs, c.ctx))

    # --- set formers ---

    def n0_f(self, wf):
        return self.node("n0-f", (wf,),
                         IsType("set", S.N0(), wf.conclusion.ctx))

    def n0_e(self, a, m):
        c, mm = a.conclusion, m.conclusion
        return self.node("n0-e", (a, m),
                         HasType(S.Emp0(c.term), subst(mm.ty, c.term),
                                 c.ctx))

    def n1_f(self, wf):
        return self.node("n1-f", (wf,),
                         IsType("set", S.N1(), wf.conclusion.ctx))

    def n1_i(self, wf):
        return self.node("n1-i", (wf,),
                         HasType(S.MStar(), S.N1(), wf.conclusion.ctx))

    def n1_e(self, t, m, b):
        tc, mc = t.conclusion, m.conclusion
        return self.node("n1-e", (t, m, b),
                         HasType(S.ElN1(tc.term, b.conclusion.term),
                                 subst(mc.ty, tc.term), tc.ctx))

    def n1_c(self, m, b):
        mc, bc = m.conclusion, b.conclusion
        return self.node("n1-c", (m, b),
                         EqTerm(S.ElN1(S.MStar(), bc.term), bc.term,
                                subst(mc.ty, S.MStar()), bc.ctx))

    def list_f(self, a):
        c = a.conclusion
        return self.node("list-f", (a,),
                         IsType("set", S.MList(c.ty), c.ctx))

    def list_i_nil(self, a):
        c = a.conclusion
        return self.node("list-i-nil", (a,),
                         HasType(S.Eps(), S.MList(c.ty), c.ctx))

    def list_i_cons(self, l, a):
        lc, ac = l.conclusion, a.conclusion
        return self.node("list-i-cons", (l, a),
                         HasType(S.MCons(lc.term, ac.term), lc.ty, lc.ctx))

    def list_e(self, scrut, m, d, s):
        sc, mc = scrut.conclusion, m.conclusion
        return self.node("list-e", (scrut, m, d, s),
                         HasType(S.ElList(sc.term, d.conclusion.term,
                                          s.conclusion.term),
                                 subst(mc.ty, sc.term), sc.ctx))

    def list_c_nil(self, scrut, m, d, s):
        mc, dc = m.conclusion, d.conclusion
        return self.node("list-c-nil", (scrut, m, d, s),
                         EqTerm(S.ElList(S.Eps(), dc.term,
                                         s.conclusion.term),
                                dc.term, subst(mc.ty, S.Eps()), dc.ctx))

    def list_c_cons(self, scrut, m, d, s):
        sc, mc = scrut.conclusion, m.conclusion
        tl, hd = sc.term.tail, sc.term.head
        ih = S.ElList(tl, d.conclusion.term, s.conclusion.term)
        rhs = subst_many(s.conclusion.term, [tl, hd, ih])
        return self.node("list-c-cons", (scrut, m, d, s),
                         EqTerm(S.ElList(sc.term, d.conclusion.term,
                                         s.conclusion.term),
                                rhs, subst(mc.ty, sc.term), sc.ctx))

    def sigma_f(self, a, b):
        ac, bc = a.conclusion, b.conclusion
        return self.node("sigma-f", (a, b),
                         IsType(ac.sort, S.MSigma(ac.ty, bc.ty), ac.ctx))

    def sigma_i(self, b, ta, tb):
        tac = ta.conclusion
        return self.node("sigma-i", (b, ta, tb),
                         HasType(S.MPair(tac.term, tb.conclusion.term),
                                 S.MSigma(tac.ty, b.conclusion.ty),
                                 tac.ctx))

    def sigma_e(self, d, m, br):
        dc, mc = d.conclusion, m.conclusion
        return self.node("sigma-e", (d, m, br),
                         HasType(S.ElSigma(dc.term, br.conclusion.term),
                                 subst(mc.ty, dc.term), dc.ctx))

    def sigma_c(self, m, br, ta, tb):
        tac, tbc = ta.conclusion, tb.conclusion
        pair = S.MPair(tac.term, tbc.term)
        rhs = subst_many(br.conclusion.term, [tac.term, tbc.term])
        return self.node("sigma-c", (m, br, ta, tb),
                         EqTerm(S.ElSigma(pair, br.conclusion.term), rhs,
                                subst(m.conclusion.ty, pair), tac.ctx))

    def pi_f(self, a, b):
        ac, bc = a.conclusion, b.conclusion
        return self.node("pi-f", (a, b),
                         IsType("set", S.MPi(ac.ty, bc.ty), ac.ctx))

    def pi_i(self, a, b):
        ac, bc = a.conclusion, b.conclusion
        return self.node("pi-i", (a, b),
                         HasType(S.MLam(bc.term), S.MPi(ac.ty, bc.ty),
                                 ac.ctx))

    def pi_e(self, f, a):
        fc, ac = f.conclusion, a.conclusion
        return self.node("pi-e", (f, a),
                         HasType(S.MAp(fc.term, ac.term),
                                 subst(fc.ty.cod, ac.term), fc.ctx))

    def pi_c(self, b, a):
        bc, ac = b.conclusion, a.conclusion
        return self.node("pi-c", (b, a),
                         EqTerm(S.MAp(S.MLam(bc.term), ac.term),
                                subst(bc.term, ac.term),
                                subst(bc.ty, ac.term), ac.ctx))

    def plus_f(self, a, b):
        ac, bc = a.conclusion, b.conclusion
        return self.node("plus-f", (a, b),
                         IsType("set", S.MPlus(ac.ty, bc.ty), ac.ctx))

    def plus_i(self, which, a, b, t):
        ctor = S.MInl if which == "l" else S.MInr
        ac, bc = a.conclusion, b.conclusion
        return self.node(f"plus-i-in{which}", (a, b, t),
                         HasType(ctor(t.conclusion.term),
                                 S.MPlus(ac.ty, bc.ty), ac.ctx))

    def plus_e(self, d, m, l, r):
        dc, mc = d.conclusion, m.conclusion
        return self.node("plus-e", (d, m, l, r),
                         HasType(S.ElPlus(dc.term, l.conclusion.term,
                                          r.conclusion.term),
                                 subst(mc.ty, dc.term), dc.ctx))

    def plus_c(self, which, d, m, l, r):
        dc, mc = d.conclusion, m.conclusion
        branch = (l if which == "l" else r).conclusion
        rhs = subst(branch.term, dc.term.arg)
        return self.node(f"plus-c-in{which}", (d, m, l, r),
                         EqTerm(S.ElPlus(dc.term, l.conclusion.term,
                                         r.conclusion.term),
                                rhs, subst(mc.ty, dc.term), dc.ctx))

    # --- connective formations (shared) ---

    def bot_f(self, wf):
        return self.node("bot-f", (wf,),
                         IsType("props", S.Bot(), wf.conclusion.ctx))

    def conn_f(self, which, a, b):
        ctor = {"or": S.MOr, "and": S.MAnd, "imp": S.MImp}[which]
        ac, bc = a.conclusion, b.conclusion
        return self.node(f"{which}-f", (a, b),
                         IsType(ac.sort, ctor(ac.ty, bc.ty), ac.ctx))

    def quant_f(self, which, a, p):
        ctor = S.MForall if which == "forall" else S.MExists
        ac, pc = a.conclusion, p.conclusion
        return self.node(f"{which}-f", (a, p),
                         IsType(pc.sort, ctor(ac.ty, pc.ty), ac.ctx))

    def cong2(self, name, ctor, a, b, sort=None):
        ac, bc = a.conclusion, b.conclusion
        return self.node(name, (a, b),
                         EqType(sort or bc.sort, ctor(ac.lhs, bc.lhs),
                                ctor(ac.rhs, bc.rhs), ac.ctx))

    def list_eq(self, a):
        c = a.conclusion
        return self.node("list-eq", (a,),
                         EqType("set", S.MList(c.lhs), S.MList(c.rhs),
                                c.ctx))

    def write(self, path, node):
        Path(path).write_text(print_script(self.grammar, node) + "\n")


class MttBuilder(Builder):
    def __init__(self):
        from mfhott.mtt import MTT_GRAMMAR, RULES
        super().__init__(RULES, MTT_GRAMMAR)

    def repl(self, template, *eqs):
        tc = template.conclusion
        lhs_vals = [e.conclusion.lhs for e in eqs]
        rhs_vals = [e.conclusion.rhs for e in eqs]
        base = eqs[0].conclusion.ctx if eqs else tc.ctx
        return self.node("repl", (template, *eqs),
                         EqTerm(subst_many(tc.term, lhs_vals),
                                subst_many(tc.term, rhs_vals),
                                subst_many(tc.ty, lhs_vals), base))

    def id_f(self, sort, a, l, r):
        ac = a.conclusion
        return self.node("id-f", (a, l, r),
                         IsType(sort, S.MId(ac.ty, l.conclusion.term,
                                            r.conclusion.term), ac.ctx))

    def id_i(self, a):
        c = a.conclusion
        return self.node("id-i", (a,),
                         HasType(S.IdIntro(c.term),
                                 S.MId(c.ty, c.term, c.term), c.ctx))

    def id_e(self, p, m, d):
        pc, mc = p.conclusion, m.conclusion
        return self.node("id-e", (p, m, d),
                         HasType(S.ElId(pc.term, d.conclusion.term),
                                 subst_many(mc.ty, [pc.ty.lhs, pc.ty.rhs]),
                                 pc.ctx))

    def id_c(self, m, d, a):
        mc, ac = m.conclusion, a.conclusion
        return self.node("id-c", (m, d, a),
                         EqTerm(S.ElId(S.IdIntro(ac.term),
                                       d.conclusion.term),
                                subst(d.conclusion.term, ac.term),
                                subst_many(mc.ty, [ac.term, ac.term]),
                                ac.ctx))

    def id_eq(self, a, l, r):
        ac, lc, rc = a.conclusion, l.conclusion, r.conclusion
        sort = "props" if ac.sort == "set" else "prop"
        return self.node("id-eq", (a, l, r),
                         EqType(sort, S.MId(ac.lhs, lc.lhs, rc.lhs),
                                S.MId(ac.rhs, lc.rhs, rc.rhs), ac.ctx))

    def bot_e(self, a, m):
        mc = m.conclusion
        return self.node("bot-e", (a, m),
                         HasType(S.R0(a.conclusion.term), mc.ty, mc.ctx))

    def or_i(self, which, a, b, t):
        ctor = S.InlOr if which == "l" else S.InrOr
        ac, bc = a.conclusion, b.conclusion
        return self.node(f"or-i-{which}", (a, b, t),
                         HasType(ctor(t.conclusion.term),
                                 S.MOr(ac.ty, bc.ty), ac.ctx))

    def or_e(self, d, m, l, r):
        mc = m.conclusion
        return self.node("or-e", (d, m, l, r),
                         HasType(S.ElOr(d.conclusion.term,
                                        l.conclusion.term,
                                        r.conclusion.term), mc.ty, mc.ctx))

    def or_c(self, which, d, m, l, r):
        mc, dc = m.conclusion, d.conclusion
        branch = (l if which == "l" else r).conclusion
        return self.node(f"or-c-{which}", (d, m, l, r),
                         EqTerm(S.ElOr(dc.term, l.conclusion.term,
                                       r.conclusion.term),
                                subst(branch.term, dc.term.arg),
                                mc.ty, mc.ctx))

    def and_i(self, a, b, ta, tb):
        ac, bc = a.conclusion, b.conclusion
        return self.node("and-i", (a, b, ta, tb),
                         HasType(S.PairAnd(ta.conclusion.term,
                                           tb.conclusion.term),
                                 S.MAnd(ac.ty, bc.ty), ac.ctx))

    def and_e(self, side, d):
        dc = d.conclusion
        ctor = S.Proj1 if side == 1 else S.Proj2
        want = dc.ty.left if side == 1 else dc.ty.right
        return self.node(f"and-e-{side}", (d,),
                         HasType(ctor(dc.term), want, dc.ctx))

    def and_c(self, side, ta, tb):
        tac, tbc = ta.conclusion, tb.conclusion
        ctor = S.Proj1 if side == 1 else S.Proj2
        keep = tac if side == 1 else tbc
        return self.node(f"and-c-{side}", (ta, tb),
                         EqTerm(ctor(S.PairAnd(tac.term, tbc.term)),
                                keep.term, keep.ty, tac.ctx))

    def imp_i(self, a, b):
        ac, bc = a.conclusion, b.conclusion
        return self.node("imp-i", (a, b),
                         HasType(S.LamImp(bc.term),
                                 S.MImp(ac.ty, shift(bc.ty, -1)), ac.ctx))

    def imp_e(self, f, a):
        fc = f.conclusion
        return self.node("imp-e", (f, a),
                         HasType(S.ApImp(fc.term, a.conclusion.term),
                                 fc.ty.right, fc.ctx))

    def imp_c(self, b, a):
        bc, ac = b.conclusion, a.conclusion
        return self.node("imp-c", (b, a),
                         EqTerm(S.ApImp(S.LamImp(bc.term), ac.term),
                                subst(bc.term, ac.term),
                                shift(bc.ty, -1), ac.ctx))

    def forall_i(self, a, b):
        ac, bc = a.conclusion, b.conclusion
        return self.node("forall-i", (a, b),
                         HasType(S.LamAll(bc.term),
                                 S.MForall(ac.ty, bc.ty), ac.ctx))

    def forall_e(self, f, a):
        fc, ac = f.conclusion, a.conclusion
        return self.node("forall-e", (f, a),
                         HasType(S.ApAll(fc.term, ac.term),
                                 subst(fc.ty.body, ac.term), fc.ctx))

    def forall_c(self, b, a):
        bc, ac = b.conclusion, a.conclusion
        return self.node("forall-c", (b, a),
                         EqTerm(S.ApAll(S.LamAll(bc.term), ac.term),
                                subst(bc.term, ac.term),
                                subst(bc.ty, ac.term), ac.ctx))

    def exists_i(self, p, a, w):
        pc, ac = p.conclusion, a.conclusion
        return self.node("exists-i", (p, a, w),
                         HasType(S.PairEx(ac.term, w.conclusion.term),
                                 S.MExists(ac.ty, pc.ty), ac.ctx))

    def exists_e(self, d, m, br):
        mc = m.conclusion
        return self.node("exists-e", (d, m, br),
                         HasType(S.ElEx(d.conclusion.term,
                                        br.conclusion.term), mc.ty, mc.ctx))

    def exists_c(self, m, br, a, w):
        mc = m.conclusion
        pair = S.PairEx(a.conclusion.term, w.conclusion.term)
        rhs = subst_many(br.conclusion.term,
                         [a.conclusion.term, w.conclusion.term])
        return self.node("exists-c", (m, br, a, w),
                         EqTerm(S.ElEx(pair, br.conclusion.term), rhs,
                                mc.ty, mc.ctx))

    def props_f(self, wf):
        return self.node("props-f", (wf,),
                         IsType("col", S.PropColl(), wf.conclusion.ctx))

    def propfun_f(self, a):
        c = a.conclusion
        return self.node("propfun-f", (a,),
                         IsType("col", S.PropFun(c.ty), c.ctx))

    def propfun_i(self, a, p):
        ac = a.conclusion
        return self.node("propfun-i", (a, p),
                         HasType(S.MLam(p.conclusion.term),
                                 S.PropFun(ac.ty), ac.ctx))

    def propfun_e(self, f, a):
        fc = f.conclusion
        return self.node("propfun-e", (f, a),
                         HasType(S.MAp(fc.term, a.conclusion.term),
                                 S.PropColl(), fc.ctx))

    def propfun_c(self, p, a):
        pc, ac = p.conclusion, a.conclusion
        return self.node("propfun-c", (p, a),
                         EqTerm(S.MAp(S.MLam(pc.term), ac.term),
                                subst(pc.term, ac.term), S.PropColl(),
                                ac.ctx))

    def propfun_eq(self, a):
        c = a.conclusion
        return self.node("propfun-eq", (a,),
                         EqType("col", S.PropFun(c.lhs), S.PropFun(c.rhs),
                                c.ctx))

    def pr_atom(self, which, wf):
        ctor = S.BotHat if which == "bot" else S.TopHat
        return self.node(f"pr-{which}", (wf,),
                         HasType(ctor(), S.PropColl(), wf.conclusion.ctx))

    def pr_bin(self, which, p, q):
        ctor = {"or": S.OrHat, "imp": S.ImpHat, "and": S.AndHat}[which]
        pc = p.conclusion
        return self.node(f"pr-{which}", (p, q),
                         HasType(ctor(pc.term, q.conclusion.term),
                                 S.PropColl(), pc.ctx))

    def pr_quant(self, which, p, a):
        ctor = S.ForallHat if which == "forall" else S.ExistsHat
        ac = a.conclusion
        return self.node(f"pr-{which}", (p, a),
                         HasType(ctor(ac.ty, p.conclusion.term),
                                 S.PropColl(), ac.ctx))

    def pr_id(self, a, l, r):
        ac = a.conclusion
        return self.node("pr-id", (a, l, r),
                         HasType(S.IdHat(ac.ty, l.conclusion.term,
                                         r.conclusion.term),
                                 S.PropColl(), ac.ctx))

    def tau(self, p):
        c = p.conclusion
        return self.node("tau", (p,), IsType("props", S.Tau(c.term), c.ctx))

    def eq_tau(self, e):
        c = e.conclusion
        return self.node("eq-tau", (e,),
                         EqType("props", S.Tau(c.lhs), S.Tau(c.rhs), c.ctx))

    def eq_pr_bot(self, wf):
        return self.node("eq-pr-bot", (wf,),
                         EqType("props", S.Tau(S.BotHat()), S.Bot(),
                                wf.conclusion.ctx))

    def eq_pr_bin(self, which, p, q):
        code = {"or": S.OrHat, "imp": S.ImpHat, "and": S.AndHat}[which]
        prop = {"or": S.MOr, "imp": S.MImp, "and": S.MAnd}[which]
        pc, qc = p.conclusion, q.conclusion
        return self.node(f"eq-pr-{which}", (p, q),
                         EqType("props", S.Tau(code(pc.term, qc.term)),
                                prop(S.Tau(pc.term), S.Tau(qc.term)),
                                pc.ctx))

    def eq_pr_quant(self, which, p, a):
        code = S.ForallHat if which == "forall" else S.ExistsHat
        prop = S.MForall if which == "forall" else S.MExists
        ac, pc = a.conclusion, p.conclusion
        return self.node(f"eq-pr-{which}", (p, a),
                         EqType("props", S.Tau(code(ac.ty, pc.term)),
                                prop(ac.ty, S.Tau(pc.term)), ac.ctx))

    def eq_pr_id(self, a, l, r):
        ac = a.conclusion
        lt, rt = l.conclusion.term, r.conclusion.term
        return self.node("eq-pr-id", (a, l, r),
                         EqType("props", S.Tau(S.IdHat(ac.ty, lt, rt)),
                                S.MId(ac.ty, lt, rt), ac.ctx))


class EmttBuilder(Builder):
    def __init__(self):
        from mfhott.emtt import EMTT_GRAMMAR, RULES
        super().__init__(RULES, EMTT_GRAMMAR)

    TRUE = S.TrueTm()

    def prop_mono(self, phi, p, q):
        c = phi.conclusion
        return self.node("prop-mono", (phi, p, q),
                         EqTerm(p.conclusion.term, q.conclusion.term,
                                c.ty, c.ctx))

    def prop_true(self, phi, p):
        c = phi.conclusion
        return self.node("prop-true", (phi, p),
                         HasType(self.TRUE, c.ty, c.ctx))

    def xi(self, a, e):
        ac, ec = a.conclusion, e.conclusion
        return self.node("xi", (a, e),
                         EqTerm(S.MLam(ec.lhs), S.MLam(ec.rhs),
                                S.MPi(ac.ty, ec.ty), ac.ctx))

    def ap_cong(self, f, a):
        fc, ac = f.conclusion, a.conclusion
        return self.node("ap-cong", (f, a),
                         EqTerm(S.MAp(fc.lhs, ac.lhs),
                                S.MAp(fc.rhs, ac.rhs),
                                subst(fc.ty.cod, ac.lhs), fc.ctx))

    def pair_cong(self, b, ea, eb):
        eac = ea.conclusion
        return self.node("pair-cong", (b, ea, eb),
                         EqTerm(S.MPair(eac.lhs, eb.conclusion.lhs),
                                S.MPair(eac.rhs, eb.conclusion.rhs),
                                S.MSigma(eac.ty, b.conclusion.ty),
                                eac.ctx))

    def qcls_cong(self, q, e):
        qc, ec = q.conclusion, e.conclusion
        return self.node("qcls-cong", (q, e),
                         EqTerm(S.QClass(ec.lhs), S.QClass(ec.rhs),
                                qc.ty, qc.ctx))

    def eq_f(self, sort, a, l, r):
        ac = a.conclusion
        return self.node("eq-f", (a, l, r),
                         IsType(sort, S.EqProp(ac.ty, l.conclusion.term,
                                               r.conclusion.term), ac.ctx))

    def i_eq(self, a):
        c = a.conclusion
        return self.node("i-eq", (a,),
                         HasType(self.TRUE, S.EqProp(c.ty, c.term, c.term),
                                 c.ctx))

    def e_eq(self, p):
        c = p.conclusion
        return self.node("e-eq", (p,),
                         EqTerm(c.ty.lhs, c.ty.rhs, c.ty.ty, c.ctx))

    def eq_eq(self, a, l, r):
        ac, lc, rc = a.conclusion, l.conclusion, r.conclusion
        sort = "props" if ac.sort == "set" else "prop"
        return self.node("eq-eq", (a, l, r),
                         EqType(sort, S.EqProp(ac.lhs, lc.lhs, rc.lhs),
                                S.EqProp(ac.rhs, lc.rhs, rc.rhs), ac.ctx))

    def bot_e(self, a, m):
        mc = m.conclusion
        return self.node("bot-e", (a, m), HasType(self.TRUE, mc.ty, mc.ctx))

    def or_i(self, which, a, b, t):
        ac, bc = a.conclusion, b.conclusion
        return self.node(f"or-i-{which}", (a, b, t),
                         HasType(self.TRUE, S.MOr(ac.ty, bc.ty), ac.ctx))

    def or_e(self, d, m, l, r):
        mc = m.conclusion
        return self.node("or-e", (d, m, l, r),
                         HasType(self.TRUE, mc.ty, mc.ctx))

    def and_i(self, a, b, ta, tb):
        ac, bc = a.conclusion, b.conclusion
        return self.node("and-i", (a, b, ta, tb),
                         HasType(self.TRUE, S.MAnd(ac.ty, bc.ty), ac.ctx))

    def and_e(self, side, a, b, d):
        want = (a if side == 1 else b).conclusion.ty
        return self.node(f"and-e-{side}", (a, b, d),
                         HasType(self.TRUE, want, d.conclusion.ctx))

    def imp_i(self, a, b):
        ac, bc = a.conclusion, b.conclusion
        return self.node("imp-i", (a, b),
                         HasType(self.TRUE,
                                 S.MImp(ac.ty, shift(bc.ty, -1)), ac.ctx))

    def imp_e(self, f, a):
        fc = f.conclusion
        return self.node("imp-e", (f, a),
                         HasType(self.TRUE, fc.ty.right, fc.ctx))

    def forall_i(self, a, b):
        ac, bc = a.conclusion, b.conclusion
        return self.node("forall-i", (a, b),
                         HasType(self.TRUE, S.MForall(ac.ty, bc.ty),
                                 ac.ctx))

    def forall_e(self, f, a):
        fc, ac = f.conclusion, a.conclusion
        return self.node("forall-e", (f, a),
                         HasType(self.TRUE, subst(fc.ty.body, ac.term),
                                 fc.ctx))

    def exists_i(self, p, a, w):
        pc, ac = p.conclusion, a.conclusion
        return self.node("exists-i", (p, a, w),
                         HasType(self.TRUE, S.MExists(ac.ty, pc.ty),
                                 ac.ctx))

    def exists_e(self, d, m, br):
        mc = m.conclusion
        return self.node("exists-e", (d, m, br),
                         HasType(self.TRUE, mc.ty, mc.ctx))

    def p1_f(self, wf):
        return self.node("p1-f", (wf,),
                         IsType("col", S.PowerOne(), wf.conclusion.ctx))

    def i_p(self, a):
        c = a.conclusion
        return self.node("i-p", (a,),
                         HasType(S.PCls(c.ty), S.PowerOne(), c.ctx))

    def eq_p1(self, a, b, t):
        ac, bc = a.conclusion, b.conclusion
        return self.node("eq-p1", (a, b, t),
                         EqTerm(S.PCls(ac.ty), S.PCls(bc.ty), S.PowerOne(),
                                ac.ctx))

    def eff_p1(self, a, b, e):
        from mfhott.emtt.rules import iff_prop
        ac, bc = a.conclusion, b.conclusion
        return self.node("eff-p1", (a, b, e),
                         HasType(self.TRUE, iff_prop(ac.ty, bc.ty), ac.ctx))

    def pfun_f(self, a):
        c = a.conclusion
        return self.node("pfun-f", (a,),
                         IsType("col", S.PowerFun(c.ty), c.ctx))

    def pfun_i(self, a, p):
        ac = a.conclusion
        return self.node("pfun-i", (a, p),
                         HasType(S.MLam(p.conclusion.term),
                                 S.PowerFun(ac.ty), ac.ctx))

    def pfun_e(self, f, a):
        fc = f.conclusion
        return self.node("pfun-e", (f, a),
                         HasType(S.MAp(fc.term, a.conclusion.term),
                                 S.PowerOne(), fc.ctx))

    def pfun_c(self, p, a):
        pc, ac = p.conclusion, a.conclusion
        return self.node("pfun-c", (p, a),
                         EqTerm(S.MAp(S.MLam(pc.term), ac.term),
                                subst(pc.term, ac.term), S.PowerOne(),
                                ac.ctx))

    def pfun_eq(self, a):
        c = a.conclusion
        return self.node("pfun-eq", (a,),
                         EqType("col", S.PowerFun(c.lhs), S.PowerFun(c.rhs),
                                c.ctx))

    def quot_f(self, a, r, erefl, esym, etrans):
        ac, rc = a.conclusion, r.conclusion
        return self.node("quot-f", (a, r, erefl, esym, etrans),
                         IsType("set", S.MQuot(ac.ty, rc.ty), ac.ctx))

    def quot_i(self, a, q):
        ac = a.conclusion
        return self.node("quot-i", (a, q),
                         HasType(S.QClass(ac.term), q.conclusion.ty,
                                 ac.ctx))

    def quot_e(self, p, m, l, side):
        pc, mc = p.conclusion, m.conclusion
        return self.node("quot-e", (p, m, l, side),
                         HasType(S.ElQ(pc.term, l.conclusion.term), mc.ty,
                                 pc.ctx))

    def quot_c(self, p, m, l, side, a):
        mc, ac = m.conclusion, a.conclusion
        return self.node("quot-c", (p, m, l, side, a),
                         EqTerm(S.ElQ(S.QClass(ac.term),
                                      l.conclusion.term),
                                subst(l.conclusion.term, ac.term),
                                mc.ty, ac.ctx))

    def eq_q(self, a, b, q, t):
        ac, bc = a.conclusion, b.conclusion
        return self.node("eq-q", (a, b, q, t),
                         EqTerm(S.QClass(ac.term), S.QClass(bc.term),
                                q.conclusion.ty, ac.ctx))

    def eff_q(self, a, b, e, q):
        ac, bc = a.conclusion, b.conclusion
        rel = q.conclusion.ty.rel
        return self.node("eff-q", (a, b, e, q),
                         HasType(self.TRUE,
                                 subst_many(rel, [ac.term, bc.term]),
                                 ac.ctx))

    def quot_eq(self, a, r):
        ac, rc = a.conclusion, r.conclusion
        return self.node("quot-eq", (a, r),
                         EqType("set", S.MQuot(ac.lhs, rc.lhs),
                                S.MQuot(ac.rhs, rc.rhs), ac.ctx))
