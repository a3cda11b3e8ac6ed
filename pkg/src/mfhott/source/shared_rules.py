"""Rule schemas common to both source levels.

Structural rules, the subtyping square, conversion, equality structure,
the first-order set formers with lists, the connective formations, and the
type-former congruences.  Each level registers these under its own prefix
and adds its specific rules (encodings and proof-term formers on the
intensional side; proof irrelevance, reflection, quotients and the power
collection on the extensional side).
"""

from __future__ import annotations

from . import terms as S
from .checker import (RuleError, as_kind, extends, inst1, need, premises,
                      same_ctx)
from .judgements import CtxWF, EqTerm, EqType, HasType, IsType, PROPISH
from .terms import SVar, shift, subst, subst_many

DISPLAYED = "displayed"
STANDARD = "standard"

SHARED = {}


def shared(name, source):
    def deco(fn):
        SHARED[name] = (fn, source)
        return fn

    return deco


@shared("ctx-emp", STANDARD)
def r_ctx_emp(node):
    premises(node, 0)
    c = as_kind(node.conclusion, CtxWF, "conclusion")
    need(len(c.ctx) == 0, "conclusion must be the empty context")


@shared("ctx-ext", STANDARD)
def r_ctx_ext(node):
    w, t = premises(node, 2)
    c = as_kind(node.conclusion, CtxWF, "conclusion")
    w = as_kind(w, CtxWF, "premise 1")
    t = as_kind(t, IsType, "premise 2")
    same_ctx(w.ctx, t.ctx, "premises")
    extends(w.ctx, c.ctx, (t.ty,), "conclusion")


@shared("var", STANDARD)
def r_var(node):
    (w,) = premises(node, 1)
    c = as_kind(node.conclusion, HasType, "conclusion")
    w = as_kind(w, CtxWF, "premise")
    same_ctx(w.ctx, c.ctx, "conclusion")
    need(isinstance(c.term, SVar), "subject must be a variable")
    need(c.term.index < len(c.ctx), "variable index out of range")
    expected = c.ctx.lookup(c.term.index)
    need(c.ty == expected, "variable type mismatch",
         expected=expected, found=c.ty)


def _mk_subtyping(source_sort, target_sort):
    def fn(node):
        (p,) = premises(node, 1)
        c = as_kind(node.conclusion, IsType, "conclusion")
        p = as_kind(p, IsType, "premise")
        need(p.sort == source_sort and c.sort == target_sort,
             f"coercion is {source_sort} into {target_sort}")
        same_ctx(p.ctx, c.ctx, "conclusion")
        need(p.ty == c.ty, "subject must be unchanged")

    return fn


def _mk_eq_subtyping(source_sort, target_sort):
    def fn(node):
        (p,) = premises(node, 1)
        c = as_kind(node.conclusion, EqType, "conclusion")
        p = as_kind(p, EqType, "premise")
        need(p.sort == source_sort and c.sort == target_sort,
             f"coercion is {source_sort} into {target_sort}")
        same_ctx(p.ctx, c.ctx, "conclusion")
        need(p.lhs == c.lhs and p.rhs == c.rhs, "subjects must be unchanged")

    return fn


for _src, _tgt in (("props", "set"), ("props", "prop"),
                   ("set", "col"), ("prop", "col")):
    SHARED[f"sub-{_src}-{_tgt}"] = (_mk_subtyping(_src, _tgt), DISPLAYED)
    SHARED[f"eq-sub-{_src}-{_tgt}"] = (_mk_eq_subtyping(_src, _tgt), STANDARD)


@shared("conv", STANDARD)
def r_conv(node):
    a, e = premises(node, 2)
    c = as_kind(node.conclusion, HasType, "conclusion")
    a = as_kind(a, HasType, "premise 1")
    e = as_kind(e, EqType, "premise 2")
    same_ctx(a.ctx, c.ctx, "conclusion")
    same_ctx(e.ctx, c.ctx, "conclusion")
    need(a.term == c.term, "subject must be unchanged")
    need(e.lhs == a.ty and e.rhs == c.ty,
         "type equality must rewrite the premise type to the conclusion type",
         expected=a.ty, found=e.lhs)


@shared("conv-eq", STANDARD)
def r_conv_eq(node):
    a, e = premises(node, 2)
    c = as_kind(node.conclusion, EqTerm, "conclusion")
    a = as_kind(a, EqTerm, "premise 1")
    e = as_kind(e, EqType, "premise 2")
    same_ctx(a.ctx, c.ctx, "conclusion")
    same_ctx(e.ctx, c.ctx, "conclusion")
    need(a.lhs == c.lhs and a.rhs == c.rhs, "subjects must be unchanged")
    need(e.lhs == a.ty and e.rhs == c.ty, "type equality mismatch")


@shared("eq-refl", STANDARD)
def r_eq_refl(node):
    (a,) = premises(node, 1)
    c = as_kind(node.conclusion, EqTerm, "conclusion")
    a = as_kind(a, HasType, "premise")
    same_ctx(a.ctx, c.ctx, "conclusion")
    need(c.lhs == a.term and c.rhs == a.term and c.ty == a.ty,
         "conclusion must be reflexivity at the premise")


@shared("eq-sym", STANDARD)
def r_eq_sym(node):
    (a,) = premises(node, 1)
    c = as_kind(node.conclusion, EqTerm, "conclusion")
    a = as_kind(a, EqTerm, "premise")
    same_ctx(a.ctx, c.ctx, "conclusion")
    need(c.lhs == a.rhs and c.rhs == a.lhs and c.ty == a.ty,
         "conclusion must be the symmetric equality")


@shared("eq-trans", STANDARD)
def r_eq_trans(node):
    a, b = premises(node, 2)
    c = as_kind(node.conclusion, EqTerm, "conclusion")
    a = as_kind(a, EqTerm, "premise 1")
    b = as_kind(b, EqTerm, "premise 2")
    same_ctx(a.ctx, c.ctx, "conclusion")
    same_ctx(b.ctx, c.ctx, "conclusion")
    need(a.rhs == b.lhs and a.ty == b.ty, "premises do not compose")
    need(c.lhs == a.lhs and c.rhs == b.rhs and c.ty == a.ty,
         "conclusion must compose the premises")


@shared("ty-eq-refl", STANDARD)
def r_ty_eq_refl(node):
    (a,) = premises(node, 1)
    c = as_kind(node.conclusion, EqType, "conclusion")
    a = as_kind(a, IsType, "premise")
    same_ctx(a.ctx, c.ctx, "conclusion")
    need(c.sort == a.sort and c.lhs == a.ty and c.rhs == a.ty,
         "conclusion must be reflexivity at the premise type")


@shared("ty-eq-sym", STANDARD)
def r_ty_eq_sym(node):
    (a,) = premises(node, 1)
    c = as_kind(node.conclusion, EqType, "conclusion")
    a = as_kind(a, EqType, "premise")
    same_ctx(a.ctx, c.ctx, "conclusion")
    need(c.sort == a.sort and c.lhs == a.rhs and c.rhs == a.lhs,
         "conclusion must be the symmetric equality")


@shared("ty-eq-trans", STANDARD)
def r_ty_eq_trans(node):
    a, b = premises(node, 2)
    c = as_kind(node.conclusion, EqType, "conclusion")
    a = as_kind(a, EqType, "premise 1")
    b = as_kind(b, EqType, "premise 2")
    same_ctx(a.ctx, c.ctx, "conclusion")
    same_ctx(b.ctx, c.ctx, "conclusion")
    need(a.rhs == b.lhs and a.sort == b.sort, "premises do not compose")
    need(c.sort == a.sort and c.lhs == a.lhs and c.rhs == b.rhs,
         "conclusion must compose the premises")


# --- small set formers --------------------------------------------------------

@shared("n0-f", STANDARD)
def r_n0_f(node):
    (w,) = premises(node, 1)
    c = as_kind(node.conclusion, IsType, "conclusion")
    w = as_kind(w, CtxWF, "premise")
    same_ctx(w.ctx, c.ctx, "conclusion")
    need(c.sort == "set" and c.ty == S.N0(),
         "conclusion must form the empty set")


@shared("n0-e", STANDARD)
def r_n0_e(node):
    a, m = premises(node, 2)
    c = as_kind(node.conclusion, HasType, "conclusion")
    a = as_kind(a, HasType, "premise 1")
    m = as_kind(m, IsType, "premise 2")
    same_ctx(a.ctx, c.ctx, "conclusion")
    extends(c.ctx, m.ctx, (S.N0(),), "motive")
    need(a.ty == S.N0(), "scrutinee must inhabit the empty set")
    need(c.term == S.Emp0(a.term), "subject must be the empty-set eliminator")
    need(c.ty == subst(m.ty, a.term),
         "conclusion type must be the motive at the scrutinee",
         expected=subst(m.ty, a.term), found=c.ty)


@shared("n1-f", STANDARD)
def r_n1_f(node):
    (w,) = premises(node, 1)
    c = as_kind(node.conclusion, IsType, "conclusion")
    w = as_kind(w, CtxWF, "premise")
    same_ctx(w.ctx, c.ctx, "conclusion")
    need(c.sort == "set" and c.ty == S.N1(),
         "conclusion must form the singleton set")


@shared("n1-i", STANDARD)
def r_n1_i(node):
    (w,) = premises(node, 1)
    c = as_kind(node.conclusion, HasType, "conclusion")
    w = as_kind(w, CtxWF, "premise")
    same_ctx(w.ctx, c.ctx, "conclusion")
    need(c.term == S.MStar() and c.ty == S.N1(),
         "conclusion must introduce the canonical element")


@shared("n1-e", STANDARD)
def r_n1_e(node):
    t, m, b = premises(node, 3)
    c = as_kind(node.conclusion, HasType, "conclusion")
    t = as_kind(t, HasType, "premise 1")
    m = as_kind(m, IsType, "premise 2")
    b = as_kind(b, HasType, "premise 3")
    same_ctx(t.ctx, c.ctx, "conclusion")
    same_ctx(b.ctx, c.ctx, "conclusion")
    extends(c.ctx, m.ctx, (S.N1(),), "motive")
    need(t.ty == S.N1(), "scrutinee must inhabit the singleton")
    need(b.ty == subst(m.ty, S.MStar()),
         "branch must inhabit the motive at the canonical element")
    need(c.term == S.ElN1(t.term, b.term), "subject mismatch")
    need(c.ty == subst(m.ty, t.term), "conclusion type mismatch")


@shared("n1-c", STANDARD)
def r_n1_c(node):
    m, b = premises(node, 2)
    c = as_kind(node.conclusion, EqTerm, "conclusion")
    m = as_kind(m, IsType, "premise 1")
    b = as_kind(b, HasType, "premise 2")
    same_ctx(b.ctx, c.ctx, "conclusion")
    extends(c.ctx, m.ctx, (S.N1(),), "motive")
    at_star = subst(m.ty, S.MStar())
    need(b.ty == at_star,
         "branch must inhabit the motive at the canonical element")
    need(c.lhs == S.ElN1(S.MStar(), b.term) and c.rhs == b.term
         and c.ty == at_star, "conclusion must be the computation equation")


@shared("list-f", STANDARD)
def r_list_f(node):
    (a,) = premises(node, 1)
    c = as_kind(node.conclusion, IsType, "conclusion")
    a = as_kind(a, IsType, "premise")
    same_ctx(a.ctx, c.ctx, "conclusion")
    need(a.sort == "set" and c.sort == "set", "lists form a set over a set")
    need(c.ty == S.MList(a.ty), "conclusion must form the list set")


@shared("list-i-nil", STANDARD)
def r_list_i_nil(node):
    (a,) = premises(node, 1)
    c = as_kind(node.conclusion, HasType, "conclusion")
    a = as_kind(a, IsType, "premise")
    same_ctx(a.ctx, c.ctx, "conclusion")
    need(a.sort == "set", "element type must be a set")
    need(c.term == S.Eps() and c.ty == S.MList(a.ty),
         "conclusion must introduce the empty list")


@shared("list-i-cons", STANDARD)
def r_list_i_cons(node):
    l, a = premises(node, 2)
    c = as_kind(node.conclusion, HasType, "conclusion")
    l = as_kind(l, HasType, "premise 1")
    a = as_kind(a, HasType, "premise 2")
    same_ctx(l.ctx, c.ctx, "conclusion")
    same_ctx(a.ctx, c.ctx, "conclusion")
    need(l.ty == S.MList(a.ty), "tail must be a list over the head type")
    need(c.term == S.MCons(l.term, a.term) and c.ty == l.ty,
         "conclusion must extend the list")


def _list_elim_parts(c, scrut, m, d, s):
    need(isinstance(scrut.ty, S.MList), "scrutinee must be a list")
    elem = scrut.ty.elem
    extends(c.ctx, m.ctx, (S.MList(elem),), "motive")
    need(d.ty == subst(m.ty, S.Eps()),
         "nil branch must inhabit the motive at the empty list")
    step_tele = (S.MList(elem), shift(elem, 1), inst1(m.ty, SVar(1), 1))
    extends(c.ctx, s.ctx, step_tele, "step branch")
    expected_step = inst1(m.ty, S.MCons(SVar(2), SVar(1)), 2)
    need(s.ty == expected_step, "step branch type mismatch",
         expected=expected_step, found=s.ty)


@shared("list-e", STANDARD)
def r_list_e(node):
    scrut, m, d, s = premises(node, 4)
    c = as_kind(node.conclusion, HasType, "conclusion")
    scrut = as_kind(scrut, HasType, "premise 1")
    m = as_kind(m, IsType, "premise 2")
    d = as_kind(d, HasType, "premise 3")
    s = as_kind(s, HasType, "premise 4")
    same_ctx(scrut.ctx, c.ctx, "conclusion")
    same_ctx(d.ctx, c.ctx, "conclusion")
    _list_elim_parts(c, scrut, m, d, s)
    need(c.term == S.ElList(scrut.term, d.term, s.term), "subject mismatch")
    need(c.ty == subst(m.ty, scrut.term), "conclusion type mismatch")


@shared("list-c-nil", STANDARD)
def r_list_c_nil(node):
    scrut, m, d, s = premises(node, 4)
    c = as_kind(node.conclusion, EqTerm, "conclusion")
    scrut = as_kind(scrut, HasType, "premise 1")
    m = as_kind(m, IsType, "premise 2")
    d = as_kind(d, HasType, "premise 3")
    s = as_kind(s, HasType, "premise 4")
    _list_elim_parts(c, scrut, m, d, s)
    need(scrut.term == S.Eps(), "scrutinee must be the empty list")
    need(c.lhs == S.ElList(S.Eps(), d.term, s.term) and c.rhs == d.term
         and c.ty == subst(m.ty, S.Eps()),
         "conclusion must be the nil computation equation")


@shared("list-c-cons", STANDARD)
def r_list_c_cons(node):
    scrut, m, d, s = premises(node, 4)
    c = as_kind(node.conclusion, EqTerm, "conclusion")
    scrut = as_kind(scrut, HasType, "premise 1")
    m = as_kind(m, IsType, "premise 2")
    d = as_kind(d, HasType, "premise 3")
    s = as_kind(s, HasType, "premise 4")
    _list_elim_parts(c, scrut, m, d, s)
    need(isinstance(scrut.term, S.MCons), "scrutinee must be a cons")
    tl, hd = scrut.term.tail, scrut.term.head
    ih = S.ElList(tl, d.term, s.term)
    need(c.lhs == S.ElList(scrut.term, d.term, s.term)
         and c.rhs == subst_many(s.term, [tl, hd, ih])
         and c.ty == subst(m.ty, scrut.term),
         "conclusion must be the cons computation equation")


@shared("sigma-f", STANDARD)
def r_sigma_f(node):
    a, b = premises(node, 2)
    c = as_kind(node.conclusion, IsType, "conclusion")
    a = as_kind(a, IsType, "premise 1")
    b = as_kind(b, IsType, "premise 2")
    same_ctx(a.ctx, c.ctx, "conclusion")
    extends(c.ctx, b.ctx, (a.ty,), "family")
    need(c.sort in ("set", "col") and a.sort == c.sort and b.sort == c.sort,
         "components must match the conclusion sort (set or collection)")
    need(c.ty == S.MSigma(a.ty, b.ty), "conclusion must form the sum")


@shared("sigma-i", STANDARD)
def r_sigma_i(node):
    b, ta, tb = premises(node, 3)
    c = as_kind(node.conclusion, HasType, "conclusion")
    b = as_kind(b, IsType, "premise 1")
    ta = as_kind(ta, HasType, "premise 2")
    tb = as_kind(tb, HasType, "premise 3")
    same_ctx(ta.ctx, c.ctx, "conclusion")
    same_ctx(tb.ctx, c.ctx, "conclusion")
    extends(c.ctx, b.ctx, (ta.ty,), "family")
    need(tb.ty == subst(b.ty, ta.term),
         "second component must inhabit the family at the first")
    need(c.term == S.MPair(ta.term, tb.term)
         and c.ty == S.MSigma(ta.ty, b.ty),
         "conclusion must introduce the pair")


@shared("sigma-e", STANDARD)
def r_sigma_e(node):
    d, m, br = premises(node, 3)
    c = as_kind(node.conclusion, HasType, "conclusion")
    d = as_kind(d, HasType, "premise 1")
    m = as_kind(m, IsType, "premise 2")
    br = as_kind(br, HasType, "premise 3")
    same_ctx(d.ctx, c.ctx, "conclusion")
    need(isinstance(d.ty, S.MSigma), "scrutinee must inhabit a sum")
    a_ty, b_ty = d.ty.dom, d.ty.cod
    extends(c.ctx, m.ctx, (d.ty,), "motive")
    extends(c.ctx, br.ctx, (a_ty, b_ty), "branch")
    expected = inst1(m.ty, S.MPair(SVar(1), SVar(0)), 1)
    need(br.ty == expected, "branch must inhabit the motive at the pair",
         expected=expected, found=br.ty)
    need(c.term == S.ElSigma(d.term, br.term), "subject mismatch")
    need(c.ty == subst(m.ty, d.term), "conclusion type mismatch")


@shared("sigma-c", STANDARD)
def r_sigma_c(node):
    m, br, ta, tb = premises(node, 4)
    c = as_kind(node.conclusion, EqTerm, "conclusion")
    m = as_kind(m, IsType, "premise 1")
    br = as_kind(br, HasType, "premise 2")
    ta = as_kind(ta, HasType, "premise 3")
    tb = as_kind(tb, HasType, "premise 4")
    same_ctx(ta.ctx, c.ctx, "conclusion")
    pair = S.MPair(ta.term, tb.term)
    need(c.lhs == S.ElSigma(pair, br.term)
         and c.rhs == subst_many(br.term, [ta.term, tb.term])
         and c.ty == subst(m.ty, pair),
         "conclusion must be the pair computation equation")


@shared("pi-f", STANDARD)
def r_pi_f(node):
    a, b = premises(node, 2)
    c = as_kind(node.conclusion, IsType, "conclusion")
    a = as_kind(a, IsType, "premise 1")
    b = as_kind(b, IsType, "premise 2")
    same_ctx(a.ctx, c.ctx, "conclusion")
    extends(c.ctx, b.ctx, (a.ty,), "family")
    need(a.sort == "set" and b.sort == "set" and c.sort == "set",
         "dependent products form sets over sets")
    need(c.ty == S.MPi(a.ty, b.ty), "conclusion must form the product")


@shared("pi-i", STANDARD)
def r_pi_i(node):
    a, b = premises(node, 2)
    c = as_kind(node.conclusion, HasType, "conclusion")
    a = as_kind(a, IsType, "premise 1")
    b = as_kind(b, HasType, "premise 2")
    same_ctx(a.ctx, c.ctx, "conclusion")
    extends(c.ctx, b.ctx, (a.ty,), "body")
    need(c.term == S.MLam(b.term) and c.ty == S.MPi(a.ty, b.ty),
         "conclusion must introduce the function")


@shared("pi-e", STANDARD)
def r_pi_e(node):
    f, a = premises(node, 2)
    c = as_kind(node.conclusion, HasType, "conclusion")
    f = as_kind(f, HasType, "premise 1")
    a = as_kind(a, HasType, "premise 2")
    same_ctx(f.ctx, c.ctx, "conclusion")
    same_ctx(a.ctx, c.ctx, "conclusion")
    need(isinstance(f.ty, S.MPi), "head must inhabit a product")
    need(f.ty.dom == a.ty, "argument type mismatch",
         expected=f.ty.dom, found=a.ty)
    need(c.term == S.MAp(f.term, a.term), "subject mismatch")
    need(c.ty == subst(f.ty.cod, a.term), "conclusion type mismatch")


@shared("pi-c", STANDARD)
def r_pi_c(node):
    b, a = premises(node, 2)
    c = as_kind(node.conclusion, EqTerm, "conclusion")
    b = as_kind(b, HasType, "premise 1")
    a = as_kind(a, HasType, "premise 2")
    same_ctx(a.ctx, c.ctx, "conclusion")
    extends(c.ctx, b.ctx, (a.ty,), "body")
    need(c.lhs == S.MAp(S.MLam(b.term), a.term)
         and c.rhs == subst(b.term, a.term)
         and c.ty == subst(b.ty, a.term),
         "conclusion must be the beta equation")


@shared("plus-f", STANDARD)
def r_plus_f(node):
    a, b = premises(node, 2)
    c = as_kind(node.conclusion, IsType, "conclusion")
    a = as_kind(a, IsType, "premise 1")
    b = as_kind(b, IsType, "premise 2")
    same_ctx(a.ctx, c.ctx, "conclusion")
    same_ctx(b.ctx, c.ctx, "conclusion")
    need(a.sort == "set" and b.sort == "set" and c.sort == "set",
         "disjoint sums form sets over sets")
    need(c.ty == S.MPlus(a.ty, b.ty), "conclusion must form the sum")


def _plus_inj(node, ctor, which):
    a, b, t = premises(node, 3)
    c = as_kind(node.conclusion, HasType, "conclusion")
    a = as_kind(a, IsType, "premise 1")
    b = as_kind(b, IsType, "premise 2")
    t = as_kind(t, HasType, "premise 3")
    same_ctx(a.ctx, c.ctx, "conclusion")
    same_ctx(t.ctx, c.ctx, "conclusion")
    src = a.ty if which == "left" else b.ty
    need(t.ty == src, f"injected term must inhabit the {which} summand")
    need(c.term == ctor(t.term) and c.ty == S.MPlus(a.ty, b.ty),
         "conclusion must introduce the injection")


SHARED["plus-i-inl"] = (lambda n: _plus_inj(n, S.MInl, "left"), STANDARD)
SHARED["plus-i-inr"] = (lambda n: _plus_inj(n, S.MInr, "right"), STANDARD)


def _plus_elim_parts(c, d, m, l, r):
    need(isinstance(d.ty, S.MPlus), "scrutinee must inhabit a sum")
    a_ty, b_ty = d.ty.left, d.ty.right
    extends(c.ctx, m.ctx, (d.ty,), "motive")
    extends(c.ctx, l.ctx, (a_ty,), "left branch")
    extends(c.ctx, r.ctx, (b_ty,), "right branch")
    need(l.ty == inst1(m.ty, S.MInl(SVar(0))),
         "left branch must inhabit the motive at the left injection")
    need(r.ty == inst1(m.ty, S.MInr(SVar(0))),
         "right branch must inhabit the motive at the right injection")


@shared("plus-e", STANDARD)
def r_plus_e(node):
    d, m, l, r = premises(node, 4)
    c = as_kind(node.conclusion, HasType, "conclusion")
    d = as_kind(d, HasType, "premise 1")
    m = as_kind(m, IsType, "premise 2")
    l = as_kind(l, HasType, "premise 3")
    r = as_kind(r, HasType, "premise 4")
    same_ctx(d.ctx, c.ctx, "conclusion")
    _plus_elim_parts(c, d, m, l, r)
    need(c.term == S.ElPlus(d.term, l.term, r.term), "subject mismatch")
    need(c.ty == subst(m.ty, d.term), "conclusion type mismatch")


def _plus_comp(node, which):
    d, m, l, r = premises(node, 4)
    c = as_kind(node.conclusion, EqTerm, "conclusion")
    d = as_kind(d, HasType, "premise 1")
    m = as_kind(m, IsType, "premise 2")
    l = as_kind(l, HasType, "premise 3")
    r = as_kind(r, HasType, "premise 4")
    _plus_elim_parts(c, d, m, l, r)
    ctor = S.MInl if which == "left" else S.MInr
    branch = l if which == "left" else r
    need(isinstance(d.term, ctor), f"scrutinee must be the {which} injection")
    inner = d.term.arg
    need(c.lhs == S.ElPlus(d.term, l.term, r.term)
         and c.rhs == subst(branch.term, inner)
         and c.ty == subst(m.ty, d.term),
         "conclusion must be the computation equation")


SHARED["plus-c-inl"] = (lambda n: _plus_comp(n, "left"), STANDARD)
SHARED["plus-c-inr"] = (lambda n: _plus_comp(n, "right"), STANDARD)


# --- connective and quantifier formations ---------------------------------------

@shared("bot-f", STANDARD)
def r_bot_f(node):
    (w,) = premises(node, 1)
    c = as_kind(node.conclusion, IsType, "conclusion")
    w = as_kind(w, CtxWF, "premise")
    same_ctx(w.ctx, c.ctx, "conclusion")
    need(c.sort == "props" and c.ty == S.Bot(),
         "falsum is a small proposition")


def _conn_f(node, ctor):
    a, b = premises(node, 2)
    c = as_kind(node.conclusion, IsType, "conclusion")
    a = as_kind(a, IsType, "premise 1")
    b = as_kind(b, IsType, "premise 2")
    same_ctx(a.ctx, c.ctx, "conclusion")
    same_ctx(b.ctx, c.ctx, "conclusion")
    need(c.sort in PROPISH and a.sort == c.sort and b.sort == c.sort,
         "connective sorts must agree (prop or small prop)")
    need(c.ty == ctor(a.ty, b.ty), "conclusion former mismatch")


SHARED["or-f"] = (lambda n: _conn_f(n, S.MOr), STANDARD)
SHARED["and-f"] = (lambda n: _conn_f(n, S.MAnd), STANDARD)
SHARED["imp-f"] = (lambda n: _conn_f(n, S.MImp), STANDARD)


def _quant_f(node, ctor):
    a, p = premises(node, 2)
    c = as_kind(node.conclusion, IsType, "conclusion")
    a = as_kind(a, IsType, "premise 1")
    p = as_kind(p, IsType, "premise 2")
    same_ctx(a.ctx, c.ctx, "conclusion")
    extends(c.ctx, p.ctx, (a.ty,), "body")
    need(c.sort in PROPISH and p.sort == c.sort,
         "quantified proposition sort mismatch")
    if c.sort == "props":
        need(a.sort == "set", "small quantification ranges over a set",
             expected="set", found=a.sort)
    else:
        need(a.sort == "col", "quantification ranges over a collection")
    need(c.ty == ctor(a.ty, p.ty), "conclusion former mismatch")


SHARED["forall-f"] = (lambda n: _quant_f(n, S.MForall), STANDARD)
SHARED["exists-f"] = (lambda n: _quant_f(n, S.MExists), STANDARD)


# --- congruence for type formers ------------------------------------------------

def _cong2(ctor, sorts, dependent_second=False):
    def fn(node):
        a, b = premises(node, 2)
        c = as_kind(node.conclusion, EqType, "conclusion")
        a = as_kind(a, EqType, "premise 1")
        b = as_kind(b, EqType, "premise 2")
        same_ctx(a.ctx, c.ctx, "conclusion")
        if dependent_second:
            extends(c.ctx, b.ctx, (a.lhs,), "family")
        else:
            same_ctx(b.ctx, c.ctx, "conclusion")
        need(c.sort in sorts and b.sort == c.sort, "sorts must agree")
        if not dependent_second:
            need(a.sort == c.sort, "sorts must agree")
        need(c.lhs == ctor(a.lhs, b.lhs) and c.rhs == ctor(a.rhs, b.rhs),
             "conclusion must be the congruence")

    return fn


SHARED["sigma-eq"] = (_cong2(S.MSigma, ("set", "col"), True), STANDARD)
SHARED["pi-eq"] = (_cong2(S.MPi, ("set",), True), STANDARD)
SHARED["plus-eq"] = (_cong2(S.MPlus, ("set",)), STANDARD)
SHARED["or-eq"] = (_cong2(S.MOr, PROPISH), STANDARD)
SHARED["and-eq"] = (_cong2(S.MAnd, PROPISH), STANDARD)
SHARED["imp-eq"] = (_cong2(S.MImp, PROPISH), STANDARD)
SHARED["forall-eq"] = (_cong2(S.MForall, PROPISH, True), STANDARD)
SHARED["exists-eq"] = (_cong2(S.MExists, PROPISH, True), STANDARD)


@shared("list-eq", STANDARD)
def r_list_eq(node):
    (a,) = premises(node, 1)
    c = as_kind(node.conclusion, EqType, "conclusion")
    a = as_kind(a, EqType, "premise")
    same_ctx(a.ctx, c.ctx, "conclusion")
    need(a.sort == "set" and c.sort == "set", "list congruence is on sets")
    need(c.lhs == S.MList(a.lhs) and c.rhs == S.MList(a.rhs),
         "conclusion must be the congruence")


def register_shared(registry):
    for name, (fn, source) in SHARED.items():
        registry.rules[f"{registry.prefix}/{name}"] = fn
        registry.sources[f"{registry.prefix}/{name}"] = source
