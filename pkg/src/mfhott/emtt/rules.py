"""Rule table for the extensional level.

Propositions are proof-irrelevant: the unique proof term concludes every
propositional rule, reflection turns provable equality propositions into
judgemental equalities, quotients are effective, and the power-collection
of the singleton classifies small propositions up to equiprovability.
Set-level structure is shared with the intensional level; unlike there,
congruence under binders is available.
"""

from __future__ import annotations

from ..source import terms as S
from ..source.checker import (RuleError, RuleRegistry, as_kind, extends,
                              need, premises, same_ctx)
from ..source.judgements import (CtxWF, EqTerm, EqType, HasType, IsType,
                                 PROPISH)
from ..source.shared_rules import DISPLAYED, STANDARD, register_shared
from ..source.terms import (STerm, SVar, map_children, shift, subst,
                            subst_many)

R = RuleRegistry("emtt")
register_shared(R)
rule = R.rule

TRUE = S.TrueTm()


def swap01(t: STerm, depth: int = 0) -> STerm:
    """Exchange the two innermost binder variables."""
    if isinstance(t, SVar):
        if t.index == depth:
            return SVar(depth + 1)
        if t.index == depth + 1:
            return SVar(depth)
        return t
    return map_children(t, lambda c, nb: swap01(c, depth + nb))


def rel_diag(rel: STerm) -> STerm:
    """R(x, x) as a one-binder body, from the two-binder relation body."""
    return subst(rel, SVar(0), 0)


def equiv_refl_stmt(a: STerm, rel: STerm) -> STerm:
    return S.MForall(a, rel_diag(rel))


def equiv_sym_stmt(a: STerm, rel: STerm) -> STerm:
    return S.MForall(a, S.MForall(shift(a, 1), S.MImp(rel, swap01(rel))))


def equiv_trans_stmt(a: STerm, rel: STerm) -> STerm:
    rxy = shift(rel, 1, 0)
    ryz = shift(rel, 1, 2)
    rxz = shift(rel, 1, 1)
    return S.MForall(a, S.MForall(shift(a, 1), S.MForall(
        shift(a, 2), S.MImp(rxy, S.MImp(ryz, rxz)))))


def iff_prop(a: STerm, b: STerm) -> STerm:
    return S.MAnd(S.MImp(a, b), S.MImp(b, a))


# --- proof irrelevance ---------------------------------------------------------

@rule("prop-mono", DISPLAYED)
def _(node):
    phi, p, q = premises(node, 3)
    c = as_kind(node.conclusion, EqTerm, "conclusion")
    phi = as_kind(phi, IsType, "premise 1")
    p = as_kind(p, HasType, "premise 2")
    q = as_kind(q, HasType, "premise 3")
    same_ctx(phi.ctx, c.ctx, "conclusion")
    need(phi.sort in PROPISH, "subject must be a proposition")
    need(p.ty == phi.ty and q.ty == phi.ty, "proofs must prove the premise")
    need(c.lhs == p.term and c.rhs == q.term and c.ty == phi.ty,
         "conclusion must equate the two proofs")


@rule("prop-true", DISPLAYED)
def _(node):
    phi, p = premises(node, 2)
    c = as_kind(node.conclusion, HasType, "conclusion")
    phi = as_kind(phi, IsType, "premise 1")
    p = as_kind(p, HasType, "premise 2")
    same_ctx(phi.ctx, c.ctx, "conclusion")
    need(phi.sort in PROPISH, "subject must be a proposition")
    need(p.ty == phi.ty, "proof must prove the premise")
    need(c.term == TRUE and c.ty == phi.ty,
         "conclusion must be the canonical proof")


# --- congruence under binders (available at this level) -------------------------

@rule("xi", STANDARD)
def _(node):
    a, e = premises(node, 2)
    c = as_kind(node.conclusion, EqTerm, "conclusion")
    a = as_kind(a, IsType, "premise 1")
    e = as_kind(e, EqTerm, "premise 2")
    same_ctx(a.ctx, c.ctx, "conclusion")
    extends(c.ctx, e.ctx, (a.ty,), "body equality")
    need(c.lhs == S.MLam(e.lhs) and c.rhs == S.MLam(e.rhs)
         and c.ty == S.MPi(a.ty, e.ty),
         "conclusion must be the congruence under the binder")


@rule("ap-cong", STANDARD)
def _(node):
    f, a = premises(node, 2)
    c = as_kind(node.conclusion, EqTerm, "conclusion")
    f = as_kind(f, EqTerm, "premise 1")
    a = as_kind(a, EqTerm, "premise 2")
    same_ctx(f.ctx, c.ctx, "conclusion")
    same_ctx(a.ctx, c.ctx, "conclusion")
    need(isinstance(f.ty, S.MPi), "head equality must be at a product")
    need(f.ty.dom == a.ty, "argument equality at the wrong type")
    need(c.lhs == S.MAp(f.lhs, a.lhs) and c.rhs == S.MAp(f.rhs, a.rhs)
         and c.ty == subst(f.ty.cod, a.lhs),
         "conclusion must be the application congruence")


@rule("pair-cong", STANDARD)
def _(node):
    b, ea, eb = premises(node, 3)
    c = as_kind(node.conclusion, EqTerm, "conclusion")
    b = as_kind(b, IsType, "premise 1")
    ea = as_kind(ea, EqTerm, "premise 2")
    eb = as_kind(eb, EqTerm, "premise 3")
    same_ctx(ea.ctx, c.ctx, "conclusion")
    extends(c.ctx, b.ctx, (ea.ty,), "family")
    need(eb.ty == subst(b.ty, ea.lhs),
         "second equality must be at the instantiated family")
    need(c.lhs == S.MPair(ea.lhs, eb.lhs) and c.rhs == S.MPair(ea.rhs, eb.rhs)
         and c.ty == S.MSigma(ea.ty, b.ty),
         "conclusion must be the pair congruence")


@rule("qcls-cong", STANDARD)
def _(node):
    q, e = premises(node, 2)
    c = as_kind(node.conclusion, EqTerm, "conclusion")
    q = as_kind(q, IsType, "premise 1")
    e = as_kind(e, EqTerm, "premise 2")
    same_ctx(q.ctx, c.ctx, "conclusion")
    same_ctx(e.ctx, c.ctx, "conclusion")
    need(isinstance(q.ty, S.MQuot) and q.ty.base == e.ty,
         "equality must be at the quotient base")
    need(c.lhs == S.QClass(e.lhs) and c.rhs == S.QClass(e.rhs)
         and c.ty == q.ty,
         "conclusion must be the class congruence")


# --- extensional propositional equality ------------------------------------------

@rule("eq-f", STANDARD)
def _(node):
    a, l, r = premises(node, 3)
    c = as_kind(node.conclusion, IsType, "conclusion")
    a = as_kind(a, IsType, "premise 1")
    l = as_kind(l, HasType, "premise 2")
    r = as_kind(r, HasType, "premise 3")
    same_ctx(a.ctx, c.ctx, "conclusion")
    same_ctx(l.ctx, c.ctx, "conclusion")
    same_ctx(r.ctx, c.ctx, "conclusion")
    need(l.ty == a.ty and r.ty == a.ty, "endpoints must inhabit the type")
    need(c.ty == S.EqProp(a.ty, l.term, r.term),
         "conclusion must form the equality proposition")
    if c.sort == "props":
        need(a.sort == "set", "small equality requires a set")
    elif c.sort == "prop":
        need(a.sort == "col", "equality over a collection is a proposition")
    else:
        raise RuleError("equality is a proposition (small over sets)")


@rule("i-eq", DISPLAYED)
def _(node):
    (a,) = premises(node, 1)
    c = as_kind(node.conclusion, HasType, "conclusion")
    a = as_kind(a, HasType, "premise")
    same_ctx(a.ctx, c.ctx, "conclusion")
    need(c.term == TRUE and c.ty == S.EqProp(a.ty, a.term, a.term),
         "conclusion must be the canonical reflexivity proof")


@rule("e-eq", DISPLAYED)
def _(node):
    """Reflection: a provable equality proposition yields a judgemental
    equality.  The premise is an explicit node, so every use of reflection
    is visible in the derivation."""
    (p,) = premises(node, 1)
    c = as_kind(node.conclusion, EqTerm, "conclusion")
    p = as_kind(p, HasType, "premise")
    same_ctx(p.ctx, c.ctx, "conclusion")
    need(p.term == TRUE and isinstance(p.ty, S.EqProp),
         "premise must prove an equality proposition")
    need(c.lhs == p.ty.lhs and c.rhs == p.ty.rhs and c.ty == p.ty.ty,
         "conclusion must reflect the premise equality")


@rule("eq-eq", STANDARD)
def _(node):
    a, l, r = premises(node, 3)
    c = as_kind(node.conclusion, EqType, "conclusion")
    a = as_kind(a, EqType, "premise 1")
    l = as_kind(l, EqTerm, "premise 2")
    r = as_kind(r, EqTerm, "premise 3")
    same_ctx(a.ctx, c.ctx, "conclusion")
    same_ctx(l.ctx, c.ctx, "conclusion")
    same_ctx(r.ctx, c.ctx, "conclusion")
    need(l.ty == a.lhs and r.ty == a.lhs,
         "endpoint equalities must be at the left type")
    need(c.sort in PROPISH
         and c.lhs == S.EqProp(a.lhs, l.lhs, r.lhs)
         and c.rhs == S.EqProp(a.rhs, l.rhs, r.rhs),
         "conclusion must be the congruence")


# --- connectives (all proofs are the canonical one) -------------------------------

@rule("bot-e", STANDARD)
def _(node):
    a, m = premises(node, 2)
    c = as_kind(node.conclusion, HasType, "conclusion")
    a = as_kind(a, HasType, "premise 1")
    m = as_kind(m, IsType, "premise 2")
    same_ctx(a.ctx, c.ctx, "conclusion")
    same_ctx(m.ctx, c.ctx, "conclusion")
    need(a.term == TRUE and a.ty == S.Bot(), "premise must prove falsum")
    need(m.sort in PROPISH, "falsum eliminates toward propositions only")
    need(c.term == TRUE and c.ty == m.ty,
         "conclusion must be the canonical proof of the motive")


def _or_inj(node, which):
    a, b, t = premises(node, 3)
    c = as_kind(node.conclusion, HasType, "conclusion")
    a = as_kind(a, IsType, "premise 1")
    b = as_kind(b, IsType, "premise 2")
    t = as_kind(t, HasType, "premise 3")
    same_ctx(a.ctx, c.ctx, "conclusion")
    same_ctx(t.ctx, c.ctx, "conclusion")
    src = a.ty if which == "left" else b.ty
    need(t.term == TRUE and t.ty == src,
         f"premise must prove the {which} disjunct")
    need(c.term == TRUE and c.ty == S.MOr(a.ty, b.ty),
         "conclusion must introduce the disjunction")


@rule("or-i-l", STANDARD)
def _(node):
    _or_inj(node, "left")


@rule("or-i-r", STANDARD)
def _(node):
    _or_inj(node, "right")


@rule("or-e", STANDARD)
def _(node):
    d, m, l, r = premises(node, 4)
    c = as_kind(node.conclusion, HasType, "conclusion")
    d = as_kind(d, HasType, "premise 1")
    m = as_kind(m, IsType, "premise 2")
    l = as_kind(l, HasType, "premise 3")
    r = as_kind(r, HasType, "premise 4")
    same_ctx(d.ctx, c.ctx, "conclusion")
    same_ctx(m.ctx, c.ctx, "motive")
    need(d.term == TRUE and isinstance(d.ty, S.MOr),
         "premise must prove a disjunction")
    need(m.sort in PROPISH, "disjunction eliminates toward propositions")
    extends(c.ctx, l.ctx, (d.ty.left,), "left branch")
    extends(c.ctx, r.ctx, (d.ty.right,), "right branch")
    need(l.term == TRUE and l.ty == shift(m.ty, 1)
         and r.term == TRUE and r.ty == shift(m.ty, 1),
         "branches must prove the motive")
    need(c.term == TRUE and c.ty == m.ty,
         "conclusion must be the canonical proof of the motive")


@rule("and-i", STANDARD)
def _(node):
    a, b, ta, tb = premises(node, 4)
    c = as_kind(node.conclusion, HasType, "conclusion")
    a = as_kind(a, IsType, "premise 1")
    b = as_kind(b, IsType, "premise 2")
    ta = as_kind(ta, HasType, "premise 3")
    tb = as_kind(tb, HasType, "premise 4")
    same_ctx(ta.ctx, c.ctx, "conclusion")
    need(ta.term == TRUE and ta.ty == a.ty
         and tb.term == TRUE and tb.ty == b.ty,
         "premises must prove the conjuncts")
    need(c.term == TRUE and c.ty == S.MAnd(a.ty, b.ty),
         "conclusion must introduce the conjunction")


def _and_proj(node, side):
    a, b, d = premises(node, 3)
    c = as_kind(node.conclusion, HasType, "conclusion")
    a = as_kind(a, IsType, "premise 1")
    b = as_kind(b, IsType, "premise 2")
    d = as_kind(d, HasType, "premise 3")
    same_ctx(d.ctx, c.ctx, "conclusion")
    need(d.term == TRUE and d.ty == S.MAnd(a.ty, b.ty),
         "premise must prove the conjunction")
    want = a.ty if side == 1 else b.ty
    need(c.term == TRUE and c.ty == want,
         "conclusion must be the canonical proof of the conjunct")


@rule("and-e-1", STANDARD)
def _(node):
    _and_proj(node, 1)


@rule("and-e-2", STANDARD)
def _(node):
    _and_proj(node, 2)


@rule("imp-i", STANDARD)
def _(node):
    a, b = premises(node, 2)
    c = as_kind(node.conclusion, HasType, "conclusion")
    a = as_kind(a, IsType, "premise 1")
    b = as_kind(b, HasType, "premise 2")
    same_ctx(a.ctx, c.ctx, "conclusion")
    extends(c.ctx, b.ctx, (a.ty,), "hypothetical proof")
    need(b.term == TRUE, "hypothetical proof must be canonical")
    cod = _nodep(b.ty)
    need(c.term == TRUE and c.ty == S.MImp(a.ty, cod),
         "conclusion must introduce the implication")


def _nodep(t):
    from ..source.terms import SourceError
    try:
        return shift(t, -1)
    except SourceError:
        raise RuleError("implication conclusion may not use the hypothesis "
                        "variable") from None


@rule("imp-e", STANDARD)
def _(node):
    f, a = premises(node, 2)
    c = as_kind(node.conclusion, HasType, "conclusion")
    f = as_kind(f, HasType, "premise 1")
    a = as_kind(a, HasType, "premise 2")
    same_ctx(f.ctx, c.ctx, "conclusion")
    same_ctx(a.ctx, c.ctx, "conclusion")
    need(f.term == TRUE and isinstance(f.ty, S.MImp),
         "premise must prove an implication")
    need(a.term == TRUE and a.ty == f.ty.left,
         "premise must prove the antecedent")
    need(c.term == TRUE and c.ty == f.ty.right,
         "conclusion must be the canonical proof of the consequent")


@rule("forall-i", STANDARD)
def _(node):
    a, b = premises(node, 2)
    c = as_kind(node.conclusion, HasType, "conclusion")
    a = as_kind(a, IsType, "premise 1")
    b = as_kind(b, HasType, "premise 2")
    same_ctx(a.ctx, c.ctx, "conclusion")
    extends(c.ctx, b.ctx, (a.ty,), "generic proof")
    need(b.term == TRUE, "generic proof must be canonical")
    need(c.term == TRUE and c.ty == S.MForall(a.ty, b.ty),
         "conclusion must introduce the universal")


@rule("forall-e", STANDARD)
def _(node):
    f, a = premises(node, 2)
    c = as_kind(node.conclusion, HasType, "conclusion")
    f = as_kind(f, HasType, "premise 1")
    a = as_kind(a, HasType, "premise 2")
    same_ctx(f.ctx, c.ctx, "conclusion")
    same_ctx(a.ctx, c.ctx, "conclusion")
    need(f.term == TRUE and isinstance(f.ty, S.MForall),
         "premise must prove a universal")
    need(a.ty == f.ty.dom, "instance type mismatch")
    need(c.term == TRUE and c.ty == subst(f.ty.body, a.term),
         "conclusion must instantiate the universal")


@rule("exists-i", STANDARD)
def _(node):
    p, a, w = premises(node, 3)
    c = as_kind(node.conclusion, HasType, "conclusion")
    p = as_kind(p, IsType, "premise 1")
    a = as_kind(a, HasType, "premise 2")
    w = as_kind(w, HasType, "premise 3")
    same_ctx(a.ctx, c.ctx, "conclusion")
    extends(c.ctx, p.ctx, (a.ty,), "body")
    need(w.term == TRUE and w.ty == subst(p.ty, a.term),
         "premise must prove the instantiated body")
    need(c.term == TRUE and c.ty == S.MExists(a.ty, p.ty),
         "conclusion must introduce the existential")


@rule("exists-e", STANDARD)
def _(node):
    d, m, br = premises(node, 3)
    c = as_kind(node.conclusion, HasType, "conclusion")
    d = as_kind(d, HasType, "premise 1")
    m = as_kind(m, IsType, "premise 2")
    br = as_kind(br, HasType, "premise 3")
    same_ctx(d.ctx, c.ctx, "conclusion")
    same_ctx(m.ctx, c.ctx, "motive")
    need(d.term == TRUE and isinstance(d.ty, S.MExists),
         "premise must prove an existential")
    need(m.sort in PROPISH, "existentials eliminate toward propositions")
    extends(c.ctx, br.ctx, (d.ty.dom, d.ty.body), "branch")
    need(br.term == TRUE and br.ty == shift(m.ty, 2),
         "branch must prove the motive")
    need(c.term == TRUE and c.ty == m.ty,
         "conclusion must be the canonical proof of the motive")


# --- the power-collection of the singleton ----------------------------------------

@rule("p1-f", STANDARD)
def _(node):
    (w,) = premises(node, 1)
    c = as_kind(node.conclusion, IsType, "conclusion")
    w = as_kind(w, CtxWF, "premise")
    same_ctx(w.ctx, c.ctx, "conclusion")
    need(c.sort == "col" and c.ty == S.PowerOne(),
         "the power-collection of the singleton is a collection")


@rule("i-p", DISPLAYED)
def _(node):
    (a,) = premises(node, 1)
    c = as_kind(node.conclusion, HasType, "conclusion")
    a = as_kind(a, IsType, "premise")
    same_ctx(a.ctx, c.ctx, "conclusion")
    need(a.sort == "props", "classified propositions are small")
    need(c.term == S.PCls(a.ty) and c.ty == S.PowerOne(),
         "conclusion must classify the premise")


@rule("eq-p1", DISPLAYED)
def _(node):
    a, b, t = premises(node, 3)
    c = as_kind(node.conclusion, EqTerm, "conclusion")
    a = as_kind(a, IsType, "premise 1")
    b = as_kind(b, IsType, "premise 2")
    t = as_kind(t, HasType, "premise 3")
    same_ctx(a.ctx, c.ctx, "conclusion")
    same_ctx(t.ctx, c.ctx, "conclusion")
    need(a.sort == "props" and b.sort == "props",
         "classified propositions are small")
    need(t.term == TRUE and t.ty == iff_prop(a.ty, b.ty),
         "premise must prove the logical equivalence")
    need(c.lhs == S.PCls(a.ty) and c.rhs == S.PCls(b.ty)
         and c.ty == S.PowerOne(),
         "conclusion must equate the classifications")


@rule("eff-p1", DISPLAYED)
def _(node):
    a, b, e = premises(node, 3)
    c = as_kind(node.conclusion, HasType, "conclusion")
    a = as_kind(a, IsType, "premise 1")
    b = as_kind(b, IsType, "premise 2")
    e = as_kind(e, EqTerm, "premise 3")
    same_ctx(a.ctx, c.ctx, "conclusion")
    same_ctx(e.ctx, c.ctx, "conclusion")
    need(a.sort == "props" and b.sort == "props",
         "classified propositions are small")
    need(e.lhs == S.PCls(a.ty) and e.rhs == S.PCls(b.ty)
         and e.ty == S.PowerOne(),
         "premise must equate the classifications")
    need(c.term == TRUE and c.ty == iff_prop(a.ty, b.ty),
         "conclusion must prove the logical equivalence")


@rule("pfun-f", STANDARD)
def _(node):
    (a,) = premises(node, 1)
    c = as_kind(node.conclusion, IsType, "conclusion")
    a = as_kind(a, IsType, "premise")
    same_ctx(a.ctx, c.ctx, "conclusion")
    need(a.sort == "set", "power collections range over a set")
    need(c.sort == "col" and c.ty == S.PowerFun(a.ty),
         "conclusion must form the power collection")


@rule("pfun-i", STANDARD)
def _(node):
    a, p = premises(node, 2)
    c = as_kind(node.conclusion, HasType, "conclusion")
    a = as_kind(a, IsType, "premise 1")
    p = as_kind(p, HasType, "premise 2")
    same_ctx(a.ctx, c.ctx, "conclusion")
    extends(c.ctx, p.ctx, (a.ty,), "body")
    need(p.ty == S.PowerOne(), "body must be a classification")
    need(c.term == S.MLam(p.term) and c.ty == S.PowerFun(a.ty),
         "conclusion must introduce the subset function")


@rule("pfun-e", STANDARD)
def _(node):
    f, a = premises(node, 2)
    c = as_kind(node.conclusion, HasType, "conclusion")
    f = as_kind(f, HasType, "premise 1")
    a = as_kind(a, HasType, "premise 2")
    same_ctx(f.ctx, c.ctx, "conclusion")
    same_ctx(a.ctx, c.ctx, "conclusion")
    need(isinstance(f.ty, S.PowerFun), "head must be a subset function")
    need(f.ty.dom == a.ty, "argument type mismatch")
    need(c.term == S.MAp(f.term, a.term) and c.ty == S.PowerOne(),
         "conclusion must be a classification")


@rule("pfun-c", STANDARD)
def _(node):
    p, a = premises(node, 2)
    c = as_kind(node.conclusion, EqTerm, "conclusion")
    p = as_kind(p, HasType, "premise 1")
    a = as_kind(a, HasType, "premise 2")
    same_ctx(a.ctx, c.ctx, "conclusion")
    extends(c.ctx, p.ctx, (a.ty,), "body")
    need(c.lhs == S.MAp(S.MLam(p.term), a.term)
         and c.rhs == subst(p.term, a.term)
         and c.ty == S.PowerOne(),
         "conclusion must be the beta equation")


@rule("pfun-eq", STANDARD)
def _(node):
    (a,) = premises(node, 1)
    c = as_kind(node.conclusion, EqType, "conclusion")
    a = as_kind(a, EqType, "premise")
    same_ctx(a.ctx, c.ctx, "conclusion")
    need(a.sort == "set" and c.sort == "col",
         "power-collection congruence is over sets")
    need(c.lhs == S.PowerFun(a.lhs) and c.rhs == S.PowerFun(a.rhs),
         "conclusion must be the congruence")


# --- effective quotients ----------------------------------------------------------

def _quot_parts(c, a, r):
    need(a.sort == "set", "quotient base must be a set")
    need(r.sort == "props",
         "quotient relation must be a small proposition",
         expected="props", found=r.sort)
    extends(c.ctx, r.ctx, (a.ty, shift(a.ty, 1)), "relation")


@rule("quot-f", STANDARD)
def _(node):
    a, r, erefl, esym, etrans = premises(node, 5)
    c = as_kind(node.conclusion, IsType, "conclusion")
    a = as_kind(a, IsType, "premise 1")
    r = as_kind(r, IsType, "premise 2")
    erefl = as_kind(erefl, HasType, "premise 3")
    esym = as_kind(esym, HasType, "premise 4")
    etrans = as_kind(etrans, HasType, "premise 5")
    same_ctx(a.ctx, c.ctx, "conclusion")
    _quot_parts(c, a, r)
    need(erefl.term == TRUE and erefl.ty == equiv_refl_stmt(a.ty, r.ty),
         "missing reflexivity proof", expected=equiv_refl_stmt(a.ty, r.ty),
         found=erefl.ty)
    need(esym.term == TRUE and esym.ty == equiv_sym_stmt(a.ty, r.ty),
         "missing symmetry proof", expected=equiv_sym_stmt(a.ty, r.ty),
         found=esym.ty)
    need(etrans.term == TRUE and etrans.ty == equiv_trans_stmt(a.ty, r.ty),
         "missing transitivity proof",
         expected=equiv_trans_stmt(a.ty, r.ty), found=etrans.ty)
    need(c.sort == "set" and c.ty == S.MQuot(a.ty, r.ty),
         "conclusion must form the quotient set")


@rule("quot-i", STANDARD)
def _(node):
    a, q = premises(node, 2)
    c = as_kind(node.conclusion, HasType, "conclusion")
    a = as_kind(a, HasType, "premise 1")
    q = as_kind(q, IsType, "premise 2")
    same_ctx(a.ctx, c.ctx, "conclusion")
    same_ctx(q.ctx, c.ctx, "conclusion")
    need(isinstance(q.ty, S.MQuot) and q.ty.base == a.ty,
         "premise must inhabit the quotient base")
    need(c.term == S.QClass(a.term) and c.ty == q.ty,
         "conclusion must introduce the class")


def _quot_elim_parts(c, p, m, l, side):
    need(isinstance(p.ty, S.MQuot), "scrutinee must inhabit a quotient")
    base, rel = p.ty.base, p.ty.rel
    same_ctx(m.ctx, c.ctx, "motive")
    need(m.sort == "set", "quotient eliminates toward a set")
    extends(c.ctx, l.ctx, (base,), "branch")
    need(l.ty == shift(m.ty, 1), "branch must inhabit the motive")
    side = as_kind(side, EqTerm, "compatibility premise")
    extends(c.ctx, side.ctx, (base, shift(base, 1), rel), "compatibility")
    lx = shift(l.term, 2, 0)
    ly = subst(shift(l.term, 3, 1), SVar(1))
    need(side.lhs == lx and side.rhs == ly
         and side.ty == shift(m.ty, 3),
         "compatibility premise must equate the branch on related elements")
    return base, rel


@rule("quot-e", STANDARD)
def _(node):
    p, m, l, side = premises(node, 4)
    c = as_kind(node.conclusion, HasType, "conclusion")
    p = as_kind(p, HasType, "premise 1")
    m = as_kind(m, IsType, "premise 2")
    l = as_kind(l, HasType, "premise 3")
    same_ctx(p.ctx, c.ctx, "conclusion")
    _quot_elim_parts(c, p, m, l, side)
    need(c.term == S.ElQ(p.term, l.term), "subject mismatch")
    need(c.ty == m.ty, "conclusion type mismatch")


@rule("quot-c", STANDARD)
def _(node):
    p, m, l, side, a = premises(node, 5)
    c = as_kind(node.conclusion, EqTerm, "conclusion")
    p = as_kind(p, HasType, "premise 1")
    m = as_kind(m, IsType, "premise 2")
    l = as_kind(l, HasType, "premise 3")
    a = as_kind(a, HasType, "premise 5")
    same_ctx(a.ctx, c.ctx, "conclusion")
    base, _rel = _quot_elim_parts(c, p, m, l, side)
    need(a.ty == base and p.term == S.QClass(a.term),
         "scrutinee must be the class of the given element")
    need(c.lhs == S.ElQ(S.QClass(a.term), l.term)
         and c.rhs == subst(l.term, a.term)
         and c.ty == m.ty,
         "conclusion must be the computation equation")


@rule("eq-q", STANDARD)
def _(node):
    a, b, q, t = premises(node, 4)
    c = as_kind(node.conclusion, EqTerm, "conclusion")
    a = as_kind(a, HasType, "premise 1")
    b = as_kind(b, HasType, "premise 2")
    q = as_kind(q, IsType, "premise 3")
    t = as_kind(t, HasType, "premise 4")
    same_ctx(a.ctx, c.ctx, "conclusion")
    same_ctx(t.ctx, c.ctx, "conclusion")
    need(isinstance(q.ty, S.MQuot) and q.ty.base == a.ty == b.ty,
         "elements must inhabit the quotient base")
    need(t.term == TRUE
         and t.ty == subst_many(q.ty.rel, [a.term, b.term]),
         "premise must prove the elements related")
    need(c.lhs == S.QClass(a.term) and c.rhs == S.QClass(b.term)
         and c.ty == q.ty,
         "conclusion must equate the classes")


@rule("eff-q", DISPLAYED)
def _(node):
    a, b, e, q = premises(node, 4)
    c = as_kind(node.conclusion, HasType, "conclusion")
    a = as_kind(a, HasType, "premise 1")
    b = as_kind(b, HasType, "premise 2")
    e = as_kind(e, EqTerm, "premise 3")
    q = as_kind(q, IsType, "premise 4")
    same_ctx(a.ctx, c.ctx, "conclusion")
    same_ctx(e.ctx, c.ctx, "conclusion")
    need(isinstance(q.ty, S.MQuot) and q.ty.base == a.ty == b.ty,
         "elements must inhabit the quotient base")
    need(e.lhs == S.QClass(a.term) and e.rhs == S.QClass(b.term)
         and e.ty == q.ty,
         "premise must equate the classes")
    need(c.term == TRUE
         and c.ty == subst_many(q.ty.rel, [a.term, b.term]),
         "conclusion must prove the elements related")


@rule("quot-eq", STANDARD)
def _(node):
    a, r = premises(node, 2)
    c = as_kind(node.conclusion, EqType, "conclusion")
    a = as_kind(a, EqType, "premise 1")
    r = as_kind(r, EqType, "premise 2")
    same_ctx(a.ctx, c.ctx, "conclusion")
    need(a.sort == "set" and r.sort == "props" and c.sort == "set",
         "sorts must agree")
    extends(c.ctx, r.ctx, (a.lhs, shift(a.lhs, 1)), "relation")
    need(c.lhs == S.MQuot(a.lhs, r.lhs) and c.rhs == S.MQuot(a.rhs, r.rhs),
         "conclusion must be the congruence")


MANIFEST = dict(R.sources)
