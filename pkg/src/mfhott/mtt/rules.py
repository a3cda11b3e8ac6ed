"""Rule table for the intensional level.

Shares the structural, set-former, formation and congruence schemas with
the extensional level.  Specific to this level: the explicit substitution
rule ``repl`` as the only term congruence (no congruence under binders is
derivable), the intensional propositional equality whose eliminator acts
toward propositions only, proof-term formers for every connective, the
collection of small propositions with its encodings, and the decoding
operator with its equations.
"""

from __future__ import annotations

from ..source import terms as S
from ..source.checker import (RuleError, RuleRegistry, as_kind, extends,
                              inst1, need, premises, same_ctx)
from ..source.judgements import (CtxWF, EqTerm, EqType, HasType, IsType,
                                 PROPISH)
from ..source.shared_rules import DISPLAYED, STANDARD, register_shared
from ..source.terms import SVar, shift, subst, subst_many

R = RuleRegistry("mtt")
register_shared(R)
rule = R.rule


@rule("repl", DISPLAYED)
def _(node):
    """Explicit substitution of equal terms into a term template; the only
    congruence rule for terms."""
    need(len(node.premises) >= 1, "needs the template premise")
    js = [p.conclusion for p in node.premises]
    tmpl = as_kind(js[0], HasType, "premise 1")
    eqs = [as_kind(j, EqTerm, f"premise {i + 2}")
           for i, j in enumerate(js[1:])]
    c = as_kind(node.conclusion, EqTerm, "conclusion")
    n = len(eqs)
    base = c.ctx
    need(len(tmpl.ctx) == len(base) + n,
         f"template context must extend the conclusion context by {n}")
    need(tmpl.ctx.types[:len(base)] == base.types,
         "template context must extend the conclusion context")
    tele = tmpl.ctx.types[len(base):]
    lhs_vals = [e.lhs for e in eqs]
    rhs_vals = [e.rhs for e in eqs]
    for i, e in enumerate(eqs):
        same_ctx(e.ctx, base, f"equality premise {i + 1}")
        expected_ty = subst_many(tele[i], lhs_vals[:i])
        need(e.ty == expected_ty,
             f"equality premise {i + 1} is at the wrong type",
             expected=expected_ty, found=e.ty)
    need(c.lhs == subst_many(tmpl.term, lhs_vals),
         "conclusion left side must be the template at the left terms")
    need(c.rhs == subst_many(tmpl.term, rhs_vals),
         "conclusion right side must be the template at the right terms")
    need(c.ty == subst_many(tmpl.ty, lhs_vals),
         "conclusion type must be the template type at the left terms")


# --- intensional propositional equality ---------------------------------------

@rule("id-f", STANDARD)
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
    need(c.ty == S.MId(a.ty, l.term, r.term),
         "conclusion must form the equality proposition")
    if c.sort == "props":
        need(a.sort == "set", "small equality requires a set",
             expected="set", found=a.sort)
    elif c.sort == "prop":
        need(a.sort == "col", "equality over a collection is a proposition")
    else:
        raise RuleError("equality is a proposition (small over sets)")


@rule("id-i", STANDARD)
def _(node):
    (a,) = premises(node, 1)
    c = as_kind(node.conclusion, HasType, "conclusion")
    a = as_kind(a, HasType, "premise")
    same_ctx(a.ctx, c.ctx, "conclusion")
    need(c.term == S.IdIntro(a.term)
         and c.ty == S.MId(a.ty, a.term, a.term),
         "conclusion must be the canonical equality proof")


@rule("id-e", DISPLAYED)
def _(node):
    """Eliminates only toward propositions, with a two-place motive."""
    p, m, d = premises(node, 3)
    c = as_kind(node.conclusion, HasType, "conclusion")
    p = as_kind(p, HasType, "premise 1")
    m = as_kind(m, IsType, "premise 2")
    d = as_kind(d, HasType, "premise 3")
    same_ctx(p.ctx, c.ctx, "conclusion")
    need(isinstance(p.ty, S.MId), "scrutinee must be an equality proof")
    a_ty, lhs, rhs = p.ty.ty, p.ty.lhs, p.ty.rhs
    need(m.sort in PROPISH,
         "the equality eliminator targets propositions only",
         expected="prop or props", found=m.sort)
    extends(c.ctx, m.ctx, (a_ty, shift(a_ty, 1)), "motive")
    extends(c.ctx, d.ctx, (a_ty,), "diagonal branch")
    diag = subst(m.ty, SVar(0), 0)
    need(d.ty == diag, "branch must inhabit the diagonal of the motive",
         expected=diag, found=d.ty)
    need(c.term == S.ElId(p.term, d.term), "subject mismatch")
    need(c.ty == subst_many(m.ty, [lhs, rhs]), "conclusion type mismatch")


@rule("id-c", STANDARD)
def _(node):
    m, d, a = premises(node, 3)
    c = as_kind(node.conclusion, EqTerm, "conclusion")
    m = as_kind(m, IsType, "premise 1")
    d = as_kind(d, HasType, "premise 2")
    a = as_kind(a, HasType, "premise 3")
    same_ctx(a.ctx, c.ctx, "conclusion")
    need(m.sort in PROPISH, "the equality eliminator targets propositions")
    need(c.lhs == S.ElId(S.IdIntro(a.term), d.term)
         and c.rhs == subst(d.term, a.term)
         and c.ty == subst_many(m.ty, [a.term, a.term]),
         "conclusion must be the computation equation")


@rule("id-eq", STANDARD)
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
         and c.lhs == S.MId(a.lhs, l.lhs, r.lhs)
         and c.rhs == S.MId(a.rhs, l.rhs, r.rhs),
         "conclusion must be the congruence")


# --- proof-term formers for the connectives -------------------------------------

@rule("bot-e", STANDARD)
def _(node):
    a, m = premises(node, 2)
    c = as_kind(node.conclusion, HasType, "conclusion")
    a = as_kind(a, HasType, "premise 1")
    m = as_kind(m, IsType, "premise 2")
    same_ctx(a.ctx, c.ctx, "conclusion")
    same_ctx(m.ctx, c.ctx, "conclusion")
    need(a.ty == S.Bot(), "scrutinee must prove falsum")
    need(m.sort in PROPISH, "falsum eliminates toward propositions only")
    need(c.term == S.R0(a.term) and c.ty == m.ty,
         "conclusion must be the falsum eliminator at the motive")


def _or_inj(node, ctor, which):
    a, b, t = premises(node, 3)
    c = as_kind(node.conclusion, HasType, "conclusion")
    a = as_kind(a, IsType, "premise 1")
    b = as_kind(b, IsType, "premise 2")
    t = as_kind(t, HasType, "premise 3")
    same_ctx(a.ctx, c.ctx, "conclusion")
    same_ctx(t.ctx, c.ctx, "conclusion")
    src = a.ty if which == "left" else b.ty
    need(t.ty == src, f"premise must prove the {which} disjunct")
    need(c.term == ctor(t.term) and c.ty == S.MOr(a.ty, b.ty),
         "conclusion must introduce the disjunction")


@rule("or-i-l", STANDARD)
def _(node):
    _or_inj(node, S.InlOr, "left")


@rule("or-i-r", STANDARD)
def _(node):
    _or_inj(node, S.InrOr, "right")


def _or_elim_parts(c, d, m, l, r):
    need(isinstance(d.ty, S.MOr), "scrutinee must prove a disjunction")
    p_ty, q_ty = d.ty.left, d.ty.right
    same_ctx(m.ctx, c.ctx, "motive")
    need(m.sort in PROPISH, "disjunction eliminates toward propositions")
    extends(c.ctx, l.ctx, (p_ty,), "left branch")
    extends(c.ctx, r.ctx, (q_ty,), "right branch")
    need(l.ty == shift(m.ty, 1) and r.ty == shift(m.ty, 1),
         "branches must prove the motive")


@rule("or-e", STANDARD)
def _(node):
    d, m, l, r = premises(node, 4)
    c = as_kind(node.conclusion, HasType, "conclusion")
    d = as_kind(d, HasType, "premise 1")
    m = as_kind(m, IsType, "premise 2")
    l = as_kind(l, HasType, "premise 3")
    r = as_kind(r, HasType, "premise 4")
    same_ctx(d.ctx, c.ctx, "conclusion")
    _or_elim_parts(c, d, m, l, r)
    need(c.term == S.ElOr(d.term, l.term, r.term) and c.ty == m.ty,
         "conclusion must eliminate toward the motive")


def _or_comp(node, which):
    d, m, l, r = premises(node, 4)
    c = as_kind(node.conclusion, EqTerm, "conclusion")
    d = as_kind(d, HasType, "premise 1")
    m = as_kind(m, IsType, "premise 2")
    l = as_kind(l, HasType, "premise 3")
    r = as_kind(r, HasType, "premise 4")
    _or_elim_parts(c, d, m, l, r)
    ctor = S.InlOr if which == "left" else S.InrOr
    branch = l if which == "left" else r
    need(isinstance(d.term, ctor), f"scrutinee must be the {which} injection")
    need(c.lhs == S.ElOr(d.term, l.term, r.term)
         and c.rhs == subst(branch.term, d.term.arg) and c.ty == m.ty,
         "conclusion must be the computation equation")


@rule("or-c-l", STANDARD)
def _(node):
    _or_comp(node, "left")


@rule("or-c-r", STANDARD)
def _(node):
    _or_comp(node, "right")


@rule("and-i", STANDARD)
def _(node):
    a, b, ta, tb = premises(node, 4)
    c = as_kind(node.conclusion, HasType, "conclusion")
    a = as_kind(a, IsType, "premise 1")
    b = as_kind(b, IsType, "premise 2")
    ta = as_kind(ta, HasType, "premise 3")
    tb = as_kind(tb, HasType, "premise 4")
    same_ctx(ta.ctx, c.ctx, "conclusion")
    need(ta.ty == a.ty and tb.ty == b.ty, "premises must prove the conjuncts")
    need(c.term == S.PairAnd(ta.term, tb.term)
         and c.ty == S.MAnd(a.ty, b.ty),
         "conclusion must introduce the conjunction")


def _and_proj(node, ctor, side):
    (d,) = premises(node, 1)
    c = as_kind(node.conclusion, HasType, "conclusion")
    d = as_kind(d, HasType, "premise")
    same_ctx(d.ctx, c.ctx, "conclusion")
    need(isinstance(d.ty, S.MAnd), "premise must prove a conjunction")
    want = d.ty.left if side == 1 else d.ty.right
    need(c.term == ctor(d.term) and c.ty == want,
         "conclusion must be the projection")


@rule("and-e-1", STANDARD)
def _(node):
    _and_proj(node, S.Proj1, 1)


@rule("and-e-2", STANDARD)
def _(node):
    _and_proj(node, S.Proj2, 2)


def _and_comp(node, ctor, side):
    ta, tb = premises(node, 2)
    c = as_kind(node.conclusion, EqTerm, "conclusion")
    ta = as_kind(ta, HasType, "premise 1")
    tb = as_kind(tb, HasType, "premise 2")
    same_ctx(ta.ctx, c.ctx, "conclusion")
    pair = S.PairAnd(ta.term, tb.term)
    keep = ta if side == 1 else tb
    need(c.lhs == ctor(pair) and c.rhs == keep.term and c.ty == keep.ty,
         "conclusion must be the projection computation equation")


@rule("and-c-1", STANDARD)
def _(node):
    _and_comp(node, S.Proj1, 1)


@rule("and-c-2", STANDARD)
def _(node):
    _and_comp(node, S.Proj2, 2)


def _shiftdown(t):
    # implication codomains do not bind; reject accidental dependency
    from ..source.terms import SourceError
    try:
        return shift(t, -1)
    except SourceError:
        raise RuleError("implication body type may not use the hypothesis "
                        "variable") from None


@rule("imp-i", STANDARD)
def _(node):
    a, b = premises(node, 2)
    c = as_kind(node.conclusion, HasType, "conclusion")
    a = as_kind(a, IsType, "premise 1")
    b = as_kind(b, HasType, "premise 2")
    same_ctx(a.ctx, c.ctx, "conclusion")
    extends(c.ctx, b.ctx, (a.ty,), "body")
    need(c.term == S.LamImp(b.term)
         and c.ty == S.MImp(a.ty, _shiftdown(b.ty)),
         "conclusion must introduce the implication")


@rule("imp-e", STANDARD)
def _(node):
    f, a = premises(node, 2)
    c = as_kind(node.conclusion, HasType, "conclusion")
    f = as_kind(f, HasType, "premise 1")
    a = as_kind(a, HasType, "premise 2")
    same_ctx(f.ctx, c.ctx, "conclusion")
    same_ctx(a.ctx, c.ctx, "conclusion")
    need(isinstance(f.ty, S.MImp), "head must prove an implication")
    need(f.ty.left == a.ty, "argument proposition mismatch")
    need(c.term == S.ApImp(f.term, a.term) and c.ty == f.ty.right,
         "conclusion must be the application")


@rule("imp-c", STANDARD)
def _(node):
    b, a = premises(node, 2)
    c = as_kind(node.conclusion, EqTerm, "conclusion")
    b = as_kind(b, HasType, "premise 1")
    a = as_kind(a, HasType, "premise 2")
    same_ctx(a.ctx, c.ctx, "conclusion")
    extends(c.ctx, b.ctx, (a.ty,), "body")
    need(c.lhs == S.ApImp(S.LamImp(b.term), a.term)
         and c.rhs == subst(b.term, a.term)
         and c.ty == _shiftdown(b.ty),
         "conclusion must be the beta equation")


@rule("forall-i", STANDARD)
def _(node):
    a, b = premises(node, 2)
    c = as_kind(node.conclusion, HasType, "conclusion")
    a = as_kind(a, IsType, "premise 1")
    b = as_kind(b, HasType, "premise 2")
    same_ctx(a.ctx, c.ctx, "conclusion")
    extends(c.ctx, b.ctx, (a.ty,), "body")
    need(c.term == S.LamAll(b.term) and c.ty == S.MForall(a.ty, b.ty),
         "conclusion must introduce the universal")


@rule("forall-e", STANDARD)
def _(node):
    f, a = premises(node, 2)
    c = as_kind(node.conclusion, HasType, "conclusion")
    f = as_kind(f, HasType, "premise 1")
    a = as_kind(a, HasType, "premise 2")
    same_ctx(f.ctx, c.ctx, "conclusion")
    same_ctx(a.ctx, c.ctx, "conclusion")
    need(isinstance(f.ty, S.MForall), "head must prove a universal")
    need(f.ty.dom == a.ty, "instance type mismatch")
    need(c.term == S.ApAll(f.term, a.term)
         and c.ty == subst(f.ty.body, a.term),
         "conclusion must instantiate the universal")


@rule("forall-c", STANDARD)
def _(node):
    b, a = premises(node, 2)
    c = as_kind(node.conclusion, EqTerm, "conclusion")
    b = as_kind(b, HasType, "premise 1")
    a = as_kind(a, HasType, "premise 2")
    same_ctx(a.ctx, c.ctx, "conclusion")
    extends(c.ctx, b.ctx, (a.ty,), "body")
    need(c.lhs == S.ApAll(S.LamAll(b.term), a.term)
         and c.rhs == subst(b.term, a.term)
         and c.ty == subst(b.ty, a.term),
         "conclusion must be the beta equation")


@rule("exists-i", STANDARD)
def _(node):
    p, a, w = premises(node, 3)
    c = as_kind(node.conclusion, HasType, "conclusion")
    p = as_kind(p, IsType, "premise 1")
    a = as_kind(a, HasType, "premise 2")
    w = as_kind(w, HasType, "premise 3")
    same_ctx(a.ctx, c.ctx, "conclusion")
    extends(c.ctx, p.ctx, (a.ty,), "body")
    need(w.ty == subst(p.ty, a.term),
         "witness proof must prove the instantiated body")
    need(c.term == S.PairEx(a.term, w.term)
         and c.ty == S.MExists(a.ty, p.ty),
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
    need(isinstance(d.ty, S.MExists), "scrutinee must prove an existential")
    need(m.sort in PROPISH, "existentials eliminate toward propositions")
    extends(c.ctx, br.ctx, (d.ty.dom, d.ty.body), "branch")
    need(br.ty == shift(m.ty, 2), "branch must prove the motive")
    need(c.term == S.ElEx(d.term, br.term) and c.ty == m.ty,
         "conclusion must eliminate toward the motive")


@rule("exists-c", STANDARD)
def _(node):
    m, br, a, w = premises(node, 4)
    c = as_kind(node.conclusion, EqTerm, "conclusion")
    m = as_kind(m, IsType, "premise 1")
    br = as_kind(br, HasType, "premise 2")
    a = as_kind(a, HasType, "premise 3")
    w = as_kind(w, HasType, "premise 4")
    same_ctx(m.ctx, c.ctx, "conclusion")
    pair = S.PairEx(a.term, w.term)
    need(c.lhs == S.ElEx(pair, br.term)
         and c.rhs == subst_many(br.term, [a.term, w.term])
         and c.ty == m.ty,
         "conclusion must be the computation equation")


# --- the collection of small propositions --------------------------------------

@rule("props-f", DISPLAYED)
def _(node):
    (w,) = premises(node, 1)
    c = as_kind(node.conclusion, IsType, "conclusion")
    w = as_kind(w, CtxWF, "premise")
    same_ctx(w.ctx, c.ctx, "conclusion")
    need(c.sort == "col" and c.ty == S.PropColl(),
         "the collection of small propositions is a collection")


@rule("propfun-f", DISPLAYED)
def _(node):
    (a,) = premises(node, 1)
    c = as_kind(node.conclusion, IsType, "conclusion")
    a = as_kind(a, IsType, "premise")
    same_ctx(a.ctx, c.ctx, "conclusion")
    need(a.sort == "set", "propositional functions range over a set")
    need(c.sort == "col" and c.ty == S.PropFun(a.ty),
         "conclusion must form the function collection")


@rule("propfun-i", STANDARD)
def _(node):
    a, p = premises(node, 2)
    c = as_kind(node.conclusion, HasType, "conclusion")
    a = as_kind(a, IsType, "premise 1")
    p = as_kind(p, HasType, "premise 2")
    same_ctx(a.ctx, c.ctx, "conclusion")
    extends(c.ctx, p.ctx, (a.ty,), "body")
    need(p.ty == S.PropColl(), "body must be a small-proposition code")
    need(c.term == S.MLam(p.term) and c.ty == S.PropFun(a.ty),
         "conclusion must introduce the propositional function")


@rule("propfun-e", STANDARD)
def _(node):
    f, a = premises(node, 2)
    c = as_kind(node.conclusion, HasType, "conclusion")
    f = as_kind(f, HasType, "premise 1")
    a = as_kind(a, HasType, "premise 2")
    same_ctx(f.ctx, c.ctx, "conclusion")
    same_ctx(a.ctx, c.ctx, "conclusion")
    need(isinstance(f.ty, S.PropFun), "head must be a propositional function")
    need(f.ty.dom == a.ty, "argument type mismatch")
    need(c.term == S.MAp(f.term, a.term) and c.ty == S.PropColl(),
         "conclusion must be a small-proposition code")


@rule("propfun-c", STANDARD)
def _(node):
    p, a = premises(node, 2)
    c = as_kind(node.conclusion, EqTerm, "conclusion")
    p = as_kind(p, HasType, "premise 1")
    a = as_kind(a, HasType, "premise 2")
    same_ctx(a.ctx, c.ctx, "conclusion")
    extends(c.ctx, p.ctx, (a.ty,), "body")
    need(c.lhs == S.MAp(S.MLam(p.term), a.term)
         and c.rhs == subst(p.term, a.term)
         and c.ty == S.PropColl(),
         "conclusion must be the beta equation")


@rule("propfun-eq", STANDARD)
def _(node):
    (a,) = premises(node, 1)
    c = as_kind(node.conclusion, EqType, "conclusion")
    a = as_kind(a, EqType, "premise")
    same_ctx(a.ctx, c.ctx, "conclusion")
    need(a.sort == "set" and c.sort == "col",
         "propositional-function congruence is over sets")
    need(c.lhs == S.PropFun(a.lhs) and c.rhs == S.PropFun(a.rhs),
         "conclusion must be the congruence")


# --- encodings of small propositions -------------------------------------------

def _code_axiom(name, ctor):
    @rule(name, DISPLAYED)
    def _(node):
        (w,) = premises(node, 1)
        c = as_kind(node.conclusion, HasType, "conclusion")
        w = as_kind(w, CtxWF, "premise")
        same_ctx(w.ctx, c.ctx, "conclusion")
        need(c.term == ctor() and c.ty == S.PropColl(),
             "conclusion must introduce the code")


_code_axiom("pr-bot", S.BotHat)
_code_axiom("pr-top", S.TopHat)


def _code_bin(name, ctor):
    @rule(name, DISPLAYED)
    def _(node):
        p, q = premises(node, 2)
        c = as_kind(node.conclusion, HasType, "conclusion")
        p = as_kind(p, HasType, "premise 1")
        q = as_kind(q, HasType, "premise 2")
        same_ctx(p.ctx, c.ctx, "conclusion")
        same_ctx(q.ctx, c.ctx, "conclusion")
        need(p.ty == S.PropColl() and q.ty == S.PropColl(),
             "premises must be codes")
        need(c.term == ctor(p.term, q.term) and c.ty == S.PropColl(),
             "conclusion must combine the codes")


_code_bin("pr-or", S.OrHat)
_code_bin("pr-imp", S.ImpHat)
_code_bin("pr-and", S.AndHat)


def _code_quant(name, ctor):
    @rule(name, DISPLAYED)
    def _(node):
        p, a = premises(node, 2)
        c = as_kind(node.conclusion, HasType, "conclusion")
        p = as_kind(p, HasType, "premise 1")
        a = as_kind(a, IsType, "premise 2")
        same_ctx(a.ctx, c.ctx, "conclusion")
        extends(c.ctx, p.ctx, (a.ty,), "body")
        need(a.sort == "set", "quantified codes range over a set")
        need(p.ty == S.PropColl(), "body must be a code")
        need(c.term == ctor(a.ty, p.term) and c.ty == S.PropColl(),
             "conclusion must quantify the code")


_code_quant("pr-forall", S.ForallHat)
_code_quant("pr-exists", S.ExistsHat)


@rule("pr-id", DISPLAYED)
def _(node):
    a, l, r = premises(node, 3)
    c = as_kind(node.conclusion, HasType, "conclusion")
    a = as_kind(a, IsType, "premise 1")
    l = as_kind(l, HasType, "premise 2")
    r = as_kind(r, HasType, "premise 3")
    same_ctx(a.ctx, c.ctx, "conclusion")
    need(a.sort == "set", "equality codes are over sets")
    need(l.ty == a.ty and r.ty == a.ty, "endpoints must inhabit the set")
    need(c.term == S.IdHat(a.ty, l.term, r.term) and c.ty == S.PropColl(),
         "conclusion must introduce the equality code")


@rule("tau", DISPLAYED)
def _(node):
    (p,) = premises(node, 1)
    c = as_kind(node.conclusion, IsType, "conclusion")
    p = as_kind(p, HasType, "premise")
    same_ctx(p.ctx, c.ctx, "conclusion")
    need(p.ty == S.PropColl(), "premise must be a code")
    need(c.sort == "props" and c.ty == S.Tau(p.term),
         "conclusion must decode the premise")


@rule("eq-tau", STANDARD)
def _(node):
    (e,) = premises(node, 1)
    c = as_kind(node.conclusion, EqType, "conclusion")
    e = as_kind(e, EqTerm, "premise")
    same_ctx(e.ctx, c.ctx, "conclusion")
    need(e.ty == S.PropColl(), "premise must equate codes")
    need(c.sort == "props" and c.lhs == S.Tau(e.lhs)
         and c.rhs == S.Tau(e.rhs),
         "conclusion must decode both sides")


@rule("eq-pr-bot", DISPLAYED)
def _(node):
    (w,) = premises(node, 1)
    c = as_kind(node.conclusion, EqType, "conclusion")
    w = as_kind(w, CtxWF, "premise")
    same_ctx(w.ctx, c.ctx, "conclusion")
    need(c.sort == "props" and c.lhs == S.Tau(S.BotHat())
         and c.rhs == S.Bot(),
         "conclusion must decode the falsum code")


def _eq_code_bin(name, code_ctor, prop_ctor):
    @rule(name, DISPLAYED)
    def _(node):
        p, q = premises(node, 2)
        c = as_kind(node.conclusion, EqType, "conclusion")
        p = as_kind(p, HasType, "premise 1")
        q = as_kind(q, HasType, "premise 2")
        same_ctx(p.ctx, c.ctx, "conclusion")
        need(p.ty == S.PropColl() and q.ty == S.PropColl(),
             "premises must be codes")
        need(c.sort == "props"
             and c.lhs == S.Tau(code_ctor(p.term, q.term))
             and c.rhs == prop_ctor(S.Tau(p.term), S.Tau(q.term)),
             "conclusion must be the decoding equation")


_eq_code_bin("eq-pr-or", S.OrHat, S.MOr)
_eq_code_bin("eq-pr-imp", S.ImpHat, S.MImp)
_eq_code_bin("eq-pr-and", S.AndHat, S.MAnd)


def _eq_code_quant(name, code_ctor, prop_ctor):
    @rule(name, DISPLAYED)
    def _(node):
        p, a = premises(node, 2)
        c = as_kind(node.conclusion, EqType, "conclusion")
        p = as_kind(p, HasType, "premise 1")
        a = as_kind(a, IsType, "premise 2")
        same_ctx(a.ctx, c.ctx, "conclusion")
        extends(c.ctx, p.ctx, (a.ty,), "body")
        need(a.sort == "set" and p.ty == S.PropColl(),
             "quantified decoding needs a set and a code body")
        need(c.sort == "props"
             and c.lhs == S.Tau(code_ctor(a.ty, p.term))
             and c.rhs == prop_ctor(a.ty, S.Tau(p.term)),
             "conclusion must be the decoding equation")


_eq_code_quant("eq-pr-forall", S.ForallHat, S.MForall)
_eq_code_quant("eq-pr-exists", S.ExistsHat, S.MExists)


@rule("eq-pr-id", DISPLAYED)
def _(node):
    a, l, r = premises(node, 3)
    c = as_kind(node.conclusion, EqType, "conclusion")
    a = as_kind(a, IsType, "premise 1")
    l = as_kind(l, HasType, "premise 2")
    r = as_kind(r, HasType, "premise 3")
    same_ctx(a.ctx, c.ctx, "conclusion")
    need(a.sort == "set" and l.ty == a.ty and r.ty == a.ty,
         "equality decoding is over a set")
    need(c.sort == "props"
         and c.lhs == S.Tau(S.IdHat(a.ty, l.term, r.term))
         and c.rhs == S.MId(a.ty, l.term, r.term),
         "conclusion must be the decoding equation")


MANIFEST = dict(R.sources)
