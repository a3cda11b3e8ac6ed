"""Author the extensional-level corpus.

Covers every rule of the table, including the quotient effectiveness
suite over a three-element base collapsed by a two-block partition
(classes {0,1} and {2}), where the relation is definable as equality of
images under the collapsing map.
"""

from __future__ import annotations

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

from corpuslib import EmttBuilder
from mfhott.source import terms as S
from mfhott.source.terms import SVar, shift
from mfhott.emtt.rules import (equiv_refl_stmt, equiv_sym_stmt,
                               equiv_trans_stmt, iff_prop, swap01)

b = EmttBuilder()

OUT = Path(__file__).resolve().parents[1] / "corpus" / "emtt"

SCRIPTS = {}


def script(name):
    def deco(fn):
        SCRIPTS[name] = fn
        return fn

    return deco


def ctx0():
    return b.ctx_emp()


# --- the two- and three-element sets and the collapsing map -------------------

A2 = S.MPlus(S.N1(), S.N1())
A3 = S.MPlus(S.N1(), S.MPlus(S.N1(), S.N1()))

IN0 = S.MInl(S.MStar())
IN1 = S.MInr(S.MInl(S.MStar()))
IN2 = S.MInr(S.MInr(S.MStar()))

# collapse: 0,1 |-> inl star; 2 |-> inr star
F_BODY = S.ElPlus(SVar(0), S.MInl(S.MStar()),
                  S.ElPlus(SVar(0), S.MInl(S.MStar()),
                           S.MInr(S.MStar())))
F = S.MLam(F_BODY)

# the relation body over (x, y): Eq(A2, f x, f y)
REL = S.EqProp(A2, S.MAp(F, SVar(1)), S.MAp(F, SVar(0)))


def a2_f(wf):
    n1 = b.n1_f(wf)
    return b.plus_f(n1, n1)


def a3_f(wf):
    n1 = b.n1_f(wf)
    return b.plus_f(n1, b.plus_f(n1, n1))


def elem3(wf, which):
    """Typing derivation for one of the three elements."""
    n1 = b.n1_f(wf)
    star = b.n1_i(wf)
    inner = b.plus_f(n1, n1)
    if which == 0:
        return b.plus_i("l", n1, inner, star)
    if which == 1:
        return b.plus_i("r", n1, inner, b.plus_i("l", n1, n1, star))
    return b.plus_i("r", n1, inner, b.plus_i("r", n1, n1, star))


def _extend(wf, tyfn, name):
    return b.ctx_ext(wf, tyfn(wf), name)


def case_parts(base_wf):
    """Motive and branches for the collapse's case analysis, over the
    given base context (conclusion context of the elimination)."""
    m = a2_f(_extend(base_wf, a3_f, "z2"))
    wf_u = _extend(base_wf, (lambda w: b.n1_f(w)), "u")
    lbranch = b.plus_i("l", b.n1_f(wf_u), b.n1_f(wf_u), b.n1_i(wf_u))
    wf_v = _extend(base_wf, (lambda w: b.plus_f(b.n1_f(w), b.n1_f(w))),
                   "v")
    inner_m = a2_f(_extend(wf_v,
                           (lambda w: b.plus_f(b.n1_f(w), b.n1_f(w))),
                           "v2"))
    wf_vu = _extend(wf_v, (lambda w: b.n1_f(w)), "u2")
    inner_l = b.plus_i("l", b.n1_f(wf_vu), b.n1_f(wf_vu), b.n1_i(wf_vu))
    inner_r = b.plus_i("r", b.n1_f(wf_vu), b.n1_f(wf_vu), b.n1_i(wf_vu))
    rbranch = b.plus_e(b.var(wf_v, 0), inner_m, inner_l, inner_r)
    return m, lbranch, rbranch


def f_body_deriv(wf_z):
    m, lb, rb = case_parts(wf_z)
    return b.plus_e(b.var(wf_z, 0), m, lb, rb)


def f_deriv(wf):
    """The collapsing map as a typed lambda."""
    wf_z = _extend(wf, a3_f, "z")
    return b.pi_i(a3_f(wf), f_body_deriv(wf_z))


def f_applied_eq(wf, which):
    """Judgemental chain Ap(f, elem) = canonical image in A2."""
    elem = elem3(wf, which)
    wf_z = _extend(wf, a3_f, "z")
    body_t = f_body_deriv(wf_z)
    beta1 = b.pi_c(body_t, elem)           # Ap(lam, elem) = body[elem]
    m, lb, rb = case_parts(wf)
    if which == 0:
        d = b.plus_i("l", b.n1_f(wf), b.plus_f(b.n1_f(wf), b.n1_f(wf)),
                     b.n1_i(wf))
        beta2 = b.plus_c("l", d, m, lb, rb)
        return b.eq_trans(beta1, beta2)
    inner = (b.plus_i("l", b.n1_f(wf), b.n1_f(wf), b.n1_i(wf))
             if which == 1
             else b.plus_i("r", b.n1_f(wf), b.n1_f(wf), b.n1_i(wf)))
    d = b.plus_i("r", b.n1_f(wf), b.plus_f(b.n1_f(wf), b.n1_f(wf)), inner)
    beta2 = b.plus_c("r", d, m, lb, rb)
    chain = b.eq_trans(beta1, beta2)
    # the inner case analysis reduces once more
    wf_v = _extend(wf, (lambda w: b.plus_f(b.n1_f(w), b.n1_f(w))), "v")
    inner_m = a2_f(_extend(wf,
                           (lambda w: b.plus_f(b.n1_f(w), b.n1_f(w))),
                           "v2"))
    wf_u = _extend(wf, (lambda w: b.n1_f(w)), "u2")
    inner_l = b.plus_i("l", b.n1_f(wf_u), b.n1_f(wf_u), b.n1_i(wf_u))
    inner_r = b.plus_i("r", b.n1_f(wf_u), b.n1_f(wf_u), b.n1_i(wf_u))
    beta3 = b.plus_c("l" if which == 1 else "r", inner, inner_m,
                     inner_l, inner_r)
    return b.eq_trans(chain, beta3)


def rel_member(wf, i, j):
    """true in R(i, j) for partition-related i, j."""
    fi = f_applied_eq(wf, i)      # Ap(f, i) = image
    fj = f_applied_eq(wf, j)
    images_eq = b.eq_trans(fi, b.eq_sym(fj))   # Ap(f,i) = Ap(f,j)
    ap_i = b.pi_e(f_deriv(wf), elem3(wf, i))
    refl_true = b.i_eq(ap_i)      # true in Eq(A2, f i, f i)
    a2 = a2_f(wf)
    ty_eq = b.eq_eq(b.ty_eq_refl(a2), b.eq_refl(ap_i), images_eq)
    return b.conv(refl_true, ty_eq)


def rel_formation(wf):
    """R(x, y) as a small proposition over two base entries."""
    wf_xy = _extend(_extend(wf, a3_f, "x"), a3_f, "y")
    fx = b.pi_e(f_deriv(wf_xy), b.var(wf_xy, 1))
    fy = b.pi_e(f_deriv(wf_xy), b.var(wf_xy, 0))
    return b.eq_f("props", a2_f(wf_xy), fx, fy)


def equiv_refl_deriv(wf):
    wf_x = _extend(wf, a3_f, "x")
    fx = b.pi_e(f_deriv(wf_x), b.var(wf_x, 0))
    body = b.i_eq(fx)
    return b.forall_i(a3_f(wf), body)


def _r_formation_in(wf_outer):
    """Formation of R(x, y) instantiated at the two innermost entries."""
    fx = b.pi_e(f_deriv(wf_outer), b.var(wf_outer, 1))
    fy = b.pi_e(f_deriv(wf_outer), b.var(wf_outer, 0))
    return b.eq_f("props", a2_f(wf_outer), fx, fy)


def equiv_sym_deriv(wf):
    wf_x = _extend(wf, a3_f, "x")
    wf_xy = _extend(wf_x, a3_f, "y")
    r_form = _r_formation_in(wf_xy)
    wf_w = b.ctx_ext(wf_xy, r_form, "w")
    w_var = b.var(wf_w, 0)
    r_in_w = _r_formation_weakened(wf_w)
    true_r = b.prop_true(r_in_w, w_var)
    fx_eq_fy = b.e_eq(true_r)
    fy_eq_fx = b.eq_sym(fx_eq_fy)
    fy = b.pi_e(f_deriv(wf_w), b.var(wf_w, 1))
    # goal: true in Eq(A2, f y, f x)
    refl_fy = b.i_eq(fy)
    a2 = a2_f(wf_w)
    fy_refl_eq = b.eq_refl(fy)
    ty_eq = b.eq_eq(b.ty_eq_refl(a2), fy_refl_eq, fy_eq_fx)
    body = b.conv(refl_fy, ty_eq)
    imp = b.imp_i(r_form, body)
    inner = b.forall_i(a3_f(wf_x), imp)
    return b.forall_i(a3_f(wf), inner)


def _r_formation_weakened(wf_w):
    """R(x, y) formed inside the context that also has the hypothesis."""
    fx = b.pi_e(f_deriv(wf_w), b.var(wf_w, 2))
    fy = b.pi_e(f_deriv(wf_w), b.var(wf_w, 1))
    return b.eq_f("props", a2_f(wf_w), fx, fy)


def equiv_trans_deriv(wf):
    wf_x = _extend(wf, a3_f, "x")
    wf_xy = _extend(wf_x, a3_f, "y")
    wf_xyz = _extend(wf_xy, a3_f, "z")
    fx = b.pi_e(f_deriv(wf_xyz), b.var(wf_xyz, 2))
    fy = b.pi_e(f_deriv(wf_xyz), b.var(wf_xyz, 1))
    fz = b.pi_e(f_deriv(wf_xyz), b.var(wf_xyz, 0))
    rxy_form = b.eq_f("props", a2_f(wf_xyz), fx, fy)
    wf_w1 = b.ctx_ext(wf_xyz, rxy_form, "w1")
    fx1 = b.pi_e(f_deriv(wf_w1), b.var(wf_w1, 3))
    fy1 = b.pi_e(f_deriv(wf_w1), b.var(wf_w1, 2))
    fz1 = b.pi_e(f_deriv(wf_w1), b.var(wf_w1, 1))
    ryz_form = b.eq_f("props", a2_f(wf_w1), fy1, fz1)
    wf_w2 = b.ctx_ext(wf_w1, ryz_form, "w2")
    fx2 = b.pi_e(f_deriv(wf_w2), b.var(wf_w2, 4))
    fy2 = b.pi_e(f_deriv(wf_w2), b.var(wf_w2, 3))
    fz2 = b.pi_e(f_deriv(wf_w2), b.var(wf_w2, 2))
    rxy_in = b.eq_f("props", a2_f(wf_w2), fx2, fy2)
    ryz_in = b.eq_f("props", a2_f(wf_w2), fy2, fz2)
    e1 = b.e_eq(b.prop_true(rxy_in, b.var(wf_w2, 1)))
    e2 = b.e_eq(b.prop_true(ryz_in, b.var(wf_w2, 0)))
    fx_eq_fz = b.eq_trans(e1, e2)
    refl_fx = b.i_eq(fx2)
    ty_eq = b.eq_eq(b.ty_eq_refl(a2_f(wf_w2)), b.eq_refl(fx2), fx_eq_fz)
    body = b.conv(refl_fx, ty_eq)
    inner_imp = b.imp_i(ryz_form, body)
    outer_imp = b.imp_i(rxy_form, inner_imp)
    qz = b.forall_i(a3_f(wf_xy), outer_imp)
    qy = b.forall_i(a3_f(wf_x), qz)
    return b.forall_i(a3_f(wf), qy)


def quot_formation(wf):
    return b.quot_f(a3_f(wf), rel_formation(wf), equiv_refl_deriv(wf),
                    equiv_sym_deriv(wf), equiv_trans_deriv(wf))


def class_of(wf, which):
    return b.quot_i(elem3(wf, which), quot_formation(wf))


def effectiveness_pair(i, j):
    """true in R(i,j) obtained through the class equation."""
    wf = ctx0()
    related = rel_member(wf, i, j)
    cls_eq = b.eq_q(elem3(wf, i), elem3(wf, j), quot_formation(wf),
                    related)
    return b.eff_q(elem3(wf, i), elem3(wf, j), cls_eq, quot_formation(wf))


# --- small props used in connective derivations --------------------------------


def small_prop(wf):
    star = b.n1_i(wf)
    return b.eq_f("props", b.n1_f(wf), star, star), b.i_eq(star)


# --- the scripts ---------------------------------------------------------------


@script("reflexivity-canonical")
def _():
    return b.i_eq(b.n1_i(ctx0()))


@script("reflection")
def _():
    wf = ctx0()
    wf_xy = _extend(_extend(wf, (lambda w: b.n1_f(w)), "x"),
                    (lambda w: b.n1_f(w)), "y")
    eqf = b.eq_f("props", b.n1_f(wf_xy), b.var(wf_xy, 1), b.var(wf_xy, 0))
    wf_w = b.ctx_ext(wf_xy, eqf, "w")
    eq_in = b.eq_f("props", b.n1_f(wf_w), b.var(wf_w, 2), b.var(wf_w, 1))
    t = b.prop_true(eq_in, b.var(wf_w, 0))
    return b.e_eq(t)


@script("proof-irrelevance")
def _():
    wf = ctx0()
    p, _pf = small_prop(wf)
    wf_uv = b.ctx_ext(b.ctx_ext(ctx0(), p, "u"),
                      b.eq_f("props",
                             b.n1_f(b.ctx_ext(ctx0(), p, "u")),
                             b.n1_i(b.ctx_ext(ctx0(), p, "u")),
                             b.n1_i(b.ctx_ext(ctx0(), p, "u"))), "v")
    phi = b.eq_f("props", b.n1_f(wf_uv), b.n1_i(wf_uv), b.n1_i(wf_uv))
    return b.prop_mono(phi, b.var(wf_uv, 1), b.var(wf_uv, 0))


@script("canonical-proof")
def _():
    wf = ctx0()
    p, pf = small_prop(wf)
    return b.prop_true(p, pf)


@script("xi-congruence")
def _():
    wf = ctx0()
    n1 = b.n1_f(wf)
    wfx = _extend(wf, (lambda w: b.n1_f(w)), "x")
    m = b.n1_f(_extend(wfx, (lambda w: b.n1_f(w)), "z"))
    beta = b.n1_c(m, b.var(wfx, 0))   # El(star, x) = x in [x:N1]
    return b.xi(n1, beta)


@script("application-congruence")
def _():
    wf = ctx0()
    n1 = b.n1_f(wf)
    wfx = _extend(wf, (lambda w: b.n1_f(w)), "x")
    f = b.pi_i(n1, b.var(wfx, 0))
    ef = b.eq_refl(f)
    m = b.n1_f(_extend(wf, (lambda w: b.n1_f(w)), "z"))
    ea = b.n1_c(m, b.n1_i(wf))
    return b.ap_cong(ef, ea)


@script("pair-congruence")
def _():
    wf = ctx0()
    n1x = b.n1_f(_extend(wf, (lambda w: b.n1_f(w)), "x"))
    m = b.n1_f(_extend(wf, (lambda w: b.n1_f(w)), "z"))
    ea = b.n1_c(m, b.n1_i(wf))
    eb = b.eq_refl(b.n1_i(wf))
    return b.pair_cong(n1x, ea, eb)


@script("class-congruence")
def _():
    wf = ctx0()
    q = quot_formation(wf)
    m = a3_f(_extend(wf, (lambda w: b.n1_f(w)), "z"))
    # El(star, elem0) = elem0 gives equal base elements
    e = b.n1_c(m, elem3(wf, 0))
    return b.qcls_cong(q, e)


@script("equality-formation")
def _():
    wf = ctx0()
    star = b.n1_i(wf)
    return b.eq_f("props", b.n1_f(wf), star, star)


@script("equality-congruence")
def _():
    wf = ctx0()
    star = b.n1_i(wf)
    m = b.n1_f(_extend(wf, (lambda w: b.n1_f(w)), "z"))
    e = b.n1_c(m, star)
    return b.eq_eq(b.ty_eq_refl(b.n1_f(wf)), e, b.eq_refl(star))


@script("classify")
def _():
    wf = ctx0()
    p, _ = small_prop(wf)
    return b.i_p(p)


@script("classifier-formation")
def _():
    return b.p1_f(ctx0())


@script("classifications-of-equivalents")
def _():
    wf = ctx0()
    p, pf = small_prop(wf)
    # true in p <-> p
    wf_u = b.ctx_ext(wf, p, "u")
    p_in = b.eq_f("props", b.n1_f(wf_u), b.n1_i(wf_u), b.n1_i(wf_u))
    hyp = b.prop_true(p_in, b.var(wf_u, 0))
    one_dir = b.imp_i(p, hyp)
    both = b.and_i(b.conn_f("imp", p, p), b.conn_f("imp", p, p),
                   one_dir, one_dir)
    return b.eq_p1(p, p, both)


@script("classifications-effective")
def _():
    wf = ctx0()
    p, pf = small_prop(wf)
    wf_u = b.ctx_ext(wf, p, "u")
    p_in = b.eq_f("props", b.n1_f(wf_u), b.n1_i(wf_u), b.n1_i(wf_u))
    hyp = b.prop_true(p_in, b.var(wf_u, 0))
    one_dir = b.imp_i(p, hyp)
    both = b.and_i(b.conn_f("imp", p, p), b.conn_f("imp", p, p),
                   one_dir, one_dir)
    eq = b.eq_p1(p, p, both)
    return b.eff_p1(p, p, eq)


@script("subset-apply")
def _():
    wf = ctx0()
    n1 = b.n1_f(wf)
    p, _ = small_prop(wf)
    wfx = _extend(wf, (lambda w: b.n1_f(w)), "x")
    px, _ = small_prop(wfx)
    cls = b.i_p(px)
    fn = b.pfun_i(n1, cls)
    pff = b.pfun_f(n1)
    return b.pfun_e(fn, b.n1_i(wf))


@script("subset-compute")
def _():
    wf = ctx0()
    n1 = b.n1_f(wf)
    wfx = _extend(wf, (lambda w: b.n1_f(w)), "x")
    px, _ = small_prop(wfx)
    cls = b.i_p(px)
    return b.pfun_c(cls, b.n1_i(wf))


@script("subset-congruence")
def _():
    wf = ctx0()
    return b.pfun_eq(b.ty_eq_refl(b.n1_f(wf)))


@script("falsum-eliminates")
def _():
    wf = ctx0()
    wfw = b.ctx_ext(wf, b.bot_f(wf), "w")
    w = b.var(wfw, 0)
    bot_in = b.bot_f(wfw)
    t = b.prop_true(bot_in, w)
    m, _ = small_prop(wfw)
    return b.bot_e(t, m)


@script("disjunction")
def _():
    wf = ctx0()
    p, pf = small_prop(wf)
    t = b.prop_true(p, pf)
    left = b.or_i("l", p, b.bot_f(wf), t)
    orf = b.conn_f("or", p, b.bot_f(wf))
    wf_l = b.ctx_ext(wf, p, "u")
    p_l, _ = small_prop(wf_l)
    tl = b.prop_true(p_l, b.var(wf_l, 0))
    wf_r = b.ctx_ext(wf, b.bot_f(wf), "v")
    bot_r = b.bot_f(wf_r)
    p_r, _ = small_prop(wf_r)
    tr = b.bot_e(b.prop_true(bot_r, b.var(wf_r, 0)), p_r)
    return b.or_e(left, p, tl, tr)


@script("disjunction-right")
def _():
    wf = ctx0()
    p, pf = small_prop(wf)
    t = b.prop_true(p, pf)
    return b.or_i("r", p, p, t)


@script("conjunction")
def _():
    wf = ctx0()
    p, pf = small_prop(wf)
    t = b.prop_true(p, pf)
    both = b.and_i(p, p, t, t)
    first = b.and_e(1, p, p, both)
    return b.and_e(2, p, p, both)


@script("implication")
def _():
    wf = ctx0()
    p, pf = small_prop(wf)
    wf_u = b.ctx_ext(wf, p, "u")
    p_in = b.eq_f("props", b.n1_f(wf_u), b.n1_i(wf_u), b.n1_i(wf_u))
    hyp = b.prop_true(p_in, b.var(wf_u, 0))
    lam = b.imp_i(p, hyp)
    return b.imp_e(lam, b.prop_true(p, pf))


@script("universal")
def _():
    wf = ctx0()
    n1 = b.n1_f(wf)
    wfx = _extend(wf, (lambda w: b.n1_f(w)), "x")
    fx = b.i_eq(b.var(wfx, 0))
    lam = b.forall_i(n1, fx)
    return b.forall_e(lam, b.n1_i(wf))


@script("existential")
def _():
    wf = ctx0()
    n1 = b.n1_f(wf)
    star = b.n1_i(wf)
    wfx = _extend(wf, (lambda w: b.n1_f(w)), "x")
    fam = b.eq_f("props", b.n1_f(wfx), b.var(wfx, 0), b.var(wfx, 0))
    witness = b.i_eq(star)
    pair = b.exists_i(fam, star, witness)
    exf = b.quant_f("exists", n1, fam)
    m, _ = small_prop(wf)
    wf_xw = b.ctx_ext(wfx, fam, "w")
    m_in, _ = small_prop(wf_xw)
    branch = b.prop_true(m_in, b.i_eq(b.n1_i(wf_xw)))
    return b.exists_e(pair, m, branch)


# --- effectiveness suite --------------------------------------------------------


@script("quotient-formation")
def _():
    return quot_formation(ctx0())


@script("quotient-class")
def _():
    return class_of(ctx0(), 0)


@script("quotient-classes-equal")
def _():
    wf = ctx0()
    return b.eq_q(elem3(wf, 0), elem3(wf, 1), quot_formation(wf),
                  rel_member(wf, 0, 1))


@script("effectiveness-01")
def _():
    return effectiveness_pair(0, 1)


@script("effectiveness-10")
def _():
    return effectiveness_pair(1, 0)


@script("effectiveness-00")
def _():
    return effectiveness_pair(0, 0)


@script("effectiveness-11")
def _():
    return effectiveness_pair(1, 1)


@script("effectiveness-22")
def _():
    return effectiveness_pair(2, 2)


@script("quotient-eliminate")
def _():
    wf = ctx0()
    q = quot_formation(wf)
    cls = class_of(wf, 0)
    m = a2_f(wf)
    wfx = _extend(wf, a3_f, "x")
    branch = b.pi_e(f_deriv(wfx), b.var(wfx, 0))
    # compatibility: f x = f y from R(x, y) by reflection
    wf_xy = _extend(wfx, a3_f, "y")
    r_form = _r_formation_in(wf_xy)
    wf_w = b.ctx_ext(wf_xy, r_form, "w")
    r_in = _r_formation_weakened(wf_w)
    side = b.e_eq(b.prop_true(r_in, b.var(wf_w, 0)))
    return b.quot_e(cls, m, branch, side)


@script("quotient-compute")
def _():
    wf = ctx0()
    q = quot_formation(wf)
    cls = class_of(wf, 0)
    m = a2_f(wf)
    wfx = _extend(wf, a3_f, "x")
    branch = b.pi_e(f_deriv(wfx), b.var(wfx, 0))
    wf_xy = _extend(wfx, a3_f, "y")
    r_form = _r_formation_in(wf_xy)
    wf_w = b.ctx_ext(wf_xy, r_form, "w")
    r_in = _r_formation_weakened(wf_w)
    side = b.e_eq(b.prop_true(r_in, b.var(wf_w, 0)))
    return b.quot_c(cls, m, branch, side, elem3(wf, 0))


@script("quotient-congruence")
def _():
    wf = ctx0()
    a_eq = b.ty_eq_refl(a3_f(wf))
    wf_xy = _extend(_extend(wf, a3_f, "x"), a3_f, "y")
    r_eq = b.ty_eq_refl(_r_formation_in(wf_xy))
    return b.quot_eq(a_eq, r_eq)


# --- shared set-level rules at this level ----------------------------------------


@script("unit-compute")
def _():
    wf = ctx0()
    m = b.n1_f(_extend(wf, (lambda w: b.n1_f(w)), "z"))
    star = b.n1_i(wf)
    use = b.n1_e(star, m, star)
    return b.n1_c(m, star)


@script("pair-compute")
def _():
    wf = ctx0()
    n1 = b.n1_f(wf)
    wfx = _extend(wf, (lambda w: b.n1_f(w)), "x")
    n1x = b.n1_f(wfx)
    star = b.n1_i(wf)
    pair = b.sigma_i(n1x, star, star)
    sig = b.sigma_f(n1, n1x)
    wfz = _extend(wf, (lambda w: b.sigma_f(
        b.n1_f(w), b.n1_f(_extend(w, (lambda w2: b.n1_f(w2)), "x")))), "z")
    m = b.n1_f(wfz)
    wfxy = _extend(wfx, (lambda w: b.n1_f(w)), "y")
    branch = b.var(wfxy, 1)
    el = b.sigma_e(pair, m, branch)
    return b.sigma_c(m, branch, star, star)


@script("function-compute")
def _():
    wf = ctx0()
    n1 = b.n1_f(wf)
    wfx = _extend(wf, (lambda w: b.n1_f(w)), "x")
    body = b.var(wfx, 0)
    lam = b.pi_i(n1, body)
    fn_f = b.pi_f(n1, b.n1_f(wfx))
    apn = b.pi_e(lam, b.n1_i(wf))
    return b.pi_c(body, b.n1_i(wf))


@script("sum-compute")
def _():
    wf = ctx0()
    n1 = b.n1_f(wf)
    star = b.n1_i(wf)
    inl = b.plus_i("l", n1, n1, star)
    inr = b.plus_i("r", n1, n1, star)
    wfz = _extend(wf, (lambda w: b.plus_f(b.n1_f(w), b.n1_f(w))), "z")
    m = b.n1_f(wfz)
    wfx = _extend(wf, (lambda w: b.n1_f(w)), "x")
    br = b.var(wfx, 0)
    el = b.plus_e(inl, m, br, br)
    c1 = b.plus_c("l", inl, m, br, br)
    return b.plus_c("r", inr, m, br, br)


@script("list-compute")
def _():
    wf = ctx0()
    n1 = b.n1_f(wf)
    star = b.n1_i(wf)
    nil = b.list_i_nil(n1)
    one = b.list_i_cons(nil, star)
    lf = b.list_f(n1)
    wfz = _extend(wf, (lambda w: b.list_f(b.n1_f(w))), "z")
    m = b.n1_f(wfz)
    wstep = _extend(_extend(_extend(wf, (lambda w: b.list_f(b.n1_f(w))),
                                    "t"),
                            (lambda w: b.n1_f(w)), "h"),
                    (lambda w: b.n1_f(w)), "ih")
    step = b.var(wstep, 0)
    el = b.list_e(one, m, star, step)
    cn = b.list_c_nil(nil, m, star, step)
    return b.list_c_cons(one, m, star, step)


@script("empty-eliminates")
def _():
    wf = ctx0()
    wfz = _extend(wf, (lambda w: b.n0_f(w)), "z")
    z = b.var(wfz, 0)
    m = b.n1_f(_extend(wfz, (lambda w: b.n0_f(w)), "w"))
    return b.n0_e(z, m)


@script("subtyping-square")
def _():
    wf = ctx0()
    bot = b.bot_f(wf)
    as_set = b.sub("props-set", bot)
    as_col = b.sub("set-col", as_set)
    as_prop = b.sub("props-prop", bot)
    as_col2 = b.sub("prop-col", as_prop)
    wfx = _extend(wf, (lambda w: b.sub("set-col",
                                       b.sub("props-set", b.bot_f(w)))),
                  "x")
    inner = b.sub("prop-col", b.sub("props-prop", b.bot_f(wfx)))
    return b.sigma_f(as_col, inner)


@script("subtyping-eq")
def _():
    wf = ctx0()
    bot_eq = b.ty_eq_refl(b.bot_f(wf))
    e1 = b.eq_sub("props-set", bot_eq)
    e2 = b.eq_sub("set-col", e1)
    e3 = b.eq_sub("props-prop", bot_eq)
    e4 = b.eq_sub("prop-col", e3)
    return b.ty_eq_trans(e2, b.ty_eq_sym(e4))


@script("conversion")
def _():
    wf = ctx0()
    p, pf = small_prop(wf)
    eq = b.eq_eq(b.ty_eq_refl(b.n1_f(wf)), b.eq_refl(b.n1_i(wf)),
                 b.eq_refl(b.n1_i(wf)))
    return b.conv(pf, eq)


@script("conversion-eq")
def _():
    wf = ctx0()
    p, pf = small_prop(wf)
    refl = b.eq_refl(pf)
    eq = b.eq_eq(b.ty_eq_refl(b.n1_f(wf)), b.eq_refl(b.n1_i(wf)),
                 b.eq_refl(b.n1_i(wf)))
    return b.conv_eq(refl, eq)


@script("equality-structure")
def _():
    wf = ctx0()
    m = b.n1_f(_extend(wf, (lambda w: b.n1_f(w)), "z"))
    star = b.n1_i(wf)
    e = b.n1_c(m, star)
    back = b.eq_sym(e)
    return b.eq_trans(e, back)


@script("type-equality-structure")
def _():
    wf = ctx0()
    p, _ = small_prop(wf)
    e = b.ty_eq_refl(p)
    return b.ty_eq_trans(e, b.ty_eq_sym(e))


@script("congruence-sigma-pi")
def _():
    wf = ctx0()
    n1_eq = b.ty_eq_refl(b.n1_f(wf))
    wfx = _extend(wf, (lambda w: b.n1_f(w)), "x")
    inner_eq = b.ty_eq_refl(b.n1_f(wfx))
    sig = b.cong2("sigma-eq", S.MSigma, n1_eq, inner_eq)
    return b.cong2("pi-eq", S.MPi, n1_eq, inner_eq)


@script("congruence-sum-list")
def _():
    wf = ctx0()
    n1_eq = b.ty_eq_refl(b.n1_f(wf))
    pl = b.cong2("plus-eq", S.MPlus, n1_eq, n1_eq, sort="set")
    return b.list_eq(pl)


@script("congruence-sigma")
def _():
    wf = ctx0()
    n1_eq = b.ty_eq_refl(b.n1_f(wf))
    wfx = _extend(wf, (lambda w: b.n1_f(w)), "x")
    inner_eq = b.ty_eq_refl(b.n1_f(wfx))
    return b.cong2("sigma-eq", S.MSigma, n1_eq, inner_eq)


@script("congruence-connectives")
def _():
    wf = ctx0()
    p, pf = small_prop(wf)
    wf_u = b.ctx_ext(wf, p, "u")
    p_in = b.eq_f("props", b.n1_f(wf_u), b.n1_i(wf_u), b.n1_i(wf_u))
    hyp = b.prop_true(p_in, b.var(wf_u, 0))
    one_dir = b.imp_i(p, hyp)
    both = b.and_i(b.conn_f("imp", p, p), b.conn_f("imp", p, p),
                   one_dir, one_dir)
    # a propositional equality between two presentations of p
    star = b.n1_i(wf)
    m = b.n1_f(_extend(wf, (lambda w: b.n1_f(w)), "z"))
    term_eq = b.n1_c(m, star)   # El(star,star) = star
    p2 = b.eq_f("props", b.n1_f(wf), S_el_star(b), star)
    pe = b.eq_eq(b.ty_eq_refl(b.n1_f(wf)), term_eq, b.eq_refl(star))
    e_and = b.cong2("and-eq", S.MAnd, pe, pe)
    e_or = b.cong2("or-eq", S.MOr, pe, pe)
    e_imp = b.cong2("imp-eq", S.MImp, pe, pe)
    return b.cong2("and-eq", S.MAnd, e_or, e_imp)


def S_el_star(b):
    wf = ctx0()
    m = b.n1_f(_extend(wf, (lambda w: b.n1_f(w)), "z"))
    return b.n1_e(b.n1_i(wf), m, b.n1_i(wf))


@script("congruence-quantifiers")
def _():
    wf = ctx0()
    n1_eq = b.ty_eq_refl(b.n1_f(wf))
    wfx = _extend(wf, (lambda w: b.n1_f(w)), "x")
    star_x = b.n1_i(wfx)
    m = b.n1_f(_extend(wfx, (lambda w: b.n1_f(w)), "z"))
    term_eq = b.n1_c(m, star_x)
    inner = b.eq_eq(b.ty_eq_refl(b.n1_f(wfx)), term_eq,
                    b.eq_refl(star_x))
    fa = b.cong2("forall-eq", S.MForall, n1_eq, inner)
    ex = b.cong2("exists-eq", S.MExists, n1_eq, inner)
    return b.cong2("and-eq", S.MAnd, fa, ex)


@script("coerce-along-equality")
def _():
    # reflection feeds a type equality which coerces a canonical proof
    wf = ctx0()
    star = b.n1_i(wf)
    m = b.n1_f(_extend(wf, (lambda w: b.n1_f(w)), "z"))
    el = b.n1_e(star, m, star)
    beta = b.n1_c(m, star)             # El(star,star) = star
    refl_el = b.i_eq(el)               # true in Eq(N1, El, El)
    ty_eq = b.eq_eq(b.ty_eq_refl(b.n1_f(wf)), b.eq_refl(el), beta)
    return b.conv(refl_el, ty_eq)      # true in Eq(N1, El, star)


@script("conjunction-first")
def _():
    wf = ctx0()
    p, pf = small_prop(wf)
    t = b.prop_true(p, pf)
    both = b.and_i(p, p, t, t)
    return b.and_e(1, p, p, both)


@script("conjunction-formation")
def _():
    wf = ctx0()
    p, _ = small_prop(wf)
    return b.conn_f("and", p, p)


@script("disjunction-formation")
def _():
    wf = ctx0()
    p, _ = small_prop(wf)
    return b.conn_f("or", p, b.bot_f(wf))


@script("quantifier-formations")
def _():
    wf = ctx0()
    n1 = b.n1_f(wf)
    wfx = _extend(wf, (lambda w: b.n1_f(w)), "x")
    fam = b.eq_f("props", b.n1_f(wfx), b.var(wfx, 0), b.var(wfx, 0))
    fa = b.quant_f("forall", n1, fam)
    ex = b.quant_f("exists", n1, fam)
    return b.conn_f("and", fa, ex)


@script("subset-formation")
def _():
    return b.pfun_f(b.n1_f(ctx0()))


@script("function-formation")
def _():
    wf = ctx0()
    n1 = b.n1_f(wf)
    wfx = _extend(wf, (lambda w: b.n1_f(w)), "x")
    return b.pi_f(n1, b.n1_f(wfx))


@script("pair-introduce")
def _():
    wf = ctx0()
    star = b.n1_i(wf)
    wfx = _extend(wf, (lambda w: b.n1_f(w)), "x")
    n1x = b.n1_f(wfx)
    return b.sigma_i(n1x, star, star)


@script("pair-project")
def _():
    wf = ctx0()
    star = b.n1_i(wf)
    wfx = _extend(wf, (lambda w: b.n1_f(w)), "x")
    n1x = b.n1_f(wfx)
    pair = b.sigma_i(n1x, star, star)
    wfz = _extend(wf, (lambda w: b.sigma_f(
        b.n1_f(w), b.n1_f(_extend(w, (lambda w2: b.n1_f(w2)), "x")))), "z")
    m = b.n1_f(wfz)
    wfxy = _extend(wfx, (lambda w: b.n1_f(w)), "y")
    return b.sigma_e(pair, m, b.var(wfxy, 1))


@script("list-fold")
def _():
    wf = ctx0()
    n1 = b.n1_f(wf)
    star = b.n1_i(wf)
    one = b.list_i_cons(b.list_i_nil(n1), star)
    wfz = _extend(wf, (lambda w: b.list_f(b.n1_f(w))), "z")
    m = b.n1_f(wfz)
    wstep = _extend(_extend(_extend(wf, (lambda w: b.list_f(b.n1_f(w))),
                                    "t"),
                            (lambda w: b.n1_f(w)), "h"),
                    (lambda w: b.n1_f(w)), "ih")
    return b.list_e(one, m, star, b.var(wstep, 0))


@script("list-nil-law")
def _():
    wf = ctx0()
    n1 = b.n1_f(wf)
    star = b.n1_i(wf)
    nil = b.list_i_nil(n1)
    wfz = _extend(wf, (lambda w: b.list_f(b.n1_f(w))), "z")
    m = b.n1_f(wfz)
    wstep = _extend(_extend(_extend(wf, (lambda w: b.list_f(b.n1_f(w))),
                                    "t"),
                            (lambda w: b.n1_f(w)), "h"),
                    (lambda w: b.n1_f(w)), "ih")
    return b.list_c_nil(nil, m, star, b.var(wstep, 0))


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    from mfhott.emtt import check_emtt, rules_used, RULES
    used = set()
    for name, fn in sorted(SCRIPTS.items()):
        node = fn()
        check_emtt(node)
        used |= rules_used(node)
        b.write(OUT / f"{name}.emtt", node)
    print(f"wrote {len(SCRIPTS)} scripts; {len(used)} rules used")
    missing = sorted(set(RULES.rules) - used)
    if missing:
        print("MISSING coverage:", missing)
    return missing


if __name__ == "__main__":
    main()
