"""The fixed library of h-level witnesses and truncated-logic combinators.

Everything here is built once, registered in an axiom/definition table and
kernel-verified.  Combinators with short first-principles proofs are defined
as actual terms (the path algebra is derived from the identity eliminator
alone); the set-closure witnesses imported from the literature are axiom
constants, as are function/propositional extensionality and the
constructors of the two higher inductive types (the truncation path
constructor, quotient glue, and prop-valued quotient induction).
Translations refer to every entry by name, so equal source judgements get
syntactically equal witnesses.
"""

from __future__ import annotations

from dataclasses import dataclass

from .kernel import (App, AxiomTable, Const, EMPTY, HContext, HTerm, Id,
                     IndId, IndList, IndOne, IndQuot, IndSigma, IndSum,
                     IndTrunc, IndZero, Inl, Inr, KernelError, Lam, ListT,
                     Nat, One,
                     Pair, Pi, QMap, Quot, Refl, Sigma, Star, Sum, Trunc,
                     TruncIn, Univ, Var, Zero, app, arrow, bind, check, shift,
                     check_is_type, conv, lam, lams, mk_equiv_rel,
                     mk_isprop, mk_isset, pi, prop_u0, sigma, times)

U0 = Univ(0)
U1 = Univ(1)


class StdlibError(KernelError):
    """A combinator failed its type check or one of its computation laws."""


@dataclass(frozen=True)
class StdCombinator:
    name: str
    term: HTerm
    ty: HTerm


def fam(a: HTerm) -> HTerm:
    """Type of type families over ``a``."""
    return arrow(a, U1)


def dep_pi(a: HTerm, b: HTerm) -> HTerm:
    """Pi over ``a`` with the family ``b`` applied to the bound variable."""
    return pi(a, lambda x: App(b, x))


def dep_sigma(a: HTerm, b: HTerm) -> HTerm:
    return sigma(a, lambda x: App(b, x))


def c(name: str) -> Const:
    return Const(name)


def or_type(a: HTerm, b: HTerm) -> HTerm:
    return Trunc(Sum(a, b))


def ex_type(a: HTerm, b: HTerm) -> HTerm:
    """Existential over ``a`` with family ``b``."""
    return Trunc(dep_sigma(a, b))


# ---------------------------------------------------------------------------
# axioms


def _axioms(table: AxiomTable) -> None:
    table.declare(
        "funext",
        pi(U1, lambda a:
           pi(fam(a), lambda b:
              pi(dep_pi(a, b), lambda f:
                 pi(dep_pi(a, b), lambda g:
                    arrow(pi(a, lambda x:
                             Id(App(b, x), App(f, x), App(g, x))),
                          Id(dep_pi(a, b), f, g)))))))
    # truncation path constructor
    table.declare("sq", pi(U1, lambda a: mk_isprop(Trunc(a))))
    # quotient glue: related representatives have equal classes
    table.declare(
        "qglue",
        pi(U0, lambda a:
           pi(arrow(a, arrow(a, U0)), lambda r:
              pi(mk_equiv_rel(a, r), lambda w:
                 pi(a, lambda x:
                    pi(a, lambda y:
                       arrow(app(r, x, y),
                             Id(Quot(a, r, w), QMap(x), QMap(y)))))))))
    # quotient induction into prop-valued families
    table.declare(
        "qind_prop",
        pi(U0, lambda a:
           pi(arrow(a, arrow(a, U0)), lambda r:
              pi(mk_equiv_rel(a, r), lambda w:
                 pi(fam(Quot(a, r, w)), lambda m:
                    arrow(pi(Quot(a, r, w), lambda z: mk_isprop(App(m, z))),
                          arrow(pi(a, lambda x: App(m, QMap(x))),
                                pi(Quot(a, r, w), lambda z:
                                   App(m, z)))))))))
    # set-closure witnesses imported from the literature
    table.declare("s_nat", mk_isset(Nat()))
    table.declare(
        "s_pi",
        pi(U1, lambda a:
           pi(fam(a), lambda b:
              arrow(pi(a, lambda x: mk_isset(App(b, x))),
                    mk_isset(dep_pi(a, b))))))
    table.declare(
        "s_sigma",
        pi(U1, lambda a:
           pi(fam(a), lambda b:
              arrow(mk_isset(a),
                    arrow(pi(a, lambda x: mk_isset(App(b, x))),
                          mk_isset(dep_sigma(a, b)))))))
    table.declare(
        "s_sum",
        pi(U1, lambda a:
           pi(U1, lambda b:
              arrow(mk_isset(a),
                    arrow(mk_isset(b), mk_isset(Sum(a, b)))))))
    table.declare(
        "s_list",
        pi(U1, lambda a: arrow(mk_isset(a), mk_isset(ListT(a)))))
    table.declare(
        "s_quot",
        pi(U0, lambda a:
           pi(arrow(a, arrow(a, U0)), lambda r:
              arrow(mk_isset(a),
                    arrow(pi(a, lambda x:
                             pi(a, lambda y: mk_isprop(app(r, x, y)))),
                          pi(mk_equiv_rel(a, r), lambda w:
                             mk_isset(Quot(a, r, w))))))))
    table.declare("s_prop0", mk_isset(prop_u0()))


# ---------------------------------------------------------------------------
# defined helpers (registered in the table but not part of the inventory)


def _defn(table, name, ty, body):
    check_is_type(table, EMPTY, ty)
    check(table, EMPTY, body, ty)
    table.define(name, ty, body)


def sfst(a, b, z):
    """First projection out of the dependent pair type over family b."""
    return IndSigma(z, bind(1, lambda _: a), bind(2, lambda x, y: x))


def ssnd(a, b, z):
    return IndSigma(z,
                    bind(1, lambda w: App(b, sfst(a, b, w))),
                    bind(2, lambda x, y: y))


def _helpers(table: AxiomTable) -> None:
    _defn(table, "prop_fst",
          arrow(prop_u0(), U0),
          lam(lambda p: IndSigma(p, U0, bind(2, lambda x, w: x))))
    _defn(table, "prop_snd",
          pi(prop_u0(), lambda p: mk_isprop(App(c("prop_fst"), p))),
          lam(lambda p: IndSigma(
              p,
              bind(1, lambda z: mk_isprop(App(c("prop_fst"), z))),
              bind(2, lambda x, w: w))))

    # propositional extensionality: logically equivalent proposition pairs
    # are identical in the prop classifier (stated via prop_fst)
    table.declare(
        "propext",
        pi(prop_u0(), lambda p:
           pi(prop_u0(), lambda q:
              arrow(times(arrow(App(c("prop_fst"), p), App(c("prop_fst"), q)),
                          arrow(App(c("prop_fst"), q), App(c("prop_fst"), p))),
                    Id(prop_u0(), p, q)))))

    _defn(table, "transport",
          pi(U1, lambda a:
             pi(fam(a), lambda b:
                pi(a, lambda x:
                   pi(a, lambda y:
                      arrow(Id(a, x, y),
                            arrow(App(b, x), App(b, y))))))),
          lams(5, lambda a, b, x, y, p: IndId(
              p,
              bind(3, lambda u, v, q: arrow(App(b, u), App(b, v))),
              bind(1, lambda u: Lam(Var(0))))))

    _defn(table, "path_sym",
          pi(U1, lambda a:
             pi(a, lambda x:
                pi(a, lambda y:
                   arrow(Id(a, x, y), Id(a, y, x))))),
          lams(4, lambda a, x, y, p: IndId(
              p,
              bind(3, lambda u, v, q: Id(a, v, u)),
              bind(1, lambda u: Refl(u)))))

    # composition by induction on the second path, so trans(p, refl) == p
    # holds definitionally; the coercion proof below relies on that
    _defn(table, "path_trans",
          pi(U1, lambda a:
             pi(a, lambda x:
                pi(a, lambda y:
                   pi(a, lambda z:
                      arrow(Id(a, x, y),
                            arrow(Id(a, y, z), Id(a, x, z))))))),
          lams(6, lambda a, x, y, z, p, q: App(
              IndId(q,
                    bind(3, lambda u, v, _:
                         arrow(Id(a, x, u), Id(a, x, v))),
                    bind(1, lambda u: Lam(Var(0)))),
              p)))

    _defn(table, "ap",
          pi(U1, lambda a:
             pi(U1, lambda b:
                pi(arrow(a, b), lambda f:
                   pi(a, lambda x:
                      pi(a, lambda y:
                         arrow(Id(a, x, y),
                               Id(b, App(f, x), App(f, y)))))))),
          lams(6, lambda a, b, f, x, y, p: IndId(
              p,
              bind(3, lambda u, v, q: Id(b, App(f, u), App(f, v))),
              bind(1, lambda u: Refl(App(f, u))))))

    _defn(table, "sigma_eta",
          pi(U1, lambda a:
             pi(fam(a), lambda b:
                pi(dep_sigma(a, b), lambda z:
                   Id(dep_sigma(a, b),
                      Pair(sfst(a, b, z), ssnd(a, b, z)), z)))),
          lams(3, lambda a, b, z: IndSigma(
              z,
              bind(1, lambda w: Id(dep_sigma(a, b),
                                   Pair(sfst(a, b, w), ssnd(a, b, w)), w)),
              bind(2, lambda x, y: Refl(Pair(x, y))))))

    _defn(table, "pair_path",
          pi(U1, lambda a:
             pi(U1, lambda b:
                pi(a, lambda x:
                   pi(a, lambda x2:
                      pi(b, lambda y:
                         pi(b, lambda y2:
                            arrow(Id(a, x, x2),
                                  arrow(Id(b, y, y2),
                                        Id(times(a, b),
                                           Pair(x, y), Pair(x2, y2)))))))))),
          lams(8, lambda a, b, x, x2, y, y2, p, q: App(
              IndId(p,
                    bind(3, lambda u, v, _:
                         arrow(Id(b, y, y2),
                               Id(times(a, b), Pair(u, y), Pair(v, y2)))),
                    bind(1, lambda u: lam(lambda q2: IndId(
                        q2,
                        bind(3, lambda w, w2, _:
                             Id(times(a, b), Pair(u, w), Pair(u, w2))),
                        bind(1, lambda w: Refl(Pair(u, w))))))),
              q)))

    _defn(table, "pair_path_snd",
          pi(U1, lambda a:
             pi(fam(a), lambda b:
                pi(a, lambda x:
                   pi(App(b, x), lambda c:
                      pi(App(b, x), lambda c2:
                         arrow(Id(App(b, x), c, c2),
                               Id(dep_sigma(a, b),
                                  Pair(x, c), Pair(x, c2)))))))),
          lams(6, lambda a, b, x, c, c2, q: IndId(
              q,
              bind(3, lambda u, v, _:
                   Id(dep_sigma(a, b), Pair(x, u), Pair(x, v))),
              bind(1, lambda u: Refl(Pair(x, u))))))

    _defn(table, "cons_path",
          pi(U1, lambda a:
             pi(ListT(a), lambda t:
                pi(ListT(a), lambda t2:
                   pi(a, lambda h:
                      pi(a, lambda h2:
                         arrow(Id(ListT(a), t, t2),
                               arrow(Id(a, h, h2),
                                     Id(ListT(a),
                                        Cons_(t, h), Cons_(t2, h2))))))))),
          lams(7, lambda a, t, t2, h, h2, p, q: App(
              IndId(p,
                    bind(3, lambda u, v, _:
                         arrow(Id(a, h, h2),
                               Id(ListT(a), Cons_(u, h), Cons_(v, h2)))),
                    bind(1, lambda u: lam(lambda q2: IndId(
                        q2,
                        bind(3, lambda w, w2, _:
                             Id(ListT(a), Cons_(u, w), Cons_(u, w2))),
                        bind(1, lambda w: Refl(Cons_(u, w))))))),
              q)))

    # transporting in a based-path family is path composition
    _defn(table, "tid",
          pi(U1, lambda a:
             pi(a, lambda x:
                pi(a, lambda y:
                   pi(a, lambda z:
                      pi(Id(a, y, z), lambda r:
                         pi(Id(a, x, y), lambda s:
                            Id(Id(a, x, z),
                               App(app(c("transport"), a,
                                       lam(lambda w: Id(a, x, w)),
                                       y, z, r), s),
                               app(c("path_trans"), a, x, y, z, s, r)))))))),
          lams(5, lambda a, x, y, z, r: IndId(
              r,
              bind(3, lambda u, v, q:
                   pi(Id(a, x, u), lambda s:
                      Id(Id(a, x, v),
                         App(app(c("transport"), a,
                                 lam(lambda w: Id(a, x, w)), u, v, q), s),
                         app(c("path_trans"), a, x, u, v, s, q)))),
              bind(1, lambda u: lam(lambda s: Refl(s))))))

    # composing a path with its inverse yields reflexivity
    _defn(table, "inv_law",
          pi(U1, lambda a:
             pi(a, lambda u:
                pi(a, lambda v:
                   pi(Id(a, u, v), lambda w:
                      Id(Id(a, v, v),
                         app(c("path_trans"), a, v, u, v,
                             app(c("path_sym"), a, u, v, w), w),
                         Refl(v)))))),
          lams(4, lambda a, u, v, w: IndId(
              w,
              bind(3, lambda s, t, q:
                   Id(Id(a, t, t),
                      app(c("path_trans"), a, t, s, t,
                          app(c("path_sym"), a, s, t, q), q),
                      Refl(t))),
              bind(1, lambda s: Refl(Refl(s))))))

    _defn(table, "apd",
          _apd_type(),
          lams(6, lambda a, b, f, x, y, p: IndId(
              p,
              bind(3, lambda u, v, q:
                   Id(App(b, v),
                      App(app(c("transport"), a, b, u, v, q), App(f, u)),
                      App(f, v))),
              bind(1, lambda u: Refl(App(f, u))))))

    # eliminator wrappers with explicit type arguments: applications of
    # these check bidirectionally even on canonical scrutinees, and unfold
    # to the raw eliminators so all computation laws still hold
    _defn(table, "elim_unit",
          pi(fam(One()), lambda m:
             arrow(App(m, Star()),
                   pi(One(), lambda z: App(m, z)))),
          lams(3, lambda m, b, z: IndOne(
              z, bind(1, lambda w: App(m, w)), b)))
    _defn(table, "elim_empty",
          pi(fam(Zero()), lambda m:
             pi(Zero(), lambda z: App(m, z))),
          lams(2, lambda m, z: IndZero(
              z, bind(1, lambda w: App(m, w)))))
    _defn(table, "elim_pair",
          pi(U1, lambda a:
             pi(fam(a), lambda b:
                pi(fam(dep_sigma(a, b)), lambda m:
                   arrow(pi(a, lambda x:
                            pi(App(b, x), lambda y:
                               App(m, Pair(x, y)))),
                         pi(dep_sigma(a, b), lambda z: App(m, z)))))),
          lams(5, lambda a, b, m, br, z: IndSigma(
              z, bind(1, lambda w: App(m, w)),
              bind(2, lambda x, y: app(br, x, y)))))
    _defn(table, "elim_sum",
          pi(U1, lambda a:
             pi(U1, lambda b:
                pi(fam(Sum(a, b)), lambda m:
                   arrow(pi(a, lambda x: App(m, Inl(x))),
                         arrow(pi(b, lambda y: App(m, Inr(y))),
                               pi(Sum(a, b), lambda z: App(m, z))))))),
          lams(6, lambda a, b, m, lb, rb, z: IndSum(
              z, bind(1, lambda w: App(m, w)),
              bind(1, lambda x: App(lb, x)),
              bind(1, lambda y: App(rb, y)))))
    _defn(table, "elim_list",
          pi(U1, lambda a:
             pi(fam(ListT(a)), lambda m:
                arrow(App(m, Nil_()),
                      arrow(pi(ListT(a), lambda t:
                               pi(a, lambda h:
                                  arrow(App(m, t),
                                        App(m, Cons_(t, h))))),
                            pi(ListT(a), lambda z: App(m, z)))))),
          lams(5, lambda a, m, nb, cb, z: IndList(
              z, bind(1, lambda w: App(m, w)), nb,
              bind(3, lambda t, h, ih: app(cb, t, h, ih)))))
    _defn(table, "elim_path",
          pi(U1, lambda a:
             pi(a, lambda x:
                pi(a, lambda y:
                   pi(pi(a, lambda u:
                         pi(a, lambda v:
                            arrow(Id(a, u, v), U1))), lambda m:
                      arrow(pi(a, lambda u:
                               app(m, u, u, Refl(u))),
                            pi(Id(a, x, y), lambda p:
                               app(m, x, y, p))))))),
          lams(6, lambda a, x, y, m, br, p: IndId(
              p, bind(3, lambda u, v, q: app(m, u, v, q)),
              bind(1, lambda u: App(br, u)))))
    _defn(table, "elim_boxed_path",
          pi(U1, lambda a:
             pi(a, lambda x:
                pi(a, lambda y:
                   pi(arrow(a, fam(a)), lambda m:
                      arrow(pi(a, lambda u:
                               pi(a, lambda v: mk_isprop(app(m, u, v)))),
                            arrow(pi(a, lambda u: app(m, u, u)),
                                  arrow(Trunc(Id(a, x, y)),
                                        app(m, x, y)))))))),
          lams(7, lambda a, x, y, m, mp, br, p: IndTrunc(
              p, app(m, x, y),
              bind(1, lambda z: IndId(
                  z, bind(3, lambda u, v, q: app(m, u, v)),
                  bind(1, lambda u: App(br, u)))),
              app(mp, x, y))))

    _defn(table, "elim_quot",
          pi(U0, lambda a:
             pi(arrow(a, arrow(a, U0)), lambda r:
                pi(mk_equiv_rel(a, r), lambda w:
                   pi(U1, lambda m:
                      pi(arrow(a, m), lambda br:
                         arrow(pi(a, lambda x:
                                  pi(a, lambda y:
                                     arrow(app(r, x, y),
                                           Id(m, App(br, x),
                                              App(br, y))))),
                               arrow(Quot(a, r, w), m))))))),
          lams(7, lambda a, r, w, m, br, resp, z: IndQuot(
              z, m, App(br, Var(0)),
              lams(3, lambda x, y, q: app(resp, x, y, q)))))

    # transport in a constant family does nothing (propositionally)
    _defn(table, "transport_const",
          pi(U1, lambda a:
             pi(U1, lambda b:
                pi(a, lambda x:
                   pi(a, lambda y:
                      pi(Id(a, x, y), lambda p:
                         pi(b, lambda v:
                            Id(b,
                               App(app(c("transport"), a,
                                       lam(lambda _: b), x, y, p), v),
                               v))))))),
          lams(5, lambda a, b, x, y, p: IndId(
              p,
              bind(3, lambda u, u2, q:
                   pi(b, lambda v:
                      Id(b,
                         App(app(c("transport"), a, lam(lambda _: b),
                                 u, u2, q), v),
                         v))),
              bind(1, lambda u: lam(lambda v: Refl(v))))))


def Cons_(t, h):
    from .kernel import Cons
    return Cons(t, h)


def Nil_():
    from .kernel import Nil
    return Nil()


def _apd_type():
    return pi(U1, lambda a:
              pi(fam(a), lambda b:
                 pi(dep_pi(a, b), lambda f:
                    pi(a, lambda x:
                       pi(a, lambda y:
                          pi(Id(a, x, y), lambda p:
                             Id(App(b, y),
                                App(app(c("transport"), a, b, x, y, p),
                                    App(f, x)),
                                App(f, y))))))))


# ---------------------------------------------------------------------------
# the prop-to-set coercion, from first principles


def _s_coe_body() -> HTerm:
    def body(a, h, x, y, p, q):
        idt = Id(a, x, y)
        gxx = app(h, x, x)
        hxy = app(h, x, y)
        famx = lam(lambda w: Id(a, x, w))

        def sym_at(ty, l, r, e):
            return app(c("path_sym"), ty, l, r, e)

        def trans_at(ty, l, m, r, e1, e2):
            return app(c("path_trans"), ty, l, m, r, e1, e2)

        def trans_pt(r, s):
            # compose the loop at x with a path x..s-target
            return trans_at(a, x, x, y, r, s)

        def lcan(r):
            # r = trans(sym(h u u), trans(h u u, r)), by path induction on r
            return IndId(
                r,
                bind(3, lambda u, v, q2:
                     Id(Id(a, u, v), q2,
                        app(c("path_trans"), a, u, u, v,
                            app(c("path_sym"), a, u, u, app(h, u, u)),
                            app(c("path_trans"), a, u, u, v,
                                app(h, u, u), q2)))),
                bind(1, lambda u: sym_at(
                    Id(a, u, u),
                    app(c("path_trans"), a, u, u, u,
                        app(c("path_sym"), a, u, u, app(h, u, u)),
                        app(h, u, u)),
                    Refl(u),
                    app(c("inv_law"), a, u, u, app(h, u, u)))))

        trp_gxx = App(app(c("transport"), a, famx, x, y, p), gxx)
        trp_gxx_q = App(app(c("transport"), a, famx, x, y, q), gxx)
        e1p = app(c("apd"), a, famx, App(h, x), x, y, p)
        e2p = app(c("tid"), a, x, x, y, p, gxx)
        c1 = trans_at(idt, trans_pt(gxx, p), trp_gxx, hxy,
                      sym_at(idt, trp_gxx, trans_pt(gxx, p), e2p), e1p)
        e1q = app(c("apd"), a, famx, App(h, x), x, y, q)
        e2q = app(c("tid"), a, x, x, y, q, gxx)
        c2 = trans_at(idt, trans_pt(gxx, q), trp_gxx_q, hxy,
                      sym_at(idt, trp_gxx_q, trans_pt(gxx, q), e2q), e1q)
        f_pre = lam(lambda t: trans_at(a, x, x, y,
                                       sym_at(a, x, x, gxx), t))
        sym_gxx = sym_at(a, x, x, gxx)

        def pre(t):
            # beta-reduced form of App(f_pre, t): keeps endpoint terms in
            # inferable (constant-headed) shape
            return trans_at(a, x, x, y, sym_gxx, t)

        fp_p = pre(trans_pt(gxx, p))
        fp_q = pre(trans_pt(gxx, q))
        fp_h = pre(hxy)
        d1 = app(c("ap"), idt, idt, f_pre, trans_pt(gxx, p), hxy, c1)
        d2 = app(c("ap"), idt, idt, f_pre, trans_pt(gxx, q), hxy, c2)
        t1 = trans_at(idt, p, fp_p, fp_h, lcan(p), d1)
        t2 = trans_at(idt, p, fp_h, fp_q, t1, sym_at(idt, fp_q, fp_h, d2))
        return trans_at(idt, p, fp_q, q, t2,
                        sym_at(idt, q, fp_q, lcan(q)))

    return lams(6, body)


# ---------------------------------------------------------------------------
# the inventory


def _inventory(table: AxiomTable):
    entries: list[tuple[str, HTerm, HTerm]] = []

    def defined(name, ty, body):
        _defn(table, name, ty, body)
        entries.append((name, body, ty))

    def from_axiom(name):
        entries.append((name, c(name), table.type_of(name)))

    defined("p0", mk_isprop(Zero()),
            lams(2, lambda x, y: IndZero(
                x, bind(1, lambda z: Id(Zero(), z, y)))))
    defined("p1", mk_isprop(One()),
            lams(2, lambda x, y: IndOne(
                x,
                bind(1, lambda z: Id(One(), z, y)),
                IndOne(y,
                       bind(1, lambda w: Id(One(), Star(), w)),
                       Refl(Star())))))
    defined("p_imp",
            pi(U1, lambda a:
               pi(U1, lambda b:
                  arrow(mk_isprop(a),
                        arrow(mk_isprop(b), mk_isprop(arrow(a, b)))))),
            lams(6, lambda a, b, p, q, f, g:
                 app(c("funext"), a, lam(lambda _: b), f, g,
                     lam(lambda x:
                         app(q, App(f, x), App(g, x))))))
    defined("p_times",
            pi(U1, lambda a:
               pi(U1, lambda b:
                  arrow(mk_isprop(a),
                        arrow(mk_isprop(b), mk_isprop(times(a, b)))))),
            lams(6, lambda a, b, p, q, z, w: _pair_prop(a, b, p, q, z, w)))
    defined("p_pi",
            pi(U1, lambda a:
               pi(fam(a), lambda b:
                  arrow(pi(a, lambda x: mk_isprop(App(b, x))),
                        mk_isprop(dep_pi(a, b))))),
            lams(5, lambda a, b, p, f, g:
                 app(c("funext"), a, b, f, g,
                     lam(lambda x:
                         app(p, x, App(f, x), App(g, x))))))
    defined("p_trunc", pi(U1, lambda a: mk_isprop(Trunc(a))),
            lam(lambda a: App(c("sq"), a)))
    defined("p_or",
            pi(U1, lambda a: pi(U1, lambda b: mk_isprop(or_type(a, b)))),
            lams(2, lambda a, b: App(c("p_trunc"), Sum(a, b))))
    defined("p_ex",
            pi(U1, lambda a:
               pi(fam(a), lambda b: mk_isprop(ex_type(a, b)))),
            lams(2, lambda a, b: App(c("p_trunc"), dep_sigma(a, b))))
    defined("p_trunc_times",
            pi(U1, lambda a:
               pi(U1, lambda b: mk_isprop(Trunc(times(a, b))))),
            lams(2, lambda a, b: App(c("p_trunc"), times(a, b))))
    defined("p_trunc_imp",
            pi(U1, lambda a:
               pi(U1, lambda b: mk_isprop(Trunc(arrow(a, b))))),
            lams(2, lambda a, b: App(c("p_trunc"), arrow(a, b))))
    defined("p_trunc_pi",
            pi(U1, lambda a:
               pi(fam(a), lambda b: mk_isprop(Trunc(dep_pi(a, b))))),
            lams(2, lambda a, b: App(c("p_trunc"), dep_pi(a, b))))
    defined("p_id",
            pi(U1, lambda a:
               pi(mk_isset(a), lambda s:
                  pi(a, lambda x:
                     pi(a, lambda y: mk_isprop(Id(a, x, y)))))),
            lams(4, lambda a, s, x, y: app(s, x, y)))
    defined("s_coe",
            pi(U1, lambda a: arrow(mk_isprop(a), mk_isset(a))),
            _s_coe_body())
    defined("s0", mk_isset(Zero()), app(c("s_coe"), Zero(), c("p0")))
    defined("s1", mk_isset(One()), app(c("s_coe"), One(), c("p1")))
    for name in ("s_nat", "s_pi", "s_sigma", "s_sum", "s_list", "s_quot",
                 "s_prop0"):
        from_axiom(name)

    defined("inl_or",
            pi(U1, lambda a: pi(U1, lambda b: arrow(a, or_type(a, b)))),
            lams(3, lambda a, b, x: TruncIn(Inl(x))))
    defined("inr_or",
            pi(U1, lambda a: pi(U1, lambda b: arrow(b, or_type(a, b)))),
            lams(3, lambda a, b, y: TruncIn(Inr(y))))
    defined("ind_or",
            pi(U1, lambda a:
               pi(U1, lambda b:
                  pi(U1, lambda cc:
                     arrow(mk_isprop(cc),
                           arrow(arrow(a, cc),
                                 arrow(arrow(b, cc),
                                       arrow(or_type(a, b), cc))))))),
            lams(7, lambda a, b, cc, s, l1, l2, e: IndTrunc(
                e, cc,
                bind(1, lambda z: IndSum(
                    z,
                    bind(1, lambda _: cc),
                    bind(1, lambda xx: App(l1, xx)),
                    bind(1, lambda yy: App(l2, yy)))),
                s)))
    defined("pair_ex",
            pi(U1, lambda a:
               pi(fam(a), lambda b:
                  pi(a, lambda x:
                     arrow(App(b, x), ex_type(a, b))))),
            lams(4, lambda a, b, x, y: TruncIn(Pair(x, y))))
    defined("ind_ex",
            pi(U1, lambda a:
               pi(fam(a), lambda b:
                  pi(U1, lambda cc:
                     arrow(mk_isprop(cc),
                           arrow(pi(a, lambda x: arrow(App(b, x), cc)),
                                 arrow(ex_type(a, b), cc)))))),
            lams(6, lambda a, b, cc, s, l, e: IndTrunc(
                e, cc,
                bind(1, lambda z: IndSigma(
                    z,
                    bind(1, lambda _: cc),
                    bind(2, lambda x, y: app(l, x, y)))),
                s)))
    defined("pair_and",
            pi(U1, lambda a:
               pi(U1, lambda b:
                  arrow(a, arrow(b, Trunc(times(a, b)))))),
            lams(4, lambda a, b, x, y: TruncIn(Pair(x, y))))
    defined("fst_and",
            pi(U1, lambda a:
               pi(U1, lambda b:
                  arrow(mk_isprop(a), arrow(Trunc(times(a, b)), a)))),
            lams(4, lambda a, b, s, e: IndTrunc(
                e, a,
                bind(1, lambda z: IndSigma(
                    z, bind(1, lambda _: a), bind(2, lambda x, y: x))),
                s)))
    defined("snd_and",
            pi(U1, lambda a:
               pi(U1, lambda b:
                  arrow(mk_isprop(b), arrow(Trunc(times(a, b)), b)))),
            lams(4, lambda a, b, t, e: IndTrunc(
                e, b,
                bind(1, lambda z: IndSigma(
                    z, bind(1, lambda _: b), bind(2, lambda x, y: y))),
                t)))
    defined("lam_imp",
            pi(U1, lambda a:
               pi(U1, lambda b:
                  arrow(arrow(a, b), Trunc(arrow(a, b))))),
            lams(3, lambda a, b, f: TruncIn(f)))
    defined("app_imp",
            pi(U1, lambda a:
               pi(U1, lambda b:
                  arrow(mk_isprop(b),
                        arrow(Trunc(arrow(a, b)), arrow(a, b))))),
            lams(5, lambda a, b, s, e, x: IndTrunc(
                e, b, bind(1, lambda f: App(f, x)), s)))
    defined("lam_all",
            pi(U1, lambda a:
               pi(fam(a), lambda b:
                  arrow(dep_pi(a, b), Trunc(dep_pi(a, b))))),
            lams(3, lambda a, b, f: TruncIn(f)))
    defined("app_all",
            pi(U1, lambda a:
               pi(fam(a), lambda b:
                  arrow(pi(a, lambda x: mk_isprop(App(b, x))),
                        arrow(Trunc(dep_pi(a, b)),
                              pi(a, lambda x: App(b, x)))))),
            lams(5, lambda a, b, s, e, x: IndTrunc(
                e, App(b, x), bind(1, lambda f: App(f, x)), App(s, x))))
    defined("untrunc",
            pi(U1, lambda p:
               arrow(mk_isprop(p), arrow(Trunc(p), p))),
            lams(3, lambda p, s, z: IndTrunc(
                z, p, bind(1, lambda x: x), s)))
    entries.append(("apd", table.body_of("apd"), table.type_of("apd")))
    return [StdCombinator(*e) for e in entries]


def _pair_prop(a, b, p, q, z, w):
    """Path between two inhabitants of a product of h-propositions."""
    ab = times(a, b)

    def fst(t):
        return IndSigma(t, bind(1, lambda _: a), bind(2, lambda x, y: x))

    def snd(t):
        return IndSigma(t, bind(1, lambda _: b), bind(2, lambda x, y: y))

    def eta(t):
        # propositional eta, with constant motives (second component does
        # not depend on the first)
        return IndSigma(
            t,
            bind(1, lambda u: Id(ab, Pair(fst(u), snd(u)), u)),
            bind(2, lambda x, y: Refl(Pair(x, y))))

    mid = app(c("pair_path"), a, b, fst(z), fst(w), snd(z), snd(w),
              app(p, fst(z), fst(w)), app(q, snd(z), snd(w)))
    step = app(c("path_trans"), ab, Pair(fst(z), snd(z)),
               Pair(fst(w), snd(w)), w, mid, eta(w))
    return app(c("path_trans"), ab, z, Pair(fst(z), snd(z)), w,
               app(c("path_sym"), ab, Pair(fst(z), snd(z)), z, eta(z)),
               step)


# ---------------------------------------------------------------------------
# build + verification


def build_axiom_table() -> AxiomTable:
    table = AxiomTable()
    _axioms(table)
    _helpers(table)
    return table


_BETA_CHECKS = "checked in _verify_beta_laws"


def _verify_beta_laws(table: AxiomTable) -> None:
    """The displayed computation laws of the truncated connectives."""
    a, b, cc = Var(8), Var(7), Var(6)
    s, l1, l2, l = Var(5), Var(4), Var(3), Var(2)
    x, y = Var(1), Var(0)
    laws = [
        # disjunction eliminator on both injections
        (app(c("ind_or"), a, b, cc, s, l1, l2, app(c("inl_or"), a, b, x)),
         App(l1, x)),
        (app(c("ind_or"), a, b, cc, s, l1, l2, app(c("inr_or"), a, b, y)),
         App(l2, y)),
        # existential eliminator on a canonical witness
        (app(c("ind_ex"), a, b, cc, s, l, app(c("pair_ex"), a, b, x, y)),
         app(l, x, y)),
        # conjunction projections on a canonical pair
        (app(c("fst_and"), a, b, s, app(c("pair_and"), a, b, x, y)), x),
        (app(c("snd_and"), a, b, s, app(c("pair_and"), a, b, x, y)), y),
        # implication and universal application on boxed functions
        (app(c("app_imp"), a, b, s, app(c("lam_imp"), a, b, l), x),
         App(l, x)),
        (app(c("app_all"), a, b, s, app(c("lam_all"), a, b, l), x),
         App(l, x)),
        # the truncation inverse is a definitional retraction
        (app(c("untrunc"), a, s, TruncIn(x)), x),
    ]
    for got, want in laws:
        if not conv(table, got, want):
            raise StdlibError(f"computation law failed: {got!r} != {want!r}")


def build_stdlib(table: AxiomTable | None = None):
    """Build and verify the library; returns (table, combinators)."""
    if table is None:
        table = build_axiom_table()
    try:
        combinators = _inventory(table)
    except KernelError as e:
        raise StdlibError(f"stdlib failed to type-check: {e}") from e
    _verify_beta_laws(table)
    return table, combinators


_CACHE = None


def stdlib():
    """Process-wide table + combinator list (built once, immutable)."""
    global _CACHE
    if _CACHE is None:
        _CACHE = build_stdlib()
    return _CACHE
