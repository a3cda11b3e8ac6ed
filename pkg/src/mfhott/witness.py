"""Structural synthesis of h-level witnesses for kernel types.

Mirrors the witness clauses used by the translations, but works directly
on target types, so the isomorphism engine and the extensional translation
can request a set witness (or a propositionhood witness) for any type they
manufacture.  Synthesis is syntactic on weak-head shapes; it returns None
where no clause applies.
"""

from __future__ import annotations

from .kernel import (App, Const, HTerm, Id, Lam, ListT, Nat, One, Pi, Quot,
                     Sigma, Sum, Trunc, Var, Zero, app, apply_spine,
                     prop_u0, shift, whnf)


def _c(name):
    return Const(name)


def s_coe(ty, prp):
    return app(_c("s_coe"), ty, prp)


def prop_witness(table, ty: HTerm):
    """A proof that ``ty`` is an h-proposition, when one clause applies."""
    t = whnf(table, ty)
    if isinstance(t, Trunc):
        return app(_c("p_trunc"), t.inner)
    if isinstance(t, Zero):
        return _c("p0")
    if isinstance(t, One):
        return _c("p1")
    if isinstance(t, Id):
        sw = set_witness(table, t.ty)
        if sw is not None:
            return app(_c("p_id"), t.ty, sw, t.lhs, t.rhs)
    if isinstance(t, Pi):
        pw = prop_witness(table, t.cod)
        if pw is not None:
            return app(_c("p_pi"), t.dom, Lam(t.cod), Lam(pw))
    return None


def set_witness(table, ty: HTerm):
    """A proof that ``ty`` is an h-set, when one clause applies."""
    t = whnf(table, ty)
    if isinstance(t, Zero):
        return _c("s0")
    if isinstance(t, One):
        return _c("s1")
    if isinstance(t, Nat):
        return _c("s_nat")
    if t == prop_u0():
        return _c("s_prop0")
    if isinstance(t, Trunc):
        return s_coe(t, app(_c("p_trunc"), t.inner))
    if isinstance(t, Id):
        pw = prop_witness(table, t)
        return None if pw is None else s_coe(t, pw)
    if isinstance(t, Sigma):
        a = set_witness(table, t.dom)
        b = set_witness(table, t.cod)
        if a is None or b is None:
            return None
        return app(_c("s_sigma"), t.dom, Lam(t.cod), a, Lam(b))
    if isinstance(t, Pi):
        b = set_witness(table, t.cod)
        if b is None:
            return None
        return app(_c("s_pi"), t.dom, Lam(t.cod), Lam(b))
    if isinstance(t, Sum):
        a = set_witness(table, t.left)
        b = set_witness(table, t.right)
        if a is None or b is None:
            return None
        return app(_c("s_sum"), t.left, t.right, a, b)
    if isinstance(t, ListT):
        a = set_witness(table, t.elem)
        return None if a is None else app(_c("s_list"), t.elem, a)
    if isinstance(t, Quot):
        a = set_witness(table, t.base)
        body = whnf(table, apply_spine(shift(t.rel, 2), Var(1), Var(0)))
        pw = prop_witness(table, body)
        if a is None or pw is None:
            return None
        return app(_c("s_quot"), t.base, t.rel, a, Lam(Lam(pw)), t.equiv)
    return None
