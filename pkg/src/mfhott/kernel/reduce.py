"""Weak-head reduction and conversion checking.

Definitional equality is beta only, plus the truncation computation rule
(eliminating a boxed value) and the quotient computation rule (eliminating
a class of a representative).  There is no eta.  Constants with a body
(library definitions) unfold at the head; axiom constants are inert.
"""

from __future__ import annotations

from .terms import (App, Cons, Const, HTerm, IndId, IndList, IndNat, IndOne,
                    IndQuot, IndSigma, IndSum, IndTrunc, Inl, Inr, Lam, Nil,
                    Pair, QMap, Refl, Star, Succ, TruncIn, ZeroN,
                    _term_fields, inst_branch_values as inst_branch, subst)


def whnf(table, t: HTerm) -> HTerm:
    """Weak-head normal form; ill-typed terms may simply get stuck."""
    while True:
        if isinstance(t, Const):
            body = table.body_of(t.name)
            if body is None:
                return t
            t = body
            continue
        if isinstance(t, App):
            fn = whnf(table, t.fn)
            if isinstance(fn, Lam):
                t = subst(fn.body, t.arg)
                continue
            return t if fn is t.fn else App(fn, t.arg)
        if isinstance(t, IndSigma):
            s = whnf(table, t.scrut)
            if isinstance(s, Pair):
                t = inst_branch(t.branch, s.fst, s.snd)
                continue
            return _rescrut(t, s)
        if isinstance(t, IndSum):
            s = whnf(table, t.scrut)
            if isinstance(s, Inl):
                t = subst(t.left_branch, s.arg)
                continue
            if isinstance(s, Inr):
                t = subst(t.right_branch, s.arg)
                continue
            return _rescrut(t, s)
        if isinstance(t, IndOne):
            s = whnf(table, t.scrut)
            if isinstance(s, Star):
                t = t.branch
                continue
            return _rescrut(t, s)
        if isinstance(t, IndNat):
            s = whnf(table, t.scrut)
            if isinstance(s, ZeroN):
                t = t.zero_branch
                continue
            if isinstance(s, Succ):
                ih = IndNat(s.pred, t.motive, t.zero_branch, t.succ_branch)
                t = inst_branch(t.succ_branch, s.pred, ih)
                continue
            return _rescrut(t, s)
        if isinstance(t, IndList):
            s = whnf(table, t.scrut)
            if isinstance(s, Nil):
                t = t.nil_branch
                continue
            if isinstance(s, Cons):
                ih = IndList(s.tail, t.motive, t.nil_branch, t.cons_branch)
                t = inst_branch(t.cons_branch, s.tail, s.head, ih)
                continue
            return _rescrut(t, s)
        if isinstance(t, IndId):
            s = whnf(table, t.scrut)
            if isinstance(s, Refl):
                t = subst(t.branch, s.arg)
                continue
            return _rescrut(t, s)
        if isinstance(t, IndTrunc):
            s = whnf(table, t.scrut)
            if isinstance(s, TruncIn):
                t = subst(t.branch, s.arg)
                continue
            return _rescrut(t, s)
        if isinstance(t, IndQuot):
            s = whnf(table, t.scrut)
            if isinstance(s, QMap):
                t = subst(t.branch, s.arg)
                continue
            return _rescrut(t, s)
        return t


def _rescrut(t, s):
    if s is t.scrut:
        return t
    kw = {name: child for name, child, _ in _term_fields(t)}
    kw["scrut"] = s
    return type(t)(**kw)


def conv(table, a: HTerm, b: HTerm) -> bool:
    """Structural congruence up to weak-head reduction (no eta)."""
    if a == b:
        return True
    a = whnf(table, a)
    b = whnf(table, b)
    if a == b:
        return True
    if type(a) is not type(b):
        return False
    if _payload(a) != _payload(b):
        return False
    af = _term_fields(a)
    bf = _term_fields(b)
    return all(conv(table, ca, cb) for (_, ca, _), (_, cb, _) in zip(af, bf))


def _payload(t):
    out = []
    for f in type(t).__dataclass_fields__:
        if f == "BINDERS":
            continue
        v = getattr(t, f)
        if not isinstance(v, HTerm):
            out.append(v)
    return out
