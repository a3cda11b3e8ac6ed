"""Construction helpers: write binders with Python lambdas, get de Bruijn
terms out.  Free occurrences are placeholder nodes resolved by ``abstract``,
so nested helpers compose and embedded open terms keep their ambient
references (they shift once per enclosing binder)."""

from __future__ import annotations

import itertools

from .terms import (FVar, HTerm, Lam, Pi, Sigma, abstract, apply_spine)

_ids = itertools.count(1)


def bind(n: int, fn) -> HTerm:
    """Build an n-binder body (outermost argument first)."""
    fvs = [FVar(next(_ids)) for _ in range(n)]
    t = fn(*fvs)
    for depth, fv in enumerate(reversed(fvs)):
        t = abstract(t, fv.uid, depth)
    return t


def lam(fn) -> HTerm:
    return Lam(bind(1, fn))


def lams(n: int, fn) -> HTerm:
    def go(k, args):
        if k == 0:
            return fn(*args)
        return lam(lambda x: go(k - 1, args + [x]))

    return go(n, [])


def pi(dom: HTerm, fn) -> HTerm:
    return Pi(dom, bind(1, fn))


def sigma(dom: HTerm, fn) -> HTerm:
    return Sigma(dom, bind(1, fn))


app = apply_spine
