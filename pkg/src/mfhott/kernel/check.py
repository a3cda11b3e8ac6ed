"""Bidirectional type checking for the target fragment.

Universe discipline: object levels are 0 and 1 with syntactic cumulativity
(level 0 types check at level 1).  ``Univ(2)`` only ever appears as the
inferred classifier of ``Univ(1)`` and of large Pi/Sigma types such as the
library combinator signatures; it is not a source-level universe.

Eliminators carry explicit motives, so inference never guesses; plain
lambdas, pairs and injections are checked against a given type.
"""

from __future__ import annotations

from .reduce import conv, whnf
from .terms import (App, Cons, Const, HContext, HTerm, Id, IndId, IndList,
                    IndNat, IndOne, IndQuot, IndSigma, IndSum, IndTrunc,
                    IndZero, Inl, Inr, KernelError, Lam, ListT, Nat, Nil, One,
                    Pair, Pi, QEff, QMap, Quot, Refl, ScopeError, Sigma, Star,
                    Succ, Sum, Trunc, TruncIn, Univ, Var, Zero, ZeroN,
                    apply_spine, arrow, inst, inst_branch_values,
                    mk_equiv_rel, mk_isprop, shift, subst, uses_var)


class UniverseError(KernelError):
    pass


class TypeMismatch(KernelError):
    pass


class CannotInfer(KernelError):
    pass


class MotiveMismatch(KernelError):
    pass


class MissingWitness(KernelError):
    pass


class AxiomTable:
    """Named constants: axioms carry only a type and never reduce;
    definitions carry a body that unfolds during reduction."""

    def __init__(self):
        self._types = {}
        self._bodies = {}

    def declare(self, name: str, ty: HTerm) -> None:
        if name in self._types:
            raise KernelError(f"constant {name!r} already declared")
        self._types[name] = ty

    def define(self, name: str, ty: HTerm, body: HTerm) -> None:
        self.declare(name, ty)
        self._bodies[name] = body

    def type_of(self, name: str) -> HTerm:
        try:
            return self._types[name]
        except KeyError:
            raise ScopeError(f"unknown constant {name!r}") from None

    def body_of(self, name: str):
        return self._bodies.get(name)

    def names(self):
        return list(self._types)

    def is_axiom(self, name: str) -> bool:
        return name in self._types and name not in self._bodies


def infer(table: AxiomTable, ctx: HContext, t: HTerm) -> HTerm:
    if isinstance(t, Var):
        return ctx.lookup(t.index)
    if isinstance(t, Const):
        return table.type_of(t.name)
    if isinstance(t, Univ):
        if t.level in (0, 1):
            return Univ(t.level + 1)
        raise UniverseError("Univ(2) is the internal kind and has no type")
    if isinstance(t, (Pi, Sigma)):
        i = level_of_type(table, ctx, t.dom)
        j = level_of_type(table, ctx.extend(t.dom), t.cod)
        return Univ(max(i, j))
    if isinstance(t, App):
        t2 = _contract_redexes(table, ctx, t)
        if t2 is not t:
            return infer(table, ctx, t2)
        fty = whnf(table, infer(table, ctx, t.fn))
        if not isinstance(fty, Pi):
            raise TypeMismatch(f"application head has non-function type {fty}")
        check(table, ctx, t.arg, fty.dom)
        return subst(fty.cod, t.arg)
    if isinstance(t, IndSigma):
        sty = whnf(table, infer(table, ctx, t.scrut))
        if not isinstance(sty, Sigma):
            raise TypeMismatch(f"sigma eliminator on non-pair type {sty}")
        level_of_type(table, ctx.extend(sty), t.motive)
        bctx = ctx.extend(sty.dom).extend(sty.cod)
        expected = inst(t.motive, Pair(Var(1), Var(0)), 1)
        check(table, bctx, t.branch, expected)
        return subst(t.motive, t.scrut)
    if isinstance(t, Sum):
        i = level_of_type(table, ctx, t.left)
        j = level_of_type(table, ctx, t.right)
        return Univ(_small(max(i, j)))
    if isinstance(t, IndSum):
        sty = whnf(table, infer(table, ctx, t.scrut))
        if not isinstance(sty, Sum):
            raise TypeMismatch(f"sum eliminator on non-sum type {sty}")
        level_of_type(table, ctx.extend(sty), t.motive)
        check(table, ctx.extend(sty.left), t.left_branch,
              subst(shift(t.motive, 1, 1), Inl(Var(0))))
        check(table, ctx.extend(sty.right), t.right_branch,
              subst(shift(t.motive, 1, 1), Inr(Var(0))))
        return subst(t.motive, t.scrut)
    if isinstance(t, (Zero, One, Nat)):
        return Univ(0)
    if isinstance(t, Star):
        return One()
    if isinstance(t, IndZero):
        sty = whnf(table, infer(table, ctx, t.scrut))
        if not isinstance(sty, Zero):
            raise TypeMismatch(f"empty eliminator on non-empty type {sty}")
        level_of_type(table, ctx.extend(Zero()), t.motive)
        return subst(t.motive, t.scrut)
    if isinstance(t, IndOne):
        sty = whnf(table, infer(table, ctx, t.scrut))
        if not isinstance(sty, One):
            raise TypeMismatch(f"unit eliminator on non-unit type {sty}")
        level_of_type(table, ctx.extend(One()), t.motive)
        check(table, ctx, t.branch, subst(t.motive, Star()))
        return subst(t.motive, t.scrut)
    if isinstance(t, ZeroN):
        return Nat()
    if isinstance(t, Succ):
        check(table, ctx, t.pred, Nat())
        return Nat()
    if isinstance(t, IndNat):
        sty = whnf(table, infer(table, ctx, t.scrut))
        if not isinstance(sty, Nat):
            raise TypeMismatch(f"nat eliminator on non-nat type {sty}")
        level_of_type(table, ctx.extend(Nat()), t.motive)
        check(table, ctx, t.zero_branch, subst(t.motive, ZeroN()))
        sctx = ctx.extend(Nat()).extend(t.motive)
        check(table, sctx, t.succ_branch, inst(t.motive, Succ(Var(1)), 1))
        return subst(t.motive, t.scrut)
    if isinstance(t, ListT):
        return Univ(_small(level_of_type(table, ctx, t.elem)))
    if isinstance(t, Cons):
        tty = whnf(table, infer(table, ctx, t.tail))
        if not isinstance(tty, ListT):
            raise TypeMismatch(f"cons onto non-list type {tty}")
        check(table, ctx, t.head, tty.elem)
        return tty
    if isinstance(t, IndList):
        sty = whnf(table, infer(table, ctx, t.scrut))
        if not isinstance(sty, ListT):
            raise TypeMismatch(f"list eliminator on non-list type {sty}")
        elem = sty.elem
        level_of_type(table, ctx.extend(sty), t.motive)
        check(table, ctx, t.nil_branch, subst(t.motive, Nil()))
        cctx = (ctx.extend(sty)
                   .extend(shift(elem, 1))
                   .extend(inst(t.motive, Var(1), 1)))
        check(table, cctx, t.cons_branch,
              inst(t.motive, Cons(Var(2), Var(1)), 2))
        return subst(t.motive, t.scrut)
    if isinstance(t, Id):
        lvl = level_of_type(table, ctx, t.ty)
        _small(lvl)
        check(table, ctx, t.lhs, t.ty)
        check(table, ctx, t.rhs, t.ty)
        return Univ(lvl)
    if isinstance(t, Refl):
        ty = infer(table, ctx, t.arg)
        return Id(ty, t.arg, t.arg)
    if isinstance(t, IndId):
        sty = whnf(table, infer(table, ctx, t.scrut))
        if not isinstance(sty, Id):
            raise TypeMismatch(f"path eliminator on non-path type {sty}")
        base = sty.ty
        mctx = (ctx.extend(base)
                   .extend(shift(base, 1))
                   .extend(Id(shift(base, 2), Var(1), Var(0))))
        level_of_type(table, mctx, t.motive)
        diag = subst(subst(t.motive, Refl(Var(0)), 0), Var(0), 0)
        check(table, ctx.extend(base), t.branch, diag)
        return inst_branch_values(t.motive, sty.lhs, sty.rhs, t.scrut)
    if isinstance(t, Trunc):
        return Univ(_small(level_of_type(table, ctx, t.inner)))
    if isinstance(t, TruncIn):
        return Trunc(infer(table, ctx, t.arg))
    if isinstance(t, IndTrunc):
        sty = whnf(table, infer(table, ctx, t.scrut))
        if not isinstance(sty, Trunc):
            raise TypeMismatch(f"truncation eliminator on non-truncation {sty}")
        level_of_type(table, ctx, t.motive)
        check(table, ctx.extend(sty.inner), t.branch, shift(t.motive, 1))
        try:
            check(table, ctx, t.is_prop, mk_isprop(t.motive))
        except KernelError as e:
            raise MissingWitness(
                f"truncation eliminator needs a proof that the motive is an "
                f"h-proposition: {e}") from e
        return t.motive
    if isinstance(t, Quot):
        check(table, ctx, t.base, Univ(0))
        check(table, ctx, t.rel, arrow(t.base, arrow(t.base, Univ(0))))
        try:
            check(table, ctx, t.equiv, mk_equiv_rel(t.base, t.rel))
        except KernelError as e:
            raise MissingWitness(
                f"quotient needs an equivalence-relation witness: {e}") from e
        return Univ(0)
    if isinstance(t, IndQuot):
        sty = whnf(table, infer(table, ctx, t.scrut))
        if not isinstance(sty, Quot):
            raise TypeMismatch(f"quotient eliminator on non-quotient {sty}")
        level_of_type(table, ctx, t.motive)
        check(table, ctx.extend(sty.base), t.branch, shift(t.motive, 1))
        rxy = apply_spine(shift(sty.rel, 2), Var(1), Var(0))
        goal = Id(shift(t.motive, 2),
                  inst(t.branch, Var(1), 2), inst(t.branch, Var(0), 2))
        respects_ty = Pi(sty.base, Pi(shift(sty.base, 1), arrow(rxy, goal)))
        try:
            check(table, ctx, t.respects, respects_ty)
        except KernelError as e:
            raise MissingWitness(
                f"quotient eliminator needs a respect witness: {e}") from e
        return t.motive
    if isinstance(t, QEff):
        pty = whnf(table, infer(table, ctx, t.path))
        if not isinstance(pty, Id):
            raise TypeMismatch(f"effectiveness applied to non-path {pty}")
        qty = whnf(table, pty.ty)
        if not isinstance(qty, Quot):
            raise TypeMismatch(
                f"effectiveness path must live in a quotient, got {qty}")
        check(table, ctx, t.lhs, qty.base)
        check(table, ctx, t.rhs, qty.base)
        if not conv(table, pty.lhs, QMap(t.lhs)):
            raise TypeMismatch("effectiveness endpoint mismatch (left)")
        if not conv(table, pty.rhs, QMap(t.rhs)):
            raise TypeMismatch("effectiveness endpoint mismatch (right)")
        return apply_spine(qty.rel, t.lhs, t.rhs)
    if isinstance(t, (Lam, Pair, Inl, Inr, Nil, QMap)):
        raise CannotInfer(
            f"cannot infer a type for {type(t).__name__}; check it against "
            f"an expected type")
    raise CannotInfer(f"no inference rule for {t!r}")


def check(table: AxiomTable, ctx: HContext, t: HTerm, ty: HTerm) -> None:
    """Raise a KernelError unless ``t`` inhabits ``ty`` up to conversion."""
    w = whnf(table, ty)
    if isinstance(t, Lam):
        if not isinstance(w, Pi):
            raise TypeMismatch(f"lambda checked against non-function {w}")
        check(table, ctx.extend(w.dom), t.body, w.cod)
        return
    if isinstance(t, Pair):
        if not isinstance(w, Sigma):
            raise TypeMismatch(f"pair checked against non-pair type {w}")
        check(table, ctx, t.fst, w.dom)
        check(table, ctx, t.snd, subst(w.cod, t.fst))
        return
    if isinstance(t, Inl):
        if not isinstance(w, Sum):
            raise TypeMismatch(f"left injection into non-sum {w}")
        check(table, ctx, t.arg, w.left)
        return
    if isinstance(t, Inr):
        if not isinstance(w, Sum):
            raise TypeMismatch(f"right injection into non-sum {w}")
        check(table, ctx, t.arg, w.right)
        return
    if isinstance(t, Nil):
        if not isinstance(w, ListT):
            raise TypeMismatch(f"nil checked against non-list {w}")
        return
    if isinstance(t, Cons):
        if isinstance(w, ListT):
            check(table, ctx, t.tail, w)
            check(table, ctx, t.head, w.elem)
            return
    if isinstance(t, QMap):
        if not isinstance(w, Quot):
            raise TypeMismatch(f"class formation against non-quotient {w}")
        check(table, ctx, t.arg, w.base)
        return
    if isinstance(t, TruncIn):
        if isinstance(w, Trunc):
            check(table, ctx, t.arg, w.inner)
            return
    if isinstance(t, App):
        t2 = _contract_redexes(table, ctx, t)
        if t2 is not t:
            check(table, ctx, t2, ty)
            return
    if isinstance(t, Refl) and isinstance(w, Id):
        check(table, ctx, t.arg, w.ty)
        if not (conv(table, w.lhs, t.arg) and conv(table, w.rhs, t.arg)):
            raise TypeMismatch(
                f"reflexivity endpoints {w.lhs!r} / {w.rhs!r} do not both "
                f"convert to {t.arg!r}")
        return
    inferred = infer(table, ctx, t)
    if not _subtype(table, inferred, ty):
        raise TypeMismatch(
            f"type mismatch: term {t!r} has type {inferred!r}, "
            f"expected {ty!r}")


def _contract_redexes(table, ctx, t):
    """Contract head beta-redexes in an application spine (Curry-style):
    each contracted argument is typed directly when possible, or relied on
    to be typed at its occurrences in the body otherwise."""
    if not isinstance(t, App):
        return t
    fn = _contract_redexes(table, ctx, t.fn)
    if isinstance(fn, Lam):
        try:
            infer(table, ctx, t.arg)
        except CannotInfer:
            if not uses_var(fn.body, 0):
                raise
        return _contract_redexes(table, ctx, subst(fn.body, t.arg))
    if fn is not t.fn:
        return App(fn, t.arg)
    return t


def _subtype(table, got: HTerm, want: HTerm) -> bool:
    if conv(table, got, want):
        return True
    g = whnf(table, got)
    w = whnf(table, want)
    if isinstance(g, Univ) and isinstance(w, Univ):
        return g.level <= w.level
    return False


def level_of_type(table: AxiomTable, ctx: HContext, t: HTerm) -> int:
    """Universe level classifying ``t`` (2 for large types)."""
    ity = whnf(table, infer(table, ctx, t))
    if isinstance(ity, Univ):
        return ity.level
    raise UniverseError(f"not a type: {t!r} (classifier {ity!r})")


def _small(level: int) -> int:
    if level > 1:
        raise UniverseError(
            "this former only applies to types in an object universe")
    return level


def check_is_type(table: AxiomTable, ctx: HContext, t: HTerm) -> int:
    return level_of_type(table, ctx, t)
