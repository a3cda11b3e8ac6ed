"""Raw term syntax for the HoTT target fragment.

Terms use nameless (de Bruijn) variables: ``Var(0)`` is the innermost
binder.  Every node class lists, per term-valued field, how many extra
binders enclose that field (``BINDERS``); the generic traversal helpers
below derive shifting and substitution from that table.
"""

from __future__ import annotations

from dataclasses import dataclass, fields


class KernelError(Exception):
    """Base class for kernel failures."""


class ScopeError(KernelError):
    pass


@dataclass(frozen=True)
class HTerm:
    # per term-field binder counts; plain class attribute (not a field),
    # overridden by each node class
    BINDERS = ()


@dataclass(frozen=True)
class Var(HTerm):
    index: int = 0


@dataclass(frozen=True)
class Univ(HTerm):
    """Universe; levels 0 and 1 are object-level, 2 is the internal kind
    classifying Univ(1) and large Pi/Sigma types (never written in source)."""

    level: int = 0


@dataclass(frozen=True)
class Const(HTerm):
    name: str = ""


@dataclass(frozen=True)
class Pi(HTerm):
    BINDERS = (0, 1)
    dom: HTerm = None
    cod: HTerm = None


@dataclass(frozen=True)
class Lam(HTerm):
    BINDERS = (1,)
    body: HTerm = None


@dataclass(frozen=True)
class App(HTerm):
    BINDERS = (0, 0)
    fn: HTerm = None
    arg: HTerm = None


@dataclass(frozen=True)
class Sigma(HTerm):
    BINDERS = (0, 1)
    dom: HTerm = None
    cod: HTerm = None


@dataclass(frozen=True)
class Pair(HTerm):
    BINDERS = (0, 0)
    fst: HTerm = None
    snd: HTerm = None


@dataclass(frozen=True)
class IndSigma(HTerm):
    BINDERS = (0, 1, 2)
    scrut: HTerm = None
    motive: HTerm = None
    branch: HTerm = None


@dataclass(frozen=True)
class Sum(HTerm):
    BINDERS = (0, 0)
    left: HTerm = None
    right: HTerm = None


@dataclass(frozen=True)
class Inl(HTerm):
    BINDERS = (0,)
    arg: HTerm = None


@dataclass(frozen=True)
class Inr(HTerm):
    BINDERS = (0,)
    arg: HTerm = None


@dataclass(frozen=True)
class IndSum(HTerm):
    BINDERS = (0, 1, 1, 1)
    scrut: HTerm = None
    motive: HTerm = None
    left_branch: HTerm = None
    right_branch: HTerm = None


@dataclass(frozen=True)
class Zero(HTerm):
    pass


@dataclass(frozen=True)
class IndZero(HTerm):
    BINDERS = (0, 1)
    scrut: HTerm = None
    motive: HTerm = None


@dataclass(frozen=True)
class One(HTerm):
    pass


@dataclass(frozen=True)
class Star(HTerm):
    pass


@dataclass(frozen=True)
class IndOne(HTerm):
    BINDERS = (0, 1, 0)
    scrut: HTerm = None
    motive: HTerm = None
    branch: HTerm = None


@dataclass(frozen=True)
class Nat(HTerm):
    pass


@dataclass(frozen=True)
class ZeroN(HTerm):
    pass


@dataclass(frozen=True)
class Succ(HTerm):
    BINDERS = (0,)
    pred: HTerm = None


@dataclass(frozen=True)
class IndNat(HTerm):
    BINDERS = (0, 1, 0, 2)
    scrut: HTerm = None
    motive: HTerm = None
    zero_branch: HTerm = None
    succ_branch: HTerm = None  # binds (n, ih)


@dataclass(frozen=True)
class ListT(HTerm):
    BINDERS = (0,)
    elem: HTerm = None


@dataclass(frozen=True)
class Nil(HTerm):
    pass


@dataclass(frozen=True)
class Cons(HTerm):
    BINDERS = (0, 0)
    tail: HTerm = None
    head: HTerm = None


@dataclass(frozen=True)
class IndList(HTerm):
    BINDERS = (0, 1, 0, 3)
    scrut: HTerm = None
    motive: HTerm = None
    nil_branch: HTerm = None
    cons_branch: HTerm = None  # binds (tail, head, ih)


@dataclass(frozen=True)
class Id(HTerm):
    BINDERS = (0, 0, 0)
    ty: HTerm = None
    lhs: HTerm = None
    rhs: HTerm = None


@dataclass(frozen=True)
class Refl(HTerm):
    BINDERS = (0,)
    arg: HTerm = None


@dataclass(frozen=True)
class IndId(HTerm):
    BINDERS = (0, 3, 1)
    scrut: HTerm = None
    motive: HTerm = None  # binds (lhs, rhs, path)
    branch: HTerm = None  # binds the diagonal point


@dataclass(frozen=True)
class Trunc(HTerm):
    BINDERS = (0,)
    inner: HTerm = None


@dataclass(frozen=True)
class TruncIn(HTerm):
    BINDERS = (0,)
    arg: HTerm = None


@dataclass(frozen=True)
class IndTrunc(HTerm):
    BINDERS = (0, 0, 1, 0)
    scrut: HTerm = None
    motive: HTerm = None  # result type, not depending on the scrutinee
    branch: HTerm = None
    is_prop: HTerm = None  # witness that the motive is an h-proposition


@dataclass(frozen=True)
class Quot(HTerm):
    BINDERS = (0, 0, 0)
    base: HTerm = None
    rel: HTerm = None  # function base -> base -> Univ(0)
    equiv: HTerm = None  # witness that rel is an equivalence relation


@dataclass(frozen=True)
class QMap(HTerm):
    BINDERS = (0,)
    arg: HTerm = None


@dataclass(frozen=True)
class IndQuot(HTerm):
    BINDERS = (0, 0, 1, 0)
    scrut: HTerm = None
    motive: HTerm = None  # result type, not depending on the scrutinee
    branch: HTerm = None
    respects: HTerm = None  # forall x y, R x y -> Id(motive, branch x, branch y)


@dataclass(frozen=True)
class QEff(HTerm):
    """Effectiveness of set quotients: from a path between classes produce
    relatedness of the representatives.  Inert under reduction."""

    BINDERS = (0, 0, 0)
    lhs: HTerm = None
    rhs: HTerm = None
    path: HTerm = None


@dataclass(frozen=True)
class FVar(HTerm):
    """Free-variable placeholder used only while building terms with the
    named-binder helpers; never appears in checked terms."""

    uid: int = 0


def _term_fields(t: HTerm):
    binders = type(t).BINDERS
    fs = [f for f in fields(t) if f.name != "BINDERS"]
    out = []
    i = 0
    for f in fs:
        v = getattr(t, f.name)
        if isinstance(v, HTerm):
            out.append((f.name, v, binders[i]))
            i += 1
    return out


def map_children(t: HTerm, fn) -> HTerm:
    """Rebuild ``t`` applying ``fn(child, extra_binders)`` to each term child."""
    tf = _term_fields(t)
    if not tf:
        return t
    changes = {}
    for name, child, nb in tf:
        new = fn(child, nb)
        if new is not child:
            changes[name] = new
    if not changes:
        return t
    kw = {f.name: getattr(t, f.name) for f in fields(t) if f.name != "BINDERS"}
    kw.update(changes)
    return type(t)(**kw)


def shift(t: HTerm, by: int, cutoff: int = 0) -> HTerm:
    """Shift free variables >= cutoff by ``by``."""
    if isinstance(t, Var):
        if t.index >= cutoff:
            if t.index + by < 0:
                raise ScopeError(f"negative index shifting {t}")
            return Var(t.index + by)
        return t
    return map_children(t, lambda c, nb: shift(c, by, cutoff + nb))


def subst(t: HTerm, replacement: HTerm, target: int = 0) -> HTerm:
    """Capture-avoiding substitution of ``replacement`` for ``Var(target)``.

    Variables above ``target`` are decremented, so ``subst(body, a)`` is
    exactly beta-instantiation of a one-binder body.
    """
    if isinstance(t, Var):
        if t.index == target:
            return shift(replacement, target)
        if t.index > target:
            return Var(t.index - 1)
        return t
    return map_children(t, lambda c, nb: subst(c, replacement, target + nb))


def inst(body: HTerm, value: HTerm, extra: int = 0) -> HTerm:
    """Instantiate a one-binder ``body`` with ``value`` while moving the
    result ``extra`` binders deeper (ambient variables shift by ``extra``)."""
    if extra == 0:
        return subst(body, value)
    return subst(shift(body, extra + 1, 1), value)


def reopen(body: HTerm, value: HTerm, entries: int) -> HTerm:
    """Replace a one-binder body's variable with ``value``, where the
    result lives under ``entries`` fresh context entries (ambient
    references shift accordingly; ``entries=0`` is beta-instantiation)."""
    return subst(shift(body, entries, 1), value)


def inst_branch_values(body: HTerm, *values: HTerm) -> HTerm:
    """Instantiate a multi-binder body with ambient-context values, given
    outermost binder first."""
    n = len(values)
    for i, v in enumerate(values):
        body = subst(body, v, n - 1 - i)
    return body


def abstract(t: HTerm, uid: int, depth: int = 0) -> HTerm:
    """Turn the free placeholder ``FVar(uid)`` into ``Var(depth)``."""
    if isinstance(t, FVar):
        if t.uid == uid:
            return Var(depth)
        return t
    if isinstance(t, Var) and t.index >= depth:
        return Var(t.index + 1)
    return map_children(t, lambda c, nb: abstract(c, uid, depth + nb))


def has_fvars(t: HTerm) -> bool:
    if isinstance(t, FVar):
        return True
    return any(has_fvars(c) for _, c, _ in _term_fields(t))


def max_free_index(t: HTerm, depth: int = 0) -> int:
    """Largest free de Bruijn index in ``t`` (-1 if closed)."""
    if isinstance(t, Var):
        return t.index - depth if t.index >= depth else -1
    best = -1
    for _, c, nb in _term_fields(t):
        best = max(best, max_free_index(c, depth + nb))
    return best


def uses_var(t: HTerm, index: int, depth: int = 0) -> bool:
    if isinstance(t, Var):
        return t.index == index + depth
    return any(uses_var(c, index, depth + nb) for _, c, nb in _term_fields(t))


class HContext:
    """Typing telescope; entries ordered outermost first, innermost last.

    ``Var(0)`` refers to the last entry.  Stored types are expressed in the
    prefix context, so lookups shift by index + 1.
    """

    __slots__ = ("entries",)

    def __init__(self, entries=()):
        self.entries = tuple(entries)

    def extend(self, ty: HTerm) -> "HContext":
        return HContext(self.entries + (ty,))

    def lookup(self, index: int) -> HTerm:
        if not 0 <= index < len(self.entries):
            raise ScopeError(f"variable index {index} out of range "
                             f"(context has {len(self.entries)} entries)")
        return shift(self.entries[-1 - index], index + 1)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __eq__(self, other):
        return isinstance(other, HContext) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"HContext({list(self.entries)!r})"


EMPTY = HContext()


def apply_spine(fn: HTerm, *args: HTerm) -> HTerm:
    for a in args:
        fn = App(fn, a)
    return fn


def arrow(dom: HTerm, cod: HTerm) -> HTerm:
    """Non-dependent function type: cod does not use the bound variable."""
    return Pi(dom, shift(cod, 1))


def times(a: HTerm, b: HTerm) -> HTerm:
    """Non-dependent pair type."""
    return Sigma(a, shift(b, 1))


def mk_isprop(t: HTerm) -> HTerm:
    """Pi-encoded statement that ``t`` has propositional identity."""
    return Pi(t, Pi(shift(t, 1), Id(shift(t, 2), Var(1), Var(0))))


def mk_isset(t: HTerm) -> HTerm:
    """Pi-encoded statement that the identity types of ``t`` are propositional."""
    inner = Id(shift(t, 2), Var(1), Var(0))
    return Pi(
        t,
        Pi(
            shift(t, 1),
            Pi(inner, Pi(shift(inner, 1),
                         Id(shift(inner, 2), Var(1), Var(0)))),
        ),
    )


def prop_u0() -> HTerm:
    """The h-set of h-propositions in the first universe (a derived Sigma)."""
    return Sigma(Univ(0), mk_isprop(Var(0)))


def set_u(level: int) -> HTerm:
    """The type of h-sets within the given universe (a derived Sigma)."""
    return Sigma(Univ(level), mk_isset(Var(0)))


def mk_equiv_rel(base: HTerm, rel: HTerm) -> HTerm:
    """Type of proofs that ``rel : base -> base -> Univ(0)`` is an
    equivalence relation: refl x (sym x trans) as nested Sigmas."""
    def r(x, y, lift):
        return apply_spine(shift(rel, lift), x, y)

    refl = Pi(base, r(Var(0), Var(0), 1))
    sym = Pi(base, Pi(shift(base, 1),
                      arrow(r(Var(1), Var(0), 2), r(Var(0), Var(1), 2))))
    trans = Pi(
        base,
        Pi(
            shift(base, 1),
            Pi(
                shift(base, 2),
                arrow(r(Var(2), Var(1), 3),
                      arrow(r(Var(1), Var(0), 3), r(Var(2), Var(0), 3))),
            ),
        ),
    )
    return times(refl, times(sym, trans))
