"""Raw syntax shared by the two source levels.

Nameless variables, same binder-table traversal scheme as the kernel.
The intensional level uses the encodings/decoder and its proof-term
formers; the extensional level uses quotients, the extensional equality
proposition, the singleton power-collection and the unique proof term.
Each level's parser restricts which formers are admitted.
"""

from __future__ import annotations

from dataclasses import dataclass, fields


class SourceError(Exception):
    pass


@dataclass(frozen=True)
class STerm:
    BINDERS = ()


def _term_fields(t: STerm):
    binders = type(t).BINDERS
    out = []
    i = 0
    for f in fields(t):
        v = getattr(t, f.name)
        if isinstance(v, STerm):
            out.append((f.name, v, binders[i]))
            i += 1
    return out


def map_children(t: STerm, fn) -> STerm:
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
    kw = {f.name: getattr(t, f.name) for f in fields(t)}
    kw.update(changes)
    return type(t)(**kw)


def shift(t: STerm, by: int, cutoff: int = 0) -> STerm:
    if isinstance(t, SVar):
        if t.index >= cutoff:
            if t.index + by < 0:
                raise SourceError(f"negative index shifting {t}")
            return SVar(t.index + by)
        return t
    return map_children(t, lambda c, nb: shift(c, by, cutoff + nb))


def subst(t: STerm, replacement: STerm, target: int = 0) -> STerm:
    """Capture-avoiding; same conventions as the kernel substitution."""
    if isinstance(t, SVar):
        if t.index == target:
            return shift(replacement, target)
        if t.index > target:
            return SVar(t.index - 1)
        return t
    return map_children(t, lambda c, nb: subst(c, replacement, target + nb))


def subst_many(t: STerm, values) -> STerm:
    """Substitute for binders 0..n-1 given values outermost-first."""
    n = len(values)
    for i, v in enumerate(values):
        t = subst(t, v, n - 1 - i)
    return t


def max_free_index(t: STerm, depth: int = 0) -> int:
    if isinstance(t, SVar):
        return t.index - depth if t.index >= depth else -1
    best = -1
    for _, c, nb in _term_fields(t):
        best = max(best, max_free_index(c, depth + nb))
    return best


# --- variables -------------------------------------------------------------

@dataclass(frozen=True)
class SVar(STerm):
    index: int = 0


# --- set formers (both levels) ----------------------------------------------

@dataclass(frozen=True)
class N0(STerm):
    pass


@dataclass(frozen=True)
class N1(STerm):
    pass


@dataclass(frozen=True)
class MList(STerm):
    BINDERS = (0,)
    elem: STerm = None


@dataclass(frozen=True)
class MSigma(STerm):
    BINDERS = (0, 1)
    dom: STerm = None
    cod: STerm = None


@dataclass(frozen=True)
class MPi(STerm):
    BINDERS = (0, 1)
    dom: STerm = None
    cod: STerm = None


@dataclass(frozen=True)
class MPlus(STerm):
    BINDERS = (0, 0)
    left: STerm = None
    right: STerm = None


# --- propositions (type formers, both levels) -------------------------------

@dataclass(frozen=True)
class Bot(STerm):
    pass


@dataclass(frozen=True)
class MOr(STerm):
    BINDERS = (0, 0)
    left: STerm = None
    right: STerm = None


@dataclass(frozen=True)
class MAnd(STerm):
    BINDERS = (0, 0)
    left: STerm = None
    right: STerm = None


@dataclass(frozen=True)
class MImp(STerm):
    BINDERS = (0, 0)
    left: STerm = None
    right: STerm = None


@dataclass(frozen=True)
class MForall(STerm):
    BINDERS = (0, 1)
    dom: STerm = None
    body: STerm = None


@dataclass(frozen=True)
class MExists(STerm):
    BINDERS = (0, 1)
    dom: STerm = None
    body: STerm = None


@dataclass(frozen=True)
class MId(STerm):
    """Intensional propositional equality (first level only)."""

    BINDERS = (0, 0, 0)
    ty: STerm = None
    lhs: STerm = None
    rhs: STerm = None


@dataclass(frozen=True)
class EqProp(STerm):
    """Extensional propositional equality (second level only)."""

    BINDERS = (0, 0, 0)
    ty: STerm = None
    lhs: STerm = None
    rhs: STerm = None


# --- collections ------------------------------------------------------------

@dataclass(frozen=True)
class PropColl(STerm):
    """The collection of small propositions (first level)."""


@dataclass(frozen=True)
class PropFun(STerm):
    """Small propositional functions over a set (first level)."""

    BINDERS = (0,)
    dom: STerm = None


@dataclass(frozen=True)
class PowerOne(STerm):
    """Power-collection of the singleton (second level)."""


@dataclass(frozen=True)
class PowerFun(STerm):
    """Power-collection of a set (second level)."""

    BINDERS = (0,)
    dom: STerm = None


# --- quotients (second level) -----------------------------------------------

@dataclass(frozen=True)
class MQuot(STerm):
    BINDERS = (0, 2)
    base: STerm = None
    rel: STerm = None  # two binders: the related pair


@dataclass(frozen=True)
class QClass(STerm):
    BINDERS = (0,)
    arg: STerm = None


@dataclass(frozen=True)
class ElQ(STerm):
    BINDERS = (0, 1)
    scrut: STerm = None
    branch: STerm = None


# --- terms: sets (both levels) ----------------------------------------------

@dataclass(frozen=True)
class MStar(STerm):
    pass


@dataclass(frozen=True)
class ElN1(STerm):
    BINDERS = (0, 0)
    scrut: STerm = None
    branch: STerm = None


@dataclass(frozen=True)
class Emp0(STerm):
    BINDERS = (0,)
    arg: STerm = None


@dataclass(frozen=True)
class MPair(STerm):
    BINDERS = (0, 0)
    fst: STerm = None
    snd: STerm = None


@dataclass(frozen=True)
class ElSigma(STerm):
    BINDERS = (0, 2)
    scrut: STerm = None
    branch: STerm = None


@dataclass(frozen=True)
class MLam(STerm):
    BINDERS = (1,)
    body: STerm = None


@dataclass(frozen=True)
class MAp(STerm):
    BINDERS = (0, 0)
    fn: STerm = None
    arg: STerm = None


@dataclass(frozen=True)
class MInl(STerm):
    BINDERS = (0,)
    arg: STerm = None


@dataclass(frozen=True)
class MInr(STerm):
    BINDERS = (0,)
    arg: STerm = None


@dataclass(frozen=True)
class ElPlus(STerm):
    BINDERS = (0, 1, 1)
    scrut: STerm = None
    left_branch: STerm = None
    right_branch: STerm = None


@dataclass(frozen=True)
class Eps(STerm):
    pass


@dataclass(frozen=True)
class MCons(STerm):
    BINDERS = (0, 0)
    tail: STerm = None
    head: STerm = None


@dataclass(frozen=True)
class ElList(STerm):
    BINDERS = (0, 0, 3)
    scrut: STerm = None
    nil_branch: STerm = None
    cons_branch: STerm = None  # binds (tail, head, ih)


# --- terms: intensional propositions (first level) ---------------------------

@dataclass(frozen=True)
class R0(STerm):
    BINDERS = (0,)
    arg: STerm = None


@dataclass(frozen=True)
class IdIntro(STerm):
    BINDERS = (0,)
    arg: STerm = None


@dataclass(frozen=True)
class ElId(STerm):
    BINDERS = (0, 1)
    scrut: STerm = None
    branch: STerm = None


@dataclass(frozen=True)
class LamImp(STerm):
    BINDERS = (1,)
    body: STerm = None


@dataclass(frozen=True)
class ApImp(STerm):
    BINDERS = (0, 0)
    fn: STerm = None
    arg: STerm = None


@dataclass(frozen=True)
class LamAll(STerm):
    BINDERS = (1,)
    body: STerm = None


@dataclass(frozen=True)
class ApAll(STerm):
    BINDERS = (0, 0)
    fn: STerm = None
    arg: STerm = None


@dataclass(frozen=True)
class PairAnd(STerm):
    BINDERS = (0, 0)
    fst: STerm = None
    snd: STerm = None


@dataclass(frozen=True)
class Proj1(STerm):
    BINDERS = (0,)
    arg: STerm = None


@dataclass(frozen=True)
class Proj2(STerm):
    BINDERS = (0,)
    arg: STerm = None


@dataclass(frozen=True)
class InlOr(STerm):
    BINDERS = (0,)
    arg: STerm = None


@dataclass(frozen=True)
class InrOr(STerm):
    BINDERS = (0,)
    arg: STerm = None


@dataclass(frozen=True)
class ElOr(STerm):
    BINDERS = (0, 1, 1)
    scrut: STerm = None
    left_branch: STerm = None
    right_branch: STerm = None


@dataclass(frozen=True)
class PairEx(STerm):
    BINDERS = (0, 0)
    fst: STerm = None
    snd: STerm = None


@dataclass(frozen=True)
class ElEx(STerm):
    BINDERS = (0, 2)
    scrut: STerm = None
    branch: STerm = None


# --- encodings of small propositions (first level) ---------------------------

@dataclass(frozen=True)
class BotHat(STerm):
    pass


@dataclass(frozen=True)
class TopHat(STerm):
    pass


@dataclass(frozen=True)
class OrHat(STerm):
    BINDERS = (0, 0)
    left: STerm = None
    right: STerm = None


@dataclass(frozen=True)
class AndHat(STerm):
    BINDERS = (0, 0)
    left: STerm = None
    right: STerm = None


@dataclass(frozen=True)
class ImpHat(STerm):
    BINDERS = (0, 0)
    left: STerm = None
    right: STerm = None


@dataclass(frozen=True)
class ForallHat(STerm):
    BINDERS = (0, 1)
    dom: STerm = None
    body: STerm = None


@dataclass(frozen=True)
class ExistsHat(STerm):
    BINDERS = (0, 1)
    dom: STerm = None
    body: STerm = None


@dataclass(frozen=True)
class IdHat(STerm):
    BINDERS = (0, 0, 0)
    ty: STerm = None
    lhs: STerm = None
    rhs: STerm = None


@dataclass(frozen=True)
class Tau(STerm):
    """Decoder from the collection of small propositions."""

    BINDERS = (0,)
    code: STerm = None


# --- the unique proposition proof (second level) ------------------------------

@dataclass(frozen=True)
class TrueTm(STerm):
    pass


@dataclass(frozen=True)
class PCls(STerm):
    """Element of the singleton power-collection classifying a small
    proposition (second level)."""

    BINDERS = (0,)
    arg: STerm = None

