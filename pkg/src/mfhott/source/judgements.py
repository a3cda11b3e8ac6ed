"""Judgement forms, telescopes and the script surface syntax.

A script is a derivation tree: ``(rule-name premise* conclusion)`` where
each premise is itself a script node and the conclusion is one of

    (wf-ctx CTX)
    (is SORT TYPE CTX)
    (eq SORT TYPE TYPE CTX)
    (in TERM TYPE CTX)
    (eq-in TERM TERM TYPE CTX)

with ``CTX`` of the form ``(ctx (x A) (y B) ...)``.  Variables are named in
scripts and resolved to indices at parse time; telescope equality ignores
the names.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import terms as S
from .terms import STerm, SVar, shift

SORTS = ("set", "col", "prop", "props")
PROPISH = ("prop", "props")


def sort_le(a: str, b: str) -> bool:
    if a == b:
        return True
    return (a, b) in {("props", "set"), ("props", "prop"),
                      ("props", "col"), ("set", "col"), ("prop", "col")}


class Telescope:
    """Typing telescope; names kept only for printing."""

    __slots__ = ("types", "names")

    def __init__(self, types=(), names=()):
        self.types = tuple(types)
        self.names = tuple(names) if names else tuple(
            f"x{i}" for i in range(len(self.types)))

    def extend(self, ty: STerm, name: str = None) -> "Telescope":
        return Telescope(self.types + (ty,),
                         self.names + (name or f"x{len(self.types)}",))

    def lookup(self, index: int) -> STerm:
        if not 0 <= index < len(self.types):
            raise S.SourceError(f"variable index {index} out of range")
        return shift(self.types[-1 - index], index + 1)

    def __len__(self):
        return len(self.types)

    def __eq__(self, other):
        return isinstance(other, Telescope) and self.types == other.types

    def __hash__(self):
        return hash(self.types)

    def __repr__(self):
        return f"Telescope({list(self.types)!r})"


@dataclass(frozen=True)
class CtxWF:
    ctx: Telescope


@dataclass(frozen=True)
class IsType:
    sort: str
    ty: STerm
    ctx: Telescope


@dataclass(frozen=True)
class EqType:
    sort: str
    lhs: STerm
    rhs: STerm
    ctx: Telescope


@dataclass(frozen=True)
class HasType:
    term: STerm
    ty: STerm
    ctx: Telescope


@dataclass(frozen=True)
class EqTerm:
    lhs: STerm
    rhs: STerm
    ty: STerm
    ctx: Telescope


Judgement = object


@dataclass(frozen=True)
class Node:
    rule: str
    premises: tuple
    conclusion: Judgement


# ---------------------------------------------------------------------------
# term grammar
#
# spec items: "t" term; ("dombind", ...) a (name TYPE) pair followed
# implicitly by nothing (the pair supplies one argument and one binder);
# ("names", n) a bare name list binding n variables in the next "t".

_SHARED_ATOMS = {
    "n0": S.N0, "n1": S.N1, "star": S.MStar, "eps": S.Eps, "bot": S.Bot,
}

_SHARED_FORMS = {
    "list": (S.MList, ["t"]),
    "sigma": (S.MSigma, ["dombind"]),
    "pi": (S.MPi, ["dombind"]),
    "plus": (S.MPlus, ["t", "t"]),
    "or": (S.MOr, ["t", "t"]),
    "and": (S.MAnd, ["t", "t"]),
    "imp": (S.MImp, ["t", "t"]),
    "forall": (S.MForall, ["dombind"]),
    "exists": (S.MExists, ["dombind"]),
    "pair": (S.MPair, ["t", "t"]),
    "elsigma": (S.ElSigma, ["t", ("names", 2)]),
    "lam": (S.MLam, [("names", 1)]),
    "ap": (S.MAp, ["t", "t"]),
    "inl": (S.MInl, ["t"]),
    "inr": (S.MInr, ["t"]),
    "elplus": (S.ElPlus, ["t", ("names", 1), ("names", 1)]),
    "cons": (S.MCons, ["t", "t"]),
    "ellist": (S.ElList, ["t", "t", ("names", 3)]),
    "emp0": (S.Emp0, ["t"]),
    "eln1": (S.ElN1, ["t", "t"]),
}

_MTT_ATOMS = {
    "props-coll": S.PropColl, "bot-hat": S.BotHat, "top-hat": S.TopHat,
}

_MTT_FORMS = {
    "id": (S.MId, ["t", "t", "t"]),
    "idp": (S.IdIntro, ["t"]),
    "elid": (S.ElId, ["t", ("names", 1)]),
    "r0": (S.R0, ["t"]),
    "propfun": (S.PropFun, ["t"]),
    "tau": (S.Tau, ["t"]),
    "or-hat": (S.OrHat, ["t", "t"]),
    "and-hat": (S.AndHat, ["t", "t"]),
    "imp-hat": (S.ImpHat, ["t", "t"]),
    "forall-hat": (S.ForallHat, ["dombind"]),
    "exists-hat": (S.ExistsHat, ["dombind"]),
    "id-hat": (S.IdHat, ["t", "t", "t"]),
    "lam-imp": (S.LamImp, [("names", 1)]),
    "ap-imp": (S.ApImp, ["t", "t"]),
    "lam-all": (S.LamAll, [("names", 1)]),
    "ap-all": (S.ApAll, ["t", "t"]),
    "pair-and": (S.PairAnd, ["t", "t"]),
    "proj1": (S.Proj1, ["t"]),
    "proj2": (S.Proj2, ["t"]),
    "inl-or": (S.InlOr, ["t"]),
    "inr-or": (S.InrOr, ["t"]),
    "elor": (S.ElOr, ["t", ("names", 1), ("names", 1)]),
    "pair-ex": (S.PairEx, ["t", "t"]),
    "elex": (S.ElEx, ["t", ("names", 2)]),
}

_EMTT_ATOMS = {
    "p-one": S.PowerOne, "true": S.TrueTm,
}

_EMTT_FORMS = {
    "eq-prop": (S.EqProp, ["t", "t", "t"]),
    "pfun": (S.PowerFun, ["t"]),
    "pcls": (S.PCls, ["t"]),
    "quot": (S.MQuot, ["t", ("names", 2)]),
    "qcls": (S.QClass, ["t"]),
    "elq": (S.ElQ, ["t", ("names", 1)]),
}


class Grammar:
    def __init__(self, atoms, forms):
        self.atoms = dict(atoms)
        self.forms = dict(forms)
        self.atom_of = {cls: name for name, cls in self.atoms.items()}
        self.name_of = {cls: name for name, (cls, _) in self.forms.items()}
        self.spec_of = {cls: spec for _, (cls, spec) in self.forms.items()}


MTT_GRAMMAR = Grammar({**_SHARED_ATOMS, **_MTT_ATOMS},
                      {**_SHARED_FORMS, **_MTT_FORMS})
EMTT_GRAMMAR = Grammar({**_SHARED_ATOMS, **_EMTT_ATOMS},
                       {**_SHARED_FORMS, **_EMTT_FORMS})


class ScriptParseError(Exception):
    pass


def parse_source_term(g: Grammar, s, env) -> STerm:
    """``env``: bound names, innermost first."""
    if isinstance(s, str):
        if s in g.atoms:
            return g.atoms[s]()
        if s in env:
            return SVar(env.index(s))
        raise ScriptParseError(f"unknown name or atom {s!r}")
    if not s or not isinstance(s[0], str):
        raise ScriptParseError(f"bad term form {s!r}")
    head, args = s[0], s[1:]
    if head not in g.forms:
        raise ScriptParseError(f"unknown term former {head!r}")
    cls, spec = g.forms[head]
    fields = []
    i = 0
    for item in spec:
        if i >= len(args):
            raise ScriptParseError(f"({head} ...): too few arguments")
        if item == "t":
            fields.append(parse_source_term(g, args[i], env))
            i += 1
        elif item == "dombind":
            pair = args[i]
            if not (isinstance(pair, list) and len(pair) == 2
                    and isinstance(pair[0], str)):
                raise ScriptParseError(
                    f"({head} ...): expected (name TYPE) binder, got {pair!r}")
            name, domx = pair
            dom = parse_source_term(g, domx, env)
            i += 1
            body = parse_source_term(g, args[i], [name] + env)
            i += 1
            fields.append(dom)
            fields.append(body)
        else:  # ("names", n)
            _, n = item
            names = args[i]
            if not (isinstance(names, list) and len(names) == n
                    and all(isinstance(x, str) for x in names)):
                raise ScriptParseError(
                    f"({head} ...): expected {n} binder names, got {names!r}")
            i += 1
            body = parse_source_term(g, args[i], list(reversed(names)) + env)
            i += 1
            fields.append(body)
    if i != len(args):
        raise ScriptParseError(f"({head} ...): too many arguments")
    return cls(*fields)


def print_source_term(g: Grammar, t: STerm, names) -> str:
    cls = type(t)
    if cls in g.atom_of:
        return g.atom_of[cls]
    if isinstance(t, SVar):
        if t.index < len(names):
            return names[t.index]
        return f"?{t.index}"
    name = g.name_of.get(cls)
    if name is None:
        raise ValueError(f"former {cls.__name__} not printable at this level")
    spec = g.spec_of[cls]
    vals = [getattr(t, f) for f in cls.__dataclass_fields__]
    out = [name]
    vi = 0
    fresh = [0]

    def gen():
        fresh[0] += 1
        return f"v{fresh[0] + len(names)}"

    for item in spec:
        if item == "t":
            out.append(print_source_term(g, vals[vi], names))
            vi += 1
        elif item == "dombind":
            dom = vals[vi]
            body = vals[vi + 1]
            vi += 2
            n = gen()
            out.append(f"({n} {print_source_term(g, dom, names)})")
            out.append(print_source_term(g, body, [n] + names))
        else:
            _, k = item
            ns = [gen() for _ in range(k)]
            out.append("(" + " ".join(ns) + ")")
            out.append(print_source_term(g, vals[vi],
                                         list(reversed(ns)) + names))
            vi += 1
    return "(" + " ".join(out) + ")"


# ---------------------------------------------------------------------------
# judgements and scripts


def parse_telescope(g: Grammar, s) -> Telescope:
    if not (isinstance(s, list) and s and s[0] == "ctx"):
        raise ScriptParseError(f"expected (ctx ...), got {s!r}")
    tel = Telescope()
    env: list = []
    for entry in s[1:]:
        if not (isinstance(entry, list) and len(entry) == 2
                and isinstance(entry[0], str)):
            raise ScriptParseError(f"bad context entry {entry!r}")
        name, tyx = entry
        ty = parse_source_term(g, tyx, env)
        tel = tel.extend(ty, name)
        env.insert(0, name)
    return tel


def parse_judgement(g: Grammar, s) -> Judgement:
    if not (isinstance(s, list) and s and isinstance(s[0], str)):
        raise ScriptParseError(f"bad judgement {s!r}")
    head = s[0]
    if head == "wf-ctx":
        if len(s) != 2:
            raise ScriptParseError("(wf-ctx CTX)")
        return CtxWF(parse_telescope(g, s[1]))
    if head == "is":
        if len(s) != 4 or s[1] not in SORTS:
            raise ScriptParseError("(is SORT TYPE CTX)")
        ctx = parse_telescope(g, s[3])
        return IsType(s[1], parse_source_term(g, s[2], _env(ctx)), ctx)
    if head == "eq":
        if len(s) != 5 or s[1] not in SORTS:
            raise ScriptParseError("(eq SORT TYPE TYPE CTX)")
        ctx = parse_telescope(g, s[4])
        env = _env(ctx)
        return EqType(s[1], parse_source_term(g, s[2], env),
                      parse_source_term(g, s[3], env), ctx)
    if head == "in":
        if len(s) != 4:
            raise ScriptParseError("(in TERM TYPE CTX)")
        ctx = parse_telescope(g, s[3])
        env = _env(ctx)
        return HasType(parse_source_term(g, s[1], env),
                       parse_source_term(g, s[2], env), ctx)
    if head == "eq-in":
        if len(s) != 5:
            raise ScriptParseError("(eq-in TERM TERM TYPE CTX)")
        ctx = parse_telescope(g, s[4])
        env = _env(ctx)
        return EqTerm(parse_source_term(g, s[1], env),
                      parse_source_term(g, s[2], env),
                      parse_source_term(g, s[3], env), ctx)
    raise ScriptParseError(f"unknown judgement head {head!r}")


def _env(tel: Telescope):
    return list(reversed(tel.names))


_JUDGEMENT_HEADS = ("wf-ctx", "is", "eq", "in", "eq-in")


def parse_node(g: Grammar, s, defs=None) -> Node:
    defs = defs if defs is not None else {}
    if isinstance(s, list) and len(s) == 2 and s[0] == "ref":
        name = s[1]
        if name not in defs:
            raise ScriptParseError(f"unknown sub-derivation {name!r}")
        return defs[name]
    if not (isinstance(s, list) and s and isinstance(s[0], str)):
        raise ScriptParseError(f"bad script node {s!r}")
    rule = s[0]
    if "/" not in rule:
        raise ScriptParseError(f"expected a rule name, got {rule!r}")
    if len(s) < 2:
        raise ScriptParseError(f"rule {rule}: missing conclusion")
    *premx, conclx = s[1:]
    premises = tuple(parse_node(g, p, defs) for p in premx)
    conclusion = parse_judgement(g, conclx)
    return Node(rule, premises, conclusion)


def parse_script(g: Grammar, text: str) -> Node:
    """One derivation per file; shared sub-derivations may be factored out
    with ``(with-subderivations ((name NODE) ...) MAIN)`` and referenced
    as ``(ref name)``."""
    from ..kernel.sexpr import read_sexprs
    exprs = read_sexprs(text)
    if len(exprs) != 1:
        raise ScriptParseError(f"expected one derivation, found {len(exprs)}")
    s = exprs[0]
    if isinstance(s, list) and s and s[0] == "with-subderivations":
        if len(s) != 3:
            raise ScriptParseError(
                "(with-subderivations ((name NODE) ...) MAIN)")
        defs = {}
        for entry in s[1]:
            if not (isinstance(entry, list) and len(entry) == 2
                    and isinstance(entry[0], str)):
                raise ScriptParseError(f"bad sub-derivation {entry!r}")
            name, nodex = entry
            defs[name] = parse_node(g, nodex, defs)
        return parse_node(g, s[2], defs)
    return parse_node(g, s)


def print_node(g: Grammar, node: Node, indent: int = 0, names=None) -> str:
    names = names or {}
    pad = "  " * indent
    if id(node) in names:
        return f"{pad}(ref {names[id(node)]})"
    parts = [f"{pad}({node.rule}"]
    for p in node.premises:
        parts.append(print_node(g, p, indent + 1, names))
    parts.append("  " * (indent + 1) + print_judgement(g, node.conclusion)
                 + ")")
    return "\n".join(parts)


def print_script(g: Grammar, root: Node) -> str:
    """Factor out every multiply-referenced sub-derivation."""
    refcount = {}
    order = []

    def count(n):
        refcount[id(n)] = refcount.get(id(n), 0) + 1
        if refcount[id(n)] == 1:
            for p in n.premises:
                count(p)
            order.append(n)

    count(root)
    shared = [n for n in order
              if refcount[id(n)] > 1 and n is not root and n.premises]
    if not shared:
        return print_node(g, root)
    names = {}
    lines = ["(with-subderivations ("]
    for i, n in enumerate(shared):
        # print each definition with previously named nodes folded
        body = print_node(g, n, 2, names)
        names[id(n)] = f"d{i}"
        lines.append(f"  (d{i}\n{body})")
    lines.append(" )")
    lines.append(print_node(g, root, 1, names))
    lines.append(")")
    return "\n".join(lines)


def print_judgement(g: Grammar, j: Judgement) -> str:
    def pt(tel: Telescope) -> str:
        parts = []
        env: list = []
        for name, ty in zip(tel.names, tel.types):
            parts.append(f"({name} {print_source_term(g, ty, env)})")
            env.insert(0, name)
        return "(ctx " + " ".join(parts) + ")"

    if isinstance(j, CtxWF):
        return f"(wf-ctx {pt(j.ctx)})"
    env = _env(j.ctx)
    if isinstance(j, IsType):
        return f"(is {j.sort} {print_source_term(g, j.ty, env)} {pt(j.ctx)})"
    if isinstance(j, EqType):
        return (f"(eq {j.sort} {print_source_term(g, j.lhs, env)} "
                f"{print_source_term(g, j.rhs, env)} {pt(j.ctx)})")
    if isinstance(j, HasType):
        return (f"(in {print_source_term(g, j.term, env)} "
                f"{print_source_term(g, j.ty, env)} {pt(j.ctx)})")
    if isinstance(j, EqTerm):
        return (f"(eq-in {print_source_term(g, j.lhs, env)} "
                f"{print_source_term(g, j.rhs, env)} "
                f"{print_source_term(g, j.ty, env)} {pt(j.ctx)})")
    raise ValueError(j)
