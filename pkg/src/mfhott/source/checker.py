"""Generic derivation checker: pure rule-schema validation.

Each rule is a function receiving the node (premises already validated);
it raises RuleError when the premises do not match the schema.  The
checker never evaluates or converts source terms: definitional equality
at the source levels is itself derived, judgement by judgement.
"""

from __future__ import annotations

from dataclasses import dataclass

from .judgements import (CtxWF, EqTerm, EqType, HasType, IsType, Judgement,
                         Node, Telescope)
from .terms import STerm, shift


class RuleError(Exception):
    def __init__(self, msg, expected=None, found=None):
        super().__init__(msg)
        self.expected = expected
        self.found = found


@dataclass
class ScriptError(Exception):
    path: tuple
    rule: str
    message: str
    expected: object = None
    found: object = None

    def __str__(self):
        loc = ".".join(str(i) for i in self.path) or "root"
        return f"[{loc}] {self.rule}: {self.message}"


class RuleRegistry:
    def __init__(self, prefix: str):
        self.prefix = prefix
        self.rules = {}
        self.sources = {}

    def rule(self, name: str, source: str):
        full = f"{self.prefix}/{name}"

        def deco(fn):
            if full in self.rules:
                raise ValueError(f"duplicate rule {full}")
            self.rules[full] = fn
            self.sources[full] = source
            return fn

        return deco

    def names(self):
        return sorted(self.rules)


def check_script(registry: RuleRegistry, script: Node) -> None:
    """Validate every node; raises ScriptError at the first failure.

    Derivations are directed acyclic graphs (sub-derivations may be
    shared); each node object is validated once."""
    _check(registry, script, (), set())


def _check(registry, node, path, seen):
    if id(node) in seen:
        return
    for i, p in enumerate(node.premises):
        _check(registry, p, path + (i,), seen)
    fn = registry.rules.get(node.rule)
    if fn is None:
        raise ScriptError(path, node.rule, "no such rule")
    try:
        fn(node)
    except RuleError as e:
        raise ScriptError(path, node.rule, str(e), e.expected, e.found) from e
    seen.add(id(node))


def lint(registry: RuleRegistry, script: Node, printer) -> str:
    """Human-readable verdict; shows the first failing node."""
    try:
        check_script(registry, script)
        return "ok"
    except ScriptError as e:
        lines = [f"failure at node {'.'.join(map(str, e.path)) or 'root'} "
                 f"({e.rule}): {e.message}"]
        if e.expected is not None:
            lines.append(f"  expected: {printer(e.expected)}")
        if e.found is not None:
            lines.append(f"  found:    {printer(e.found)}")
        return "\n".join(lines)


def rules_used(script: Node) -> set:
    out = set()
    seen = set()

    def go(n):
        if id(n) in seen:
            return
        seen.add(id(n))
        out.add(n.rule)
        for p in n.premises:
            go(p)

    go(script)
    return out


def node_count(script: Node) -> int:
    seen = set()

    def go(n):
        if id(n) in seen:
            return
        seen.add(id(n))
        for p in n.premises:
            go(p)

    go(script)
    return len(seen)


def weaken_script(script: Node, name: str, ty_node: Node,
                  prefix: str) -> Node:
    """Insert a fresh outermost context entry into every judgement.

    ``ty_node`` must derive the new entry's type in the empty context.
    Inner indices are unaffected because indices count from the innermost
    end; empty-context nodes become context extensions by the new entry.
    """
    ty_j = ty_node.conclusion
    if not isinstance(ty_j, IsType) or len(ty_j.ctx) != 0:
        raise ValueError("entry derivation must form a closed type")
    ty = ty_j.ty
    emp = Node(f"{prefix}/ctx-emp", (), CtxWF(Telescope()))

    def wt(tel: Telescope) -> Telescope:
        return Telescope((ty,) + tel.types, (name,) + tel.names)

    def wj(j: Judgement) -> Judgement:
        if isinstance(j, CtxWF):
            return CtxWF(wt(j.ctx))
        if isinstance(j, IsType):
            return IsType(j.sort, j.ty, wt(j.ctx))
        if isinstance(j, EqType):
            return EqType(j.sort, j.lhs, j.rhs, wt(j.ctx))
        if isinstance(j, HasType):
            return HasType(j.term, j.ty, wt(j.ctx))
        if isinstance(j, EqTerm):
            return EqTerm(j.lhs, j.rhs, j.ty, wt(j.ctx))
        raise ValueError(j)

    memo = {}

    def go(node: Node) -> Node:
        hit = memo.get(id(node))
        if hit is not None:
            return hit
        concl = wj(node.conclusion)
        if node.rule == f"{prefix}/ctx-emp":
            out = Node(f"{prefix}/ctx-ext", (emp, ty_node), concl)
        else:
            out = Node(node.rule, tuple(go(p) for p in node.premises),
                       concl)
        memo[id(node)] = out
        return out

    return go(script)


# --- shared assertion helpers for rule schemas ------------------------------


def need(cond: bool, msg: str, expected=None, found=None):
    if not cond:
        raise RuleError(msg, expected, found)


def premises(node: Node, n: int):
    need(len(node.premises) == n,
         f"expected {n} premises, got {len(node.premises)}")
    return [p.conclusion for p in node.premises]


def as_kind(j: Judgement, kind, what: str):
    need(isinstance(j, kind), f"{what}: expected a {kind.__name__} judgement",
         found=j)
    return j


def same_ctx(a, b, what: str):
    need(a == b, f"{what}: context mismatch", expected=a, found=b)


def extends(base: Telescope, ext: Telescope, by, what: str):
    need(ext.types == base.types + tuple(by),
         f"{what}: context must extend the base by the stated entries",
         expected=Telescope(base.types + tuple(by)), found=ext)


def inst1(body: STerm, value: STerm, extra: int = 0) -> STerm:
    """Open a one-binder body with ``value`` while moving ``extra`` binders
    deeper (mirrors the kernel helper)."""
    from .terms import subst
    if extra == 0:
        return subst(body, value)
    return subst(shift(body, extra + 1, 1), value)
