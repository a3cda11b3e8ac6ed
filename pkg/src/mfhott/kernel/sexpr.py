"""S-expression surface syntax for kernel terms.

One form per node kind; the printer is the inverse of the parser up to
whitespace.  The parser additionally accepts a few pure abbreviations
(``arrow``, ``times``, ``isprop``, ``isset``, ``set-u``, ``prop-u0`` and
n-ary ``app``) which expand at parse time and are never printed.
"""

from __future__ import annotations

from .terms import (App, Cons, Const, HTerm, Id, IndId, IndList, IndNat,
                    IndOne, IndQuot, IndSigma, IndSum, IndTrunc, IndZero,
                    Inl, Inr, Lam, ListT, Nat, Nil, One, Pair, Pi, QEff,
                    QMap, Quot, Refl, Sigma, Star, Succ, Sum, Trunc, TruncIn,
                    Univ, Var, Zero, ZeroN, arrow, mk_isprop, mk_isset,
                    prop_u0, set_u, times)


class ParseError(Exception):
    pass


def tokenize(text: str):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c in " \t\r\n":
            i += 1
        elif c == ";":
            while i < n and text[i] != "\n":
                i += 1
        elif c in "()":
            tokens.append(c)
            i += 1
        else:
            j = i
            while j < n and text[j] not in " \t\r\n();":
                j += 1
            tokens.append(text[i:j])
            i = j
    return tokens


def read_sexprs(text: str):
    """Parse the generic nested-list structure (atoms are strings)."""
    tokens = tokenize(text)
    pos = 0

    def rd():
        nonlocal pos
        if pos >= len(tokens):
            raise ParseError("unexpected end of input")
        tok = tokens[pos]
        pos += 1
        if tok == "(":
            items = []
            while True:
                if pos >= len(tokens):
                    raise ParseError("unclosed parenthesis")
                if tokens[pos] == ")":
                    pos += 1
                    return items
                items.append(rd())
        if tok == ")":
            raise ParseError("unbalanced ')'")
        return tok

    out = []
    while pos < len(tokens):
        out.append(rd())
    return out


_ATOMS = {
    "empty": Zero,
    "unit": One,
    "star": Star,
    "nat": Nat,
    "zero": ZeroN,
    "nil": Nil,
}

_FORMS = {
    "var": (Var, 1),
    "univ": (Univ, 1),
    "pi": (Pi, 2),
    "lam": (Lam, 1),
    "app": (App, 2),
    "sigma": (Sigma, 2),
    "pair": (Pair, 2),
    "ind-sigma": (IndSigma, 3),
    "sum": (Sum, 2),
    "inl": (Inl, 1),
    "inr": (Inr, 1),
    "ind-sum": (IndSum, 4),
    "ind-empty": (IndZero, 2),
    "ind-unit": (IndOne, 3),
    "succ": (Succ, 1),
    "ind-nat": (IndNat, 4),
    "list": (ListT, 1),
    "cons": (Cons, 2),
    "ind-list": (IndList, 4),
    "id": (Id, 3),
    "refl": (Refl, 1),
    "ind-id": (IndId, 3),
    "trunc": (Trunc, 1),
    "tin": (TruncIn, 1),
    "ind-trunc": (IndTrunc, 4),
    "quot": (Quot, 3),
    "qmap": (QMap, 1),
    "ind-quot": (IndQuot, 4),
    "qeff": (QEff, 3),
}


def term_of_sexpr(s) -> HTerm:
    if isinstance(s, str):
        if s in _ATOMS:
            return _ATOMS[s]()
        if s.isdigit():
            raise ParseError(f"bare number {s!r}; did you mean (var {s})?")
        return Const(s)
    if not s:
        raise ParseError("empty form")
    head = s[0]
    if not isinstance(head, str):
        raise ParseError(f"form head must be a symbol: {head!r}")
    args = s[1:]
    if head in ("var", "univ"):
        if len(args) != 1 or not isinstance(args[0], str) or not args[0].isdigit():
            raise ParseError(f"({head} N) expects a number")
        n = int(args[0])
        if head == "univ" and n not in (0, 1):
            raise ParseError("universe levels are 0 and 1")
        return Var(n) if head == "var" else Univ(n)
    if head == "app":
        if len(args) < 2:
            raise ParseError("(app F A ...) expects at least two arguments")
        t = term_of_sexpr(args[0])
        for a in args[1:]:
            t = App(t, term_of_sexpr(a))
        return t
    if head == "arrow":
        _arity(head, args, 2)
        return arrow(term_of_sexpr(args[0]), term_of_sexpr(args[1]))
    if head == "times":
        _arity(head, args, 2)
        return times(term_of_sexpr(args[0]), term_of_sexpr(args[1]))
    if head == "isprop":
        _arity(head, args, 1)
        return mk_isprop(term_of_sexpr(args[0]))
    if head == "isset":
        _arity(head, args, 1)
        return mk_isset(term_of_sexpr(args[0]))
    if head == "set-u":
        _arity(head, args, 1)
        return set_u(int(args[0]))
    if head == "prop-u0":
        _arity(head, args, 0)
        return prop_u0()
    if head in _FORMS:
        cls, arity = _FORMS[head]
        _arity(head, args, arity)
        return cls(*[term_of_sexpr(a) for a in args])
    raise ParseError(f"unknown form {head!r}")


def _arity(head, args, n):
    if len(args) != n:
        raise ParseError(f"({head} ...) expects {n} arguments, got {len(args)}")


def parse_term(text: str) -> HTerm:
    exprs = read_sexprs(text)
    if len(exprs) != 1:
        raise ParseError(f"expected one term, found {len(exprs)}")
    return term_of_sexpr(exprs[0])


_ATOM_OF = {Zero: "empty", One: "unit", Star: "star", Nat: "nat",
            ZeroN: "zero", Nil: "nil"}

_NAME_OF = {cls: name for name, (cls, _) in _FORMS.items()
            if name not in ("var", "univ", "app")}


def print_term(t: HTerm) -> str:
    cls = type(t)
    if cls in _ATOM_OF:
        return _ATOM_OF[cls]
    if isinstance(t, Var):
        return f"(var {t.index})"
    if isinstance(t, Univ):
        return f"(univ {t.level})"
    if isinstance(t, Const):
        return t.name
    if isinstance(t, App):
        return f"(app {print_term(t.fn)} {print_term(t.arg)})"
    name = _NAME_OF.get(cls)
    if name is None:
        raise ValueError(f"unprintable node {t!r}")
    parts = [print_term(getattr(t, f))
             for f in cls.__dataclass_fields__
             if f != "BINDERS"]
    return f"({name} {' '.join(parts)})"
