"""Independent substitution oracle: named variables, naive fresh renaming.

Deliberately written against a separate named-tree representation so it
shares no code with the package's nameless substitution.  Conversion
functions bridge the two; the property tests in test_subst.py compare the
two routes on random terms.
"""

from __future__ import annotations

import itertools

from mfhott.kernel import (App, Id, IndId, IndSigma, Lam, Pair, Pi, Refl,
                           Sigma, Star, Trunc, TruncIn, Var)

_fresh = itertools.count(1000)

# Named trees: ("var", name) | ("lam", name, body) | ("pi", dom, name, cod)
# | ("sigma", dom, name, cod) | ("app", f, a) | ("pair", a, b)
# | ("indsigma", scrut, motive_name, motive, x, y, branch)
# | ("id", ty, a, b) | ("refl", a) | ("indid", scrut, a, b, p, motive, x, branch)
# | ("trunc", a) | ("tin", a) | ("star",)


def free_names(t):
    kind = t[0]
    if kind == "var":
        return {t[1]}
    if kind == "star":
        return set()
    if kind == "lam":
        return free_names(t[2]) - {t[1]}
    if kind in ("pi", "sigma"):
        return free_names(t[1]) | (free_names(t[3]) - {t[2]})
    if kind == "app":
        return free_names(t[1]) | free_names(t[2])
    if kind == "pair":
        return free_names(t[1]) | free_names(t[2])
    if kind == "indsigma":
        _, scrut, mn, motive, x, y, branch = t
        return (free_names(scrut) | (free_names(motive) - {mn})
                | (free_names(branch) - {x, y}))
    if kind == "id":
        return free_names(t[1]) | free_names(t[2]) | free_names(t[3])
    if kind == "refl":
        return free_names(t[1])
    if kind == "indid":
        _, scrut, a, b, p, motive, x, branch = t
        return (free_names(scrut)
                | (free_names(motive) - {a, b, p})
                | (free_names(branch) - {x}))
    if kind in ("trunc", "tin"):
        return free_names(t[1])
    raise ValueError(t)


def rename(t, old, new):
    return subst_named(t, old, ("var", new))


def _avoid(names, wanted):
    if wanted not in names:
        return wanted
    return f"r{next(_fresh)}"


def subst_named(t, x, s):
    kind = t[0]
    if kind == "var":
        return s if t[1] == x else t
    if kind == "star":
        return t
    if kind == "app":
        return ("app", subst_named(t[1], x, s), subst_named(t[2], x, s))
    if kind == "pair":
        return ("pair", subst_named(t[1], x, s), subst_named(t[2], x, s))
    if kind == "id":
        return ("id", subst_named(t[1], x, s), subst_named(t[2], x, s),
                subst_named(t[3], x, s))
    if kind == "refl":
        return ("refl", subst_named(t[1], x, s))
    if kind == "trunc":
        return ("trunc", subst_named(t[1], x, s))
    if kind == "tin":
        return ("tin", subst_named(t[1], x, s))
    if kind == "lam":
        _, v, body = t
        if v == x:
            return t
        if v in free_names(s):
            v2 = _avoid(free_names(s) | free_names(body), v)
            body = rename(body, v, v2)
            v = v2
        return ("lam", v, subst_named(body, x, s))
    if kind in ("pi", "sigma"):
        _, dom, v, cod = t
        dom2 = subst_named(dom, x, s)
        if v == x:
            return (kind, dom2, v, cod)
        if v in free_names(s):
            v2 = _avoid(free_names(s) | free_names(cod), v)
            cod = rename(cod, v, v2)
            v = v2
        return (kind, dom2, v, subst_named(cod, x, s))
    if kind == "indsigma":
        _, scrut, mn, motive, bx, by, branch = t
        scrut2 = subst_named(scrut, x, s)
        if mn != x:
            if mn in free_names(s):
                mn2 = _avoid(free_names(s) | free_names(motive), mn)
                motive = rename(motive, mn, mn2)
                mn = mn2
            motive = subst_named(motive, x, s)
        if x not in (bx, by):
            for old in (bx, by):
                if old in free_names(s):
                    new = _avoid(free_names(s) | free_names(branch), old)
                    branch = rename(branch, old, new)
                    if old == bx:
                        bx = new
                    else:
                        by = new
            branch = subst_named(branch, x, s)
        return ("indsigma", scrut2, mn, motive, bx, by, branch)
    if kind == "indid":
        _, scrut, a, b, p, motive, bx, branch = t
        scrut2 = subst_named(scrut, x, s)
        if x not in (a, b, p):
            for i, old in enumerate((a, b, p)):
                if old in free_names(s):
                    new = _avoid(free_names(s) | free_names(motive), old)
                    motive = rename(motive, old, new)
                    if i == 0:
                        a = new
                    elif i == 1:
                        b = new
                    else:
                        p = new
            motive = subst_named(motive, x, s)
        if bx != x:
            if bx in free_names(s):
                new = _avoid(free_names(s) | free_names(branch), bx)
                branch = rename(branch, bx, new)
                bx = new
            branch = subst_named(branch, x, s)
        return ("indid", scrut2, a, b, p, motive, bx, branch)
    raise ValueError(t)


def to_db(t, env):
    """Named tree -> kernel term.  ``env`` lists bound names innermost
    first, then ambient free names in index order."""
    kind = t[0]
    if kind == "var":
        return Var(env.index(t[1]))
    if kind == "star":
        return Star()
    if kind == "lam":
        return Lam(to_db(t[2], [t[1]] + env))
    if kind == "pi":
        return Pi(to_db(t[1], env), to_db(t[3], [t[2]] + env))
    if kind == "sigma":
        return Sigma(to_db(t[1], env), to_db(t[3], [t[2]] + env))
    if kind == "app":
        return App(to_db(t[1], env), to_db(t[2], env))
    if kind == "pair":
        return Pair(to_db(t[1], env), to_db(t[2], env))
    if kind == "indsigma":
        _, scrut, mn, motive, x, y, branch = t
        return IndSigma(to_db(scrut, env), to_db(motive, [mn] + env),
                        to_db(branch, [y, x] + env))
    if kind == "id":
        return Id(to_db(t[1], env), to_db(t[2], env), to_db(t[3], env))
    if kind == "refl":
        return Refl(to_db(t[1], env))
    if kind == "indid":
        _, scrut, a, b, p, motive, x, branch = t
        return IndId(to_db(scrut, env), to_db(motive, [p, b, a] + env),
                     to_db(branch, [x] + env))
    if kind == "trunc":
        return Trunc(to_db(t[1], env))
    if kind == "tin":
        return TruncIn(to_db(t[1], env))
    raise ValueError(t)
