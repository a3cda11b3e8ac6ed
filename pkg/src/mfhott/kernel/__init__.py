from .terms import (App, Cons, Const, FVar, HContext, HTerm, Id, IndId,
                    IndList, IndNat, IndOne, IndQuot, IndSigma, IndSum,
                    IndTrunc, IndZero, Inl, Inr, KernelError, Lam, ListT,
                    Nat, Nil, One, Pair, Pi, QEff, QMap, Quot, Refl,
                    ScopeError, Sigma, Star, Succ, Sum, Trunc, TruncIn, Univ,
                    Var, Zero, ZeroN, EMPTY, abstract, apply_spine, arrow,
                    inst, inst_branch_values, max_free_index, mk_equiv_rel,
                    mk_isprop, mk_isset, prop_u0, reopen, set_u, shift,
                    subst, times, uses_var)
from .reduce import conv, whnf
from .check import (AxiomTable, CannotInfer, MissingWitness, MotiveMismatch,
                    TypeMismatch, UniverseError, check, check_is_type, infer,
                    level_of_type)
from .build import app, bind, lam, lams, pi, sigma
from .sexpr import ParseError, parse_term, print_term, read_sexprs, term_of_sexpr

__all__ = [n for n in dir() if not n.startswith("_")]
