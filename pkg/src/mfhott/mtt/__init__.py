"""Derivation checking for the intensional level."""

from ..source import (MTT_GRAMMAR, ScriptError, check_script, lint,
                      parse_script, print_judgement, rules_used,
                      weaken_script)
from ..source.terms import subst as mtt_subst
from .rules import MANIFEST, R as RULES


def parse_mtt(text):
    return parse_script(MTT_GRAMMAR, text)


def check_mtt(script):
    """Validate a parsed derivation; raises ScriptError on failure."""
    check_script(RULES, script)


def _pp(j):
    try:
        return print_judgement(MTT_GRAMMAR, j)
    except Exception:
        return repr(j)


def lint_mtt(script):
    return lint(RULES, script, _pp)
