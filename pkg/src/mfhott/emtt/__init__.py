"""Derivation checking for the extensional level."""

from ..source import (EMTT_GRAMMAR, ScriptError, check_script, lint,
                      parse_script, print_judgement, rules_used,
                      weaken_script)
from .rules import MANIFEST, R as RULES


def parse_emtt(text):
    return parse_script(EMTT_GRAMMAR, text)


def check_emtt(script):
    """Validate a parsed derivation; raises ScriptError on failure."""
    check_script(RULES, script)


def _pp(j):
    try:
        return print_judgement(EMTT_GRAMMAR, j)
    except Exception:
        return repr(j)


def lint_emtt(script):
    return lint(RULES, script, _pp)
