from .terms import STerm, SVar, SourceError, shift, subst, subst_many
from .judgements import (CtxWF, EMTT_GRAMMAR, EqTerm, EqType, Grammar,
                         HasType, IsType, MTT_GRAMMAR, Node, PROPISH, SORTS,
                         ScriptParseError, Telescope, parse_judgement,
                         parse_node, parse_script, parse_source_term,
                         print_judgement, print_source_term, sort_le)
from .checker import (RuleError, RuleRegistry, ScriptError, check_script,
                      lint, node_count, rules_used, weaken_script)
