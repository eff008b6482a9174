"""Normal forms and a Groebner-Shirshov basis for the Chinese monoid."""

from .gsbasis import (
    Ambiguity,
    Composition,
    CompletionBounds,
    CompletionResult,
    Kind,
    VerificationReport,
    complete,
    composition,
    enumerate_ambiguities,
    inter_reduce,
    is_trivial,
    verify_gs,
)
from .insertion import (
    Staircase,
    insert,
    is_staircase_word,
    staircase_to_word,
    word_to_staircase,
)
from .oracle import CongruenceClass, congruence_class, congruent, count_classes
from .rewriting import (
    RewriteSystem,
    Rule,
    chinese_rules,
    defining_relations,
    find_redex,
    is_irreducible,
    normalize,
)
from .words import Alphabet, Word, deg_lex_compare, format_word, parse_word

__version__ = "0.1.0"
