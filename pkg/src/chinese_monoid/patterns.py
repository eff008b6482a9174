"""Letter shapes of the ambiguities between the five Chinese rule schemas.

Each entry names the schema of the left and right rule and spells the
ambiguity word with symbolic letters ``i, j, k, j1, k1``, together with
the order constraints as originally listed. Some listed constraints are
inconsistent with the schemas they accompany, so matching only uses the
shape: which positions carry the same symbol.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .gsbasis import Ambiguity


@dataclass(frozen=True)
class AmbiguityPattern:
    left_schema: int
    right_schema: int
    symbols: tuple[str, ...]
    constraints: str

    def __str__(self) -> str:
        return f"{self.left_schema}^{self.right_schema} {''.join(self.symbols)}  ({self.constraints})"

    def matches(self, amb: Ambiguity, injective: bool = True) -> bool:
        if (amb.left_rule.schema, amb.right_rule.schema) != (self.left_schema, self.right_schema):
            return False
        return shape_matches(self.symbols, amb.overlap_word, injective)


def shape_matches(symbols: Sequence[str], w: Sequence[int], injective: bool = True) -> bool:
    """Whether ``w`` spells ``symbols`` under some assignment of letters.

    The same symbol must always get the same letter. With ``injective``
    distinct symbols must also get distinct letters.
    """
    if len(symbols) != len(w):
        return False
    assign: dict[str, int] = {}
    for sym, x in zip(symbols, w):
        if assign.setdefault(sym, x) != x:
            return False
    return not injective or len(set(assign.values())) == len(assign)


def _p(left: int, right: int, spelled: str, constraints: str) -> AmbiguityPattern:
    return AmbiguityPattern(left, right, tuple(spelled.split()), constraints)


CHINESE_AMBIGUITY_PATTERNS = (
    _p(1, 1, "i j k k1", "i>j>k>k1"),
    _p(1, 1, "i j k j1 k1", "i>j>k>j1>k1"),
    _p(1, 2, "i j j1 k", "i>j>j1>k"),
    _p(1, 2, "i j k j1 k1", "i>j>k>j1>k1"),
    _p(1, 3, "i j k k", "i>j>k"),
    _p(1, 3, "i j k j1 j1", "i>j>k>j1"),
    _p(1, 4, "i j k k j1", "i>j>k>j1"),
    _p(1, 5, "i j k j k1", "i>j>k>k1"),
    _p(1, 5, "i j k j1 k k1", "i>j>k>j1>k1"),
    _p(2, 1, "i k j j1 k1", "i>j>k, j>j1>k1"),
    _p(2, 2, "i k j k1 j1", "i>j>k, j>j1>k1"),
    _p(2, 3, "i k j j1 j1", "i>j>k, j>j1"),
    _p(2, 4, "i k j j j1", "i>j>k, j>j1"),
    _p(2, 5, "i k j j1 j k1", "i>j>k, j>j1>k1"),
    _p(3, 1, "i j j j1 k1", "i>j>j1>k1"),
    _p(3, 2, "i j j k1 j1", "i>j>j1>k1"),
    _p(3, 3, "i j j j1 j1", "i>j>j1"),
    _p(3, 4, "i j j j1", "i>j>j1"),
    _p(3, 5, "i j j j1 j k1", "i>j>j1>k1"),
    _p(4, 1, "i i j k", "i>j>k"),
    _p(4, 1, "i i j j1 k1", "i>j>j1>k1"),
    _p(4, 2, "i i j j1", "i>j1>j"),
    _p(4, 2, "i i j k1 j1", "i>j>j1>k1"),
    _p(4, 3, "i i j j", "i>j"),
    _p(4, 3, "i i j j1 j1", "i>j>j1"),
    _p(4, 4, "i i j j j1", "i>j>j1"),
    _p(4, 5, "i i j i j1", "i>j>j1"),
    _p(4, 5, "i i j k1 j j1", "i>j>j1>k1"),
    _p(5, 1, "i j i k k1", "i>j>k>k1"),
    _p(5, 1, "i j i k j1 k1", "i>j>k>j1>k1"),
    _p(5, 2, "i j i k j1", "i>j>k, i>j1>k"),
    _p(5, 2, "i j i k k1 j1", "i>j>k>j1>k1"),
    _p(5, 3, "i j i k k", "i>j>k"),
    _p(5, 3, "i j i k j1 j1", "i>j>k>j1"),
    _p(5, 4, "i j i k k j1", "i>j>k>j1"),
    _p(5, 5, "i j i k i k1", "i>j>k>k1"),
    _p(5, 5, "i j i k j1 k k1", "i>j>k>k1"),
)


def unmatched_patterns(
    ambiguities: Iterable[Ambiguity],
    patterns: Sequence[AmbiguityPattern] = CHINESE_AMBIGUITY_PATTERNS,
) -> list[AmbiguityPattern]:
    """Patterns with no ambiguity of exactly their shape."""
    ambiguities = list(ambiguities)
    return [p for p in patterns if not any(p.matches(a) for a in ambiguities)]


def unlisted_ambiguities(
    ambiguities: Iterable[Ambiguity],
    patterns: Sequence[AmbiguityPattern] = CHINESE_AMBIGUITY_PATTERNS,
) -> list[Ambiguity]:
    """Ambiguities that fit no pattern, even letting distinct symbols coincide."""
    return [a for a in ambiguities if not any(p.matches(a, injective=False) for p in patterns)]
