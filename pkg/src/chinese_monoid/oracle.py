"""Brute-force ground truth for the Chinese congruence.

Works directly from the defining relations, for ``i > j > k``::

    ijk = ikj = jik        ijj = jij        iij = iji

and knows nothing about the rewriting rules or the insertion algorithm.
Every relation preserves length, so the class of a word is a finite
subset of the words of its length and breadth-first search closes it.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .words import Alphabet, Word, as_alphabet, deg_lex_key

DEFAULT_MAX_LENGTH = 10
DEFAULT_BUDGET = 10**7


class OracleLimitError(ValueError):
    """The requested enumeration is larger than the configured limit."""


def _relation_group(a: int, b: int, c: int) -> tuple[Word, ...] | None:
    """The relation clique over the letters of ``abc``, if there is one."""
    if a == b == c:
        return None
    hi = max(a, b, c)
    lo = min(a, b, c)
    if a != b and b != c and a != c:
        mid = a + b + c - hi - lo
        return ((hi, mid, lo), (hi, lo, mid), (mid, hi, lo))
    if (a, b, c).count(hi) == 2:
        # iij = iji
        return ((hi, hi, lo), (hi, lo, hi))
    # ijj = jij
    return ((hi, lo, lo), (lo, hi, lo))


def neighbours(w: Sequence[int]) -> set[Word]:
    """Words one relation application away from ``w``."""
    w = tuple(w)
    out = set()
    for pos in range(len(w) - 2):
        factor = w[pos:pos + 3]
        group = _relation_group(*factor)
        if group is None or factor not in group:
            continue
        for other in group:
            if other != factor:
                out.add(w[:pos] + other + w[pos + 3:])
    return out


@dataclass(frozen=True)
class CongruenceClass:
    representative: Word
    members: frozenset[Word]

    def __post_init__(self):
        lengths = {len(m) for m in self.members}
        assert lengths <= {len(self.representative)}, "relations must preserve length"

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, w: object) -> bool:
        return tuple(w) in self.members  # type: ignore[arg-type]

    @property
    def least(self) -> Word:
        return min(self.members, key=deg_lex_key)


def congruence_class(w: Sequence[int], max_length: int = DEFAULT_MAX_LENGTH) -> CongruenceClass:
    w = tuple(w)
    if len(w) > max_length:
        raise OracleLimitError(
            f"word of length {len(w)} exceeds the oracle limit {max_length}; "
            "class sizes grow quickly with length, raise max_length to force it"
        )
    seen = {w}
    queue = deque([w])
    while queue:
        cur = queue.popleft()
        for nxt in neighbours(cur):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return CongruenceClass(w, frozenset(seen))


def congruent(u: Sequence[int], v: Sequence[int], max_length: int = DEFAULT_MAX_LENGTH) -> bool:
    u, v = tuple(u), tuple(v)
    if len(u) != len(v):
        return False
    return v in congruence_class(u, max_length).members


def all_classes(
    alphabet: Alphabet | int, length: int, budget: int = DEFAULT_BUDGET
) -> list[CongruenceClass]:
    """Partition every word of ``length`` into classes, in deg-lex order of first member."""
    alphabet = as_alphabet(alphabet)
    total = alphabet.size**length
    if total > budget:
        raise OracleLimitError(
            f"{alphabet.size}^{length} = {total} words exceeds the enumeration budget {budget}"
        )
    seen: set[Word] = set()
    classes = []
    for w in alphabet.words(length):
        if w in seen:
            continue
        cls = congruence_class(w, max_length=length)
        seen |= cls.members
        classes.append(cls)
    return classes


def count_classes(alphabet: Alphabet | int, length: int, budget: int = DEFAULT_BUDGET) -> int:
    return len(all_classes(alphabet, length, budget))
