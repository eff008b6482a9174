"""Rewriting with semigroup relations oriented by deg-lex.

The Chinese monoid rule set consists of five schemas, for letters
``i > j > k``::

    1.  ijk  -> jik
    2.  ikj  -> jik
    3.  ijj  -> jij
    4.  iij  -> iji
    5.  ijik -> ikij

Normal forms are computed with the leftmost redex strategy (shortest lhs
first at a given position). Each step replaces a factor by a deg-lex
smaller word, so reduction always terminates.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .words import Alphabet, Word, as_alphabet, deg_lex_key, format_word

# above this alphabet size the Chinese system matches schemas directly
# instead of instantiating O(n^3) rules
INSTANTIATE_LIMIT = 64


@dataclass(frozen=True)
class Rule:
    lhs: Word
    rhs: Word
    schema: int | None = field(default=None, compare=False)

    def __post_init__(self):
        if not self.lhs:
            raise ValueError("rule lhs must be nonempty")
        if deg_lex_key(self.lhs) <= deg_lex_key(self.rhs):
            raise ValueError(f"rule {self.lhs} -> {self.rhs} is not deg-lex decreasing")

    def format(self, alphabet: Alphabet | int) -> str:
        return f"{format_word(self.lhs, alphabet)} -> {format_word(self.rhs, alphabet)}"


def oriented(u: Sequence[int], v: Sequence[int], schema: int | None = None) -> Rule | None:
    """Rule from the relation ``u = v`` pointing down in deg-lex; None if ``u == v``."""
    u, v = tuple(u), tuple(v)
    if u == v:
        return None
    if deg_lex_key(u) < deg_lex_key(v):
        u, v = v, u
    return Rule(u, v, schema)


class RewriteSystem:
    """A finite set of rules with distinct left-hand sides.

    Identical duplicate rules are merged; two different rules with the
    same lhs raise ``ValueError``.
    """

    def __init__(self, rules: Iterable[Rule], alphabet: Alphabet | int):
        self.alphabet = as_alphabet(alphabet)
        by_lhs: dict[Word, Rule] = {}
        for rule in rules:
            self.alphabet.check(rule.lhs)
            self.alphabet.check(rule.rhs)
            old = by_lhs.get(rule.lhs)
            if old is not None and old.rhs != rule.rhs:
                raise ValueError(f"conflicting rules for lhs {rule.lhs}: {old.rhs} and {rule.rhs}")
            if old is None:
                by_lhs[rule.lhs] = rule
        self._by_lhs = by_lhs
        self._lengths = sorted({len(lhs) for lhs in by_lhs})

    @property
    def rules(self) -> tuple[Rule, ...]:
        return tuple(self._by_lhs.values())

    @property
    def max_lhs_len(self) -> int:
        return self._lengths[-1] if self._lengths else 0

    def __len__(self) -> int:
        return len(self._by_lhs)

    def __iter__(self) -> Iterator[Rule]:
        return iter(self._by_lhs.values())

    def __contains__(self, rule: object) -> bool:
        return isinstance(rule, Rule) and self._by_lhs.get(rule.lhs) == rule

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RewriteSystem):
            return NotImplemented
        return self.alphabet == other.alphabet and set(self) == set(other)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({len(self)} rules, n={self.alphabet.size})"

    def rule_set(self) -> frozenset[tuple[Word, Word]]:
        return frozenset((r.lhs, r.rhs) for r in self)

    def match_at(self, w: Sequence[int], pos: int) -> Rule | None:
        """The rule with the shortest lhs occurring in ``w`` at ``pos``."""
        for length in self._lengths:
            end = pos + length
            if end > len(w):
                return None
            rule = self._by_lhs.get(tuple(w[pos:end]))
            if rule is not None:
                return rule
        return None

    def matches_at(self, w: Sequence[int], pos: int) -> list[Rule]:
        found = []
        for length in self._lengths:
            end = pos + length
            if end > len(w):
                break
            rule = self._by_lhs.get(tuple(w[pos:end]))
            if rule is not None:
                found.append(rule)
        return found

    def without_schema(self, schema: int) -> RewriteSystem:
        return RewriteSystem((r for r in self if r.schema != schema), self.alphabet)


class ChineseSchemaSystem(RewriteSystem):
    """The Chinese rules matched schema by schema, without instantiation.

    Memory use is independent of the alphabet size; ``rules`` is only
    materialised on demand.
    """

    def __init__(self, alphabet: Alphabet | int):
        self.alphabet = as_alphabet(alphabet)
        self._materialised: RewriteSystem | None = None

    def _full(self) -> RewriteSystem:
        if self._materialised is None:
            self._materialised = RewriteSystem(_chinese_rule_list(self.alphabet.size), self.alphabet)
        return self._materialised

    @property
    def rules(self) -> tuple[Rule, ...]:
        return self._full().rules

    @property
    def max_lhs_len(self) -> int:
        return 4 if self.alphabet.size >= 2 else 0

    def __len__(self) -> int:
        n = self.alphabet.size
        return 3 * (n * (n - 1) * (n - 2) // 6) + 2 * (n * (n - 1) // 2)

    def __iter__(self) -> Iterator[Rule]:
        return iter(self.rules)

    def __contains__(self, rule: object) -> bool:
        if not isinstance(rule, Rule):
            return False
        found = self.match_at(rule.lhs, 0)
        return found is not None and found == rule

    def rule_set(self):
        return self._full().rule_set()

    def without_schema(self, schema: int) -> RewriteSystem:
        return self._full().without_schema(schema)

    def match_at(self, w, pos):
        if pos + 3 > len(w):
            return None
        a, b, c = w[pos], w[pos + 1], w[pos + 2]
        if a > b > c:
            return Rule((a, b, c), (b, a, c), 1)
        if a > c > b:
            return Rule((a, b, c), (c, a, b), 2)
        if a > b == c:
            return Rule((a, b, b), (b, a, b), 3)
        if a == b > c:
            return Rule((a, a, c), (a, c, a), 4)
        if pos + 4 <= len(w) and a == c and a > b > w[pos + 3]:
            d = w[pos + 3]
            return Rule((a, b, a, d), (a, d, a, b), 5)
        return None

    def matches_at(self, w, pos):
        rule = self.match_at(w, pos)
        return [] if rule is None else [rule]


def _chinese_rule_list(n: int) -> list[Rule]:
    # combinations of a descending range yield i > j > k
    desc = range(n, 0, -1)
    rules = []
    for i, j, k in combinations(desc, 3):
        rules.append(Rule((i, j, k), (j, i, k), 1))
    for i, j, k in combinations(desc, 3):
        rules.append(Rule((i, k, j), (j, i, k), 2))
    for i, j in combinations(desc, 2):
        rules.append(Rule((i, j, j), (j, i, j), 3))
    for i, j in combinations(desc, 2):
        rules.append(Rule((i, i, j), (i, j, i), 4))
    for i, j, k in combinations(desc, 3):
        rules.append(Rule((i, j, i, k), (i, k, i, j), 5))
    return rules


def chinese_rules(alphabet: Alphabet | int, *, instantiate: bool | None = None) -> RewriteSystem:
    """The Groebner-Shirshov rule set of the Chinese monoid over ``1..n``.

    There are ``3*C(n,3) + 2*C(n,2)`` rules. For large alphabets a
    schema matcher is returned unless ``instantiate`` is forced.
    """
    alphabet = as_alphabet(alphabet)
    if instantiate is None:
        instantiate = alphabet.size <= INSTANTIATE_LIMIT
    if not instantiate:
        return ChineseSchemaSystem(alphabet)
    return RewriteSystem(_chinese_rule_list(alphabet.size), alphabet)


def defining_relations(alphabet: Alphabet | int) -> RewriteSystem:
    """The defining relations of the Chinese monoid, oriented by deg-lex.

    ``ijk = ikj = jik`` for ``i > j > k`` is presented by ``ijk -> jik``
    and ``ikj -> jik``; the two-letter relations give ``ijj -> jij`` and
    ``iij -> iji``.
    """
    alphabet = as_alphabet(alphabet)
    return RewriteSystem(
        (r for r in _chinese_rule_list(alphabet.size) if r.schema != 5), alphabet
    )


def find_redex(w: Sequence[int], sys: RewriteSystem) -> tuple[int, Rule] | None:
    for pos in range(len(w)):
        rule = sys.match_at(w, pos)
        if rule is not None:
            return pos, rule
    return None


def all_redexes(w: Sequence[int], sys: RewriteSystem) -> list[tuple[int, Rule]]:
    return [(pos, rule) for pos in range(len(w)) for rule in sys.matches_at(w, pos)]


def is_irreducible(w: Sequence[int], sys: RewriteSystem) -> bool:
    return find_redex(w, sys) is None


def rewrite_at(w: Sequence[int], pos: int, rule: Rule) -> Word:
    end = pos + len(rule.lhs)
    if tuple(w[pos:end]) != rule.lhs:
        raise ValueError(f"{rule.lhs} does not occur at position {pos}")
    return tuple(w[:pos]) + rule.rhs + tuple(w[end:])


def normalize_counting(w: Sequence[int], sys: RewriteSystem) -> tuple[Word, int]:
    """Leftmost normal form of ``w`` together with the number of steps taken."""
    buf = list(w)
    back = max(sys.max_lhs_len - 1, 0)
    steps = 0
    pos = 0
    while pos < len(buf):
        rule = sys.match_at(buf, pos)
        if rule is None:
            pos += 1
            continue
        buf[pos:pos + len(rule.lhs)] = rule.rhs
        steps += 1
        # only redexes overlapping the rewritten window can be new
        pos = max(pos - back, 0)
    return tuple(buf), steps


def normalize(w: Sequence[int], sys: RewriteSystem) -> Word:
    return normalize_counting(w, sys)[0]


def reduction_path(
    w: Sequence[int], sys: RewriteSystem, rng: random.Random | None = None
) -> list[Word]:
    """Every word visited while reducing ``w``, ending at its normal form.

    Without ``rng`` the leftmost redex is taken; with it a redex is drawn
    uniformly from all redexes of the current word.
    """
    path = [tuple(w)]
    while True:
        cur = path[-1]
        if rng is None:
            hit = find_redex(cur, sys)
        else:
            redexes = all_redexes(cur, sys)
            hit = rng.choice(redexes) if redexes else None
        if hit is None:
            return path
        path.append(rewrite_at(cur, *hit))


def descendants(w: Sequence[int], sys: RewriteSystem) -> set[Word]:
    """Every word reachable from ``w`` by rewriting steps in any order, ``w`` included."""
    start = tuple(w)
    seen = {start}
    stack = [start]
    while stack:
        cur = stack.pop()
        for pos, rule in all_redexes(cur, sys):
            nxt = rewrite_at(cur, pos, rule)
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return seen
