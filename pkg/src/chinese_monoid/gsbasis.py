"""Ambiguities, compositions, Groebner-Shirshov checks and completion.

All relations are semigroup relations ``u - v``, so a polynomial is just
an ordered pair of words and every composition is again such a pair.

A composition ``(p, q)`` with ambiguity ``w`` is trivial modulo ``(S, w)``
exactly when ``p`` and ``q`` have the same normal form: every rewriting
step replaces a factor by a smaller word, so all words met while reducing
``p`` and ``q`` stay below ``w`` (the order is monomial), and the chain of
steps from ``p`` down to the common normal form and back up to ``q`` is
the required sum of ``a s b`` terms with ``a s b < w``.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence

from .rewriting import RewriteSystem, Rule, normalize, oriented
from .words import Alphabet, Word, as_alphabet, deg_lex_less

log = logging.getLogger(__name__)


class Kind(str, Enum):
    INTERSECTION = "intersection"
    INCLUSION = "inclusion"


@dataclass(frozen=True)
class Ambiguity:
    left_rule: Rule
    right_rule: Rule
    overlap_word: Word
    kind: Kind
    # lengths of the words a and b: for an intersection
    # w = lhs_left b = a lhs_right, for an inclusion w = lhs_left = a lhs_right b
    offsets: tuple[int, int]

    @property
    def a(self) -> Word:
        return self.overlap_word[: self.offsets[0]]

    @property
    def b(self) -> Word:
        w = self.overlap_word
        return w[len(w) - self.offsets[1]:]


@dataclass(frozen=True)
class Composition:
    ambiguity: Ambiguity
    p: Word
    q: Word


@dataclass
class VerificationReport:
    total_ambiguities: int = 0
    trivial: int = 0
    nontrivial: list[tuple[Ambiguity, Word, Word]] = field(default_factory=list)

    @property
    def is_gs_basis(self) -> bool:
        return not self.nontrivial

    def summary(self) -> str:
        return f"{len(self.nontrivial)} nontrivial / {self.total_ambiguities} ambiguities"


def occurs_in(u: Sequence[int], w: Sequence[int]) -> bool:
    u, w = tuple(u), tuple(w)
    return any(w[i:i + len(u)] == u for i in range(len(w) - len(u) + 1))


def ambiguities_between(f: Rule, g: Rule) -> list[Ambiguity]:
    """Ambiguities with ``f`` on the left and ``g`` on the right."""
    lf, lg = f.lhs, g.lhs
    out = []
    # intersections: a proper suffix of lf equals a proper prefix of lg
    for overlap in range(1, min(len(lf), len(lg))):
        if lf[len(lf) - overlap:] == lg[:overlap]:
            w = lf + lg[overlap:]
            out.append(
                Ambiguity(f, g, w, Kind.INTERSECTION, (len(lf) - overlap, len(lg) - overlap))
            )
    # inclusions: lg is a factor of lf, excluding f inside itself
    for start in range(len(lf) - len(lg) + 1):
        if lf[start:start + len(lg)] == lg:
            if f == g and start == 0:
                continue
            out.append(Ambiguity(f, g, lf, Kind.INCLUSION, (start, len(lf) - start - len(lg))))
    return out


def enumerate_ambiguities(sys: RewriteSystem | Sequence[Rule]) -> list[Ambiguity]:
    """Every ambiguity of every ordered pair of rules, a rule with itself included."""
    rules = list(sys)
    out = []
    for f in rules:
        for g in rules:
            out.extend(ambiguities_between(f, g))
    return out


def composition(amb: Ambiguity) -> Composition:
    f, g = amb.left_rule, amb.right_rule
    if amb.kind is Kind.INTERSECTION:
        p = f.rhs + amb.b
        q = amb.a + g.rhs
    else:
        p = f.rhs
        q = amb.a + g.rhs + amb.b
    return Composition(amb, p, q)


def reduced_composition(c: Composition, sys: RewriteSystem) -> tuple[Word, Word]:
    return normalize(c.p, sys), normalize(c.q, sys)


def is_trivial(c: Composition, sys: RewriteSystem) -> bool:
    p, q = reduced_composition(c, sys)
    return p == q


def verify_gs(sys: RewriteSystem) -> VerificationReport:
    report = VerificationReport()
    for amb in enumerate_ambiguities(sys):
        report.total_ambiguities += 1
        p, q = reduced_composition(composition(amb), sys)
        if p == q:
            report.trivial += 1
        else:
            report.nontrivial.append((amb, p, q))
    return report


def _system(rules: Iterable[Rule], alphabet: Alphabet) -> RewriteSystem:
    return RewriteSystem(rules, alphabet)


def inter_reduce(
    rules: RewriteSystem | Iterable[Rule], alphabet: Alphabet | int | None = None
) -> RewriteSystem:
    """Reduced rule set presenting the same congruence.

    No lhs contains another lhs as a factor and every rhs is irreducible.
    Rules may come in with clashing left-hand sides; the clash becomes a
    new relation between the two right-hand sides.
    """
    if alphabet is None:
        if not isinstance(rules, RewriteSystem):
            raise TypeError("alphabet is required unless a RewriteSystem is given")
        alphabet = rules.alphabet
    alphabet = as_alphabet(alphabet)

    todo = deque(rules)
    done: dict[Word, Rule] = {}
    while todo:
        rule = todo.popleft()
        current = _system(done.values(), alphabet)
        lhs, rhs = normalize(rule.lhs, current), normalize(rule.rhs, current)
        if (lhs, rhs) == (rule.lhs, rule.rhs):
            new = rule
        else:
            new = oriented(lhs, rhs)
            if new is None:
                continue
        for old in list(done.values()):
            if occurs_in(new.lhs, old.lhs):
                del done[old.lhs]
                todo.append(old)
        done[new.lhs] = new

    final = _system(done.values(), alphabet)
    out = []
    for rule in done.values():
        rhs = normalize(rule.rhs, final)
        out.append(rule if rhs == rule.rhs else Rule(rule.lhs, rhs, rule.schema))
    return _system(sorted(out, key=_rule_order), alphabet)


def _rule_order(rule: Rule):
    return (len(rule.lhs), rule.lhs)


@dataclass(frozen=True)
class CompletionBounds:
    max_rules: int = 10000
    max_word_len: int = 12
    max_iterations: int = 100


@dataclass
class CompletionResult:
    result: RewriteSystem
    converged: bool
    iterations: int = 0
    # every rule adjoined from a nontrivial composition, before inter-reduction
    added: list[Rule] = field(default_factory=list)


def complete(
    initial: RewriteSystem | Iterable[Rule],
    bounds: CompletionBounds | None = None,
    alphabet: Alphabet | int | None = None,
) -> CompletionResult:
    """Shirshov completion: adjoin reduced nontrivial compositions until none remain.

    Each pass examines every ambiguity of the current set, so no pair is
    starved. Ambiguities longer than ``bounds.max_word_len`` are skipped,
    and a run that skipped any cannot be reported as converged.
    """
    bounds = bounds or CompletionBounds()
    current = inter_reduce(initial, alphabet)
    result = CompletionResult(current, converged=False)
    for iteration in range(1, bounds.max_iterations + 1):
        result.iterations = iteration
        new: dict[tuple[Word, Word], Rule] = {}
        skipped = 0
        for amb in enumerate_ambiguities(current):
            if len(amb.overlap_word) > bounds.max_word_len:
                skipped += 1
                continue
            p, q = reduced_composition(composition(amb), current)
            rule = oriented(p, q)
            if rule is not None:
                new.setdefault((rule.lhs, rule.rhs), rule)
        log.debug(
            "pass %d: %d rules, %d new, %d skipped", iteration, len(current), len(new), skipped
        )
        if not new:
            result.converged = skipped == 0
            return result
        result.added.extend(new.values())
        current = inter_reduce([*current, *new.values()], current.alphabet)
        result.result = current
        if len(current) > bounds.max_rules:
            return result
    return result


def is_below(amb: Ambiguity, c: Composition) -> bool:
    return deg_lex_less(c.p, amb.overlap_word) and deg_lex_less(c.q, amb.overlap_word)
