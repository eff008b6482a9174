"""Reading and writing rule files.

One relation per line, ``lhs -> rhs``, words in the standard codec;
``#`` starts a comment. Relations are oriented by deg-lex on reading, and
a relation between equal words is dropped.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable

from .rewriting import RewriteSystem, Rule, oriented
from .words import Alphabet, WordParseError, as_alphabet, parse_word

ARROW = "->"


class RuleFileError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _relations(text: str) -> list[tuple[int, str, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.count(ARROW) != 1:
            raise RuleFileError(f"expected 'lhs {ARROW} rhs', got {raw.strip()!r}", lineno)
        lhs, rhs = (side.strip() for side in line.split(ARROW))
        out.append((lineno, lhs, rhs))
    return out


def infer_alphabet(text: str) -> Alphabet:
    """Smallest alphabet covering every letter mentioned in ``text``."""
    top = 1
    for _, lhs, rhs in _relations(text):
        for side in (lhs, rhs):
            if side.isalpha():
                top = max([top, *(ord(ch) - ord("a") + 1 for ch in side)])
            else:
                top = max([top, *(int(tok) for tok in side.split() if tok.isdigit())])
    return Alphabet(top)


def parse_rules(text: str, alphabet: Alphabet | int | None = None) -> list[Rule]:
    alphabet = infer_alphabet(text) if alphabet is None else as_alphabet(alphabet)
    rules = []
    for lineno, lhs, rhs in _relations(text):
        try:
            u, v = parse_word(lhs, alphabet), parse_word(rhs, alphabet)
        except WordParseError as exc:
            raise RuleFileError(str(exc), lineno) from exc
        rule = oriented(u, v)
        if rule is not None:
            rules.append(rule)
    return rules


def read_rules(path: str | Path, alphabet: Alphabet | int | None = None) -> tuple[list[Rule], Alphabet]:
    text = Path(path).read_text(encoding="utf-8")
    alphabet = infer_alphabet(text) if alphabet is None else as_alphabet(alphabet)
    return parse_rules(text, alphabet), alphabet


def format_rules(rules: Iterable[Rule] | RewriteSystem, alphabet: Alphabet | int) -> str:
    return "".join(rule.format(alphabet) + "\n" for rule in rules)
