"""Ordered alphabets, words over them, and the deg-lex order.

Letters are the integers ``1..n``; a larger integer is a larger letter.
A word is a plain tuple of letters, so words hash, compare and slice
like any other tuple. With ``n <= 26`` words are written with the
lowercase letters (``a`` is 1), otherwise as space separated integers.
"""

from __future__ import annotations

import string
from dataclasses import dataclass
from typing import Iterator, Sequence

Word = tuple[int, ...]

EMPTY: Word = ()

_LETTERS = string.ascii_lowercase


class WordParseError(ValueError):
    """Raised when text does not encode a word over the given alphabet."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class Alphabet:
    size: int

    def __post_init__(self):
        if self.size < 1:
            raise ValueError(f"alphabet size must be >= 1, got {self.size}")

    @property
    def letters(self) -> range:
        return range(1, self.size + 1)

    @property
    def uses_letter_codec(self) -> bool:
        return self.size <= len(_LETTERS)

    def __contains__(self, letter: object) -> bool:
        return isinstance(letter, int) and 1 <= letter <= self.size

    def check(self, w: Sequence[int]) -> Word:
        for pos, x in enumerate(w):
            if x not in self:
                raise ValueError(f"letter {x!r} at position {pos} is outside 1..{self.size}")
        return tuple(w)

    def words(self, length: int) -> Iterator[Word]:
        """All words of the given length, in increasing deg-lex order."""
        from itertools import product

        return product(self.letters, repeat=length)

    def words_up_to(self, length: int) -> Iterator[Word]:
        for ell in range(length + 1):
            yield from self.words(ell)


def as_alphabet(alphabet: Alphabet | int) -> Alphabet:
    return alphabet if isinstance(alphabet, Alphabet) else Alphabet(alphabet)


def deg_lex_key(w: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """Sort key realising deg-lex: length first, then letters left to right."""
    return (len(w), tuple(w))


def deg_lex_compare(u: Sequence[int], v: Sequence[int], alphabet: Alphabet | None = None) -> int:
    """Return -1, 0 or 1 as ``u`` is less than, equal to or greater than ``v``.

    If ``alphabet`` is given both words are checked against it first and a
    ``ValueError`` is raised for a letter outside it.
    """
    if alphabet is not None:
        alphabet.check(u)
        alphabet.check(v)
    ku, kv = deg_lex_key(u), deg_lex_key(v)
    return (ku > kv) - (ku < kv)


def deg_lex_less(u: Sequence[int], v: Sequence[int]) -> bool:
    return deg_lex_key(u) < deg_lex_key(v)


def parse_word(text: str, alphabet: Alphabet | int) -> Word:
    """Decode ``text`` into a word over ``alphabet``.

    Accepts lowercase letters (only when the alphabet has at most 26
    letters) or whitespace separated positive integers.
    """
    alphabet = as_alphabet(alphabet)
    stripped = text.strip()
    if not stripped:
        return EMPTY
    if stripped.isalpha():
        if not alphabet.uses_letter_codec:
            raise WordParseError(
                f"letter form needs an alphabet of at most 26 letters, not {alphabet.size}",
                0,
            )
        w = []
        for pos, ch in enumerate(stripped):
            letter = _LETTERS.find(ch) + 1
            if letter == 0 or letter > alphabet.size:
                raise WordParseError(f"letter {ch!r} not in alphabet of size {alphabet.size}", pos)
            w.append(letter)
        return tuple(w)

    w = []
    for pos, token in enumerate(stripped.split()):
        if not token.isdigit():
            raise WordParseError(f"token {token!r} is not a positive integer", pos)
        letter = int(token)
        if letter not in alphabet:
            raise WordParseError(f"letter {letter} not in 1..{alphabet.size}", pos)
        w.append(letter)
    return tuple(w)


def format_word(w: Sequence[int], alphabet: Alphabet | int) -> str:
    alphabet = as_alphabet(alphabet)
    if alphabet.uses_letter_codec:
        return "".join(_LETTERS[x - 1] for x in w)
    return " ".join(str(x) for x in w)
