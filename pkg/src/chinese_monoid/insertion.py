"""Staircase words and the insertion algorithm.

A staircase is a word ``w_1 w_2 ... w_n`` over a chain of letters
``x_1 < ... < x_n`` where each row has the shape::

    w_k = (x_k x_1)^t[k,1] (x_k x_2)^t[k,2] ... (x_k x_{k-1})^t[k,k-1] x_k^t[k,k]

Rows are keyed by their top letter ``x_k`` and exponents by the lower
letter, so adding a letter to the chain never renumbers anything. Only
nonzero exponents are stored. The chain itself is the set of letters of
the spelled word; a chain letter whose own row is empty only appears
inside the pairs of higher rows.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .words import Alphabet, Word, format_word

Row = tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class Staircase:
    # (top letter, ((lower letter, exponent), ...)) sorted by top; the
    # diagonal exponent is stored under lower letter == top
    rows: tuple[tuple[int, Row], ...] = ()

    @classmethod
    def from_rows(cls, rows: Mapping[int, Mapping[int, int]]) -> Staircase:
        """Build from ``{top: {lower: exponent}}``; zero entries are dropped."""
        out = []
        for top in sorted(rows):
            entries = []
            for lower, t in sorted(rows[top].items()):
                if t < 0:
                    raise ValueError(f"negative exponent {t} at ({top}, {lower})")
                if lower > top:
                    raise ValueError(f"lower letter {lower} above row letter {top}")
                if t:
                    entries.append((lower, t))
            if entries:
                out.append((top, tuple(entries)))
        return cls(tuple(out))

    @classmethod
    def from_table(cls, chain: Sequence[int], table: Sequence[Sequence[int]]) -> Staircase:
        """Build from a chain and its lower-triangular exponent table.

        ``table[k][i]`` is the exponent of ``(x_k x_i)`` for ``i < k`` and
        of ``x_k`` alone for ``i == k`` (all 0-based).
        """
        if any(a >= b for a, b in zip(chain, chain[1:])):
            raise ValueError(f"chain {chain} is not strictly increasing")
        if len(table) != len(chain):
            raise ValueError("need exactly one table row per chain letter")
        rows = {}
        for k, row in enumerate(table):
            if len(row) != k + 1:
                raise ValueError(f"row {k} must have {k + 1} entries, got {len(row)}")
            rows[chain[k]] = {chain[i]: t for i, t in enumerate(row)}
        return cls.from_rows(rows)

    @property
    def chain(self) -> tuple[int, ...]:
        letters = set()
        for top, row in self.rows:
            letters.add(top)
            letters.update(lower for lower, _ in row)
        return tuple(sorted(letters))

    def exponent(self, top: int, lower: int) -> int:
        for t, row in self.rows:
            if t == top:
                return dict(row).get(lower, 0)
        return 0

    def table(self) -> list[list[int]]:
        chain = self.chain
        return [[self.exponent(x, y) for y in chain[: k + 1]] for k, x in enumerate(chain)]

    def __len__(self) -> int:
        return sum(t if lower == top else 2 * t for top, row in self.rows for lower, t in row)

    def render(self, alphabet: Alphabet | int) -> str:
        """One line per chain letter: the letter, then its row of exponents."""
        lines = []
        for k, x in enumerate(self.chain):
            entries = " ".join(str(t) for t in self.table()[k])
            lines.append(f"{format_word((x,), alphabet)} | {entries}")
        return "\n".join(lines)


def _spell_row(top: int, row: Iterable[tuple[int, int]]) -> list[int]:
    out = []
    diag = 0
    for lower, t in row:
        if lower == top:
            diag = t
        else:
            out.extend((top, lower) * t)
    out.extend([top] * diag)
    return out


def staircase_to_word(s: Staircase) -> Word:
    out: list[int] = []
    for top, row in s.rows:
        out.extend(_spell_row(top, row))
    return tuple(out)


def _insert(rows: list[tuple[int, dict[int, int]]], x: int) -> int:
    """Insert ``x`` into ``rows`` in place; returns the recursion depth used.

    Rows with a single top letter are never left empty, so no pruning is
    needed afterwards. A letter below ``x_1`` or strictly between chain
    letters needs no explicit zero row: rows are keyed by letter, and the
    recursion reaches the point where ``x`` exceeds every remaining top.
    """
    depth = 1
    n = len(rows)
    while True:
        if n == 0:
            rows.insert(0, (x, {x: 1}))
            return depth
        top, counts = rows[n - 1]
        if x > top:
            rows.insert(n, (x, {x: 1}))
            return depth
        if x == top:
            counts[x] = counts.get(x, 0) + 1
            return depth
        # x < top: i is the largest letter with a nonzero exponent in the row
        i = max(counts) if counts else x
        if x >= i:
            pass
        elif i < top:
            _bump(counts, i, x)
            x = i
        else:
            _bump(counts, top, x)
            return depth
        n -= 1
        depth += 1


def _bump(counts: dict[int, int], down: int, up: int) -> None:
    counts[down] -= 1
    if not counts[down]:
        del counts[down]
    counts[up] = counts.get(up, 0) + 1


def insert(s: Staircase, x: int) -> Staircase:
    """The staircase spelling ``staircase_to_word(s) * x`` in the Chinese monoid."""
    if x < 1:
        raise ValueError(f"invalid letter {x}")
    rows = [(top, dict(row)) for top, row in s.rows]
    _insert(rows, x)
    return Staircase.from_rows(dict(rows))


def word_to_staircase_counting(w: Sequence[int]) -> tuple[Staircase, int]:
    rows: list[tuple[int, dict[int, int]]] = []
    steps = 0
    for x in w:
        steps += _insert(rows, x)
    return Staircase.from_rows(dict(rows)), steps


def word_to_staircase(w: Sequence[int]) -> Staircase:
    return word_to_staircase_counting(w)[0]


def insertion_normal_form(w: Sequence[int]) -> Word:
    return staircase_to_word(word_to_staircase(w))


def parse_staircase_word(w: Sequence[int]) -> Staircase | None:
    """Read ``w`` as a spelled staircase, or return None if it is not one.

    The parse is greedy and deterministic: each block starts at its top
    letter, takes ``(top, y)`` pairs with ``y < top`` and ``y`` not
    decreasing, then a run of ``top``; the next block needs a larger top.
    """
    rows: dict[int, dict[int, int]] = {}
    pos = 0
    prev_top = 0
    size = len(w)
    while pos < size:
        top = w[pos]
        if top <= prev_top:
            return None
        counts: dict[int, int] = {}
        last_lower = 0
        while pos + 1 < size and w[pos] == top and w[pos + 1] < top:
            lower = w[pos + 1]
            if lower < last_lower:
                return None
            counts[lower] = counts.get(lower, 0) + 1
            last_lower = lower
            pos += 2
        while pos < size and w[pos] == top:
            counts[top] = counts.get(top, 0) + 1
            pos += 1
        if not counts:
            return None
        rows[top] = counts
        prev_top = top
    return Staircase.from_rows(rows)


def is_staircase_word(w: Sequence[int]) -> bool:
    return parse_staircase_word(w) is not None
