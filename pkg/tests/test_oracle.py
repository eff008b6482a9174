import itertools

import pytest

from chinese_monoid.oracle import (
    OracleLimitError,
    all_classes,
    congruence_class,
    congruent,
    count_classes,
    neighbours,
)
from chinese_monoid.words import parse_word


def W(text, n=3):
    return parse_word(text, n)


def _union_find_count(n, length, pairs):
    parent = {w: w for w in itertools.product(range(1, n + 1), repeat=length)}

    def find(w):
        while parent[w] != w:
            w = parent[w]
        return w

    for u, v in pairs:
        parent[find(u)] = find(v)
    return len({find(w) for w in parent})


def test_class_examples():
    assert congruence_class(W("cba")).members == {W("cba"), W("bca"), W("cab")}
    assert congruence_class(W("ab")).members == {W("ab")}
    assert congruence_class(W("baa")).members == {W("baa"), W("aba")}


def test_congruent_examples():
    assert congruent(W("bba"), W("bab"))
    assert not congruent(W("ab"), W("ba"))
    assert congruent(W("cbca"), W("cacb"))
    assert not congruent(W("abc"), W("ab"))


def test_two_letter_length_three_by_hand():
    # the only relations over {a, b} at length 3: baa = aba and bba = bab
    a, b = 1, 2
    pairs = [((b, a, a), (a, b, a)), ((b, b, a), (b, a, b))]
    assert _union_find_count(2, 3, pairs) == 6
    assert count_classes(2, 3) == 6


def test_small_counts():
    assert count_classes(2, 2) == 4
    assert _union_find_count(2, 2, []) == 4
    for ell in range(6):
        assert count_classes(1, ell) == 1


def test_neighbours_are_symmetric():
    for w in itertools.product((1, 2, 3), repeat=4):
        for v in neighbours(w):
            assert w in neighbours(v)
            assert len(v) == len(w)


def test_classes_partition_words():
    classes = all_classes(3, 4)
    members = [w for cls in classes for w in cls.members]
    assert len(members) == len(set(members)) == 3**4


def test_limits():
    with pytest.raises(OracleLimitError):
        congruence_class((1,) * 11)
    assert len(congruence_class((1,) * 11, max_length=11)) == 1
    with pytest.raises(OracleLimitError):
        count_classes(10, 8)
