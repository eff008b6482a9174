import random

import pytest

from chinese_monoid.gsbasis import (
    CompletionBounds,
    Kind,
    ambiguities_between,
    complete,
    composition,
    enumerate_ambiguities,
    inter_reduce,
    is_below,
    is_trivial,
    occurs_in,
    verify_gs,
)
from chinese_monoid.oracle import congruent
from chinese_monoid.rewriting import (
    RewriteSystem,
    Rule,
    chinese_rules,
    defining_relations,
    descendants,
    is_irreducible,
    normalize,
    reduction_path,
)
from chinese_monoid.words import parse_word


def W(text, n=3):
    return parse_word(text, n)


def _placement_count(rules):
    """Count ambiguities by sliding one lhs across the other."""
    total = 0
    for f in rules:
        for g in rules:
            lf, lg = f.lhs, g.lhs
            for d in range(len(lf)):
                if any(lf[d + t] != lg[t] for t in range(min(len(lg), len(lf) - d))):
                    continue
                if d + len(lg) > len(lf):
                    total += 1  # g hangs off the right end
                elif not (f == g and d == 0):
                    total += 1  # g sits inside f
    return total


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_ambiguity_count_matches_placement_scan(n):
    sys = chinese_rules(n)
    assert len(enumerate_ambiguities(sys)) == _placement_count(list(sys))


def test_no_rules_no_ambiguities():
    assert enumerate_ambiguities(chinese_rules(1)) == []


def test_ambiguity_invariants():
    for amb in enumerate_ambiguities(chinese_rules(4)):
        f, g = amb.left_rule, amb.right_rule
        w = amb.overlap_word
        if amb.kind is Kind.INTERSECTION:
            assert w == f.lhs + amb.b == amb.a + g.lhs
            assert amb.a and amb.b
            assert len(f.lhs) + len(g.lhs) > len(w)
        else:
            assert w == f.lhs == amb.a + g.lhs + amb.b
        c = composition(amb)
        assert is_below(amb, c)


def test_three_wedge_two_reduction():
    sys = chinese_rules(4)
    f = Rule((4, 3, 3), (3, 4, 3))
    g = Rule((3, 1, 2), (2, 3, 1))
    [amb] = [a for a in ambiguities_between(f, g)]
    assert amb.overlap_word == (4, 3, 3, 1, 2)
    c = composition(amb)
    assert c.p == (3, 4, 3, 1, 2)
    assert c.q == (4, 3, 2, 3, 1)
    # leftmost reduction passes through each displayed line of the hand check
    assert reduction_path(c.p, sys)[:3] == [(3, 4, 3, 1, 2), (3, 3, 4, 1, 2), (3, 3, 2, 4, 1)]
    assert reduction_path(c.q, sys)[:4] == [
        (4, 3, 2, 3, 1),
        (3, 4, 2, 3, 1),
        (3, 3, 4, 2, 1),
        (3, 3, 2, 4, 1),
    ]
    assert (3, 3, 2, 4, 1) in descendants(c.p, sys) & descendants(c.q, sys)
    # 332 is still a lhs (iij -> iji), so the common normal form is one step further
    assert normalize(c.p, sys) == normalize(c.q, sys) == (3, 2, 3, 4, 1)
    assert is_trivial(c, sys)


def test_one_wedge_three_composition():
    f = Rule(W("cba"), W("bca"))
    g = Rule(W("baa"), W("aba"))
    [amb] = ambiguities_between(f, g)
    assert amb.overlap_word == W("cbaa")
    c = composition(amb)
    assert (c.p, c.q) == (W("bcaa"), W("caba"))
    assert is_below(amb, c)


def test_self_overlaps():
    # bba -> bab has no overlap with itself: bbba is not an ambiguity
    r = Rule(W("bba", 2), W("bab", 2))
    assert ambiguities_between(r, r) == []
    # aaa -> aa overlaps itself on one and on two letters
    r = Rule((1, 1, 1), (1, 1))
    found = ambiguities_between(r, r)
    assert [(a.overlap_word, a.kind) for a in found] == [
        ((1, 1, 1, 1, 1), Kind.INTERSECTION),
        ((1, 1, 1, 1), Kind.INTERSECTION),
    ]
    c = composition(found[0])
    assert (c.p, c.q) == ((1, 1, 1, 1), (1, 1, 1, 1))


def test_inclusion_composition():
    f = Rule((2, 2, 1), (1,))
    g = Rule((2, 1), (1, 2))
    [amb] = ambiguities_between(f, g)
    assert amb.kind is Kind.INCLUSION
    assert amb.offsets == (1, 0)
    c = composition(amb)
    assert (c.p, c.q) == ((1,), (2, 1, 2))


def test_inclusion_with_equal_sides_is_trivial():
    f = Rule((2, 2, 1), (1, 2, 2))
    g = Rule((2, 1), (1, 2))
    sys = RewriteSystem([f, g], 2)
    [amb] = ambiguities_between(f, g)
    c = composition(amb)
    assert (c.p, c.q) == ((1, 2, 2), (2, 1, 2))
    assert is_trivial(c, sys)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_chinese_rules_are_a_gs_basis(n):
    report = verify_gs(chinese_rules(n))
    assert report.nontrivial == []
    assert report.trivial == report.total_ambiguities


def test_dropping_schema_five_breaks_it():
    sys = chinese_rules(3).without_schema(5)
    report = verify_gs(sys)
    assert report.nontrivial
    assert report.trivial + len(report.nontrivial) == report.total_ambiguities
    for amb, p, q in report.nontrivial:
        assert p != q
        assert congruent(p, q)


def test_inter_reduce():
    s3 = chinese_rules(3)
    assert inter_reduce(s3) == s3
    for r in s3:
        assert is_irreducible(r.rhs, s3)
        assert not any(occurs_in(o.lhs, r.lhs) for o in s3 if o != r)

    dup = [Rule(W("cba"), W("bca")), Rule(W("cba"), W("bca"))]
    assert len(inter_reduce(dup, 3)) == 1


def test_inter_reduce_normalizes_rhs_and_drops_redundant():
    a, b, c = 1, 2, 3
    rules = [
        Rule((b, b, a), (b, a, b)),
        Rule((c, a), (a, c)),
        # lhs reducible by ca -> ac, and both sides meet at acc
        Rule((c, c, a), (a, c, c)),
        # lhs reducible by bba -> bab; becomes baba -> abab
        Rule((b, b, a, a), (a, b, b, a)),
        # rhs reducible by bba -> bab
        Rule((c, c, c), (b, b, a)),
    ]
    got = inter_reduce(rules, 3)
    assert got.rule_set() == {
        ((b, b, a), (b, a, b)),
        ((c, a), (a, c)),
        ((b, a, b, a), (a, b, a, b)),
        ((c, c, c), (b, a, b)),
    }


def test_inter_reduce_resolves_clashing_lhs():
    rules = [Rule((2, 2), (1, 2)), Rule((2, 2), (2, 1))]
    got = inter_reduce(rules, 2)
    assert got.rule_set() == {((2, 2), (1, 2)), ((2, 1), (1, 2))}


def test_inter_reduce_needs_an_alphabet_for_plain_lists():
    with pytest.raises(TypeError):
        inter_reduce([Rule((2, 1), (1, 2))])


@pytest.mark.parametrize("n", [3, 4])
def test_completion_from_defining_relations(n):
    res = complete(defining_relations(n))
    assert res.converged
    assert res.result == chinese_rules(n)
    assert {r.lhs for r in res.result if len(r.lhs) == 4} == {
        (i, j, i, k) for i in range(1, n + 1) for j in range(1, i) for k in range(1, j)
    }


def test_completion_from_literal_chain_orientation():
    # ijk = ikj = jik read as ijk -> ikj and ikj -> jik
    n = 4
    rules = [r for r in defining_relations(n) if r.schema != 1]
    rules += [Rule((i, j, k), (i, k, j)) for i in range(1, n + 1) for j in range(1, i) for k in range(1, j)]
    res = complete(rules, alphabet=n)
    assert res.converged
    assert res.result == chinese_rules(n)


def test_completion_added_rules_are_consequences():
    res = complete(defining_relations(3))
    assert res.added
    for rule in res.added:
        assert congruent(rule.lhs, rule.rhs)
    for rule in res.result:
        assert congruent(rule.lhs, rule.rhs)


def test_completion_of_a_basis_is_immediate():
    res = complete(chinese_rules(4))
    assert res.converged and res.iterations == 1
    assert res.result == chinese_rules(4)


def test_completion_of_nothing():
    res = complete([], alphabet=3)
    assert res.converged
    assert len(res.result) == 0


def test_completion_preserves_the_congruence_on_samples():
    n = 3
    res = complete(defining_relations(n))
    rng = random.Random(11)
    for _ in range(300):
        length = rng.randint(0, 7)
        u = tuple(rng.choices(range(1, n + 1), k=length))
        v = tuple(rng.choices(range(1, n + 1), k=length))
        assert congruent(u, v) == (normalize(u, res.result) == normalize(v, res.result))


def test_completion_respects_bounds():
    # ab = ba, ba... a non-terminating example: aba -> bab style growth is avoided;
    # use a system that needs rules longer than the length bound
    rules = [Rule((2, 1, 2), (1, 2, 1))]
    res = complete(rules, CompletionBounds(max_word_len=4), alphabet=2)
    assert not res.converged
    res = complete(rules, CompletionBounds(max_iterations=2), alphabet=2)
    assert not res.converged
    assert res.iterations == 2
