from itertools import combinations

import pytest

from parikh.census import Relation, RelationKind, census, class_labels, find_gap, strata
from parikh.errors import BudgetExceeded
from parikh.equivalence import strongly_m_equivalent, weakly_m_related
from parikh.matrix import m_equivalent
from parikh.partition import UnionFind, compare_partitions
from parikh.rewriting import mse_equivalent


def rel(name, order=None, alphabet=None):
    return Relation.parse(name, order, alphabet)


def test_relation_parse():
    assert str(rel("m", "cab")) == "m[cab]"
    assert str(rel("strong")) == "strong"
    assert rel("weak").resolved(frozenset("ab")).alphabet == frozenset("ab")
    with pytest.raises(ValueError):
        rel("me")
    with pytest.raises(ValueError):
        rel("nope")


def test_trivial_census():
    r = census("ab", 0, rel("m", "ab"))
    assert (r.words_total, r.classes_total) == (1, 1)


@pytest.mark.parametrize("sigma,max_len", [("ab", 6), ("abc", 4), ("abcd", 3)])
def test_words_total(sigma, max_len):
    s = len(sigma)
    r = census(sigma, max_len, rel("parikh"))
    assert r.words_total == (s ** (max_len + 1) - 1) // (s - 1)
    assert [n for n, _, _ in r.per_length] == list(range(max_len + 1))


def test_class_counts_against_pairwise_small():
    # classes computed from the union-find of pairwise verdicts
    for name, pair_rel in (
        ("m", lambda u, v: m_equivalent(u, v, "abc")),
        ("strong", lambda u, v: strongly_m_equivalent(u, v).equivalent),
        ("mse", mse_equivalent),
    ):
        r = census("abc", 5, rel(name, "abc"))
        total = 0
        for words in strata(frozenset("abc"), 5).values():
            uf = UnionFind(words)
            for u, v in combinations(words, 2):
                if pair_rel(u, v):
                    uf.union(u, v)
            total += len(uf.classes())
        assert r.classes_total == total, name


def test_weak_census_is_parikh_for_three_letters():
    assert census("abc", 5, rel("weak")).classes_total == census("abc", 5, rel("parikh")).classes_total


def test_hierarchy_of_class_counts():
    counts = {name: census("abc", 6, rel(name, "abc")).classes_total for name in ("one", "me", "m", "mse", "strong", "parikh")}
    assert counts["one"] >= counts["me"] >= counts["m"] >= counts["parikh"]
    assert counts["mse"] >= counts["strong"] >= counts["m"]


def test_strong_and_mse_census_are_ordering_free():
    a = census("abc", 6, rel("strong"))
    b = census("cab", 6, rel("strong"))
    assert a.classes_total == b.classes_total


def test_threads_give_identical_report():
    a = census("abc", 5, rel("me", "abc"))
    b = census("abc", 5, rel("me", "abc"), threads=2)
    assert a.as_dict() == b.as_dict()


def test_gap_examples():
    assert find_gap("abc", 7, rel("m", "abc"), rel("me", "abc")) == []
    gaps = find_gap("abc", 8, rel("m", "abc"), rel("me", "abc"))
    assert ("bcabcbba", "cbbabcab") in {(g.w, g.w2) for g in gaps}


def test_gap_pairs_are_genuine_and_sorted():
    gaps = find_gap("abc", 8, rel("m", "abc"), rel("me", "abc"))
    keys = [((len(g.w), g.w), (len(g.w2), g.w2)) for g in gaps]
    assert keys == sorted(keys)
    for g in gaps:
        assert (len(g.w), g.w) <= (len(g.w2), g.w2)
        assert m_equivalent(g.w, g.w2, "abc")


def test_gap_hierarchy_strong_vs_mse_subset_of_m_vs_mse():
    strong = {(g.w, g.w2) for g in find_gap("abc", 7, rel("strong"), rel("mse"))}
    for order in ("abc", "acb", "bac", "bca", "cab", "cba"):
        m_gaps = {(g.w, g.w2) for g in find_gap("abc", 7, rel("m", order), rel("mse"))}
        assert strong <= m_gaps


def test_gap_with_weak():
    gaps = find_gap("abc", 3, rel("weak"), rel("strong"))
    pairs = {(g.w, g.w2) for g in gaps}
    assert ("acb", "cab") in pairs
    assert ("acb", "cba") not in pairs
    for u, v in pairs:
        assert weakly_m_related(u, v, "abc") is not None
    gaps = find_gap("abc", 3, rel("parikh"), rel("weak"))
    assert ("acb", "cba") in {(g.w, g.w2) for g in gaps}


def test_budget():
    with pytest.raises(BudgetExceeded):
        census("abc", 8, rel("m", "abc"), budget=1000)


def test_compare_partitions():
    words = ["a", "b", "c", "d"]
    first = {"a": 0, "b": 0, "c": 1, "d": 1}
    second = {"a": 0, "b": 1, "c": 2, "d": 2}
    cmp = compare_partitions(words, first, second)
    assert cmp.pairs_checked == 6
    assert (cmp.first_only, cmp.second_only) == (1, 0)
    assert cmp.examples == [("first", "a", "b")]


def test_class_labels_kinds_cover_everything():
    words = sorted(strata(frozenset("abc"), 4)[(4, (2, 1, 1))])
    for kind in RelationKind:
        r = Relation(kind, order="abc" if kind.needs_order else None).resolved(frozenset("abc"))
        labels = class_labels(r, words)
        assert set(labels) == set(words)
