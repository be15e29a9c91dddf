from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_count
from parikh.equivalence import strongly_m_equivalent, weakly_m_related
from parikh.matrix import parikh_matrix_of
from parikh.rewriting import e1_neighbors, e2_neighbors, se_neighbors
from parikh.subwords import count_subword
from parikh.words import apply_permutation, parikh_vector, project, support

ternary = st.text(alphabet="abc", max_size=10)
quaternary = st.text(alphabet="abcd", max_size=10)
orders = st.permutations("abcd").map("".join)


@given(quaternary, st.text(alphabet="abcd", max_size=4))
def test_count_matches_bruteforce(w, u):
    assert count_subword(w, u) == brute_count(w, u)


@given(quaternary, quaternary, orders)
def test_matrix_morphism(v, w, order):
    assert parikh_matrix_of(v + w, order) == parikh_matrix_of(v, order) @ parikh_matrix_of(w, order)


@given(quaternary, quaternary, st.sets(st.sampled_from("abcd")))
def test_projection_morphism(v, w, gamma):
    assert project(v + w, gamma) == project(v, gamma) + project(w, gamma)
    assert support(project(w, gamma)) <= gamma


@given(quaternary, quaternary)
def test_parikh_vector_additive(v, w):
    pv, pw, pvw = (parikh_vector(x, "abcd") for x in (v, w, v + w))
    assert pvw == tuple(x + y for x, y in zip(pv, pw))


@given(quaternary, st.permutations(range(4)))
def test_permutation_bijective(w, sigma):
    sigma = tuple(sigma)
    image = apply_permutation(sigma, w, "abcd")
    inverse = tuple(sigma.index(i) for i in range(4))
    assert apply_permutation(inverse, image, "abcd") == w


@given(ternary, ternary, ternary)
@settings(max_examples=300)
def test_strong_left_right_invariance(w, w2, v):
    base = strongly_m_equivalent(w, w2).equivalent
    assert strongly_m_equivalent(v + w, v + w2).equivalent == base
    assert strongly_m_equivalent(w + v, w2 + v).equivalent == base


@given(st.text(alphabet="abc", min_size=2, max_size=9), st.data())
def test_adjacent_swap_is_weakly_related(w, data):
    i = data.draw(st.integers(0, len(w) - 2))
    u = w[:i] + w[i + 1] + w[i] + w[i + 2 :]
    assert weakly_m_related(w, u, "abc") is not None


@given(ternary, st.permutations("abc").map("".join))
def test_rules_preserve_and_invert(w, order):
    for nbrs, back in (
        (e1_neighbors(w, order), lambda u: e1_neighbors(u, order)),
        (e2_neighbors(w, order), lambda u: e2_neighbors(u, order)),
        (se_neighbors(w), se_neighbors),
    ):
        for u in nbrs:
            assert sorted(u) == sorted(w)
            assert w in back(u)
            assert parikh_matrix_of(u, order) == parikh_matrix_of(w, order)
