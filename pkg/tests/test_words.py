import pytest

from parikh.errors import LetterOutsideAlphabet, PreconditionViolated
from parikh.words import (
    apply_permutation,
    concat,
    format_word,
    parikh_vector,
    parse_alphabet,
    parse_ordering,
    parse_word,
    permute_alphabet,
    project,
    support,
    words_up_to,
)


@pytest.mark.parametrize("v,w,expected", [("ba", "bcc", "babcc"), ("", "abc", "abc"), ("ab", "ba", "abba")])
def test_concat(v, w, expected):
    assert concat(v, w) == expected


@pytest.mark.parametrize("w,expected", [("babcc", {"a", "b", "c"}), ("", set()), ("aaaa", {"a"})])
def test_support(w, expected):
    assert support(w) == expected


def test_project():
    assert project("babcc", "bc") == "bbcc"
    assert project("babcc", "abc") == "babcc"
    w = "bccaabcba"
    assert project(w, "ab") == "baabba"
    assert project(w, "ab") == w.replace("c", "")


def test_parikh_vector():
    assert parikh_vector("babcc", "abc") == (1, 2, 2)
    assert parikh_vector("", "abc") == (0, 0, 0)
    assert parikh_vector("baacbc", "abc") == (2, 2, 2)
    assert parikh_vector("babcc", "cba") == (2, 2, 1)
    with pytest.raises(LetterOutsideAlphabet):
        parikh_vector("abd", "abc")


def test_apply_permutation():
    assert apply_permutation((1, 0), "ab", "ab") == "ba"
    assert apply_permutation((0, 1, 2), "babcc", "abc") == "babcc"
    # a -> b -> c -> a
    assert apply_permutation((1, 2, 0), "abc", "abc") == "bca"
    with pytest.raises(LetterOutsideAlphabet):
        apply_permutation((0, 1), "abc", "ab")
    with pytest.raises(PreconditionViolated):
        apply_permutation((0, 0), "ab", "ab")


def test_permute_alphabet():
    assert permute_alphabet((0, 1, 2), "abc") == "abc"
    assert permute_alphabet((2, 1, 0), "abc") == "cba"
    assert permute_alphabet((1, 2, 0), "abc") == "cab"


def test_parsing():
    assert parse_word("-") == ""
    assert format_word("") == "-"
    assert parse_word("abc") == "abc"
    assert parse_ordering("cab") == "cab"
    assert parse_alphabet("cba") == frozenset("abc")
    for bad in ("aB", "a1"):
        with pytest.raises(ValueError):
            parse_word(bad)
    with pytest.raises(ValueError):
        parse_ordering("aba")
    with pytest.raises(ValueError):
        parse_alphabet("")


def test_words_up_to_counts():
    words = list(words_up_to("abc", 4))
    assert len(words) == 1 + 3 + 9 + 27 + 81
    assert len(set(words)) == len(words)
    assert words[0] == ""
