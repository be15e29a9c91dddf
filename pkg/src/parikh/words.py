"""Ground types: letters, alphabets, ordered alphabets and words.

Words are plain ``str`` values over the letters ``a``-``z``; the empty word
is ``""``. An unordered alphabet is a ``frozenset`` of letters and an ordered
alphabet is a ``str`` of distinct letters read left (least) to right, so
``"cab"`` stands for ``c < a < b``.

Permutations of ``1..s`` are passed as 0-based tuples in the style of
``itertools.permutations``: ``sigma[i]`` is the image of position ``i``.
"""

from __future__ import annotations

import string
from collections import Counter
from collections.abc import Iterable, Iterator
from itertools import product

from .errors import LetterOutsideAlphabet, PreconditionViolated

LETTERS = string.ascii_lowercase
EMPTY_TOKEN = "-"

Word = str
Alphabet = frozenset
OrderedAlphabet = str


def parse_word(token: str) -> Word:
    """Parse a CLI word token; ``-`` is the empty word."""
    if token == EMPTY_TOKEN:
        return ""
    if not all(ch in LETTERS for ch in token):
        raise ValueError(f"word {token!r} must use lowercase letters a-z")
    return token


def format_word(w: Word) -> str:
    return w if w else EMPTY_TOKEN


def parse_ordering(token: str) -> OrderedAlphabet:
    if not token or not all(ch in LETTERS for ch in token):
        raise ValueError(f"ordering {token!r} must be a non-empty string over a-z")
    if len(set(token)) != len(token):
        raise ValueError(f"ordering {token!r} repeats a letter")
    return token


def parse_alphabet(token: str | Iterable[str]) -> Alphabet:
    letters = frozenset(token)
    if not letters or not letters <= set(LETTERS):
        raise ValueError(f"alphabet {token!r} must be a non-empty set of letters a-z")
    return letters


def alphabet_string(sigma: Iterable[str]) -> str:
    """Canonical rendering of an unordered alphabet (sorted letters)."""
    return "".join(sorted(sigma))


def concat(*words: Word) -> Word:
    return "".join(words)


def support(w: Word) -> Alphabet:
    return frozenset(w)


def project(w: Word, gamma: Iterable[str]) -> Word:
    """Erase every letter of ``w`` outside ``gamma``."""
    keep = set(gamma)
    return "".join(ch for ch in w if ch in keep)


def check_letters(w: Word, sigma: Iterable[str]) -> None:
    allowed = set(sigma)
    for ch in w:
        if ch not in allowed:
            raise LetterOutsideAlphabet(
                f"letter {ch!r} of {w!r} is not in {''.join(sorted(allowed))!r}"
            )


def parikh_vector(w: Word, order: OrderedAlphabet) -> tuple[int, ...]:
    """Letter counts of ``w`` listed in the order of ``order``."""
    check_letters(w, order)
    counts = Counter(w)
    return tuple(counts[a] for a in order)


def _check_permutation(sigma: tuple[int, ...], s: int) -> None:
    if len(sigma) != s or sorted(sigma) != list(range(s)):
        raise PreconditionViolated(f"{sigma!r} is not a permutation of range({s})")


def apply_permutation(sigma: tuple[int, ...], w: Word, order: OrderedAlphabet) -> Word:
    """Replace each occurrence of ``order[i]`` by ``order[sigma[i]]``."""
    _check_permutation(sigma, len(order))
    check_letters(w, order)
    table = {a: order[sigma[i]] for i, a in enumerate(order)}
    return "".join(table[ch] for ch in w)


def permute_alphabet(sigma: tuple[int, ...], order: OrderedAlphabet) -> OrderedAlphabet:
    """Position ``j`` of the result holds ``order[sigma^-1(j)]``."""
    _check_permutation(sigma, len(order))
    result = [""] * len(order)
    for i, a in enumerate(order):
        result[sigma[i]] = a
    return "".join(result)


def words_of_length(letters: Iterable[str], n: int) -> Iterator[Word]:
    """All words of length ``n`` over ``letters`` in lexicographic order."""
    for tup in product(sorted(set(letters)), repeat=n):
        yield "".join(tup)


def words_up_to(letters: Iterable[str], max_len: int) -> Iterator[Word]:
    """All words of length at most ``max_len``, shortest first."""
    letters = sorted(set(letters))
    for n in range(max_len + 1):
        yield from words_of_length(letters, n)


def length_lex_key(w: Word) -> tuple[int, str]:
    return (len(w), w)
