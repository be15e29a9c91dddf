"""Scattered-subword occurrence counts and distinct-letter patterns."""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations

from .errors import AlphabetTooLarge, checked
from .words import Alphabet, Word, check_letters

MAX_PATTERN_ALPHABET = 8


def count_subword(w: Word, u: Word) -> int:
    """Number of occurrences of ``u`` as a scattered subword of ``w``.

    ``ways[j]`` holds the number of embeddings of ``u[:j]`` into the prefix of
    ``w`` read so far; scanning ``j`` downwards lets one letter extend each
    embedding at most once. The empty pattern occurs exactly once.
    """
    m = len(u)
    if m > len(w):
        return 0
    ways = [1] + [0] * m
    for ch in w:
        for j in range(m, 0, -1):
            if u[j - 1] == ch:
                ways[j] = checked(ways[j] + ways[j - 1])
    return ways[m]


def distinct_letter_patterns(sigma: Alphabet) -> list[Word]:
    """Every word over ``sigma`` using each letter at most once, length-lex sorted."""
    letters = sorted(set(sigma))
    if len(letters) > MAX_PATTERN_ALPHABET:
        raise AlphabetTooLarge(
            f"pattern enumeration is capped at {MAX_PATTERN_ALPHABET} letters, got {len(letters)}"
        )
    return list(_patterns(tuple(letters)))


@lru_cache(maxsize=None)
def _patterns(letters: tuple[str, ...]) -> tuple[Word, ...]:
    out: list[Word] = []
    for k in range(len(letters) + 1):
        # permutations of a sorted input come out in lexicographic order
        out.extend("".join(p) for p in permutations(letters, k))
    return tuple(out)


def subword_signature(w: Word, sigma: Alphabet) -> dict[Word, int]:
    """Counts of ``w`` on all distinct-letter patterns over ``sigma``."""
    check_letters(w, sigma)
    return dict(zip(distinct_letter_patterns(sigma), signature_tuple(w, alphabet_key(sigma))))


def alphabet_key(sigma) -> str:
    return "".join(sorted(set(sigma)))


@lru_cache(maxsize=1 << 17)
def signature_tuple(w: Word, letters: str) -> tuple[int, ...]:
    """Signature values in pattern order; hashable fingerprint for grouping."""
    return tuple(count_subword(w, v) for v in _patterns(tuple(letters)))
