"""Strong M-equivalence, weak M-relatedness and Parikh equivalence."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import permutations

from .errors import AlphabetTooLarge, PreconditionViolated
from .matrix import m_equivalent, parikh_matrix_of
from .subwords import MAX_PATTERN_ALPHABET, alphabet_key, distinct_letter_patterns, signature_tuple
from .words import LETTERS, Alphabet, OrderedAlphabet, Word, check_letters, support


@dataclass(frozen=True)
class OrderingWitness:
    """An ordered alphabet under which two words have the same Parikh matrix."""

    ordering: OrderedAlphabet

    def verify(self, w: Word, w2: Word) -> bool:
        return m_equivalent(w, w2, self.ordering)


@dataclass(frozen=True)
class StrongVerdict:
    equivalent: bool
    separating_pattern: Word | None = None

    def __bool__(self):
        return self.equivalent


def _guard(sigma) -> None:
    if len(sigma) > MAX_PATTERN_ALPHABET:
        raise AlphabetTooLarge(
            f"alphabet of size {len(sigma)} exceeds the cap of {MAX_PATTERN_ALPHABET}"
        )


def strongly_m_equivalent(w: Word, w2: Word) -> StrongVerdict:
    """Decide strong M-equivalence from distinct-letter subword counts.

    Both words must agree on ``|.|_v`` for every ``v`` using each letter at
    most once. The alphabet is the union of the supports, which is enough
    since the relation does not depend on the ambient alphabet. When the
    words differ, the length-lex least separating pattern is reported.
    """
    letters = alphabet_key(support(w) | support(w2))
    _guard(letters)
    sig1 = signature_tuple(w, letters)
    sig2 = signature_tuple(w2, letters)
    if sig1 == sig2:
        return StrongVerdict(True)
    patterns = distinct_letter_patterns(letters)
    for v, x, y in zip(patterns, sig1, sig2):
        if x != y:
            return StrongVerdict(False, v)
    raise AssertionError("unreachable: signatures differ but no pattern separates")


def orderings(sigma: Alphabet):
    """All orderings of ``sigma`` in lexicographic permutation order."""
    return ("".join(p) for p in permutations(sorted(set(sigma))))


def strongly_m_equivalent_by_orderings(w: Word, w2: Word, sigma: Alphabet) -> bool:
    """Brute-force decider: M-equivalent under every ordering of ``sigma``."""
    _guard(sigma)
    check_letters(w, sigma)
    check_letters(w2, sigma)
    return all(m_equivalent(w, w2, order) for order in orderings(sigma))


def weakly_m_related(w: Word, w2: Word, sigma: Alphabet) -> OrderingWitness | None:
    """First ordering of ``sigma`` (lexicographically) making the matrices equal."""
    _guard(sigma)
    check_letters(w, sigma)
    check_letters(w2, sigma)
    for order in orderings(sigma):
        if m_equivalent(w, w2, order):
            return OrderingWitness(order)
    return None


def parikh_equivalent(w: Word, w2: Word) -> bool:
    return Counter(w) == Counter(w2)


def transposition_chain(w: Word, w2: Word, sigma: Alphabet) -> list[Word]:
    """Adjacent-transposition path from ``w`` to ``w2``, each hop weakly M-related.

    Position by position, the next letter of ``w2`` is bubbled left into
    place. Each hop swaps two adjacent distinct letters, which is weakly
    M-related over any alphabet of three or more letters; every hop is
    re-checked before the chain is returned.
    """
    sigma = frozenset(sigma)
    if not parikh_equivalent(w, w2):
        raise PreconditionViolated(f"{w!r} and {w2!r} have different Parikh vectors")
    if len(sigma) < 3:
        raise PreconditionViolated("transposition chains need an alphabet of size at least 3")
    check_letters(w, sigma)
    cur = list(w)
    chain = [w]
    for i, target in enumerate(w2):
        j = cur.index(target, i)
        while j > i:
            cur[j - 1], cur[j] = cur[j], cur[j - 1]
            j -= 1
            chain.append("".join(cur))
    for u, v in zip(chain, chain[1:]):
        if weakly_m_related(u, v, sigma) is None:
            raise AssertionError(f"hop {u} -> {v} is not weakly M-related")
    return chain


def expanded_weak_witness(w: Word, w2: Word) -> OrderingWitness:
    """Ordering over ``2|supp(w)| - 1`` letters that makes the matrices equal.

    The support letters are placed at every other position with fresh
    letters between them, so no two support letters are adjacent in the
    ordering and every entry above the second diagonal vanishes.
    """
    if not parikh_equivalent(w, w2):
        raise PreconditionViolated(f"{w!r} and {w2!r} have different Parikh vectors")
    supp = sorted(support(w))
    if support(w2) != set(supp):
        raise PreconditionViolated("words must have the same support")
    fresh = [ch for ch in LETTERS if ch not in supp]
    needed = max(len(supp) - 1, 0)
    if len(fresh) < needed:
        raise PreconditionViolated(f"support of size {len(supp)} needs {needed} fresh letters")
    ordering = []
    for k, a in enumerate(supp):
        if k:
            ordering.append(fresh[k - 1])
        ordering.append(a)
    witness = OrderingWitness("".join(ordering))
    if supp and not witness.verify(w, w2):
        raise AssertionError(f"ordering {witness.ordering} does not equate {w} and {w2}")
    return witness


def orderings_fingerprint(w: Word, sigma: Alphabet) -> tuple:
    """Parikh matrices of ``w`` under every ordering of ``sigma``."""
    return tuple(parikh_matrix_of(w, order) for order in orderings(sigma))
