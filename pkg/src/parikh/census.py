"""Exhaustive census of equivalence classes and search for gap pairs.

Every relation handled here refines "same length and same Parikh vector",
so the universe of words is first split into those strata and each stratum
is partitioned on its own: by a fingerprint for M, 1-, strong M- and Parikh
equivalence, by breadth-first components for ME and MSE, and by union-find
over all orderings for the transitive closure of weak M-relatedness.
"""

from __future__ import annotations

import enum
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from itertools import combinations

from .equivalence import orderings, orderings_fingerprint
from .errors import BudgetExceeded
from .matrix import parikh_matrix_of
from .partition import bfs_labels, count_classes, labels_from_key, union_labels
from .rewriting import me_neighbors, one_equiv_normal_form, se_neighbors
from .subwords import alphabet_key, signature_tuple
from .words import (
    Alphabet,
    OrderedAlphabet,
    Word,
    alphabet_string,
    length_lex_key,
    parse_alphabet,
    parse_ordering,
    words_up_to,
)

DEFAULT_BUDGET = 10**7


class RelationKind(enum.Enum):
    M = "m"
    ME = "me"
    ONE = "one"
    MSE = "mse"
    STRONG_M = "strong"
    WEAK = "weak"
    PARIKH = "parikh"

    @property
    def needs_order(self) -> bool:
        return self in (RelationKind.M, RelationKind.ME, RelationKind.ONE)


@dataclass(frozen=True)
class Relation:
    kind: RelationKind
    order: OrderedAlphabet | None = None
    alphabet: Alphabet | None = None

    @classmethod
    def parse(cls, name: str, order: str | None = None, alphabet: str | None = None) -> "Relation":
        kind = RelationKind(name.lower())
        if kind.needs_order:
            if order is None:
                raise ValueError(f"relation {kind.value!r} needs an ordering")
            return cls(kind, order=parse_ordering(order))
        if kind is RelationKind.WEAK:
            return cls(kind, alphabet=parse_alphabet(alphabet) if alphabet else None)
        return cls(kind)

    def __str__(self):
        if self.order:
            return f"{self.kind.value}[{self.order}]"
        if self.alphabet:
            return f"{self.kind.value}[{alphabet_string(self.alphabet)}]"
        return self.kind.value

    def resolved(self, sigma: Alphabet) -> "Relation":
        """Fill in the ambient alphabet for relations that take one."""
        if self.kind is RelationKind.WEAK and self.alphabet is None:
            return Relation(self.kind, alphabet=frozenset(sigma))
        return self


def class_labels(relation: Relation, words: list[Word]) -> dict:
    """Partition one (length, Parikh vector) stratum under ``relation``."""
    kind = relation.kind
    if kind is RelationKind.M:
        return labels_from_key(words, partial(parikh_matrix_of, order=relation.order))
    if kind is RelationKind.ONE:
        return labels_from_key(words, partial(one_equiv_normal_form, order=relation.order))
    if kind is RelationKind.STRONG_M:
        letters = alphabet_key(set().union(*words)) if words else ""
        return labels_from_key(words, lambda w: signature_tuple(w, letters))
    if kind is RelationKind.PARIKH:
        return {w: 0 for w in words}
    if kind is RelationKind.ME:
        return bfs_labels(words, partial(me_neighbors, order=relation.order))
    if kind is RelationKind.MSE:
        return bfs_labels(words, se_neighbors)
    if kind is RelationKind.WEAK:
        keys = [partial(parikh_matrix_of, order=o) for o in orderings(relation.alphabet)]
        return union_labels(words, keys)
    raise ValueError(kind)


def strata(sigma: Alphabet, max_len: int, budget: int = DEFAULT_BUDGET) -> dict:
    """Words up to ``max_len`` grouped by (length, Parikh vector), keys sorted."""
    s = len(sigma)
    total = max_len + 1 if s == 1 else (s ** (max_len + 1) - 1) // (s - 1)
    if total > budget:
        raise BudgetExceeded(f"{total} words exceeds the budget of {budget}")
    letters = sorted(sigma)
    groups = defaultdict(list)
    for w in words_up_to(letters, max_len):
        groups[len(w), tuple(w.count(a) for a in letters)].append(w)
    return dict(sorted(groups.items()))


def _check_relation(relation: Relation, sigma: Alphabet) -> None:
    if relation.order is not None and set(relation.order) != set(sigma):
        raise ValueError(f"ordering {relation.order!r} is not an ordering of {alphabet_string(sigma)!r}")
    if relation.alphabet is not None and not set(sigma) <= relation.alphabet:
        raise ValueError(f"alphabet {alphabet_string(relation.alphabet)!r} does not cover the census alphabet")


@dataclass
class CensusReport:
    alphabet: str
    max_len: int
    relation: str
    words_total: int = 0
    classes_total: int = 0
    per_length: list = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "alphabet": self.alphabet,
            "max_len": self.max_len,
            "relation": self.relation,
            "words_total": self.words_total,
            "classes_total": self.classes_total,
            "per_length": [
                {"length": n, "words": wc, "classes": cc} for n, wc, cc in self.per_length
            ],
        }

    def render(self) -> str:
        lines = [
            f"alphabet {self.alphabet}  max_len {self.max_len}  relation {self.relation}",
            f"{'length':>6} {'words':>10} {'classes':>10}",
        ]
        for n, wc, cc in self.per_length:
            lines.append(f"{n:>6} {wc:>10} {cc:>10}")
        lines.append(f"{'total':>6} {self.words_total:>10} {self.classes_total:>10}")
        return "\n".join(lines)


def _stratum_class_count(relation: Relation, words: list[Word]) -> int:
    return count_classes(class_labels(relation, words))


def census(
    sigma,
    max_len: int,
    relation: Relation,
    budget: int = DEFAULT_BUDGET,
    threads: int = 1,
) -> CensusReport:
    sigma = parse_alphabet(sigma)
    relation = relation.resolved(sigma)
    _check_relation(relation, sigma)
    groups = strata(sigma, max_len, budget)
    work = partial(_stratum_class_count, relation)
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            counts = list(pool.map(work, groups.values(), chunksize=8))
    else:
        counts = [work(ws) for ws in groups.values()]
    per_len_words = defaultdict(int)
    per_len_classes = defaultdict(int)
    for (n, _), ws, c in zip(groups.keys(), groups.values(), counts):
        per_len_words[n] += len(ws)
        per_len_classes[n] += c
    report = CensusReport(alphabet_string(sigma), max_len, str(relation))
    for n in range(max_len + 1):
        report.per_length.append((n, per_len_words[n], per_len_classes[n]))
    report.words_total = sum(per_len_words.values())
    report.classes_total = sum(per_len_classes.values())
    return report


@dataclass(frozen=True)
class GapPair:
    w: Word
    w2: Word
    coarse: str
    fine: str

    def as_dict(self) -> dict:
        return {"w": self.w, "w2": self.w2, "coarse": self.coarse, "fine": self.fine}


def _pair(u: Word, v: Word) -> tuple[Word, Word]:
    return (u, v) if length_lex_key(u) <= length_lex_key(v) else (v, u)


def _related_pairs(relation: Relation, words: list[Word]) -> set:
    if relation.kind is RelationKind.WEAK:
        pairs = set()
        for order in orderings(relation.alphabet):
            groups = defaultdict(list)
            for w in words:
                groups[parikh_matrix_of(w, order)].append(w)
            for g in groups.values():
                pairs.update(_pair(u, v) for u, v in combinations(g, 2))
        return pairs
    groups = defaultdict(list)
    for w, lab in class_labels(relation, words).items():
        groups[lab].append(w)
    return {_pair(u, v) for g in groups.values() for u, v in combinations(g, 2)}


def _relates(relation: Relation, words: list[Word]):
    if relation.kind is RelationKind.WEAK:
        fp = {w: orderings_fingerprint(w, relation.alphabet) for w in words}
        return lambda u, v: any(x == y for x, y in zip(fp[u], fp[v]))
    labels = class_labels(relation, words)
    return lambda u, v: labels[u] == labels[v]


def find_gap(
    sigma,
    max_len: int,
    coarse: Relation,
    fine: Relation,
    budget: int = DEFAULT_BUDGET,
) -> list[GapPair]:
    """All pairs related under ``coarse`` but not under ``fine``, length-lex sorted."""
    sigma = parse_alphabet(sigma)
    coarse = coarse.resolved(sigma)
    fine = fine.resolved(sigma)
    _check_relation(coarse, sigma)
    _check_relation(fine, sigma)
    out = []
    examined = 0
    for words in strata(sigma, max_len, budget).values():
        if len(words) < 2:
            continue
        candidates = _related_pairs(coarse, words)
        examined += len(candidates)
        if examined > budget:
            raise BudgetExceeded(f"more than {budget} coarse pairs to examine")
        if not candidates:
            continue
        related = _relates(fine, words)
        out.extend(GapPair(u, v, str(coarse), str(fine)) for u, v in candidates if not related(u, v))
    out.sort(key=lambda g: (length_lex_key(g.w), length_lex_key(g.w2)))
    return out
