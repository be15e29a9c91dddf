"""Exhaustive checks addressable by theorem id from the command line."""

from __future__ import annotations

from itertools import combinations, permutations

from .census import DEFAULT_BUDGET, strata
from .equivalence import (
    expanded_weak_witness,
    orderings,
    orderings_fingerprint,
    transposition_chain,
    weakly_m_related,
)
from .errors import BudgetExceeded
from .matrix import alphabet_factor, parikh_matrix_of, permutation_lemma_holds
from .partition import bfs_labels, compare_partitions, labels_from_key
from .rewriting import me_neighbors
from .subwords import count_subword, signature_tuple
from .ternary import StratumRow, VerifyReport, verify_abc1_certificates, verify_m_vs_me_abc0, verify_strong_vs_mse
from .words import parse_alphabet, words_up_to


def _by_length(max_len):
    return {n: StratumRow(n) for n in range(max_len + 1)}


def _word_budget(s, max_len, budget):
    total = sum(s**n for n in range(max_len + 1))
    if total > budget:
        raise BudgetExceeded(f"{total} words exceeds the budget of {budget}")


def verify_matrix_entries(max_len: int, budget: int = DEFAULT_BUDGET) -> VerifyReport:
    """Every entry above the diagonal is the count of the matching factor."""
    _word_budget(3, max_len, budget)
    report = VerifyReport("matrix entries = factor subword counts (all orderings of abc)", max_len)
    rows = _by_length(max_len)
    for w in words_up_to("abc", max_len):
        row = rows[len(w)]
        row.words += 1
        for order in orderings("abc"):
            m = parikh_matrix_of(w, order)
            for i in range(1, 4):
                for j in range(i, 4):
                    row.pairs_checked += 1
                    if m[i - 1, j] != count_subword(w, alphabet_factor(order, i, j)):
                        row.violations += 1
                        if len(report.examples) < 20:
                            report.examples.append((w, order, i, j))
    report.rows = list(rows.values())
    return report


def verify_binary_m_vs_me(max_len: int, budget: int = DEFAULT_BUDGET) -> VerifyReport:
    """Over ``a<b``, M-equivalence coincides with ME-equivalence."""
    report = VerifyReport("M <=> ME over a<b", max_len)
    rows = _by_length(max_len)
    for (n, _), ws in strata(parse_alphabet("ab"), max_len, budget).items():
        cmp = compare_partitions(
            ws,
            labels_from_key(ws, lambda w: parikh_matrix_of(w, "ab")),
            bfs_labels(ws, lambda w: me_neighbors(w, "ab")),
            limit=20 - len(report.examples),
        )
        rows[n].words += len(ws)
        rows[n].pairs_checked += cmp.pairs_checked
        rows[n].violations += cmp.violations
        report.examples.extend(cmp.examples)
    report.rows = list(rows.values())
    return report


def verify_permutation_lemma(max_len: int, budget: int = DEFAULT_BUDGET) -> VerifyReport:
    """Permuting letters of the word equals permuting the ordering."""
    _word_budget(3, max_len, budget)
    report = VerifyReport("matrix(sigma w, abc) = matrix(w, sigma abc)", max_len)
    rows = _by_length(max_len)
    perms = list(permutations(range(3)))
    for w in words_up_to("abc", max_len):
        row = rows[len(w)]
        row.words += 1
        for sigma in perms:
            row.pairs_checked += 1
            if not permutation_lemma_holds(w, sigma, "abc"):
                row.violations += 1
                if len(report.examples) < 20:
                    report.examples.append((w, sigma))
    report.rows = list(rows.values())
    return report


def verify_signature_vs_orderings(max_len: int, budget: int = DEFAULT_BUDGET) -> VerifyReport:
    """Distinct-letter signatures and all-orderings matrices give the same classes."""
    report = VerifyReport("signature decider <=> all-orderings decider over abc", max_len)
    rows = _by_length(max_len)
    for (n, _), ws in strata(parse_alphabet("abc"), max_len, budget).items():
        cmp = compare_partitions(
            ws,
            labels_from_key(ws, lambda w: signature_tuple(w, "abc")),
            labels_from_key(ws, lambda w: orderings_fingerprint(w, "abc")),
            limit=20 - len(report.examples),
        )
        rows[n].words += len(ws)
        rows[n].pairs_checked += cmp.pairs_checked
        rows[n].violations += cmp.violations
        report.examples.extend(cmp.examples)
    report.rows = list(rows.values())
    return report


def _parikh_pairs(max_len, budget):
    """Pairs of distinct ternary words with the same Parikh vector."""
    checked = 0
    for (n, _), ws in strata(parse_alphabet("abc"), max_len, budget).items():
        for u, v in combinations(ws, 2):
            checked += 1
            if checked > budget:
                raise BudgetExceeded(f"more than {budget} pairs")
            yield n, u, v


def verify_transposition_chains(max_len: int, budget: int = DEFAULT_BUDGET) -> VerifyReport:
    """Each Parikh-equivalent pair is linked by weakly M-related hops."""
    report = VerifyReport("transposition chains are weakly M-related hop by hop over abc", max_len)
    rows = _by_length(max_len)
    for n, u, v in _parikh_pairs(max_len, budget):
        rows[n].pairs_checked += 1
        try:
            chain = transposition_chain(u, v, "abc")
            ok = chain[0] == u and chain[-1] == v and all(
                weakly_m_related(x, y, "abc") is not None for x, y in zip(chain, chain[1:])
            )
        except AssertionError:
            ok = False
        if not ok:
            rows[n].violations += 1
            if len(report.examples) < 20:
                report.examples.append((u, v))
    report.rows = list(rows.values())
    return report


def verify_expanded_witness(max_len: int, budget: int = DEFAULT_BUDGET) -> VerifyReport:
    """Interleaving fresh letters makes Parikh-equivalent words M-equivalent."""
    report = VerifyReport("expanded-alphabet witness equates Parikh-equivalent words", max_len)
    rows = _by_length(max_len)
    for n, u, v in _parikh_pairs(max_len, budget):
        rows[n].pairs_checked += 1
        try:
            witness = expanded_weak_witness(u, v)
            ok = len(witness.ordering) == max(2 * len(set(u)) - 1, 0) and witness.verify(u, v)
        except AssertionError:
            ok = False
        if not ok:
            rows[n].violations += 1
            if len(report.examples) < 20:
                report.examples.append((u, v))
    report.rows = list(rows.values())
    return report


THEOREMS = {
    "2.3": verify_matrix_entries,
    "2.6": verify_binary_m_vs_me,
    "2.9": verify_permutation_lemma,
    "3.3": verify_signature_vs_orderings,
    "4.2": verify_strong_vs_mse,
    "4.4": verify_m_vs_me_abc0,
    "4.6": verify_abc1_certificates,
    "5.4": verify_transposition_chains,
    "5.5": verify_expanded_witness,
}


def run(theorem_id: str, max_len: int, budget: int = DEFAULT_BUDGET) -> VerifyReport:
    try:
        check = THEOREMS[theorem_id]
    except KeyError:
        raise KeyError(f"unknown theorem id {theorem_id!r}; known: {', '.join(THEOREMS)}") from None
    return check(max_len, budget)
