"""Structure of ternary words with at most one ``abc`` subword occurrence.

Words over ``{a, b, c}`` split into strata by ``|w|_abc``. On strata 0 and 1
strong M-equivalence coincides with MSE-equivalence, and on stratum 0
M-equivalence (for ``a < b < c``) coincides with ME-equivalence. This module
holds the decompositions those facts rest on and exhaustive checkers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .census import DEFAULT_BUDGET, strata
from .equivalence import strongly_m_equivalent
from .errors import BudgetExceeded, PreconditionViolated
from .matrix import m_equivalent, parikh_matrix_of
from .partition import bfs_labels, compare_partitions, labels_from_key
from .rewriting import me_equivalent, me_neighbors, mse_equivalent, one_equiv_normal_form, se_neighbors
from .subwords import count_subword, signature_tuple
from .words import Word, check_letters, parse_alphabet

ABC = "abc"
MAX_VERIFY_LEN = 12


@dataclass(frozen=True)
class Abc0Decomposition:
    w1: Word  # over {b, c}
    w2: Word  # over {a, c}
    w3: Word  # over {a, b}

    def word(self) -> Word:
        return self.w1 + self.w2 + self.w3


@dataclass(frozen=True)
class Abc1Decomposition:
    w1: Word  # over {b, c}
    w2: Word  # c only
    w3: Word  # a only
    w4: Word  # over {a, b}

    def word(self) -> Word:
        return self.w1 + "a" + self.w2 + "b" + self.w3 + "c" + self.w4


def _span(w: Word, start: int, letters: str) -> int:
    end = start
    while end < len(w) and w[end] in letters:
        end += 1
    return end


def decompose_abc0(w: Word) -> Abc0Decomposition | None:
    """Greedy split ``w1 w2 w3`` with ``w1`` over bc, ``w2`` over ac, ``w3`` over ab.

    ``w1`` is the longest bc-prefix and ``w2`` the longest following ac-block;
    the split exists exactly when ``w`` has no ``abc`` subword.
    """
    check_letters(w, ABC)
    i = _span(w, 0, "bc")
    j = _span(w, i, "ac")
    if "c" in w[j:]:
        return None
    return Abc0Decomposition(w[:i], w[i:j], w[j:])


def decompose_abc1(w: Word) -> Abc1Decomposition | None:
    """Split ``w = w1 a w2 b w3 c w4`` around its single ``abc`` occurrence."""
    check_letters(w, ABC)
    triples = [
        (i, j, k)
        for i, j, k in combinations(range(len(w)), 3)
        if w[i] == "a" and w[j] == "b" and w[k] == "c"
    ]
    if len(triples) != 1:
        return None
    i, j, k = triples[0]
    d = Abc1Decomposition(w[:i], w[i + 1 : j], w[j + 1 : k], w[k + 1 :])
    if not (set(d.w1) <= {"b", "c"} and set(d.w2) <= {"c"} and set(d.w3) <= {"a"} and set(d.w4) <= {"a", "b"}):
        raise AssertionError(f"single abc occurrence in {w!r} gives an invalid split {d}")
    return d


@dataclass
class StratumRow:
    stratum: int
    words: int = 0
    pairs_checked: int = 0
    violations: int = 0


@dataclass
class VerifyReport:
    name: str
    max_len: int
    rows: list = field(default_factory=list)
    examples: list = field(default_factory=list)
    witness: dict | None = None
    notes: list = field(default_factory=list)

    @property
    def violations(self) -> int:
        return sum(r.violations for r in self.rows)

    @property
    def pairs_checked(self) -> int:
        return sum(r.pairs_checked for r in self.rows)

    @property
    def passed(self) -> bool:
        return self.violations == 0

    def as_dict(self) -> dict:
        d = {
            "name": self.name,
            "max_len": self.max_len,
            "passed": self.passed,
            "pairs_checked": self.pairs_checked,
            "violations": self.violations,
            "strata": [
                {"stratum": r.stratum, "words": r.words, "pairs_checked": r.pairs_checked, "violations": r.violations}
                for r in self.rows
            ],
            "examples": [list(e) for e in self.examples],
        }
        if self.witness is not None:
            d["witness"] = self.witness
        if self.notes:
            d["notes"] = list(self.notes)
        return d

    def render(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        lines = [f"{status} {self.name} (max_len {self.max_len})"]
        lines.append(f"{'stratum':>8} {'words':>8} {'pairs':>10} {'violations':>10}")
        for r in self.rows:
            lines.append(f"{r.stratum!s:>8} {r.words:>8} {r.pairs_checked:>10} {r.violations:>10}")
        for e in self.examples:
            lines.append("violation: " + " ".join(str(x) for x in e))
        if self.witness is not None:
            lines.append("optimality witness: " + ", ".join(f"{k}={v}" for k, v in self.witness.items()))
        lines.extend(self.notes)
        return "\n".join(lines)


def _abc_groups(max_len: int, allowed_strata, budget: int):
    """(stratum, words) groups: same length, Parikh vector and ``|.|_abc``."""
    if max_len > MAX_VERIFY_LEN:
        raise BudgetExceeded(f"max_len {max_len} exceeds the verifier cap of {MAX_VERIFY_LEN}")
    for words in strata(parse_alphabet(ABC), max_len, budget).values():
        by_k = {}
        for w in words:
            k = count_subword(w, ABC)
            if k in allowed_strata:
                by_k.setdefault(k, []).append(w)
        for k, ws in sorted(by_k.items()):
            yield k, ws


def _run_comparison(report: VerifyReport, max_len, allowed_strata, first, second, budget):
    rows = {k: StratumRow(k) for k in sorted(allowed_strata)}
    for k, ws in _abc_groups(max_len, allowed_strata, budget):
        cmp = compare_partitions(ws, first(ws), second(ws), limit=20 - len(report.examples))
        row = rows[k]
        row.words += len(ws)
        row.pairs_checked += cmp.pairs_checked
        row.violations += cmp.violations
        report.examples.extend(cmp.examples)
    report.rows = list(rows.values())
    return report


def verify_strong_vs_mse(max_len: int, budget: int = DEFAULT_BUDGET) -> VerifyReport:
    """Strong M-equivalence agrees with MSE-equivalence on strata 0 and 1."""
    report = VerifyReport("strong-M <=> MSE on |w|_abc <= 1", max_len)
    _run_comparison(
        report,
        max_len,
        {0, 1},
        lambda ws: labels_from_key(ws, lambda w: signature_tuple(w, ABC)),
        lambda ws: bfs_labels(ws, se_neighbors),
        budget,
    )
    w, w2 = "bccaabcba", "cbabccaab"
    report.witness = {
        "w": w,
        "w2": w2,
        "abc_count": count_subword(w, ABC),
        "strongly_m_equivalent": strongly_m_equivalent(w, w2).equivalent,
        "mse_equivalent": mse_equivalent(w, w2),
    }
    return report


def verify_m_vs_me_abc0(max_len: int, budget: int = DEFAULT_BUDGET) -> VerifyReport:
    """M-equivalence agrees with ME-equivalence for ``a<b<c`` on stratum 0."""
    report = VerifyReport("M <=> ME (a<b<c) on |w|_abc = 0", max_len)
    _run_comparison(
        report,
        max_len,
        {0},
        lambda ws: labels_from_key(ws, lambda w: parikh_matrix_of(w, ABC)),
        lambda ws: bfs_labels(ws, lambda w: me_neighbors(w, ABC)),
        budget,
    )
    w, w2 = "cbbabcab", "bcabcbba"
    report.witness = {
        "w": w,
        "w2": w2,
        "abc_count": count_subword(w, ABC),
        "m_equivalent": m_equivalent(w, w2, ABC),
        "me_equivalent": me_equivalent(w, w2, ABC),
    }
    return report


Matrix3 = tuple[tuple[int, int, int], ...]


def _difference(p, q) -> Matrix3:
    return tuple(tuple(x - y for x, y in zip(r1, r2)) for r1, r2 in zip(p.rows, q.rows))


@dataclass(frozen=True)
class AbcOneCertificate:
    """Comparison data for two words with exactly one ``abc`` occurrence.

    ``w1``/``w2`` (and their primed partners) come from the 1-equivalent
    form ``w1 abc w2``. The two words are M-equivalent exactly when both
    matrix differences have the single permitted nonzero entry ``alpha`` /
    ``-alpha``, and ME-equivalent exactly when moreover ``alpha == 0``.
    """

    w1: Word
    w2: Word
    w1_other: Word
    w2_other: Word
    alpha: int
    matrix_delta_bc: Matrix3
    matrix_delta_ab: Matrix3

    @property
    def m_equivalent(self) -> bool:
        a = self.alpha
        return self.matrix_delta_bc == ((0, a, 0), (0, 0, 0), (0, 0, 0)) and self.matrix_delta_ab == (
            (0, 0, 0),
            (0, 0, -a),
            (0, 0, 0),
        )

    @property
    def me_equivalent(self) -> bool:
        return self.m_equivalent and self.alpha == 0

    def as_dict(self) -> dict:
        return {
            "w1": self.w1,
            "w2": self.w2,
            "w1_other": self.w1_other,
            "w2_other": self.w2_other,
            "alpha": self.alpha,
            "matrix_delta_bc": [list(r) for r in self.matrix_delta_bc],
            "matrix_delta_ab": [list(r) for r in self.matrix_delta_ab],
            "m_equivalent": self.m_equivalent,
            "me_equivalent": self.me_equivalent,
        }


def abc1_normal_split(w: Word) -> tuple[Word, Word]:
    """The unique ``(w1, w2)`` with ``w`` 1-equivalent to ``w1 abc w2`` (a<b<c).

    Computed from the lex-least 1-equivalent form and cross-checked against
    the split of ``w`` itself; any mismatch would contradict uniqueness.
    """
    check_letters(w, ABC)
    nf = one_equiv_normal_form(w, ABC)
    d = decompose_abc1(nf)
    if d is None:
        raise PreconditionViolated(f"{w!r} does not have exactly one abc occurrence")
    # a commutes with c, so a c^k b a^m c rearranges to c^k a b c a^m
    w1, w2 = d.w1 + d.w2, d.w3 + d.w4
    direct = decompose_abc1(w)
    if (direct.w1 + direct.w2, direct.w3 + direct.w4) != (w1, w2):
        raise AssertionError(f"split of {w!r} is not unique")
    if one_equiv_normal_form(w1 + ABC + w2, ABC) != nf:
        raise AssertionError(f"{w1}abc{w2} is not 1-equivalent to {w!r}")
    return w1, w2


def abc1_certificate(w: Word, w2: Word) -> AbcOneCertificate:
    u1, u2 = abc1_normal_split(w)
    v1, v2 = abc1_normal_split(w2)
    alpha = u1.count("b") - v1.count("b")
    delta_bc = _difference(parikh_matrix_of(u1 + "bc", "bc"), parikh_matrix_of(v1 + "bc", "bc"))
    delta_ab = _difference(parikh_matrix_of("ab" + u2, "ab"), parikh_matrix_of("ab" + v2, "ab"))
    return AbcOneCertificate(u1, u2, v1, v2, alpha, delta_bc, delta_ab)


def verify_abc1_certificates(max_len: int, budget: int = DEFAULT_BUDGET) -> VerifyReport:
    """Certificate verdicts against direct M and ME checks on stratum 1.

    Pairs are taken within each (length, Parikh vector) group; words with
    different Parikh vectors differ on the second diagonal and are not
    informative here.
    """
    report = VerifyReport("abc-one certificate <=> M and ME (a<b<c) on |w|_abc = 1", max_len)
    row = StratumRow(1)
    for _, ws in _abc_groups(max_len, {1}, budget):
        row.words += len(ws)
        m_lab = labels_from_key(ws, lambda w: parikh_matrix_of(w, ABC))
        me_lab = bfs_labels(ws, lambda w: me_neighbors(w, ABC))
        for u, v in combinations(ws, 2):
            row.pairs_checked += 1
            cert = abc1_certificate(u, v)
            m_ok = cert.m_equivalent == (m_lab[u] == m_lab[v])
            me_ok = cert.me_equivalent == (me_lab[u] == me_lab[v])
            if not (m_ok and me_ok):
                row.violations += 1
                if len(report.examples) < 20:
                    report.examples.append(("certificate", u, v))
    report.rows = [row]
    w, w2 = "cbbabcab", "bcabcbba"
    cert = abc1_certificate(w, w2)
    report.witness = {"w": w, "w2": w2, "alpha": cert.alpha, "m_equivalent": cert.m_equivalent,
                      "me_equivalent": cert.me_equivalent}
    return report
