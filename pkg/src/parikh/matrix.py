"""Unit-diagonal upper-triangular integer matrices and the Parikh matrix map."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache, reduce

from .errors import DimensionMismatch, IndexOutOfRange, checked
from .words import OrderedAlphabet, Word, apply_permutation, check_letters, permute_alphabet


@dataclass(frozen=True)
class ParikhMatrix:
    """Square matrix stored row-major as a tuple of tuples of ints.

    Indexing is 0-based (``m.rows[i][j]``); the generator and factor helpers
    below take the 1-based indices used in the literature.
    """

    rows: tuple[tuple[int, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __matmul__(self, other: "ParikhMatrix") -> "ParikhMatrix":
        return mat_multiply(self, other)

    def is_unitriangular(self) -> bool:
        for i, row in enumerate(self.rows):
            for j, x in enumerate(row):
                if x < 0 or (i == j and x != 1) or (j < i and x != 0):
                    return False
        return True

    def second_diagonal(self) -> tuple[int, ...]:
        return tuple(self.rows[i][i + 1] for i in range(self.dim - 1))

    def render(self) -> str:
        return "\n".join(" ".join(str(x) for x in row) for row in self.rows)

    def to_json(self) -> str:
        return json.dumps([list(r) for r in self.rows])

    def as_lists(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


def identity(dim: int) -> ParikhMatrix:
    return ParikhMatrix(tuple(tuple(int(i == j) for j in range(dim)) for i in range(dim)))


def generator_matrix(q: int, s: int) -> ParikhMatrix:
    """Identity of size ``s + 1`` with an extra 1 at 1-based position ``(q, q+1)``."""
    if not 1 <= q <= s:
        raise IndexOutOfRange(f"generator index {q} outside 1..{s}")
    rows = [[int(i == j) for j in range(s + 1)] for i in range(s + 1)]
    rows[q - 1][q] = 1
    return ParikhMatrix(tuple(tuple(r) for r in rows))


def mat_multiply(a: ParikhMatrix, b: ParikhMatrix) -> ParikhMatrix:
    if a.dim != b.dim:
        raise DimensionMismatch(f"cannot multiply {a.dim}x{a.dim} by {b.dim}x{b.dim}")
    k = a.dim
    cols = list(zip(*b.rows))
    return ParikhMatrix(
        tuple(
            tuple(checked(sum(x * y for x, y in zip(a.rows[i], cols[j]))) for j in range(k))
            for i in range(k)
        )
    )


def parikh_matrix_by_fold(w: Word, order: OrderedAlphabet) -> ParikhMatrix:
    """Product of generator matrices, one per letter, left to right."""
    check_letters(w, order)
    s = len(order)
    rank = {a: q for q, a in enumerate(order, start=1)}
    return reduce(mat_multiply, (generator_matrix(rank[ch], s) for ch in w), identity(s + 1))


@lru_cache(maxsize=1 << 17)
def parikh_matrix_of(w: Word, order: OrderedAlphabet) -> ParikhMatrix:
    """Parikh matrix of ``w`` with respect to the ordered alphabet ``order``.

    Right-multiplying by the generator of ``a_q`` adds column ``q`` into
    column ``q + 1``, so the product is accumulated in place in O(|w| s).
    """
    check_letters(w, order)
    s = len(order)
    rank = {a: q for q, a in enumerate(order)}
    m = [[int(i == j) for j in range(s + 1)] for i in range(s + 1)]
    for ch in w:
        q = rank[ch]
        for i in range(q + 1):
            m[i][q + 1] = checked(m[i][q + 1] + m[i][q])
    return ParikhMatrix(tuple(tuple(r) for r in m))


def alphabet_factor(order: OrderedAlphabet, i: int, j: int) -> Word:
    """The word ``a_i a_{i+1} ... a_j`` (1-based, inclusive)."""
    if not 1 <= i <= j <= len(order):
        raise IndexOutOfRange(f"factor ({i}, {j}) outside 1..{len(order)}")
    return order[i - 1 : j]


def m_equivalent(w: Word, w2: Word, order: OrderedAlphabet) -> bool:
    return parikh_matrix_of(w, order) == parikh_matrix_of(w2, order)


def permutation_lemma_holds(w: Word, sigma: tuple[int, ...], order: OrderedAlphabet) -> bool:
    """Check that permuting the word agrees with permuting the ordering.

    The matrix of ``sigma w`` under ``order`` must equal the matrix of ``w``
    under the permuted ordering.
    """
    lhs = parikh_matrix_of(apply_permutation(sigma, w, order), order)
    rhs = parikh_matrix_of(w, permute_alphabet(sigma, order))
    return lhs == rhs
