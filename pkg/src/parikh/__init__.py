"""Parikh matrices, scattered-subword counts and the word equivalences built on them."""

from .census import CensusReport, GapPair, Relation, RelationKind, census, find_gap
from .equivalence import (
    OrderingWitness,
    StrongVerdict,
    expanded_weak_witness,
    parikh_equivalent,
    strongly_m_equivalent,
    strongly_m_equivalent_by_orderings,
    transposition_chain,
    weakly_m_related,
)
from .errors import (
    AlphabetTooLarge,
    ArithmeticOverflow,
    BudgetExceeded,
    ClosureBudgetExceeded,
    DimensionMismatch,
    IndexOutOfRange,
    LetterOutsideAlphabet,
    ParikhError,
    PreconditionViolated,
)
from .matrix import (
    ParikhMatrix,
    alphabet_factor,
    generator_matrix,
    identity,
    m_equivalent,
    mat_multiply,
    parikh_matrix_of,
    permutation_lemma_holds,
)
from .rewriting import (
    RewriteStep,
    e1_neighbors,
    e2_neighbors,
    me_equivalent,
    mse_equivalent,
    one_equiv_normal_form,
    se_neighbors,
)
from .subwords import count_subword, distinct_letter_patterns, subword_signature
from .words import apply_permutation, concat, parikh_vector, permute_alphabet, project, support

__version__ = "0.1.0"
