# J-calculus: normal forms, organized factorizations and the cut comparison
from .normal_form import WordItem, BlockItem, JNormalForm, j_normal_form, j_equal, normalize
from .organized import (
    OrganizedFactorization, ReducedFactorization, ReductionStep, organize, reduce_to_short_breaks,
)
from .cut import Outcome, CutVerdict, BlockComparison, cut_compare
from .bases import nice_basis, block_basis, multiregular_basis, find_piecewise_witness

__all__ = [
    'WordItem', 'BlockItem', 'JNormalForm', 'j_normal_form', 'j_equal', 'normalize',
    'OrganizedFactorization', 'ReducedFactorization', 'ReductionStep', 'organize', 'reduce_to_short_breaks',
    'Outcome', 'CutVerdict', 'BlockComparison', 'cut_compare',
    'nice_basis', 'block_basis', 'multiregular_basis', 'find_piecewise_witness',
]
