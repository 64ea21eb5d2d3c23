# Validation of semigroup files, automaton files and command-line operands
from .input_validator import (
    InputValidator, SemigroupDocument, DfaDocument, load_semigroup, load_dfa, load_operand, ONE_OPERAND,
)

__all__ = [
    'InputValidator', 'SemigroupDocument', 'DfaDocument',
    'load_semigroup', 'load_dfa', 'load_operand', 'ONE_OPERAND',
]
