# Regular languages: automata, syntactic semigroups, codes and marked products
from .dfa import (
    Dfa, Nfa, build_dfa, make_dfa, empty_dfa, subword_dfa, finite_language_dfa, random_dfa,
    determinize, reverse_dfa, plus_language, minimize_dfa, equivalent,
)
from .syntactic import syntactic_semigroup, recognizing_set
from .codes import CodeReport, is_code
from .products import ONE, EmptyWordLanguage, marked_product, product_kind, ProductKind
from .probes import MembershipStatus, Verdict, ProbeReport, closure_probe

__all__ = [
    'Dfa', 'Nfa', 'build_dfa', 'make_dfa', 'empty_dfa', 'subword_dfa', 'finite_language_dfa', 'random_dfa',
    'determinize', 'reverse_dfa', 'plus_language', 'minimize_dfa', 'equivalent',
    'syntactic_semigroup', 'recognizing_set',
    'CodeReport', 'is_code',
    'ONE', 'EmptyWordLanguage', 'marked_product', 'product_kind', 'ProductKind',
    'MembershipStatus', 'Verdict', 'ProbeReport', 'closure_probe',
]
