# Omega-terms, pseudoidentities and variety membership
from .omega_term import (
    Letter, Concat, Power, OmegaTerm, Pseudoidentity,
    parse_term, parse_identity, to_text, content, is_multiregular, substitute, random_term,
)
from .evaluation import eval_term, satisfies, eval_transformation
from .varieties import VarietyPredicate, MembershipReport, registry, variety_member, localized_basis

__all__ = [
    'Letter', 'Concat', 'Power', 'OmegaTerm', 'Pseudoidentity',
    'parse_term', 'parse_identity', 'to_text', 'content', 'is_multiregular', 'substitute', 'random_term',
    'eval_term', 'satisfies', 'eval_transformation',
    'VarietyPredicate', 'MembershipReport', 'registry', 'variety_member', 'localized_basis',
]
