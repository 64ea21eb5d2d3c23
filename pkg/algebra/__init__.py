# Finite semigroup core
from .semigroup import FiniteSemigroup, build_semigroup, omega_power
from .green import GreenSummary, green, definitional_preorders
from .constructions import (
    Construction, closure, adjoin_identity, local_semigroup, generated, direct_product,
    quotient, regular_core, construct, restrict,
)
from .morphisms import Mode, LetterMorphism, letter_morphism
from .isomorphism import is_isomorphic, fingerprint
from .corpus import CorpusSpec, small_corpus, exhaustive, transformation_semigroup, random_transformation

__all__ = [
    'FiniteSemigroup', 'build_semigroup', 'omega_power',
    'GreenSummary', 'green', 'definitional_preorders',
    'Construction', 'closure', 'adjoin_identity', 'local_semigroup', 'generated', 'direct_product',
    'quotient', 'regular_core', 'construct', 'restrict',
    'Mode', 'LetterMorphism', 'letter_morphism',
    'is_isomorphic', 'fingerprint',
    'CorpusSpec', 'small_corpus', 'exhaustive', 'transformation_semigroup', 'random_transformation',
]
