#!/usr/bin/env python3
"""
Syntactic Semigroups
Transition semigroup of the minimal automaton with its letter morphism
"""

from typing import FrozenSet, Optional, Tuple
import logging

from algebra.corpus import DEFAULT_TRANSFORMATION_CAP, transformation_semigroup
from algebra.morphisms import LetterMorphism, Mode, letter_morphism
from algebra.semigroup import FiniteSemigroup
from languages.dfa import Dfa, minimize_dfa

logger = logging.getLogger(__name__)


def syntactic_semigroup(
    d: Dfa,
    cap: int = DEFAULT_TRANSFORMATION_CAP,
    name: Optional[str] = None,
) -> Tuple[FiniteSemigroup, LetterMorphism]:
    """
    Syntactic semigroup of the language of d (as a subset of A+)

    Args:
        d: Complete DFA
        cap: Maximum number of transformations
        name: Name for the resulting semigroup

    Returns:
        (semigroup, letter morphism A+ -> semigroup); element names are
        shortest-lexicographic representative words
    """
    minimal = minimize_dfa(d)
    generators = [minimal.transformation(letter) for letter in minimal.alphabet]
    closure = transformation_semigroup(generators, minimal.states, cap=cap,
                                       labels=minimal.alphabet, name=name or "Synt")
    images = {letter: closure.generator_indices[k] for k, letter in enumerate(minimal.alphabet)}
    phi = letter_morphism(closure.semigroup, images, Mode.SEMIGROUP, minimal.alphabet)
    logger.debug(f"Syntactic semigroup of a {minimal.states}-state minimal automaton: "
                 f"order {closure.semigroup.order}")
    return closure.semigroup, phi


def recognizing_set(d: Dfa, phi: LetterMorphism) -> FrozenSet[int]:
    """Elements s of the syntactic semigroup whose words lie in the language (L = phi^-1(P))"""
    minimal = minimize_dfa(d)
    S = phi.target
    accepted = set()
    for s in range(S.order):
        if minimal.accepts(S.name_of(s)):
            accepted.add(s)
    return frozenset(accepted)


__all__ = ['syntactic_semigroup', 'recognizing_set']
