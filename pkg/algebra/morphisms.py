#!/usr/bin/env python3
"""
Letter Morphisms
Onto homomorphisms from free semigroups (A+) or free monoids (A*) into finite targets
"""

from dataclasses import dataclass
from enum import Enum
from itertools import product
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union
import logging

from algebra.constructions import closure
from algebra.semigroup import FiniteSemigroup
from errors import InputError, NotOnto, UnknownLetter

logger = logging.getLogger(__name__)


class Mode(Enum):
    """Domain of a letter morphism"""
    MONOID = "monoid"  # A* onto a monoid
    SEMIGROUP = "semigroup"  # A+ onto a semigroup


@dataclass(frozen=True)
class LetterMorphism:
    """
    A map phi: letters -> target extended to words

    Args:
        alphabet: Ordered letters
        target: Finite semigroup (a monoid in monoid mode)
        images: Letter -> element index
        mode: Mode.MONOID or Mode.SEMIGROUP
    """

    alphabet: Tuple[str, ...]
    target: FiniteSemigroup
    images: Tuple[Tuple[str, int], ...]
    mode: Mode

    @property
    def image_map(self) -> Dict[str, int]:
        return dict(self.images)

    def image(self, letter: str) -> int:
        for symbol, value in self.images:
            if symbol == letter:
                return value
        raise UnknownLetter(letter)

    def evaluate(self, word: str) -> Optional[int]:
        """
        Image of a word in the target

        Returns:
            Element index; the identity for the empty word in monoid mode,
            None for the empty word in semigroup mode
        """
        if not word:
            return self.target.identity if self.mode is Mode.MONOID else None
        images = self.image_map
        for letter in word:
            if letter not in images:
                raise UnknownLetter(letter)
        return self.target.product(images[letter] for letter in word)

    def to_dict(self) -> dict:
        return {
            "mode": self.mode.value,
            "alphabet": list(self.alphabet),
            "images": {letter: self.target.name_of(value) for letter, value in self.images},
        }


def letter_morphism(
    target: FiniteSemigroup,
    images: Mapping[str, Union[int, str]],
    mode: Union[Mode, str] = Mode.SEMIGROUP,
    alphabet: Optional[Sequence[str]] = None,
) -> LetterMorphism:
    """
    Build and validate an onto letter morphism

    Args:
        target: Target semigroup or monoid
        images: Letter -> element (index or display name)
        mode: "semigroup" (A+) or "monoid" (A*)
        alphabet: Letter order; defaults to sorted image keys

    Returns:
        LetterMorphism whose images generate the target
    """
    mode = Mode(mode) if not isinstance(mode, Mode) else mode
    letters = tuple(alphabet) if alphabet is not None else tuple(sorted(images))
    if not letters:
        raise InputError("alphabet must not be empty")
    if len(set(letters)) != len(letters):
        raise InputError(f"alphabet has repeated letters: {letters}")
    for letter in images:
        if letter not in letters:
            raise UnknownLetter(letter)
    for letter in letters:
        if not isinstance(letter, str) or len(letter) != 1:
            raise InputError(f"letters must be single characters, got {letter!r}")
        if letter not in images:
            raise InputError(f"letter '{letter}' has no image")
    resolved = tuple((letter, target.index_of(images[letter])) for letter in letters)

    generated = set(closure(target, [value for _, value in resolved]))
    if mode is Mode.MONOID:
        if target.identity is None:
            raise InputError("monoid mode needs a target with an identity")
        generated.add(target.identity)
    missing = set(range(target.order)) - generated
    if missing:
        raise NotOnto(missing)

    morphism = LetterMorphism(alphabet=letters, target=target, images=resolved, mode=mode)
    logger.debug(f"Letter morphism {morphism.to_dict()} onto {target.name or '?'}")
    return morphism


def words_up_to(alphabet: Iterable[str], max_length: int, include_empty: bool = False) -> List[str]:
    """All words of length <= max_length in shortlex order"""
    letters = list(alphabet)
    words = [""] if include_empty else []
    for length in range(1, max_length + 1):
        words.extend("".join(p) for p in product(letters, repeat=length))
    return words


__all__ = ['Mode', 'LetterMorphism', 'letter_morphism', 'words_up_to']
