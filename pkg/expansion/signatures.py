#!/usr/bin/env python3
"""
Good-Factorization Signatures
Words are compared by image and good-factorization classes; signatures multiply without the words
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, List, NamedTuple, Optional, Tuple
import logging

from algebra.constructions import adjoin_identity
from algebra.green import GreenSummary, green
from algebra.morphisms import LetterMorphism, Mode, words_up_to
from algebra.semigroup import FiniteSemigroup
from errors import UnknownLetter

logger = logging.getLogger(__name__)


class GoodFactClass(NamedTuple):
    """Class (phi(x0), a, phi(x1)) of a good factorization x = x0 a x1"""
    left: int
    letter: str
    right: int


class Signature(NamedTuple):
    """Image of a word in the ambient monoid plus its sorted good-factorization classes"""
    image: int
    classes: Tuple[GoodFactClass, ...]


@dataclass(frozen=True, eq=False)
class SignatureAlgebra:
    """
    Signature calculus for one letter morphism

    The ambient monoid is S^I in semigroup mode (fresh identity, evaluating
    the empty factor) and the target itself in monoid mode.
    """

    phi: LetterMorphism
    ambient: FiniteSemigroup
    unit: int
    letter_images: Dict[str, int]
    structure: GreenSummary

    @property
    def identity_signature(self) -> Signature:
        return Signature(self.unit, ())

    def image(self, word: str) -> int:
        result = self.unit
        rows = self.ambient.rows
        for letter in word:
            if letter not in self.letter_images:
                raise UnknownLetter(letter)
            result = rows[result][self.letter_images[letter]]
        return result

    def is_good(self, left: int, letter: str, right: int) -> bool:
        """Strict R-descent on the left and strict L-descent on the right at the letter"""
        rows = self.ambient.rows
        a = self.letter_images[letter]
        return (self.structure.strictly_below_r(rows[left][a], left)
                and self.structure.strictly_below_l(rows[a][right], right))

    def good_factorizations(self, word: str) -> FrozenSet[GoodFactClass]:
        rows = self.ambient.rows
        for letter in word:
            if letter not in self.letter_images:
                raise UnknownLetter(letter)
        prefixes = [self.unit]
        for letter in word:
            prefixes.append(rows[prefixes[-1]][self.letter_images[letter]])
        suffixes = [self.unit]
        for letter in reversed(word):
            suffixes.append(rows[self.letter_images[letter]][suffixes[-1]])
        suffixes.reverse()
        found = set()
        for i, letter in enumerate(word):
            left, right = prefixes[i], suffixes[i + 1]
            if self.is_good(left, letter, right):
                found.add(GoodFactClass(left, letter, right))
        return frozenset(found)

    def signature(self, word: str) -> Signature:
        return Signature(self.image(word), tuple(sorted(self.good_factorizations(word))))

    def product(self, x: Signature, y: Signature) -> Signature:
        rows = self.ambient.rows
        structure = self.structure
        classes = set()
        for left, letter, right in x.classes:
            extended = rows[right][y.image]
            if structure.strictly_below_l(rows[self.letter_images[letter]][extended], extended):
                classes.add(GoodFactClass(left, letter, extended))
        for left, letter, right in y.classes:
            extended = rows[x.image][left]
            if structure.strictly_below_r(rows[extended][self.letter_images[letter]], extended):
                classes.add(GoodFactClass(extended, letter, right))
        return Signature(rows[x.image][y.image], tuple(sorted(classes)))

    def describe(self, sig: Signature) -> dict:
        name = self.ambient.name_of
        return {
            "image": name(sig.image),
            "classes": [[name(c.left), c.letter, name(c.right)] for c in sig.classes],
        }


@lru_cache(maxsize=256)
def signature_algebra(phi: LetterMorphism) -> SignatureAlgebra:
    """Build (and cache) the signature calculus of phi"""
    if phi.mode is Mode.SEMIGROUP:
        ambient = adjoin_identity(phi.target).semigroup
        unit = phi.target.order
    else:
        ambient = phi.target
        unit = phi.target.identity
    return SignatureAlgebra(
        phi=phi,
        ambient=ambient,
        unit=unit,
        letter_images=phi.image_map,
        structure=green(ambient),
    )


def good_factorizations(word: str, phi: LetterMorphism) -> FrozenSet[GoodFactClass]:
    """
    Good-factorization classes of a word

    Args:
        word: Word over phi's alphabet
        phi: Letter morphism; empty factors evaluate to the ambient identity

    Returns:
        Set of (phi(x0), a, phi(x1)) over splits x = x0 a x1 with
        phi(x0 a) <_R phi(x0) and phi(a x1) <_L phi(x1)
    """
    return signature_algebra(phi).good_factorizations(word)


def signature(word: str, phi: LetterMorphism) -> Signature:
    """(phi(word), good factorization classes); equal signatures mean equivalent words"""
    return signature_algebra(phi).signature(word)


def signature_product(x: Signature, y: Signature, phi: LetterMorphism) -> Signature:
    """Signature of uv computed from the signatures of u and v"""
    return signature_algebra(phi).product(x, y)


@dataclass
class OracleReport:
    """Agreement of signature_product with the word-level signature"""

    pairs_checked: int
    failures: List[Tuple[str, str]]

    @property
    def passed(self) -> bool:
        return not self.failures


def check_product_oracle(phi: LetterMorphism, max_total_length: int = 8,
                         max_failures: Optional[int] = 10) -> OracleReport:
    """
    Compare signature(uv) with signature_product(signature(u), signature(v))

    Args:
        phi: Letter morphism
        max_total_length: Bound on |u| + |v|
        max_failures: Stop after this many disagreements (None: never stop)
    """
    algebra = signature_algebra(phi)
    include_empty = phi.mode is Mode.MONOID
    words = words_up_to(phi.alphabet, max_total_length, include_empty)
    cache = {w: algebra.signature(w) for w in words}
    minimum = 0 if include_empty else 1
    failures: List[Tuple[str, str]] = []
    checked = 0
    for u in words:
        for v in words:
            if len(u) + len(v) > max_total_length:
                break
            if len(v) < minimum:
                continue
            checked += 1
            if algebra.product(cache[u], cache[v]) != cache[u + v]:
                failures.append((u, v))
                if max_failures is not None and len(failures) >= max_failures:
                    return OracleReport(checked, failures)
    logger.debug(f"Signature oracle on {phi.target.name or '?'}: {checked} pairs, {len(failures)} failures")
    return OracleReport(checked, failures)


__all__ = [
    'GoodFactClass', 'Signature', 'SignatureAlgebra', 'signature_algebra',
    'good_factorizations', 'signature', 'signature_product',
    'OracleReport', 'check_product_oracle',
]
