#!/usr/bin/env python3
"""
Pin-Therien Expansion
Signature monoids S_phi / M_phi with their projection, regular-core check and expansion towers
"""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, List, Optional, Tuple
import logging

import numpy as np

from algebra.constructions import closure, regular_core
from algebra.green import green
from algebra.isomorphism import DEFAULT_ISOMORPHISM_MAX_ORDER, is_isomorphic
from algebra.morphisms import LetterMorphism, Mode, letter_morphism, words_up_to
from algebra.semigroup import FiniteSemigroup, find_identity
from errors import InputError, SignatureExplosion
from expansion.signatures import Signature, signature_algebra

logger = logging.getLogger(__name__)

DEFAULT_SIGNATURE_CAP = 20000
IDENTITY_NAME = "1"


@dataclass(frozen=True, eq=False)
class ExpansionResult:
    """
    Expanded semigroup with its letter morphism and projection

    Element i of expanded is the class of the word representatives[i];
    projection[i] is its image in phi's target.
    """

    phi: LetterMorphism
    expanded: FiniteSemigroup
    phi_bd: LetterMorphism
    projection: Tuple[int, ...]
    signatures: Tuple[Signature, ...]
    representatives: Tuple[str, ...]
    right_action: np.ndarray = field(repr=False)

    @cached_property
    def signature_index(self) -> Dict[Signature, int]:
        return {sig: i for i, sig in enumerate(self.signatures)}

    def index_of_signature(self, sig: Signature) -> Optional[int]:
        return self.signature_index.get(sig)

    def to_dict(self, with_signatures: bool = False) -> dict:
        target = self.phi.target
        data = {
            "mode": self.phi.mode.value,
            "target": target.name,
            "target_order": target.order,
            "expanded": self.expanded.to_dict(),
            "letters": self.phi_bd.to_dict()["images"],
            "projection": {self.expanded.name_of(i): target.name_of(p) for i, p in enumerate(self.projection)},
        }
        if with_signatures:
            algebra = signature_algebra(self.phi)
            data["signatures"] = {
                self.expanded.name_of(i): algebra.describe(sig) for i, sig in enumerate(self.signatures)
            }
        return data


def _frozen_table(table: np.ndarray) -> np.ndarray:
    table = np.ascontiguousarray(table, dtype=np.int64)
    table.setflags(write=False)
    return table


def expand(phi: LetterMorphism, cap: int = DEFAULT_SIGNATURE_CAP) -> ExpansionResult:
    """
    Compute the expansion of phi as a signature semigroup (or monoid)

    Letter signatures are closed under right multiplication by letters in
    breadth-first order, so element names are shortlex-least representative
    words. The full table is read off the right action: x * y is x acted on
    by the letters of y's representative.

    Args:
        phi: Onto letter morphism
        cap: Maximum number of reachable signatures

    Returns:
        ExpansionResult; in semigroup mode the identity signature is not an element
    """
    algebra = signature_algebra(phi)
    alphabet = phi.alphabet
    letter_sigs = [algebra.signature(letter) for letter in alphabet]

    signatures: List[Signature] = []
    words: List[str] = []
    index: Dict[Signature, int] = {}

    def admit(sig: Signature, word: str) -> int:
        if sig not in index:
            if len(signatures) >= cap:
                raise SignatureExplosion(cap)
            index[sig] = len(signatures)
            signatures.append(sig)
            words.append(word)
        return index[sig]

    if phi.mode is Mode.MONOID:
        admit(algebra.identity_signature, "")
    for letter, sig in zip(alphabet, letter_sigs):
        admit(sig, letter)

    action: List[List[int]] = []
    position = 0
    while position < len(signatures):
        current = signatures[position]
        action.append([admit(algebra.product(current, sig), words[position] + letter)
                       for letter, sig in zip(alphabet, letter_sigs)])
        position += 1
        if position % 1000 == 0:
            logger.debug(f"Signature BFS: {position} processed, {len(signatures)} reached")

    n = len(signatures)
    right_action = _frozen_table(np.array(action, dtype=np.int64).reshape(n, len(alphabet)))
    letter_column = {letter: k for k, letter in enumerate(alphabet)}
    table = np.empty((n, n), dtype=np.int64)
    span = np.arange(n)
    for j, word in enumerate(words):
        column = span
        for letter in word:
            column = right_action[column, letter_column[letter]]
        table[:, j] = column

    names = [word if word else IDENTITY_NAME for word in words]
    table = _frozen_table(table)
    expanded = FiniteSemigroup(
        table=table,
        identity=find_identity(table),
        element_names=tuple(names),
        name=f"{phi.target.name or 'S'}_bd",
    )
    phi_bd = letter_morphism(expanded, {letter: index[sig] for letter, sig in zip(alphabet, letter_sigs)},
                             phi.mode, alphabet)
    projection = tuple(int(sig.image) for sig in signatures)
    logger.info(f"Expanded {phi.target.name or '?'} (order {phi.target.order}, {phi.mode.value} mode) "
                f"to order {n}")
    return ExpansionResult(
        phi=phi,
        expanded=expanded,
        phi_bd=phi_bd,
        projection=projection,
        signatures=tuple(signatures),
        representatives=tuple(words),
        right_action=right_action,
    )


# =============================================================================
# CHECKS
# =============================================================================

@dataclass
class RegularCoreReport:
    """Whether the projection maps <Reg(expanded)> isomorphically onto <Reg(target)>"""

    passed: bool
    core_order: int
    target_core_order: int
    collisions: List[Tuple[str, str]] = field(default_factory=list)
    missing: List[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "core_order": self.core_order,
            "target_core_order": self.target_core_order,
            "collisions": [list(pair) for pair in self.collisions],
            "missing": self.missing,
        }


def regular_core_check(r: ExpansionResult) -> RegularCoreReport:
    """
    Check that the projection is injective on <Reg(expanded)> with image <Reg(target)>

    Returns:
        RegularCoreReport with colliding element pairs and missed target elements
    """
    expanded, target = r.expanded, r.phi.target
    core = regular_core(expanded)
    members = sorted(core.mapping.values())
    target_core = set(closure(target, green(target).regular))

    seen: Dict[int, int] = {}
    collisions = []
    for s in members:
        image = r.projection[s]
        if image in seen:
            collisions.append((expanded.name_of(seen[image]), expanded.name_of(s)))
        else:
            seen[image] = s
    missing = sorted(target_core - set(seen))
    extra = set(seen) - target_core
    passed = not collisions and not missing and not extra
    if not passed:
        logger.warning(f"Regular core check failed for {target.name or '?'}: "
                       f"{len(collisions)} collisions, {len(missing)} missing, {len(extra)} extra")
    return RegularCoreReport(
        passed=passed,
        core_order=len(members),
        target_core_order=len(target_core),
        collisions=collisions,
        missing=[target.name_of(m) for m in missing] + [target.name_of(e) for e in sorted(extra)],
    )


@dataclass
class KernelReport:
    """Word-level check of the projection and of the expanded letter morphism"""

    words_checked: int
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def kernel_check(r: ExpansionResult, max_length: int = 8) -> KernelReport:
    """
    For every word w up to max_length: projection(phi_bd(w)) = phi(w), and
    phi_bd(w) is the element holding signature(w)
    """
    algebra = signature_algebra(r.phi)
    words = words_up_to(r.phi.alphabet, max_length, include_empty=r.phi.mode is Mode.MONOID)
    failures = []
    for w in words:
        element = r.phi_bd.evaluate(w)
        expected = r.index_of_signature(algebra.signature(w))
        if element != expected or r.projection[element] != r.phi.evaluate(w):
            failures.append(w)
    return KernelReport(words_checked=len(words), failures=failures)


# =============================================================================
# TOWERS
# =============================================================================

@dataclass
class TowerResult:
    """Iterated expansions; levels[k] expands level k (level 0 is phi's target)"""

    target: FiniteSemigroup
    levels: List[ExpansionResult]
    stabilized: bool
    stabilized_at: Optional[int] = None

    @property
    def orders(self) -> List[int]:
        return [self.target.order] + [level.expanded.order for level in self.levels]

    def to_dict(self) -> dict:
        return {
            "orders": self.orders,
            "stabilized": self.stabilized,
            "stabilized_at": self.stabilized_at,
            "levels": [level.to_dict() for level in self.levels],
        }


def same_letter_semigroup(phi: LetterMorphism, psi: LetterMorphism,
                          max_order: int = DEFAULT_ISOMORPHISM_MAX_ORDER) -> bool:
    """Is there an isomorphism between the targets sending phi(a) to psi(a) for every letter?"""
    S, T = phi.target, psi.target
    if S.order != T.order:
        return False
    anchors: Dict[int, int] = {}
    for letter in phi.alphabet:
        s, t = phi.image(letter), psi.image(letter)
        if anchors.setdefault(s, t) != t:
            return False
    if len(set(anchors.values())) != len(anchors):
        return False
    found, _ = is_isomorphic(S, T, respect_identity=phi.mode is Mode.MONOID,
                             anchors=anchors, max_order=max_order)
    return found


def expansion_tower(phi: LetterMorphism, max_iter: int, cap: int = DEFAULT_SIGNATURE_CAP,
                    max_order: int = DEFAULT_ISOMORPHISM_MAX_ORDER) -> TowerResult:
    """
    Iterate S -> S_phi, feeding each phi_bd back in

    Args:
        phi: Letter morphism onto level 0
        max_iter: Number of expansions (>= 1)
        cap: Signature cap per level
        max_order: Bound for the isomorphism search between levels

    Returns:
        TowerResult; stabilized when two consecutive levels are isomorphic
        through a map respecting letter images
    """
    if max_iter < 1:
        raise InputError(f"max_iter must be at least 1, got {max_iter}")
    levels: List[ExpansionResult] = []
    current = phi
    stabilized_at = None
    for level in range(1, max_iter + 1):
        result = expand(current, cap=cap)
        levels.append(result)
        if stabilized_at is None and same_letter_semigroup(current, result.phi_bd, max_order):
            stabilized_at = level
        current = result.phi_bd
    logger.info(f"Tower over {phi.target.name or '?'}: orders "
                f"{[phi.target.order] + [lv.expanded.order for lv in levels]}, stabilized_at={stabilized_at}")
    return TowerResult(target=phi.target, levels=levels,
                       stabilized=stabilized_at is not None, stabilized_at=stabilized_at)


__all__ = [
    'DEFAULT_SIGNATURE_CAP', 'ExpansionResult', 'expand',
    'RegularCoreReport', 'regular_core_check', 'KernelReport', 'kernel_check',
    'TowerResult', 'same_letter_semigroup', 'expansion_tower',
]
