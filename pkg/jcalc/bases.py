#!/usr/bin/env python3
"""
Pseudoidentity Bases
Nice, block-wise and multiregular forms of bases, and piecewise-testable witnesses for J
"""

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, List, Optional, Tuple
import logging

from errors import InputError
from jcalc.organized import ReducedFactorization, organize, reduce_to_short_breaks
from languages.dfa import subword_dfa
from terms.evaluation import Transformation, eval_transformation
from terms.omega_term import (
    OmegaTerm, Power, Pseudoidentity, concat, content, factors, is_multiregular, parse_identity, to_text,
)

logger = logging.getLogger(__name__)

DS_IDENTITY = "((xy)^w(yx)^w(xy)^w)^w = (xy)^w"
DEFAULT_WITNESS_MAX_LENGTH = 6


@dataclass(frozen=True)
class NiceIdentity:
    """An identity rewritten with both sides reduced to short breaks"""

    source: Pseudoidentity
    reduced: Pseudoidentity
    steps: Tuple[str, ...]

    def to_dict(self) -> dict:
        return {"source": self.source.to_text(), "reduced": self.reduced.to_text(), "steps": list(self.steps)}


def _reduce(t: OmegaTerm, variety: str) -> ReducedFactorization:
    return reduce_to_short_breaks(organize(t), variety)


def nice_basis(identities: Iterable[Pseudoidentity], variety: str = "J") -> List[NiceIdentity]:
    """
    Rewrite each identity so that both sides have short breaks

    Args:
        identities: Basis to rewrite
        variety: J, DG or DS

    Returns:
        One NiceIdentity per input, with the absorption identities that justify it
    """
    result = []
    for identity in identities:
        left, right = _reduce(identity.lhs, variety), _reduce(identity.rhs, variety)
        steps = tuple(step.identity for step in left.log + right.log if step.kind != "merge")
        result.append(NiceIdentity(identity, Pseudoidentity(left.flatten(), right.flatten()), steps))
    return result


@dataclass(frozen=True)
class BlockSplit:
    """Per-block identities of an identity whose word skeletons agree"""

    source: Pseudoidentity
    splittable: bool
    blocks: Tuple[Pseudoidentity, ...] = field(default_factory=tuple)
    reason: str = ""

    def to_dict(self) -> dict:
        return {
            "source": self.source.to_text(),
            "splittable": self.splittable,
            "blocks": [b.to_text() for b in self.blocks],
            "reason": self.reason,
        }


def block_basis(identities: Iterable[Pseudoidentity], variety: str = "J") -> List[BlockSplit]:
    """Split identities u0 P1 u1 .. Pn un = u0 Q1 u1 .. Qn un into the identities Pj = Qj"""
    result = []
    for identity in identities:
        left, right = _reduce(identity.lhs, variety), _reduce(identity.rhs, variety)
        if left.words != right.words:
            result.append(BlockSplit(identity, False, reason=f"word skeletons differ: {left.words} vs {right.words}"))
            continue
        blocks = tuple(Pseudoidentity(p, q) for p, q in zip(left.block_terms, right.block_terms))
        result.append(BlockSplit(identity, True, blocks))
    return result


def multiregular_rewrite(identity: Pseudoidentity) -> Pseudoidentity:
    """P1 .. Pn = Q1 .. Qm  ->  P1^(w+1) .. Pn^(w+1) = Q1^(w+1) .. Qm^(w+1)"""
    sides = []
    for side in (identity.lhs, identity.rhs):
        if not is_multiregular(side):
            raise InputError(f"side {to_text(side)} of {identity.to_text()} is not a product of powers")
        sides.append(concat(*(Power(f, 1) for f in factors(side))))
    return Pseudoidentity(sides[0], sides[1])


def multiregular_basis(identities: Iterable[Pseudoidentity]) -> Tuple[Pseudoidentity, ...]:
    """
    Basis made only of products of regular terms

    For a basis of V whose sides are products of powers, the result defines
    V intersected with DS (V itself when V is contained in DS).
    """
    rewritten = tuple(multiregular_rewrite(identity) for identity in identities)
    return rewritten + (parse_identity(DS_IDENTITY),)


# =============================================================================
# PIECEWISE WITNESSES
# =============================================================================

@dataclass(frozen=True)
class PiecewiseWitness:
    """A subword language A*a1A*..akA* whose automaton separates the two sides"""

    word: str
    left: Transformation
    right: Transformation

    def to_dict(self) -> dict:
        return {"language": "A*" + "A*".join(self.word) + "A*", "word": self.word,
                "left": list(self.left), "right": list(self.right)}


def find_piecewise_witness(u: OmegaTerm, v: OmegaTerm,
                           max_length: int = DEFAULT_WITNESS_MAX_LENGTH) -> Optional[PiecewiseWitness]:
    """
    Search subword languages over the variables of u and v, shortest word first

    Each variable acts as its letter in the automaton of A*a1A*..akA*; the
    first word whose automaton gives u and v different actions is returned.
    """
    variables = tuple(sorted(content(u) | content(v)))
    for length in range(1, max_length + 1):
        for letters in product(variables, repeat=length):
            word = "".join(letters)
            automaton = subword_dfa(variables, word)
            assignment = {x: automaton.transformation(x) for x in variables}
            left, right = eval_transformation(u, assignment), eval_transformation(v, assignment)
            if left != right:
                logger.debug(f"Piecewise witness for {to_text(u)} != {to_text(v)}: {word}")
                return PiecewiseWitness(word, left, right)
    return None


__all__ = [
    'DS_IDENTITY', 'DEFAULT_WITNESS_MAX_LENGTH', 'NiceIdentity', 'nice_basis', 'BlockSplit', 'block_basis',
    'multiregular_rewrite', 'multiregular_basis', 'PiecewiseWitness', 'find_piecewise_witness',
]
