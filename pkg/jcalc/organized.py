#!/usr/bin/env python3
"""
Organized Factorizations
Split omega-terms into words and multiregular blocks and reduce them to short breaks
"""

from dataclasses import dataclass, field
from typing import FrozenSet, List, Tuple
import logging

from errors import NotOrganizable, UnsupportedVariety
from jcalc.normal_form import BlockItem, JNormalForm, WordItem, normalize
from terms.omega_term import Concat, Letter, OmegaTerm, Power, concat, content, to_text, word

logger = logging.getLogger(__name__)

# Varieties between J and DS for which block breaks are decided by contents
CONTENT_VARIETIES = ("J", "DG", "DS")

Skeleton = Tuple[FrozenSet[str], ...]


@dataclass(frozen=True)
class OrganizedFactorization:
    """
    u0 P1 u1 ... Pn un with letter words ui and blocks Pi of omega-powers

    Inner words are nonempty; u0 and un may be empty.
    """

    words: Tuple[str, ...]
    blocks: Tuple[Tuple[Power, ...], ...]

    @property
    def size(self) -> int:
        return len(self.blocks)

    def flatten(self) -> OmegaTerm:
        parts: List[OmegaTerm] = []
        for i, text in enumerate(self.words):
            if text:
                parts.append(word(text))
            if i < len(self.blocks):
                parts.extend(self.blocks[i])
        return concat(*parts)

    def to_dict(self) -> dict:
        return {
            "words": list(self.words),
            "blocks": [[to_text(p) for p in block] for block in self.blocks],
        }


def organize(t: OmegaTerm) -> OrganizedFactorization:
    """
    Maximal letter runs become words, maximal power runs become blocks

    Raises:
        NotOrganizable: a top-level factor is neither a letter nor a power
    """
    factors = t.factors if isinstance(t, Concat) else (t,)
    words: List[str] = [""]
    blocks: List[List[Power]] = []
    previous_was_power = False
    for position, factor in enumerate(factors):
        if isinstance(factor, Letter):
            words[-1] += factor.symbol
            previous_was_power = False
        elif isinstance(factor, Power):
            if not previous_was_power:
                blocks.append([])
                words.append("")
            blocks[-1].append(factor)
            previous_was_power = True
        else:
            raise NotOrganizable(f"factor {position} ({to_text(factor)}) is neither a letter nor a power")
    return OrganizedFactorization(words=tuple(words), blocks=tuple(tuple(b) for b in blocks))


# =============================================================================
# REDUCTION TO SHORT BREAKS
# =============================================================================

@dataclass(frozen=True)
class ReductionStep:
    """
    One rewriting step

    kind: absorb-right (first letter of the following word), absorb-left
    (last letter of the preceding word) or merge (inner word used up).
    """

    kind: str
    block: int
    letter: str = ""
    identity: str = ""

    def to_dict(self) -> dict:
        return {"kind": self.kind, "block": self.block, "letter": self.letter, "identity": self.identity}


@dataclass(frozen=True)
class ReducedFactorization:
    """
    Organized factorization with short breaks

    skeletons[j] is the J-reduced content sequence of block j; block_terms[j]
    is the block as a term, absorbed letters included.
    """

    variety: str
    words: Tuple[str, ...]
    skeletons: Tuple[Skeleton, ...]
    block_terms: Tuple[OmegaTerm, ...]
    log: Tuple[ReductionStep, ...] = field(default_factory=tuple)

    @property
    def size(self) -> int:
        return len(self.skeletons)

    def as_normal_form(self) -> JNormalForm:
        items = []
        for i, text in enumerate(self.words):
            if text:
                items.append(WordItem(text))
            if i < len(self.skeletons):
                items.extend(BlockItem(c) for c in self.skeletons[i])
        return JNormalForm(tuple(items))

    def flatten(self) -> OmegaTerm:
        parts: List[OmegaTerm] = []
        for i, text in enumerate(self.words):
            if text:
                parts.append(word(text))
            if i < len(self.block_terms):
                parts.append(self.block_terms[i])
        return concat(*parts)

    def to_dict(self) -> dict:
        return {
            "variety": self.variety,
            "words": list(self.words),
            "skeletons": [["".join(sorted(c)) for c in skeleton] for skeleton in self.skeletons],
            "blocks": [to_text(t) for t in self.block_terms],
            "log": [step.to_dict() for step in self.log],
        }


def reduce_skeleton(contents: List[FrozenSet[str]]) -> Skeleton:
    """Merge adjacent comparable contents until adjacent contents are incomparable"""
    return tuple(item.content for item in normalize([BlockItem(c) for c in contents]))


def reduce_to_short_breaks(f: OrganizedFactorization, variety: str = "J") -> ReducedFactorization:
    """
    Absorb boundary letters into blocks until every break is short

    A block followed by the letter a keeps descending strictly in the R-order
    exactly when a is outside the content of the block's last J-reduced
    factor; the dual holds on the left. Violating letters are absorbed (the
    block becomes P a, equal to P (a x)^w for some x), and blocks whose inner
    word is used up are glued and re-reduced.

    Args:
        f: Organized factorization
        variety: J, DG or DS

    Returns:
        ReducedFactorization with the step log
    """
    if variety not in CONTENT_VARIETIES:
        raise UnsupportedVariety(variety)
    words = list(f.words)
    skeletons: List[Skeleton] = [reduce_skeleton([content(p) for p in block]) for block in f.blocks]
    terms: List[OmegaTerm] = [concat(*block) for block in f.blocks]
    log: List[ReductionStep] = []

    changed = True
    while changed:
        changed = False
        for j in range(len(skeletons)):
            after = words[j + 1]
            if after and after[0] in skeletons[j][-1]:
                letter = after[0]
                words[j + 1] = after[1:]
                terms[j] = concat(terms[j], Letter(letter))
                log.append(ReductionStep("absorb-right", j + 1, letter, f"B{j + 1} = B{j + 1}({letter}X)^w"))
                changed = True
            before = words[j]
            if before and before[-1] in skeletons[j][0]:
                letter = before[-1]
                words[j] = before[:-1]
                terms[j] = concat(Letter(letter), terms[j])
                log.append(ReductionStep("absorb-left", j + 1, letter, f"B{j + 1} = (X{letter})^w B{j + 1}"))
                changed = True
        for j in range(len(skeletons) - 1):
            if not words[j + 1]:
                skeletons[j:j + 2] = [reduce_skeleton(list(skeletons[j]) + list(skeletons[j + 1]))]
                terms[j:j + 2] = [concat(terms[j], terms[j + 1])]
                del words[j + 1]
                log.append(ReductionStep("merge", j + 1, "", f"B{j + 1} B{j + 2} glued"))
                changed = True
                break

    logger.debug(f"Reduced factorization: {len(f.blocks)} -> {len(skeletons)} blocks, {len(log)} steps")
    return ReducedFactorization(
        variety=variety,
        words=tuple(words),
        skeletons=tuple(skeletons),
        block_terms=tuple(terms),
        log=tuple(log),
    )


__all__ = [
    'CONTENT_VARIETIES', 'OrganizedFactorization', 'organize', 'ReductionStep', 'ReducedFactorization',
    'reduce_skeleton', 'reduce_to_short_breaks',
]
