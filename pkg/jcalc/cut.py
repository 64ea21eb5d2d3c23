#!/usr/bin/env python3
"""
Cut Comparison
Compare two omega-terms through their reduced organized factorizations
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Sequence, Union
import logging

from algebra.semigroup import FiniteSemigroup
from errors import InputError
from jcalc.organized import ReducedFactorization, organize, reduce_to_short_breaks
from terms.evaluation import satisfies
from terms.omega_term import OmegaTerm, Pseudoidentity, to_text

logger = logging.getLogger(__name__)

Oracle = Union[str, Sequence[FiniteSemigroup]]


class Outcome(Enum):
    EQUAL = "Equal"
    DISTINCT = "Distinct"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class BlockComparison:
    """Aligned blocks j of both sides and what the oracle said"""

    index: int
    left: str
    right: str
    equal: Optional[bool]
    evidence: str = ""

    def to_dict(self) -> dict:
        return {"index": self.index, "left": self.left, "right": self.right,
                "equal": self.equal, "evidence": self.evidence}


@dataclass
class CutVerdict:
    """
    Outcome of a cut comparison

    kind says where a difference was found: count (number of blocks), word
    (position of the first differing word) or block (index of the first
    distinguished block pair).
    """

    outcome: Outcome
    position: Optional[int] = None
    kind: Optional[str] = None
    reason: str = ""
    block_pairs: List[BlockComparison] = field(default_factory=list)
    left: Optional[ReducedFactorization] = None
    right: Optional[ReducedFactorization] = None

    def to_dict(self) -> dict:
        return {
            "outcome": self.outcome.value,
            "position": self.position,
            "kind": self.kind,
            "reason": self.reason,
            "block_pairs": [pair.to_dict() for pair in self.block_pairs],
            "left": self.left.to_dict() if self.left else None,
            "right": self.right.to_dict() if self.right else None,
        }


def _skeleton_text(reduced: ReducedFactorization, j: int) -> str:
    return "".join("[" + "".join(sorted(c)) + "]" for c in reduced.skeletons[j])


def _compare_with_corpus(pair: Pseudoidentity, corpus: Sequence[FiniteSemigroup]) -> Optional[str]:
    """Name of the first corpus member falsifying the pair, if any"""
    for S in corpus:
        holds, _ = satisfies(S, pair)
        if not holds:
            return S.name or f"order-{S.order} member"
    return None


def cut_compare(u: OmegaTerm, v: OmegaTerm, oracle: Oracle = "j", variety: str = "J") -> CutVerdict:
    """
    Compare u and v block by block after reducing both to short breaks

    Different word skeletons give Distinct. Otherwise blocks are compared
    pairwise: with oracle "j" by their J-reduced contents; with a corpus of
    semigroups by evaluation, where agreement is only ever reported as Unknown.

    Args:
        u: Left term
        v: Right term
        oracle: "j" or a sequence of FiniteSemigroup
        variety: Variety for the break criterion (J, DG or DS)

    Returns:
        CutVerdict
    """
    if isinstance(oracle, str) and oracle != "j":
        raise InputError(f"unknown oracle '{oracle}'. Valid options: j, or a list of semigroups")
    left = reduce_to_short_breaks(organize(u), variety)
    right = reduce_to_short_breaks(organize(v), variety)

    if left.size != right.size:
        return CutVerdict(Outcome.DISTINCT, position=min(left.size, right.size), kind="count",
                          reason=f"{left.size} blocks vs {right.size}", left=left, right=right)
    for i, (x, y) in enumerate(zip(left.words, right.words)):
        if x != y:
            return CutVerdict(Outcome.DISTINCT, position=i, kind="word",
                              reason=f"word {i} differs: '{x}' vs '{y}'", left=left, right=right)

    pairs: List[BlockComparison] = []
    distinct_at: Optional[int] = None
    for j in range(left.size):
        if oracle == "j":
            equal = left.skeletons[j] == right.skeletons[j]
            evidence = "contents" if equal else "J-reduced contents differ"
        else:
            pair = Pseudoidentity(left.block_terms[j], right.block_terms[j])
            falsifier = _compare_with_corpus(pair, oracle)
            equal = False if falsifier else None
            evidence = f"falsified in {falsifier}" if falsifier else "no corpus member distinguishes"
        pairs.append(BlockComparison(
            index=j + 1,
            left=_skeleton_text(left, j) if oracle == "j" else to_text(left.block_terms[j]),
            right=_skeleton_text(right, j) if oracle == "j" else to_text(right.block_terms[j]),
            equal=equal,
            evidence=evidence,
        ))
        if equal is False and distinct_at is None:
            distinct_at = j + 1

    if distinct_at is not None:
        verdict = CutVerdict(Outcome.DISTINCT, position=distinct_at, kind="block",
                             reason=pairs[distinct_at - 1].evidence, block_pairs=pairs, left=left, right=right)
    elif oracle == "j" or not pairs:
        verdict = CutVerdict(Outcome.EQUAL, block_pairs=pairs, left=left, right=right)
    else:
        undecided = next(pair.index for pair in pairs if pair.equal is None)
        verdict = CutVerdict(Outcome.UNKNOWN, position=undecided, kind="block",
                             reason="blocks agree on the corpus", block_pairs=pairs,
                             left=left, right=right)
    logger.debug(f"Cut comparison {to_text(u)} vs {to_text(v)}: {verdict.outcome.value}")
    return verdict


__all__ = ['Outcome', 'BlockComparison', 'CutVerdict', 'Oracle', 'cut_compare']
