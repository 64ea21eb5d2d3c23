#!/usr/bin/env python3
"""
Bideterministic Closure Probes
Checks one instance of "L, K in V and L a K bideterministic implies L a K in V"
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence, Union
import logging

from algebra.semigroup import FiniteSemigroup
from languages.codes import CodeReport, is_code
from languages.dfa import Dfa
from languages.products import ONE, Operand, marked_product, product_alphabet
from languages.syntactic import syntactic_semigroup
from terms.varieties import VarietyPredicate, registry, variety_member

logger = logging.getLogger(__name__)


class MembershipStatus(Enum):
    """Status of an operand of the marked product"""
    IN_VARIETY = "inVariety"
    SINGLETON_EMPTY_WORD = "isSingletonEmptyWord"
    OUTSIDE = "outside"


class Verdict(Enum):
    CLOSURE_HOLDS = "closure-holds"
    CLOSURE_VIOLATED = "closure-violated"
    NOT_APPLICABLE = "not-applicable"


@dataclass
class ProbeReport:
    """Everything a closure probe computed"""

    variety: str
    letter: str
    l_status: MembershipStatus
    k_status: MembershipStatus
    left_code: CodeReport
    right_code: CodeReport
    product: Dfa
    product_syntactic: FiniteSemigroup
    product_member: bool
    verdict: Verdict

    @property
    def bidet(self) -> bool:
        return self.left_code.is_code and self.right_code.is_code

    @property
    def failing_side(self) -> Optional[str]:
        failing = [side for side, report in (("left", self.left_code), ("right", self.right_code))
                   if not report.is_code]
        if not failing:
            return None
        return "both" if len(failing) == 2 else failing[0]

    def to_dict(self) -> dict:
        return {
            "variety": self.variety,
            "letter": self.letter,
            "l_status": self.l_status.value,
            "k_status": self.k_status.value,
            "bidet": self.bidet,
            "failing_side": self.failing_side,
            "witnesses": {
                "left": list(self.left_code.witness) if self.left_code.witness else None,
                "right": list(self.right_code.witness) if self.right_code.witness else None,
            },
            "product": self.product.to_dict(),
            "product_syntactic": self.product_syntactic.to_dict(),
            "product_member": self.product_member,
            "verdict": self.verdict.value,
        }


def operand_status(V: VarietyPredicate, operand: Operand) -> MembershipStatus:
    if operand is ONE:
        return MembershipStatus.SINGLETON_EMPTY_WORD
    semigroup, _ = syntactic_semigroup(operand)
    if variety_member(semigroup, V).member:
        return MembershipStatus.IN_VARIETY
    return MembershipStatus.OUTSIDE


def closure_probe(
    V: Union[VarietyPredicate, str],
    L: Operand,
    a: str,
    K: Operand,
    alphabet: Optional[Sequence[str]] = None,
) -> ProbeReport:
    """
    Probe closure of V under one bideterministic product

    Args:
        V: Variety predicate or registry name
        L: Left operand (Dfa or ONE)
        a: Marker letter
        K: Right operand (Dfa or ONE)
        alphabet: Alphabet when both operands are ONE

    Returns:
        ProbeReport; the verdict is closure-violated only when both operands
        are acceptable, the product is bideterministic and its syntactic
        semigroup lies outside V
    """
    if isinstance(V, str):
        V = registry.get(V)
    letters = product_alphabet(L, a, K, alphabet)
    l_status = operand_status(V, L)
    k_status = operand_status(V, K)
    left_code = is_code(marked_product(L, a, ONE, letters), "prefix")
    right_code = is_code(marked_product(ONE, a, K, letters), "suffix")
    product = marked_product(L, a, K, letters)
    product_syntactic, _ = syntactic_semigroup(product, name="Synt(LaK)")
    member = variety_member(product_syntactic, V).member

    acceptable = MembershipStatus.OUTSIDE not in (l_status, k_status)
    if acceptable and left_code.is_code and right_code.is_code:
        verdict = Verdict.CLOSURE_HOLDS if member else Verdict.CLOSURE_VIOLATED
    else:
        verdict = Verdict.NOT_APPLICABLE
    logger.info(f"Closure probe {V.name} ({L!r}, {a}, {K!r}): {verdict.value}")
    return ProbeReport(
        variety=V.name,
        letter=a,
        l_status=l_status,
        k_status=k_status,
        left_code=left_code,
        right_code=right_code,
        product=product,
        product_syntactic=product_syntactic,
        product_member=member,
        verdict=verdict,
    )


__all__ = ['MembershipStatus', 'Verdict', 'ProbeReport', 'operand_status', 'closure_probe']
