#!/usr/bin/env python3
"""
Pseudovariety Membership
Registry of variety predicates checked by pseudoidentity bases and structural tests
"""

from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple
import functools
import logging
import re

from algebra.constructions import is_subsemigroup, local_semigroup, restrict
from algebra.green import green
from algebra.semigroup import FiniteSemigroup
from errors import InputError, PredicateDisagreement, UnknownVariety
from terms.evaluation import satisfies
from terms.omega_term import Letter, Power, Pseudoidentity, concat, parse_identities, substitute

logger = logging.getLogger(__name__)

StructuralCheck = Callable[[FiniteSemigroup], bool]

METHODS = ("basis", "structural", "both")


@dataclass(frozen=True)
class VarietyPredicate:
    """
    A pseudovariety given by a basis, a structural check, or both

    Args:
        name: Registry name (case-sensitive)
        basis: Pseudoidentities defining the class
        structural: Decision procedure reading the Cayley table
        description: One-line description
    """

    name: str
    basis: Optional[Tuple[Pseudoidentity, ...]] = None
    structural: Optional[StructuralCheck] = field(default=None, compare=False)
    description: str = ""

    def __post_init__(self):
        if self.basis is None and self.structural is None:
            raise InputError(f"variety '{self.name}' needs a basis or a structural check")

    @property
    def default_method(self) -> str:
        if self.basis is not None and self.structural is not None:
            return "both"
        return "basis" if self.basis is not None else "structural"

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "description": self.description,
            "basis": [identity.to_text() for identity in self.basis] if self.basis else None,
            "structural": self.structural is not None,
        }


@dataclass
class MembershipReport:
    """Outcome of a membership check with the evidence gathered"""

    variety: str
    method: str
    member: bool
    basis_verdict: Optional[bool] = None
    structural_verdict: Optional[bool] = None
    failed_identity: Optional[str] = None
    counter_assignment: Optional[Dict[str, int]] = None

    def to_dict(self, S: Optional[FiniteSemigroup] = None) -> dict:
        assignment = self.counter_assignment
        if assignment is not None and S is not None:
            assignment = {v: S.name_of(e) for v, e in assignment.items()}
        return {
            "variety": self.variety,
            "method": self.method,
            "member": self.member,
            "basis": self.basis_verdict,
            "structural": self.structural_verdict,
            "failed_identity": self.failed_identity,
            "counter_assignment": assignment,
        }


# =============================================================================
# STRUCTURAL CHECKS
# =============================================================================

_STRUCTURAL: Dict[str, StructuralCheck] = {}


def structural(name: str):
    """
    Register a structural membership check

    Usage:
        @structural("K")
        def idempotents_are_left_zeros(S):
            ...
    """
    def decorator(func: StructuralCheck) -> StructuralCheck:
        _STRUCTURAL[name] = func
        return func
    return decorator


@structural("I")
def is_trivial(S: FiniteSemigroup) -> bool:
    return S.order == 1


@structural("Sl")
def is_semilattice(S: FiniteSemigroup) -> bool:
    rows = S.rows
    return len(S.idempotents) == S.order and all(
        rows[a][b] == rows[b][a] for a in range(S.order) for b in range(a + 1, S.order))


@structural("J")
def regular_j_classes_trivial(S: FiniteSemigroup) -> bool:
    return all(len(block) == 1 for block in green(S).regular_j_classes)


@structural("DS")
def regular_j_classes_closed(S: FiniteSemigroup) -> bool:
    return all(is_subsemigroup(S, block) for block in green(S).regular_j_classes)


@structural("N")
def unique_idempotent_is_zero(S: FiniteSemigroup) -> bool:
    if len(S.idempotents) != 1:
        return False
    (e,) = S.idempotents
    rows = S.rows
    return all(rows[e][x] == e and rows[x][e] == e for x in range(S.order))


@structural("K")
def idempotents_are_left_zeros(S: FiniteSemigroup) -> bool:
    rows = S.rows
    return all(rows[e][x] == e for e in S.idempotents for x in range(S.order))


@structural("D")
def idempotents_are_right_zeros(S: FiniteSemigroup) -> bool:
    rows = S.rows
    return all(rows[x][e] == e for e in S.idempotents for x in range(S.order))


@structural("LI")
def local_semigroups_trivial(S: FiniteSemigroup) -> bool:
    rows = S.rows
    return all(rows[rows[e][x]][e] == e for e in S.idempotents for x in range(S.order))


@structural("ECom")
def idempotents_commute(S: FiniteSemigroup) -> bool:
    rows = S.rows
    return all(rows[e][f] == rows[f][e] for e in S.idempotents for f in S.idempotents)


@structural("RS")
def regular_elements_form_subsemigroup(S: FiniteSemigroup) -> bool:
    return is_subsemigroup(S, green(S).regular)


@structural("DSRS")
def ds_and_rs(S: FiniteSemigroup) -> bool:
    return regular_j_classes_closed(S) and regular_elements_form_subsemigroup(S)


@structural("DG")
def regular_j_classes_are_groups(S: FiniteSemigroup) -> bool:
    summary = green(S)
    return all(len(summary.h_class(min(block))) == len(block) for block in summary.regular_j_classes)


@structural("G")
def is_group(S: FiniteSemigroup) -> bool:
    if S.identity is None:
        return False
    rows = S.rows
    return all(S.identity in rows[s] for s in range(S.order))


@structural("Ab")
def is_abelian_group(S: FiniteSemigroup) -> bool:
    rows = S.rows
    return is_group(S) and all(rows[a][b] == rows[b][a] for a in range(S.order) for b in range(S.order))


# =============================================================================
# BASES
# =============================================================================

_BASES: Dict[str, Tuple[str, ...]] = {
    "I": ("x = y",),
    "Sl": ("xx = x", "xy = yx"),
    "J": ("(xy)^w = (yx)^w", "x^(w+1) = x^w"),
    "DS": ("((xy)^w(yx)^w(xy)^w)^w = (xy)^w",),
    "N": ("x^w y = x^w", "y x^w = x^w"),
    "K": ("x^w y = x^w",),
    "D": ("y x^w = x^w",),
    "LI": ("x^w y x^w = x^w",),
    "ECom": ("x^w y^w = y^w x^w",),
    "DSRS": ("((xy)^w(yx)^w(xy)^w)^w = (xy)^w", "x^(w+1)y^(w+1) = (x^(w+1)y^(w+1))^(w+1)"),
    "DG": ("(xy)^w = (yx)^w",),
}

_DESCRIPTIONS: Dict[str, str] = {
    "I": "trivial semigroups",
    "Sl": "semilattices",
    "J": "J-trivial semigroups (regular J-classes trivial)",
    "DS": "regular J-classes are subsemigroups",
    "N": "nilpotent semigroups",
    "K": "idempotents are left zeros",
    "D": "idempotents are right zeros",
    "LI": "locally trivial semigroups",
    "ECom": "idempotents commute",
    "RS": "regular elements form a subsemigroup",
    "DSRS": "DS intersected with RS",
    "DG": "regular J-classes are groups",
    "G": "groups",
    "Ab": "abelian groups",
}

REGISTERED_ORDER = ("I", "Sl", "J", "DS", "N", "K", "D", "LI", "ECom", "RS", "DSRS", "DG", "G", "Ab")


# =============================================================================
# REGISTRY
# =============================================================================

_PARAMETRIC = re.compile(r"^(DV|LV)\((.+)\)$")
_ALIASES = {"DS∩RS": "DSRS", "DS&RS": "DSRS"}


class VarietyRegistry:
    """Registry to manage variety predicates, including parametric DV(.) and LV(.)"""

    def __init__(self):
        self.varieties: Dict[str, VarietyPredicate] = {}

    def register(self, predicate: VarietyPredicate):
        """Register a variety predicate"""
        self.varieties[predicate.name] = predicate

    def get(self, name: str) -> VarietyPredicate:
        """Get a predicate by name, building parametric ones on demand"""
        name = name.strip()
        name = _ALIASES.get(name, name)
        if name in self.varieties:
            return self.varieties[name]
        match = _PARAMETRIC.match(name)
        if match:
            operator, inner = match.groups()
            parameter = self.get(inner)
            predicate = (dv_predicate if operator == "DV" else lv_predicate)(parameter)
            self.varieties[predicate.name] = predicate
            return predicate
        raise UnknownVariety(name)

    def names(self) -> List[str]:
        return list(self.varieties)

    def describe_all(self) -> List[dict]:
        return [predicate.to_dict() for predicate in self.varieties.values()]


def dv_predicate(parameter: VarietyPredicate) -> VarietyPredicate:
    """DV: regular J-classes are subsemigroups lying in V"""

    def check(S: FiniteSemigroup) -> bool:
        for block in green(S).regular_j_classes:
            if not is_subsemigroup(S, block):
                return False
            if not variety_member(restrict(S, block).semigroup, parameter).member:
                return False
        return True

    return VarietyPredicate(
        name=f"DV({parameter.name})",
        structural=check,
        description=f"regular J-classes are semigroups in {parameter.name}",
    )


def lv_predicate(parameter: VarietyPredicate) -> VarietyPredicate:
    """LV: every local semigroup eSe lies in V"""

    def check(S: FiniteSemigroup) -> bool:
        return all(variety_member(local_semigroup(S, e).semigroup, parameter).member
                   for e in sorted(S.idempotents))

    return VarietyPredicate(
        name=f"LV({parameter.name})",
        structural=check,
        description=f"local semigroups eSe lie in {parameter.name}",
    )


registry = VarietyRegistry()
for _name in REGISTERED_ORDER:
    registry.register(VarietyPredicate(
        name=_name,
        basis=parse_identities(_BASES[_name]) if _name in _BASES else None,
        structural=_STRUCTURAL.get(_name),
        description=_DESCRIPTIONS[_name],
    ))


# =============================================================================
# MEMBERSHIP
# =============================================================================

def check_basis(S: FiniteSemigroup, basis: Tuple[Pseudoidentity, ...]) -> Tuple[bool, Optional[Pseudoidentity], Optional[Dict[str, int]]]:
    """First basis identity failing in S, with its counter-assignment"""
    for identity in basis:
        holds, assignment = satisfies(S, identity)
        if not holds:
            return False, identity, assignment
    return True, None, None


def variety_member(
    S: FiniteSemigroup,
    V: VarietyPredicate,
    method: Optional[str] = None,
) -> MembershipReport:
    """
    Decide S in V

    Args:
        S: Finite semigroup
        V: Registered predicate (or a name resolved through the registry)
        method: basis | structural | both (default: every available checker)

    Returns:
        MembershipReport; raises PredicateDisagreement when both checkers
        run and disagree
    """
    if isinstance(V, str):
        V = registry.get(V)
    method = method or V.default_method
    if method not in METHODS:
        raise InputError(f"unknown method '{method}'. Valid options: {', '.join(METHODS)}")
    if method in ("basis", "both") and V.basis is None:
        raise InputError(f"variety '{V.name}' has no basis")
    if method in ("structural", "both") and V.structural is None:
        raise InputError(f"variety '{V.name}' has no structural check")

    report = MembershipReport(variety=V.name, method=method, member=False)
    if method in ("basis", "both"):
        holds, failed, assignment = check_basis(S, V.basis)
        report.basis_verdict = holds
        if failed is not None:
            report.failed_identity = failed.to_text()
            report.counter_assignment = assignment
    if method in ("structural", "both"):
        report.structural_verdict = bool(V.structural(S))

    if method == "both" and report.basis_verdict != report.structural_verdict:
        logger.error(f"Basis and structural checks disagree for {V.name} on {S.name or '?'}")
        raise PredicateDisagreement(V.name, S.name, report.basis_verdict, report.structural_verdict)

    report.member = report.basis_verdict if report.basis_verdict is not None else report.structural_verdict
    return report


def localize(identity: Pseudoidentity, z: str = "z") -> Pseudoidentity:
    """Substitute every variable v by z^w v z^w (z must be fresh)"""
    if z in identity.variables:
        raise InputError(f"letter '{z}' is not fresh for {identity.to_text()}")
    idempotent = Power(Letter(z))
    mapping = {v: concat(idempotent, Letter(v), idempotent) for v in identity.variables}
    return Pseudoidentity(substitute(identity.lhs, mapping), substitute(identity.rhs, mapping))


def localized_basis(V: VarietyPredicate) -> Tuple[Pseudoidentity, ...]:
    """Basis of LV obtained by localizing a basis of V"""
    if V.basis is None:
        raise InputError(f"variety '{V.name}' has no basis to localize")
    fresh = next(letter for letter in "zuvtsrqp" if all(letter not in i.variables for i in V.basis))
    return tuple(localize(identity, fresh) for identity in V.basis)


__all__ = [
    'VarietyPredicate', 'MembershipReport', 'VarietyRegistry', 'registry', 'structural',
    'dv_predicate', 'lv_predicate', 'check_basis', 'variety_member', 'localize', 'localized_basis',
    'REGISTERED_ORDER', 'METHODS',
]
