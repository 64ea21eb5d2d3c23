#!/usr/bin/env python3
"""
Workbench Exceptions
Error types shared by the algebra, term, expansion, language and J-calculus packages
"""

from typing import Any, Optional, Sequence, Tuple


class WorkbenchError(Exception):
    """Base class for every error raised by the workbench"""
    pass


class InputError(WorkbenchError):
    """Raised when user-supplied data is malformed (CLI exit code 2)"""
    pass


# =============================================================================
# ALGEBRA
# =============================================================================

class NonAssociative(InputError):
    """Raised when a Cayley table fails the associativity scan"""

    def __init__(self, witness: Tuple[int, int, int]):
        self.witness = tuple(int(v) for v in witness)
        i, j, k = self.witness
        super().__init__(f"table is not associative: ({i}*{j})*{k} != {i}*({j}*{k})")


class IndexOutOfRange(InputError):
    """Raised when a table entry or element index is not a valid element"""

    def __init__(self, position: Any, value: Any = None):
        self.position = position
        self.value = value
        super().__init__(f"index out of range at {position}: {value}")


class NotIdempotent(WorkbenchError):
    """Raised when a local semigroup is requested at a non-idempotent"""

    def __init__(self, element: int):
        self.element = element
        super().__init__(f"element {element} is not idempotent")


class EmptyGeneratorSet(WorkbenchError):
    """Raised when a generated subsemigroup is requested from no generators"""
    pass


class TooLarge(WorkbenchError):
    """Raised when a brute-force routine is asked to work beyond its bound"""

    def __init__(self, order: int, bound: int):
        self.order = order
        self.bound = bound
        super().__init__(f"order {order} exceeds configured bound {bound}")


class NotOnto(WorkbenchError):
    """Raised when letter images do not generate the target"""

    def __init__(self, missing: Sequence[int]):
        self.missing = sorted(missing)
        super().__init__(f"letter images do not generate elements {self.missing}")


# =============================================================================
# TERMS AND VARIETIES
# =============================================================================

class TermSyntaxError(InputError):
    """Raised when an omega-term string does not follow the grammar"""

    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} at position {position}")


class UnboundLetter(WorkbenchError):
    """Raised when an evaluation assignment misses a letter of the term"""

    def __init__(self, symbol: str):
        self.symbol = symbol
        super().__init__(f"letter '{symbol}' has no assigned value")


class UnknownLetter(InputError):
    """Raised when a word or morphism uses a letter outside the alphabet"""

    def __init__(self, symbol: str):
        self.symbol = symbol
        super().__init__(f"letter '{symbol}' is not in the alphabet")


class UnknownVariety(InputError):
    """Raised when a variety name is not in the registry"""

    def __init__(self, name: str):
        self.name = name
        super().__init__(f"unknown variety '{name}'")


class PredicateDisagreement(WorkbenchError):
    """Raised when basis and structural membership checks disagree"""

    def __init__(self, variety: str, semigroup_name: Optional[str], basis: bool, structural: bool):
        self.variety = variety
        self.semigroup_name = semigroup_name
        self.basis = basis
        self.structural = structural
        super().__init__(
            f"{variety}: basis says {basis}, structural says {structural} "
            f"for semigroup '{semigroup_name or '?'}'"
        )


# =============================================================================
# EXPANSION
# =============================================================================

class SignatureExplosion(WorkbenchError):
    """Raised when the reachable signature set exceeds its cap"""

    def __init__(self, cap: int):
        self.cap = cap
        super().__init__(f"more than {cap} reachable signatures")


# =============================================================================
# LANGUAGES
# =============================================================================

class BadTransition(InputError):
    """Raised when a DFA transition table is malformed"""
    pass


class BadState(InputError):
    """Raised when a DFA refers to a state that does not exist"""

    def __init__(self, state: Any, states: int):
        self.state = state
        self.states = states
        super().__init__(f"state {state} does not exist (automaton has {states} states)")


class ExplosionCap(WorkbenchError):
    """Raised when a transformation closure exceeds its cap"""

    def __init__(self, cap: int):
        self.cap = cap
        super().__init__(f"more than {cap} transformations generated")


class AlphabetMismatch(InputError):
    """Raised when operands of a language operation disagree on the alphabet"""
    pass


# =============================================================================
# J-CALCULUS
# =============================================================================

class NotOrganizable(WorkbenchError):
    """Raised when a term has a top-level factor that is neither a letter nor a power"""
    pass


class UnsupportedVariety(WorkbenchError):
    """Raised when the content calculus is requested outside the interval [J, DS]"""

    def __init__(self, name: str):
        self.name = name
        super().__init__(f"content calculus is not available for '{name}'")


__all__ = [
    'WorkbenchError', 'InputError',
    'NonAssociative', 'IndexOutOfRange', 'NotIdempotent', 'EmptyGeneratorSet', 'TooLarge', 'NotOnto',
    'TermSyntaxError', 'UnboundLetter', 'UnknownLetter', 'UnknownVariety', 'PredicateDisagreement',
    'SignatureExplosion',
    'BadTransition', 'BadState', 'ExplosionCap', 'AlphabetMismatch',
    'NotOrganizable', 'UnsupportedVariety',
]
