#!/usr/bin/env python3
"""
Omega-Term Syntax
AST, parser, printer and structural helpers for omega-terms and pseudoidentities
"""

from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple, Union
import logging

import numpy as np

from errors import TermSyntaxError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Letter:
    symbol: str


@dataclass(frozen=True)
class Concat:
    """Product of at least two factors, none of them a Concat"""
    factors: Tuple["OmegaTerm", ...]


@dataclass(frozen=True)
class Power:
    """base^(omega+shift)"""
    base: "OmegaTerm"
    shift: int = 0


OmegaTerm = Union[Letter, Concat, Power]


def concat(*terms: OmegaTerm) -> OmegaTerm:
    """Flattened product; a single factor is returned unchanged"""
    factors: List[OmegaTerm] = []
    for term in terms:
        if isinstance(term, Concat):
            factors.extend(term.factors)
        else:
            factors.append(term)
    if not factors:
        raise ValueError("empty product of omega-terms")
    if len(factors) == 1:
        return factors[0]
    return Concat(tuple(factors))


def word(text: str) -> OmegaTerm:
    """Term of a nonempty word"""
    return concat(*(Letter(ch) for ch in text))


# =============================================================================
# PARSER
# =============================================================================

OMEGA_SYMBOLS = ("w", "ω")


class _TermParser:
    """
    Recursive descent over the grammar

        term   := factor+
        factor := atom ('^w' | '^(w+INT)' | '^(w-INT)')*
        atom   := LETTER | '(' term ')'
    """

    def __init__(self, text: str, offset: int = 0):
        self.text = text
        self.pos = 0
        self.offset = offset

    def error(self, message: str) -> TermSyntaxError:
        return TermSyntaxError(message, self.pos + self.offset)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> Optional[str]:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else None

    def expect(self, char: str):
        if self.peek() != char:
            found = self.peek()
            raise self.error(f"expected '{char}', found {repr(found) if found else 'end of input'}")
        self.pos += 1

    def parse(self) -> OmegaTerm:
        term = self.term()
        if self.peek() is not None:
            raise self.error(f"unexpected '{self.peek()}'")
        return term

    def term(self) -> OmegaTerm:
        factors = []
        while True:
            char = self.peek()
            if char is None or char == ")":
                break
            factors.append(self.factor())
        if not factors:
            raise self.error("expected a letter or '('")
        return concat(*factors)

    def factor(self) -> OmegaTerm:
        result = self.atom()
        while self.peek() == "^":
            self.pos += 1
            result = Power(result, self.exponent())
        return result

    def atom(self) -> OmegaTerm:
        char = self.peek()
        if char == "(":
            self.pos += 1
            inner = self.term()
            self.expect(")")
            return inner
        if char is not None and char.isalpha() and char not in OMEGA_SYMBOLS:
            self.pos += 1
            return Letter(char)
        raise self.error(f"expected a letter or '(', found {repr(char) if char else 'end of input'}")

    def exponent(self) -> int:
        char = self.peek()
        if char in OMEGA_SYMBOLS:
            self.pos += 1
            return 0
        if char != "(":
            raise self.error("expected 'w' or '(' after '^'")
        self.pos += 1
        if self.peek() not in OMEGA_SYMBOLS:
            raise self.error("expected 'w' in exponent")
        self.pos += 1
        sign = self.peek()
        if sign == ")":
            self.pos += 1
            return 0
        if sign not in ("+", "-"):
            raise self.error("expected '+' or '-' in exponent")
        self.pos += 1
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("expected an integer in exponent")
        value = int(self.text[start:self.pos])
        self.expect(")")
        return value if sign == "+" else -value


def parse_term(text: str) -> OmegaTerm:
    """
    Parse an omega-term

    Args:
        text: e.g. "(xy)^w", "x^(w+1)", "((xy)^w(yx)^w(xy)^w)^w"

    Returns:
        OmegaTerm with flattened concatenation
    """
    return _TermParser(text).parse()


# =============================================================================
# PRINTING AND STRUCTURE
# =============================================================================

def to_text(t: OmegaTerm) -> str:
    """Canonical text in the parser's grammar"""
    if isinstance(t, Letter):
        return t.symbol
    if isinstance(t, Concat):
        return "".join(to_text(f) for f in t.factors)
    base = to_text(t.base) if isinstance(t.base, Letter) else f"({to_text(t.base)})"
    if t.shift == 0:
        return f"{base}^w"
    sign = "+" if t.shift > 0 else "-"
    return f"{base}^(w{sign}{abs(t.shift)})"


def content(t: OmegaTerm) -> FrozenSet[str]:
    """Letters occurring in t; powers do not change content"""
    if isinstance(t, Letter):
        return frozenset((t.symbol,))
    if isinstance(t, Concat):
        return frozenset().union(*(content(f) for f in t.factors))
    return content(t.base)


def factors(t: OmegaTerm) -> Tuple[OmegaTerm, ...]:
    """Top-level factors of t"""
    return t.factors if isinstance(t, Concat) else (t,)


def is_multiregular(t: OmegaTerm) -> bool:
    """Every top-level factor is an omega-power"""
    return all(isinstance(f, Power) for f in factors(t))


def substitute(t: OmegaTerm, mapping: Mapping[str, OmegaTerm]) -> OmegaTerm:
    """Apply the endomorphism letter -> mapping[letter] (identity elsewhere)"""
    if isinstance(t, Letter):
        return mapping.get(t.symbol, t)
    if isinstance(t, Concat):
        return concat(*(substitute(f, mapping) for f in t.factors))
    return Power(substitute(t.base, mapping), t.shift)


def random_term(
    rng: np.random.Generator,
    variables: Sequence[str] = ("x", "y", "z"),
    max_factors: int = 6,
    shifts: Sequence[int] = (-1, 0, 1),
    max_depth: int = 2,
    power_bias: float = 0.5,
) -> OmegaTerm:
    """
    Seeded random omega-term

    Args:
        rng: numpy Generator
        variables: Letters to draw from
        max_factors: Upper bound on top-level factors
        shifts: Allowed exponents omega+k
        max_depth: Nesting depth of powers
        power_bias: Probability that a factor is a power
    """
    count = int(rng.integers(1, max_factors + 1))
    parts = []
    for _ in range(count):
        if max_depth > 0 and rng.random() < power_bias:
            base = random_term(rng, variables, min(3, max_factors), shifts, max_depth - 1, power_bias / 2)
            parts.append(Power(base, int(rng.choice(shifts))))
        else:
            parts.append(Letter(str(rng.choice(list(variables)))))
    return concat(*parts)


# =============================================================================
# PSEUDOIDENTITIES
# =============================================================================

@dataclass(frozen=True)
class Pseudoidentity:
    lhs: OmegaTerm
    rhs: OmegaTerm

    @property
    def variables(self) -> Tuple[str, ...]:
        return tuple(sorted(content(self.lhs) | content(self.rhs)))

    def to_text(self) -> str:
        return f"{to_text(self.lhs)} = {to_text(self.rhs)}"

    def __str__(self) -> str:
        return self.to_text()


def parse_identity(text: str) -> Pseudoidentity:
    """Parse "<term> = <term>" """
    if text.count("=") != 1:
        position = text.find("=", text.find("=") + 1) if "=" in text else len(text)
        raise TermSyntaxError("expected exactly one '='", position)
    left, right = text.split("=")
    lhs = _TermParser(left).parse()
    rhs = _TermParser(right, offset=len(left) + 1).parse()
    return Pseudoidentity(lhs, rhs)


def parse_identities(texts: Iterable[str]) -> Tuple[Pseudoidentity, ...]:
    return tuple(parse_identity(text) for text in texts)


__all__ = [
    'Letter', 'Concat', 'Power', 'OmegaTerm', 'concat', 'word',
    'parse_term', 'to_text', 'content', 'factors', 'is_multiregular', 'substitute', 'random_term',
    'Pseudoidentity', 'parse_identity', 'parse_identities',
]
