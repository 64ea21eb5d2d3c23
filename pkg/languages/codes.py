#!/usr/bin/env python3
"""
Prefix and Suffix Codes
Decides whether a +-language is a prefix (suffix) code and returns a witness pair otherwise
"""

from collections import deque
from dataclasses import dataclass
from typing import Dict, Optional, Tuple
import logging

from errors import InputError
from languages.dfa import Dfa, determinize, plus_language, reverse_dfa

logger = logging.getLogger(__name__)

SIDES = ("prefix", "suffix")


@dataclass(frozen=True)
class CodeReport:
    """
    Outcome of a code test

    witness = (u, w) with u, w in L and u a proper prefix (suffix) of w
    """

    side: str
    is_code: bool
    witness: Optional[Tuple[str, str]] = None

    def to_dict(self) -> dict:
        return {
            "side": self.side,
            "code": self.is_code,
            "witness": list(self.witness) if self.witness else None,
        }


def _shortest_words(d: Dfa) -> Dict[int, str]:
    """Shortlex-least word reaching each reachable state"""
    words = {d.initial: ""}
    queue = deque([d.initial])
    while queue:
        q = queue.popleft()
        for k, letter in enumerate(d.alphabet):
            target = int(d.delta[k, q])
            if target not in words:
                words[target] = words[q] + letter
                queue.append(target)
    return words


def _shortest_nonempty_to_accepting(d: Dfa, source: int) -> Optional[str]:
    seen: Dict[int, str] = {}
    queue = deque()
    for k, letter in enumerate(d.alphabet):
        target = int(d.delta[k, source])
        if target not in seen:
            seen[target] = letter
            queue.append(target)
    while queue:
        q = queue.popleft()
        if q in d.accepting:
            return seen[q]
        for k, letter in enumerate(d.alphabet):
            target = int(d.delta[k, q])
            if target not in seen:
                seen[target] = seen[q] + letter
                queue.append(target)
    return None


def _prefix_witness(d: Dfa) -> Optional[Tuple[str, str]]:
    """Shortest (u, uv) with u, uv accepted and v nonempty, or None"""
    best: Optional[Tuple[str, str]] = None
    for state, u in _shortest_words(d).items():
        if state not in d.accepting:
            continue
        v = _shortest_nonempty_to_accepting(d, state)
        if v is None:
            continue
        candidate = (u, u + v)
        if best is None or (len(candidate[1]), candidate) < (len(best[1]), best):
            best = candidate
    return best


def is_code(d: Dfa, side: str = "prefix") -> CodeReport:
    """
    Prefix code: no word of L has a proper prefix in L. Suffix code: the dual.

    Languages are taken inside A+; an automaton accepting the empty word is
    restricted first. The empty language is a code. The suffix test runs the
    prefix test on the reversed language.

    Args:
        d: Complete DFA
        side: "prefix" or "suffix"

    Returns:
        CodeReport with a shortest witness pair when the language is not a code
    """
    if side not in SIDES:
        raise InputError(f"side must be one of {', '.join(SIDES)}, got '{side}'")
    if d.accepts_empty:
        logger.warning("Automaton accepts the empty word; testing its restriction to nonempty words")
        d = plus_language(d)

    if side == "prefix":
        witness = _prefix_witness(d)
    else:
        reversed_witness = _prefix_witness(determinize(reverse_dfa(d)))
        witness = None
        if reversed_witness is not None:
            u, w = reversed_witness
            witness = (u[::-1], w[::-1])
    return CodeReport(side=side, is_code=witness is None, witness=witness)


__all__ = ['SIDES', 'CodeReport', 'is_code']
