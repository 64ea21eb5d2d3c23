#!/usr/bin/env python3
"""
Marked Products
Automata for L a K and classification of the product (unambiguous, deterministic, bideterministic)
"""

from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple, Union
import logging

from errors import AlphabetMismatch
from languages.codes import is_code
from languages.dfa import Dfa, Nfa, determinize, make_dfa, minimize_dfa, nfa_from_edges, plus_language

logger = logging.getLogger(__name__)


class EmptyWordLanguage:
    """The language {1}, usable as either operand of a marked product"""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "ONE"


ONE = EmptyWordLanguage()

Operand = Union[Dfa, EmptyWordLanguage]


def product_alphabet(L: Operand, a: str, K: Operand, alphabet: Optional[Sequence[str]] = None) -> Tuple[str, ...]:
    """
    Common alphabet of a marked product

    Defaults to the operands' alphabet, or (a,) when both operands are ONE.
    """
    declared = [tuple(op.alphabet) for op in (L, K) if isinstance(op, Dfa)]
    if alphabet is not None:
        declared.append(tuple(alphabet))
    if declared and any(set(x) != set(declared[0]) for x in declared):
        raise AlphabetMismatch(f"operands use different alphabets: {declared}")
    letters = declared[0] if declared else (a,)
    if a not in letters:
        raise AlphabetMismatch(f"marker letter '{a}' is not in the alphabet {''.join(letters)}")
    return letters


def _aligned(d: Dfa, letters: Tuple[str, ...]) -> Dfa:
    """Same automaton with its letters listed in the given order, restricted to A+"""
    if d.alphabet != letters:
        rows = [d.delta[d.letter_index(letter)].tolist() for letter in letters]
        d = make_dfa(letters, rows, d.initial, d.accepting)
    if d.accepts_empty:
        logger.warning("Operand accepts the empty word; using its restriction to nonempty words")
        d = plus_language(d)
    return d


def concatenation_nfa(L: Operand, a: str, K: Operand, alphabet: Optional[Sequence[str]] = None) -> Nfa:
    """
    NFA for L a K

    Left-part states come first, then right-part states. A ONE operand is a
    single state; on the left it is the only state the marker leaves from,
    on the right it is accepting with no outgoing edges.
    """
    letters = product_alphabet(L, a, K, alphabet)
    edges = []
    if isinstance(L, Dfa):
        left = _aligned(L, letters)
        left_states = left.states
        edges += [(q, letter, int(left.delta[k, q])) for k, letter in enumerate(letters) for q in range(left_states)]
        initial, marker_sources = left.initial, sorted(left.accepting)
    else:
        left_states, initial, marker_sources = 1, 0, [0]

    offset = left_states
    if isinstance(K, Dfa):
        right = _aligned(K, letters)
        edges += [(offset + q, letter, offset + int(right.delta[k, q]))
                  for k, letter in enumerate(letters) for q in range(right.states)]
        right_states, right_initial = right.states, offset + right.initial
        accepting = [offset + q for q in right.accepting]
    else:
        right_states, right_initial = 1, offset
        accepting = [offset]

    edges += [(q, a, right_initial) for q in marker_sources]
    return nfa_from_edges(letters, left_states + right_states, (initial,), accepting, edges)


def marked_product(L: Operand, a: str, K: Operand, alphabet: Optional[Sequence[str]] = None) -> Dfa:
    """
    Minimal DFA of L a K

    Args:
        L: Left operand (Dfa or ONE)
        a: Marker letter
        K: Right operand (Dfa or ONE)
        alphabet: Needed only to widen the alphabet when both operands are ONE

    Returns:
        Minimal complete DFA, built by subset construction on the concatenation NFA
    """
    result = minimize_dfa(determinize(concatenation_nfa(L, a, K, alphabet)))
    logger.debug(f"Marked product {L!r}.{a}.{K!r}: {result.states} states")
    return result


@dataclass(frozen=True)
class ProductKind:
    """How a marked product L a K factorizes its words"""

    unambiguous: bool
    left_deterministic: bool
    right_deterministic: bool

    @property
    def bideterministic(self) -> bool:
        return self.left_deterministic and self.right_deterministic

    def to_dict(self) -> dict:
        return {
            "unambiguous": self.unambiguous,
            "left_deterministic": self.left_deterministic,
            "right_deterministic": self.right_deterministic,
            "bideterministic": self.bideterministic,
        }


def is_unambiguous(nfa: Nfa) -> bool:
    """
    No accepted word has two accepting runs

    Explores pairs of runs with a flag recording whether they have differed;
    the product is ambiguous iff a flagged pair of accepting states is reachable.
    """
    start = [(p, q, False) for p in nfa.initial for q in nfa.initial]
    seen = set(start)
    queue = deque(start)
    while queue:
        p, q, diverged = queue.popleft()
        if diverged and p in nfa.accepting and q in nfa.accepting:
            return False
        for letter in nfa.alphabet:
            for p2 in nfa.transitions[p].get(letter, ()):
                for q2 in nfa.transitions[q].get(letter, ()):
                    state = (p2, q2, diverged or p2 != q2)
                    if state not in seen:
                        seen.add(state)
                        queue.append(state)
    return True


def product_kind(L: Operand, a: str, K: Operand, alphabet: Optional[Sequence[str]] = None) -> ProductKind:
    """
    Classify L a K

    Left deterministic: L a is a prefix code. Right deterministic: a K is a
    suffix code. Unambiguous: every word of L a K factorizes once as u a v.
    """
    letters = product_alphabet(L, a, K, alphabet)
    left = is_code(marked_product(L, a, ONE, letters), "prefix")
    right = is_code(marked_product(ONE, a, K, letters), "suffix")
    return ProductKind(
        unambiguous=is_unambiguous(concatenation_nfa(L, a, K, letters)),
        left_deterministic=left.is_code,
        right_deterministic=right.is_code,
    )


__all__ = [
    'EmptyWordLanguage', 'ONE', 'Operand', 'product_alphabet', 'concatenation_nfa', 'marked_product',
    'ProductKind', 'is_unambiguous', 'product_kind',
]
