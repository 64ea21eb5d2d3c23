#!/usr/bin/env python3
"""
Finite Automata
Complete DFAs, NFAs, subset construction, reversal and Moore minimization
"""

from collections import deque
from dataclasses import dataclass
from typing import Any, Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Set, Tuple
import logging

import numpy as np

from errors import BadState, BadTransition, InputError, UnknownLetter

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Dfa:
    """
    Complete deterministic automaton

    delta[k, q] is the state reached from q on alphabet[k].
    """

    alphabet: Tuple[str, ...]
    states: int
    initial: int
    accepting: FrozenSet[int]
    delta: np.ndarray

    def letter_index(self, letter: str) -> int:
        try:
            return self.alphabet.index(letter)
        except ValueError:
            raise UnknownLetter(letter) from None

    def run(self, word: str, start: Optional[int] = None) -> int:
        state = self.initial if start is None else start
        for letter in word:
            state = int(self.delta[self.letter_index(letter), state])
        return state

    def accepts(self, word: str) -> bool:
        return self.run(word) in self.accepting

    @property
    def accepts_empty(self) -> bool:
        return self.initial in self.accepting

    def transformation(self, letter: str) -> Tuple[int, ...]:
        """Action of a letter as a tuple of images"""
        return tuple(int(q) for q in self.delta[self.letter_index(letter)])

    def to_dict(self) -> dict:
        return {
            "alphabet": list(self.alphabet),
            "states": self.states,
            "initial": self.initial,
            "accepting": sorted(self.accepting),
            "delta": {letter: [int(q) for q in self.delta[k]] for k, letter in enumerate(self.alphabet)},
        }

    def __repr__(self) -> str:
        return f"Dfa(alphabet={''.join(self.alphabet)!r}, states={self.states}, accepting={sorted(self.accepting)})"


def _frozen(delta: np.ndarray) -> np.ndarray:
    delta = np.ascontiguousarray(delta, dtype=np.int64)
    delta.setflags(write=False)
    return delta


def make_dfa(alphabet: Sequence[str], delta: Sequence[Sequence[int]], initial: int,
             accepting: Iterable[int]) -> Dfa:
    """Assemble a Dfa from already validated parts"""
    array = np.asarray(delta, dtype=np.int64).reshape(len(alphabet), -1)
    return Dfa(alphabet=tuple(alphabet), states=int(array.shape[1]), initial=int(initial),
               accepting=frozenset(int(q) for q in accepting), delta=_frozen(array))


def _check_alphabet(alphabet: Sequence[Any]) -> Tuple[str, ...]:
    letters = tuple(alphabet)
    if not letters:
        raise InputError("alphabet must not be empty")
    for letter in letters:
        if not isinstance(letter, str) or len(letter) != 1:
            raise InputError(f"letters must be single characters, got {letter!r}")
    if len(set(letters)) != len(letters):
        raise InputError(f"alphabet has repeated letters: {letters}")
    return letters


def build_dfa(document: Mapping[str, Any]) -> Dfa:
    """
    Validate an automaton document and build a complete DFA

    Args:
        document: {"alphabet": [...], "states": n, "initial": q, "accepting": [...],
                   "delta": {letter: [target or null, ...]}}

    Returns:
        Dfa; missing transitions (null, -1 or an absent letter) go to a fresh sink
    """
    for key in ("alphabet", "states", "initial", "accepting", "delta"):
        if key not in document:
            raise InputError(f"automaton document is missing '{key}'")
    alphabet = _check_alphabet(document["alphabet"])
    n = document["states"]
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InputError(f"states must be a positive integer, got {n!r}")

    def state(value: Any) -> int:
        if isinstance(value, bool) or not isinstance(value, int) or not 0 <= value < n:
            raise BadState(value, n)
        return value

    initial = state(document["initial"])
    accepting = frozenset(state(q) for q in document["accepting"])
    raw = document["delta"]
    if not isinstance(raw, Mapping):
        raise BadTransition("delta must map letters to target lists")
    for letter in raw:
        if letter not in alphabet:
            raise BadTransition(f"delta uses letter {letter!r} outside the alphabet")

    sink = n
    partial = False
    rows = []
    for letter in alphabet:
        targets = raw.get(letter)
        if targets is None:
            partial = True
            rows.append([sink] * n)
            continue
        if not isinstance(targets, (list, tuple)) or len(targets) != n:
            raise BadTransition(f"delta[{letter!r}] must list {n} targets")
        row = []
        for value in targets:
            if value is None or value == -1:
                partial = True
                row.append(sink)
            else:
                row.append(state(value))
        rows.append(row)

    if partial:
        rows = [row + [sink] for row in rows]
        logger.debug(f"Partial automaton completed with sink state {sink}")
    return make_dfa(alphabet, rows, initial, accepting)


def empty_dfa(alphabet: Sequence[str]) -> Dfa:
    """Automaton of the empty language"""
    return make_dfa(_check_alphabet(alphabet), [[0] for _ in alphabet], 0, ())


def subword_dfa(alphabet: Sequence[str], word: str) -> Dfa:
    """
    Automaton of A*a1A*a2...akA*: state i means a1..ai has been seen as a subword

    Args:
        alphabet: Letters of A
        word: a1..ak (nonempty)
    """
    letters = _check_alphabet(alphabet)
    if not word:
        raise InputError("subword languages need a nonempty word")
    for letter in word:
        if letter not in letters:
            raise UnknownLetter(letter)
    k = len(word)
    rows = [[i + 1 if i < k and word[i] == letter else i for i in range(k + 1)] for letter in letters]
    return make_dfa(letters, rows, 0, (k,))


def finite_language_dfa(alphabet: Sequence[str], words: Iterable[str]) -> Dfa:
    """Trie automaton of a finite set of words, completed with a sink"""
    letters = _check_alphabet(alphabet)
    children: List[Dict[str, int]] = [{}]
    accepting = set()
    for word in words:
        node = 0
        for letter in word:
            if letter not in letters:
                raise UnknownLetter(letter)
            if letter not in children[node]:
                children[node][letter] = len(children)
                children.append({})
            node = children[node][letter]
        accepting.add(node)
    sink = len(children)
    rows = [[children[q].get(letter, sink) for q in range(sink)] + [sink] for letter in letters]
    return make_dfa(letters, rows, 0, accepting)


def random_dfa(alphabet: Sequence[str], states: int, seed: int, accept_probability: float = 0.4) -> Dfa:
    """Seeded random complete DFA with initial state 0"""
    letters = _check_alphabet(alphabet)
    rng = np.random.default_rng(seed)
    delta = rng.integers(0, states, size=(len(letters), states))
    accepting = np.flatnonzero(rng.random(states) < accept_probability)
    return make_dfa(letters, delta.tolist(), 0, accepting.tolist())


# =============================================================================
# NONDETERMINISTIC AUTOMATA
# =============================================================================

@dataclass(frozen=True)
class Nfa:
    """
    Automaton with a set of initial states and letter-labelled edges (no epsilon moves)

    transitions[q][letter] is the set of successors of q.
    """

    alphabet: Tuple[str, ...]
    states: int
    initial: FrozenSet[int]
    accepting: FrozenSet[int]
    transitions: Tuple[Dict[str, FrozenSet[int]], ...]

    def successors(self, sources: Iterable[int], letter: str) -> FrozenSet[int]:
        found: Set[int] = set()
        for q in sources:
            found |= self.transitions[q].get(letter, frozenset())
        return frozenset(found)


def nfa_from_edges(alphabet: Sequence[str], states: int, initial: Iterable[int], accepting: Iterable[int],
                   edges: Iterable[Tuple[int, str, int]]) -> Nfa:
    table: List[Dict[str, Set[int]]] = [dict() for _ in range(states)]
    for source, letter, target in edges:
        table[source].setdefault(letter, set()).add(target)
    return Nfa(
        alphabet=tuple(alphabet),
        states=states,
        initial=frozenset(initial),
        accepting=frozenset(accepting),
        transitions=tuple({letter: frozenset(t) for letter, t in row.items()} for row in table),
    )


def determinize(nfa: Nfa) -> Dfa:
    """Subset construction from the initial set; the empty subset is the sink"""
    start = nfa.initial
    index: Dict[FrozenSet[int], int] = {start: 0}
    subsets = [start]
    rows: List[List[int]] = [[] for _ in nfa.alphabet]
    position = 0
    while position < len(subsets):
        current = subsets[position]
        for k, letter in enumerate(nfa.alphabet):
            target = nfa.successors(current, letter)
            if target not in index:
                index[target] = len(subsets)
                subsets.append(target)
            rows[k].append(index[target])
        position += 1
    accepting = [i for i, subset in enumerate(subsets) if subset & nfa.accepting]
    return make_dfa(nfa.alphabet, rows, 0, accepting)


def dfa_as_nfa(d: Dfa) -> Nfa:
    edges = [(q, letter, int(d.delta[k, q])) for k, letter in enumerate(d.alphabet) for q in range(d.states)]
    return nfa_from_edges(d.alphabet, d.states, (d.initial,), d.accepting, edges)


def reverse_dfa(d: Dfa) -> Nfa:
    """NFA of the reversed language"""
    edges = [(int(d.delta[k, q]), letter, q) for k, letter in enumerate(d.alphabet) for q in range(d.states)]
    return nfa_from_edges(d.alphabet, d.states, d.accepting, (d.initial,), edges)


def plus_language(d: Dfa) -> Dfa:
    """Restrict the language to nonempty words (L minus the empty word)"""
    if not d.accepts_empty:
        return d
    fresh = d.states
    delta = np.concatenate([d.delta, d.delta[:, [d.initial]]], axis=1)
    return make_dfa(d.alphabet, delta.tolist(), fresh, d.accepting)


# =============================================================================
# MINIMIZATION
# =============================================================================

def reachable_states(d: Dfa) -> List[int]:
    """States reachable from the initial state, in breadth-first order"""
    order = [d.initial]
    seen = {d.initial}
    queue = deque(order)
    while queue:
        q = queue.popleft()
        for k in range(len(d.alphabet)):
            target = int(d.delta[k, q])
            if target not in seen:
                seen.add(target)
                order.append(target)
                queue.append(target)
    return order


def minimize_dfa(d: Dfa) -> Dfa:
    """
    Minimal complete DFA of the same language

    Unreachable states are dropped, then Moore refinement runs until the
    number of classes is stable. States are numbered in breadth-first order
    from the initial state, letters tried in alphabet order.
    """
    reachable = reachable_states(d)
    position = np.full(d.states, -1, dtype=np.int64)
    position[reachable] = np.arange(len(reachable))
    local = position[d.delta[:, reachable]]
    accepting = np.array([q in d.accepting for q in reachable], dtype=np.int64)

    classes = accepting.copy()
    count = len(np.unique(classes))
    while True:
        keys = np.vstack([classes[None, :], classes[local]]).T
        _, refined = np.unique(keys, axis=0, return_inverse=True)
        refined = refined.reshape(-1)
        refined_count = int(refined.max()) + 1
        classes = refined
        if refined_count == count:
            break
        count = refined_count

    quotient_delta = np.zeros((len(d.alphabet), count), dtype=np.int64)
    quotient_delta[:, classes] = classes[local]
    quotient_accepting = set(int(c) for c in classes[accepting.astype(bool)])
    quotient = make_dfa(d.alphabet, quotient_delta.tolist(), int(classes[0]), quotient_accepting)

    order = reachable_states(quotient)
    renumber = {q: i for i, q in enumerate(order)}
    delta = [[renumber[int(quotient.delta[k, q])] for q in order] for k in range(len(d.alphabet))]
    result = make_dfa(d.alphabet, delta, 0, (renumber[q] for q in quotient.accepting))
    logger.debug(f"Minimized automaton from {d.states} to {result.states} states")
    return result


def equivalent(d: Dfa, e: Dfa) -> bool:
    """Language equality via canonical minimal automata"""
    if d.alphabet != e.alphabet:
        return False
    m, n = minimize_dfa(d), minimize_dfa(e)
    return (m.states == n.states and m.accepting == n.accepting
            and bool(np.array_equal(m.delta, n.delta)))


__all__ = [
    'Dfa', 'Nfa', 'make_dfa', 'build_dfa', 'empty_dfa', 'subword_dfa', 'finite_language_dfa', 'random_dfa',
    'nfa_from_edges', 'determinize', 'dfa_as_nfa', 'reverse_dfa', 'plus_language',
    'reachable_states', 'minimize_dfa', 'equivalent',
]
