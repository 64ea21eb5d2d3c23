#!/usr/bin/env python3
"""
Semigroup Corpora
Exhaustive small semigroups, seeded random transformation semigroups and piecewise-testable syntactic semigroups
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Dict, Iterator, List, Optional, Sequence, Tuple
import logging

import numpy as np

from algebra.isomorphism import fingerprint, is_isomorphic
from algebra.semigroup import FiniteSemigroup, build_semigroup
from errors import ExplosionCap, InputError, TooLarge

logger = logging.getLogger(__name__)

EXHAUSTIVE_MAX_ORDER = 3
DEFAULT_TRANSFORMATION_CAP = 10000
MAX_RANDOM_DEGREE = 8
MAX_RANDOM_GENERATORS = 3


@dataclass(frozen=True)
class TransformationClosure:
    """
    Semigroup generated by transformations, composed left to right

    words[i] is a shortest-lexicographic generator word (indices into the
    generator list) whose action is transformations[i].
    """

    semigroup: FiniteSemigroup
    transformations: Tuple[Tuple[int, ...], ...]
    generator_indices: Tuple[int, ...]
    words: Tuple[Tuple[int, ...], ...]


def transformation_semigroup(
    generators: Sequence[Sequence[int]],
    degree: Optional[int] = None,
    cap: int = DEFAULT_TRANSFORMATION_CAP,
    labels: Optional[Sequence[str]] = None,
    name: Optional[str] = None,
) -> TransformationClosure:
    """
    Close a set of transformations of {0..degree-1} under composition

    f*g acts as "apply f, then g", matching how automata read words.

    Args:
        generators: Transformations as sequences of images
        degree: Number of points (defaults to the generator length)
        cap: Maximum number of distinct transformations
        labels: Optional generator labels; element names become label words
        name: Semigroup name

    Returns:
        TransformationClosure with the Cayley table and representative words
    """
    if not generators:
        raise InputError("at least one generator is required")
    degree = degree if degree is not None else len(generators[0])
    gens = [tuple(int(v) for v in g) for g in generators]
    for g in gens:
        if len(g) != degree or any(not 0 <= v < degree for v in g):
            raise InputError(f"generator {g} is not a transformation of {degree} points")

    elements: List[Tuple[int, ...]] = []
    words: List[Tuple[int, ...]] = []
    index: Dict[Tuple[int, ...], int] = {}
    generator_indices = []
    for k, g in enumerate(gens):
        if g not in index:
            index[g] = len(elements)
            elements.append(g)
            words.append((k,))
        generator_indices.append(index[g])

    frontier = list(range(len(elements)))
    while frontier:
        fresh = []
        for i in frontier:
            f = elements[i]
            for k, g in enumerate(gens):
                h = tuple(g[v] for v in f)
                if h not in index:
                    if len(elements) >= cap:
                        raise ExplosionCap(cap)
                    index[h] = len(elements)
                    elements.append(h)
                    words.append(words[i] + (k,))
                    fresh.append(index[h])
        frontier = fresh

    matrix = np.array(elements, dtype=np.int64)
    table = np.empty((len(elements), len(elements)), dtype=np.int64)
    for i, f in enumerate(elements):
        composed = matrix[:, list(f)]   # row j: g_j after f_i, i.e. (f_i * f_j)
        table[i] = [index[tuple(row)] for row in composed.tolist()]

    names = None
    if labels is not None:
        names = ["".join(labels[k] for k in word) for word in words]
    semigroup = build_semigroup(len(elements), table.tolist(), names=names, name=name)
    logger.debug(f"Transformation closure of {len(gens)} generators on {degree} points: {len(elements)} elements")
    return TransformationClosure(
        semigroup=semigroup,
        transformations=tuple(elements),
        generator_indices=tuple(generator_indices),
        words=tuple(words),
    )


@lru_cache(maxsize=8)
def exhaustive(order: int, dual: bool = False) -> Tuple[FiniteSemigroup, ...]:
    """
    All semigroups of a given order up to isomorphism

    Args:
        order: 1, 2 or 3
        dual: Also identify anti-isomorphic semigroups

    Returns:
        Representatives in enumeration order, named E<order>-<k>
    """
    if order > EXHAUSTIVE_MAX_ORDER:
        raise TooLarge(order, EXHAUSTIVE_MAX_ORDER)
    if order < 1:
        raise InputError(f"order must be positive, got {order}")

    representatives: List[FiniteSemigroup] = []
    by_fingerprint: Dict[tuple, List[FiniteSemigroup]] = {}
    n = order
    for entries in product(range(n), repeat=n * n):
        rows = [entries[i * n:(i + 1) * n] for i in range(n)]
        if any(rows[rows[i][j]][k] != rows[i][rows[j][k]]
               for i in range(n) for j in range(n) for k in range(n)):
            continue
        candidate = build_semigroup(n, rows)
        variants = [candidate, candidate.reversed()] if dual else [candidate]
        seen = False
        for variant in variants:
            for known in by_fingerprint.get(fingerprint(variant), []):
                if is_isomorphic(variant, known)[0]:
                    seen = True
                    break
            if seen:
                break
        if seen:
            continue
        named = build_semigroup(n, rows, name=f"E{n}-{len(representatives) + 1}")
        representatives.append(named)
        by_fingerprint.setdefault(fingerprint(named), []).append(named)

    logger.info(f"Exhaustive order {order}: {len(representatives)} semigroups (dual={dual})")
    return tuple(representatives)


def random_transformation(
    degree: int,
    generators: int,
    seed: int,
    cap: int = DEFAULT_TRANSFORMATION_CAP,
) -> FiniteSemigroup:
    """
    Semigroup generated by seeded random transformations

    Args:
        degree: Points, at most 8
        generators: Number of generators, at most 3
        seed: numpy Generator seed

    Returns:
        Subsemigroup of the full transformation monoid on degree points
    """
    if not 1 <= degree <= MAX_RANDOM_DEGREE:
        raise InputError(f"degree must be in 1..{MAX_RANDOM_DEGREE}, got {degree}")
    if not 1 <= generators <= MAX_RANDOM_GENERATORS:
        raise InputError(f"generators must be in 1..{MAX_RANDOM_GENERATORS}, got {generators}")
    rng = np.random.default_rng(seed)
    gens = rng.integers(0, degree, size=(generators, degree)).tolist()
    closure = transformation_semigroup(gens, degree, cap=cap, name=f"T{degree}/{generators}/seed{seed}")
    return closure.semigroup


def piecewise_words(alphabet: Sequence[str], max_word_length: int, canonical: bool = False) -> List[str]:
    """
    Words a1..ak (1 <= k <= max_word_length) indexing the languages A*a1A*..akA*

    With canonical=True only words whose letters first appear in alphabet
    order are kept; the others give isomorphic syntactic semigroups.
    """
    letters = list(alphabet)
    words = []
    for k in range(1, max_word_length + 1):
        for combo in product(letters, repeat=k):
            if canonical:
                first_seen = list(dict.fromkeys(combo))
                if first_seen != letters[:len(first_seen)]:
                    continue
            words.append("".join(combo))
    return words


def piecewise_syntactic(alphabet: Sequence[str], max_word_length: int,
                        canonical: bool = False) -> Iterator[FiniteSemigroup]:
    """Syntactic semigroups of the subword languages A*a1A*..akA*"""
    from languages.dfa import subword_dfa
    from languages.syntactic import syntactic_semigroup

    for word in piecewise_words(alphabet, max_word_length, canonical):
        semigroup, _ = syntactic_semigroup(subword_dfa(alphabet, word))
        yield FiniteSemigroup(table=semigroup.table, identity=semigroup.identity,
                              element_names=semigroup.element_names, name=f"PW({word})")


@dataclass(frozen=True)
class CorpusSpec:
    """
    Description of a corpus stream

    kind: exhaustive | random-transformation | piecewise-syntactic
    """

    kind: str
    order: int = 2
    dual: bool = False
    degree: int = 4
    generators: int = 2
    seed: int = 0
    count: int = 1
    alphabet: Tuple[str, ...] = ("a", "b")
    max_word_length: int = 2
    cap: int = DEFAULT_TRANSFORMATION_CAP


def small_corpus(spec: CorpusSpec) -> Iterator[FiniteSemigroup]:
    """
    Stream a deterministic corpus

    Random transformation semigroups use seeds seed, seed+1, ... for count members.
    """
    if spec.kind == "exhaustive":
        yield from exhaustive(spec.order, spec.dual)
    elif spec.kind == "random-transformation":
        for offset in range(spec.count):
            yield random_transformation(spec.degree, spec.generators, spec.seed + offset, spec.cap)
    elif spec.kind == "piecewise-syntactic":
        yield from piecewise_syntactic(spec.alphabet, spec.max_word_length)
    else:
        raise InputError(f"unknown corpus kind '{spec.kind}'")


__all__ = [
    'EXHAUSTIVE_MAX_ORDER', 'DEFAULT_TRANSFORMATION_CAP', 'TransformationClosure',
    'transformation_semigroup', 'exhaustive', 'random_transformation', 'piecewise_words',
    'piecewise_syntactic', 'CorpusSpec', 'small_corpus',
]
