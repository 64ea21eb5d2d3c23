#!/usr/bin/env python3
"""
Semigroup Isomorphism
Backtracking over generator images with Green-invariant pruning
"""

from collections import Counter
from functools import lru_cache
from typing import Dict, List, Mapping, Optional, Tuple
import logging

import numpy as np

from algebra.constructions import closure
from algebra.green import green
from algebra.semigroup import FiniteSemigroup
from errors import TooLarge

logger = logging.getLogger(__name__)

DEFAULT_ISOMORPHISM_MAX_ORDER = 12


@lru_cache(maxsize=1024)
def element_profiles(S: FiniteSemigroup) -> Tuple[tuple, ...]:
    """Isomorphism-invariant profile of every element"""
    summary = green(S)
    indices, periods, _ = S.monogenic
    rows = S.rows
    profiles = []
    for s in range(S.order):
        profiles.append((
            s in summary.idempotents,
            indices[s],
            periods[s],
            len(summary.r_class(s)),
            len(summary.l_class(s)),
            len(summary.j_class(s)),
            len(set(rows[s])),
            len({rows[x][s] for x in range(S.order)}),
            s == S.identity,
        ))
    return tuple(profiles)


def fingerprint(S: FiniteSemigroup) -> tuple:
    """Order, idempotent count, Green class sizes and the profile multiset"""
    summary = green(S)
    return (
        S.order,
        len(summary.idempotents),
        tuple(sorted(len(c) for c in summary.r_classes)),
        tuple(sorted(len(c) for c in summary.l_classes)),
        tuple(sorted(len(c) for c in summary.j_classes)),
        tuple(sorted(len(c) for c in summary.h_classes)),
        tuple(sorted(Counter(element_profiles(S)).items())),
    )


def generating_sequence(S: FiniteSemigroup, start: Optional[List[int]] = None) -> List[int]:
    """Greedy generating set, preferring elements outside S*S"""
    gens = list(dict.fromkeys(start or []))
    covered = set(closure(S, gens)) if gens else set()
    products = {S.mul(a, b) for a in range(S.order) for b in range(S.order)}
    candidates = [s for s in range(S.order) if s not in products] + \
                 [s for s in range(S.order) if s in products]
    for s in candidates:
        if s not in covered:
            gens.append(s)
            covered = set(closure(S, gens))
        if len(covered) == S.order:
            break
    return gens


def _extend(S: FiniteSemigroup, T: FiniteSemigroup, assignment: Dict[int, int],
            generators: List[int]) -> Optional[Dict[int, int]]:
    """Extend a generator assignment to a homomorphism, or None on conflict"""
    mapping = dict(assignment)
    s_rows, t_rows = S.rows, T.rows
    queue = list(generators)
    position = 0
    while position < len(queue):
        s = queue[position]
        position += 1
        for g in generators:
            p = s_rows[s][g]
            q = t_rows[mapping[s]][mapping[g]]
            if p in mapping:
                if mapping[p] != q:
                    return None
            else:
                mapping[p] = q
                queue.append(p)
    if len(mapping) != S.order or len(set(mapping.values())) != S.order:
        return None
    perm = np.array([mapping[s] for s in range(S.order)], dtype=np.int64)
    if not np.array_equal(T.table[np.ix_(perm, perm)], perm[S.table]):
        return None
    return mapping


def is_isomorphic(
    S: FiniteSemigroup,
    T: FiniteSemigroup,
    respect_identity: bool = False,
    anchors: Optional[Mapping[int, int]] = None,
    max_order: int = DEFAULT_ISOMORPHISM_MAX_ORDER,
) -> Tuple[bool, Optional[Dict[int, int]]]:
    """
    Decide whether S and T are isomorphic

    Args:
        S: First semigroup
        T: Second semigroup
        respect_identity: Require both or neither to carry an identity and map it
        anchors: Forced images of some elements of S
        max_order: Bound for unanchored search

    Returns:
        (True, witness) with witness[s] = image in T, or (False, None)
    """
    if S.order != T.order:
        return False, None
    fixed = dict(anchors or {})
    if respect_identity:
        if (S.identity is None) != (T.identity is None):
            return False, None
        if S.identity is not None:
            fixed[S.identity] = T.identity

    generators = generating_sequence(S, sorted(fixed))
    free = [g for g in generators if g not in fixed]
    if free and S.order > max_order:
        raise TooLarge(S.order, max_order)
    if fingerprint(S) != fingerprint(T):
        return False, None

    s_profiles, t_profiles = element_profiles(S), element_profiles(T)
    for s, t in fixed.items():
        if s_profiles[s] != t_profiles[t]:
            return False, None
    candidates = {g: [t for t in range(T.order) if t_profiles[t] == s_profiles[g]] for g in free}

    assignment = dict(fixed)

    def search(depth: int) -> Optional[Dict[int, int]]:
        if depth == len(free):
            return _extend(S, T, assignment, generators)
        g = free[depth]
        used = set(assignment.values())
        for t in candidates[g]:
            if t in used:
                continue
            assignment[g] = t
            found = search(depth + 1)
            if found is not None:
                return found
            del assignment[g]
        return None

    witness = search(0)
    if witness is None:
        return False, None
    logger.debug(f"Isomorphism {S.name or '?'} -> {T.name or '?'} found")
    return True, witness


__all__ = [
    'DEFAULT_ISOMORPHISM_MAX_ORDER', 'element_profiles', 'fingerprint', 'generating_sequence',
    'is_isomorphic',
]
