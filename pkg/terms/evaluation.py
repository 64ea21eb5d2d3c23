#!/usr/bin/env python3
"""
Omega-Term Evaluation
Evaluation in finite semigroups and over transformations, and pseudoidentity satisfaction
"""

from typing import Dict, Mapping, Optional, Sequence, Tuple
import logging

import numpy as np

from algebra.semigroup import FiniteSemigroup
from errors import UnboundLetter
from terms.omega_term import Concat, Letter, OmegaTerm, Power, Pseudoidentity

logger = logging.getLogger(__name__)

# Assignments evaluated per vectorized batch
ASSIGNMENT_CHUNK = 1 << 18

Transformation = Tuple[int, ...]


def eval_term(t: OmegaTerm, S: FiniteSemigroup, assignment: Mapping[str, int]) -> int:
    """
    Value of t in S under a letter assignment

    Args:
        t: Omega-term
        S: Finite semigroup
        assignment: Letter -> element index

    Returns:
        Element index
    """
    if isinstance(t, Letter):
        if t.symbol not in assignment:
            raise UnboundLetter(t.symbol)
        return int(assignment[t.symbol])
    if isinstance(t, Concat):
        return S.product(eval_term(f, S, assignment) for f in t.factors)
    return S.omega_power(eval_term(t.base, S, assignment), t.shift)


def eval_columns(t: OmegaTerm, S: FiniteSemigroup, columns: Mapping[str, np.ndarray]) -> np.ndarray:
    """Evaluate t on a batch of assignments given as one index column per letter"""
    if isinstance(t, Letter):
        if t.symbol not in columns:
            raise UnboundLetter(t.symbol)
        return columns[t.symbol]
    if isinstance(t, Concat):
        values = eval_columns(t.factors[0], S, columns)
        for factor in t.factors[1:]:
            values = S.table[values, eval_columns(factor, S, columns)]
        return values
    return S.omega_table(t.shift)[eval_columns(t.base, S, columns)]


def satisfies(
    S: FiniteSemigroup,
    identity: Pseudoidentity,
) -> Tuple[bool, Optional[Dict[str, int]]]:
    """
    Check S |= lhs = rhs by exhausting all assignments

    Cost is |S| ** |variables|; assignments are evaluated in numpy batches.

    Returns:
        (True, None) or (False, first failing assignment in lexicographic order)
    """
    variables = identity.variables
    n = S.order
    shape = (n,) * len(variables)
    total = n ** len(variables)
    for start in range(0, total, ASSIGNMENT_CHUNK):
        flat = np.arange(start, min(total, start + ASSIGNMENT_CHUNK))
        digits = np.unravel_index(flat, shape)
        columns = {v: digits[i].astype(np.int64) for i, v in enumerate(variables)}
        lhs = np.broadcast_to(eval_columns(identity.lhs, S, columns), flat.shape)
        rhs = np.broadcast_to(eval_columns(identity.rhs, S, columns), flat.shape)
        failing = np.flatnonzero(lhs != rhs)
        if failing.size:
            k = failing[0]
            return False, {v: int(columns[v][k]) for v in variables}
    return True, None


# =============================================================================
# TRANSFORMATIONS
# =============================================================================

def compose(f: Transformation, g: Transformation) -> Transformation:
    """f then g"""
    return tuple(g[v] for v in f)


def transformation_omega_power(f: Transformation, k: int = 0) -> Transformation:
    """f^(omega+k) inside the full transformation monoid"""
    seen: Dict[Transformation, int] = {}
    powers = []
    current, m = f, 1
    while current not in seen:
        seen[current] = m
        powers.append(current)
        current = compose(current, f)
        m += 1
    index = seen[current]
    period = m - index
    exponent = index + (k - index) % period
    return powers[exponent - 1]


def eval_transformation(t: OmegaTerm, assignment: Mapping[str, Sequence[int]]) -> Transformation:
    """
    Value of t when letters act as transformations (left-to-right action)

    Args:
        t: Omega-term
        assignment: Letter -> transformation of {0..n-1}
    """
    if isinstance(t, Letter):
        if t.symbol not in assignment:
            raise UnboundLetter(t.symbol)
        return tuple(assignment[t.symbol])
    if isinstance(t, Concat):
        value = eval_transformation(t.factors[0], assignment)
        for factor in t.factors[1:]:
            value = compose(value, eval_transformation(factor, assignment))
        return value
    return transformation_omega_power(eval_transformation(t.base, assignment), t.shift)


__all__ = [
    'eval_term', 'eval_columns', 'satisfies',
    'compose', 'transformation_omega_power', 'eval_transformation',
]
