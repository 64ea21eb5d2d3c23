#!/usr/bin/env python3
"""
Green's Relations
Preorders R, L, J and the induced partitions, idempotents and regular elements
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, Tuple
import logging

import numpy as np

from algebra.semigroup import FiniteSemigroup

logger = logging.getLogger(__name__)

Partition = Tuple[FrozenSet[int], ...]


@dataclass(frozen=True, eq=False)
class GreenSummary:
    """
    Green structure of a finite semigroup

    leq_r[s, t] holds iff s <=_R t (s in tS^I); likewise leq_l and leq_j.
    Class tuples are sorted by their least element.
    """

    leq_r: np.ndarray
    leq_l: np.ndarray
    leq_j: np.ndarray
    r_classes: Partition
    l_classes: Partition
    j_classes: Partition
    h_classes: Partition
    idempotents: FrozenSet[int]
    regular: FrozenSet[int]

    def _class_of(self, partition: Partition, s: int) -> FrozenSet[int]:
        for block in partition:
            if s in block:
                return block
        raise KeyError(s)

    def r_class(self, s: int) -> FrozenSet[int]:
        return self._class_of(self.r_classes, s)

    def l_class(self, s: int) -> FrozenSet[int]:
        return self._class_of(self.l_classes, s)

    def j_class(self, s: int) -> FrozenSet[int]:
        return self._class_of(self.j_classes, s)

    def h_class(self, s: int) -> FrozenSet[int]:
        return self._class_of(self.h_classes, s)

    def strictly_below_r(self, s: int, t: int) -> bool:
        return bool(self.leq_r[s, t] and not self.leq_r[t, s])

    def strictly_below_l(self, s: int, t: int) -> bool:
        return bool(self.leq_l[s, t] and not self.leq_l[t, s])

    @property
    def regular_j_classes(self) -> Partition:
        return tuple(block for block in self.j_classes if block & self.regular)

    def to_dict(self, S: FiniteSemigroup) -> Dict[str, object]:
        def named(partition: Partition):
            return [[S.name_of(s) for s in sorted(block)] for block in partition]

        return {
            "r_classes": named(self.r_classes),
            "l_classes": named(self.l_classes),
            "j_classes": named(self.j_classes),
            "h_classes": named(self.h_classes),
            "idempotents": [S.name_of(s) for s in sorted(self.idempotents)],
            "regular": [S.name_of(s) for s in sorted(self.regular)],
        }


def _partition(equivalence: np.ndarray) -> Partition:
    n = equivalence.shape[0]
    assigned = np.zeros(n, dtype=bool)
    blocks = []
    for s in range(n):
        if assigned[s]:
            continue
        members = np.flatnonzero(equivalence[s])
        assigned[members] = True
        blocks.append(frozenset(int(m) for m in members))
    return tuple(blocks)


def _freeze(matrix: np.ndarray) -> np.ndarray:
    matrix = np.ascontiguousarray(matrix, dtype=bool)
    matrix.setflags(write=False)
    return matrix


@lru_cache(maxsize=512)
def green(S: FiniteSemigroup) -> GreenSummary:
    """
    Compute Green's preorders and classes of S

    Right and left principal ideals are read off the Cayley table rows and
    columns; the J-preorder is the relational composition L;R, i.e. the
    reachability s = x(ty) through one left and one right translation.

    Args:
        S: A valid finite semigroup

    Returns:
        GreenSummary with all relations, partitions and element sets
    """
    n = S.order
    table = S.table
    span = np.arange(n)

    leq_r = np.eye(n, dtype=bool)
    leq_l = np.eye(n, dtype=bool)
    for t in range(n):
        leq_r[table[t, :], t] = True   # tS
        leq_l[table[:, t], t] = True   # St
    leq_j = (leq_l.astype(np.int64) @ leq_r.astype(np.int64)) > 0

    r_eq = leq_r & leq_r.T
    l_eq = leq_l & leq_l.T
    j_eq = leq_j & leq_j.T

    idempotents = frozenset(int(i) for i in np.flatnonzero(np.diagonal(table) == span))
    idem_mask = np.zeros(n, dtype=bool)
    idem_mask[list(idempotents)] = True
    regular_mask = (j_eq & idem_mask[None, :]).any(axis=1)

    summary = GreenSummary(
        leq_r=_freeze(leq_r),
        leq_l=_freeze(leq_l),
        leq_j=_freeze(leq_j),
        r_classes=_partition(r_eq),
        l_classes=_partition(l_eq),
        j_classes=_partition(j_eq),
        h_classes=_partition(r_eq & l_eq),
        idempotents=idempotents,
        regular=frozenset(int(i) for i in np.flatnonzero(regular_mask)),
    )
    logger.debug(
        f"Green structure of {S.name or '?'}: {len(summary.j_classes)} J-classes, "
        f"{len(summary.idempotents)} idempotents"
    )
    return summary


def definitional_preorders(S: FiniteSemigroup) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Brute-force <=_R, <=_L, <=_J straight from the ideal definitions

    Used to cross-check green() on corpus members; cost is O(n^4).
    """
    n = S.order
    rows = S.rows
    with_identity = list(range(n)) + [None]

    def times(a, b):
        if a is None:
            return b
        if b is None:
            return a
        return rows[a][b]

    leq_r = np.zeros((n, n), dtype=bool)
    leq_l = np.zeros((n, n), dtype=bool)
    leq_j = np.zeros((n, n), dtype=bool)
    for t in range(n):
        right_ideal = {times(t, x) for x in with_identity}
        left_ideal = {times(x, t) for x in with_identity}
        two_sided = {times(times(x, t), y) for x in with_identity for y in with_identity}
        for s in range(n):
            leq_r[s, t] = s in right_ideal
            leq_l[s, t] = s in left_ideal
            leq_j[s, t] = s in two_sided
    return leq_r, leq_l, leq_j


def is_regular_element(S: FiniteSemigroup, s: int) -> bool:
    """s is regular iff s = sxs for some x"""
    rows = S.rows
    return any(rows[rows[s][x]][s] == s for x in range(S.order))


__all__ = ['GreenSummary', 'green', 'definitional_preorders', 'is_regular_element']
