#!/usr/bin/env python3
"""
Finite Semigroups
Cayley-table carrier with validation, identity detection and omega-powers
"""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union
import logging

import numpy as np

from errors import IndexOutOfRange, InputError, NonAssociative

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class FiniteSemigroup:
    """
    A finite semigroup given by its Cayley table

    table[i, j] is the index of the product e_i * e_j. Indices are the identity
    of elements; names are display only. Instances are immutable, so derived
    data (rows, monogenic data, omega tables) is cached on first use.
    """

    table: np.ndarray
    identity: Optional[int] = None
    element_names: Optional[Tuple[str, ...]] = None
    name: Optional[str] = None
    _omega_cache: Dict[int, np.ndarray] = field(default_factory=dict, repr=False, compare=False)

    @property
    def order(self) -> int:
        return int(self.table.shape[0])

    @cached_property
    def rows(self) -> Tuple[Tuple[int, ...], ...]:
        """Table as nested tuples of ints, for tight Python loops"""
        return tuple(tuple(int(v) for v in row) for row in self.table)

    def mul(self, i: int, j: int) -> int:
        return self.rows[i][j]

    def product(self, elements: Iterable[int]) -> int:
        """Left-to-right product of a nonempty sequence of elements"""
        iterator = iter(elements)
        try:
            result = next(iterator)
        except StopIteration:
            raise ValueError("product of an empty sequence") from None
        rows = self.rows
        for element in iterator:
            result = rows[result][element]
        return result

    def name_of(self, i: int) -> str:
        if self.element_names is not None:
            return self.element_names[i]
        return str(i)

    def index_of(self, ref: Union[int, str]) -> int:
        """Resolve an element given by index or display name"""
        if isinstance(ref, (int, np.integer)) and not isinstance(ref, bool):
            if 0 <= int(ref) < self.order:
                return int(ref)
            raise IndexOutOfRange("element", ref)
        if self.element_names is not None and ref in self.element_names:
            return self.element_names.index(ref)
        if isinstance(ref, str) and ref.isdigit():
            return self.index_of(int(ref))
        raise IndexOutOfRange("element", ref)

    @cached_property
    def idempotents(self) -> frozenset:
        return frozenset(int(i) for i in np.flatnonzero(np.diagonal(self.table) == np.arange(self.order)))

    def is_idempotent(self, s: int) -> bool:
        return self.rows[s][s] == s

    @cached_property
    def monogenic(self) -> Tuple[Tuple[int, ...], Tuple[int, ...], Tuple[Tuple[int, ...], ...]]:
        """
        Index, period and power list of every monogenic subsemigroup

        Returns:
            (indices, periods, powers) where powers[s][m-1] = s^m for
            1 <= m < index + period
        """
        rows = self.rows
        indices, periods, powers = [], [], []
        for s in range(self.order):
            seen: Dict[int, int] = {}
            current, m, listing = s, 1, []
            while current not in seen:
                seen[current] = m
                listing.append(current)
                current = rows[current][s]
                m += 1
            index = seen[current]
            indices.append(index)
            periods.append(m - index)
            powers.append(tuple(listing))
        return tuple(indices), tuple(periods), tuple(powers)

    def omega_power(self, s: int, k: int = 0) -> int:
        """
        Compute s^(omega+k)

        Args:
            s: Element index
            k: Shift, any integer (negative values use the cyclic part)

        Returns:
            s^m for the least m >= index with m = k (mod period)
        """
        indices, periods, powers = self.monogenic
        index, period = indices[s], periods[s]
        m = index + (k - index) % period
        return powers[s][m - 1]

    def omega_table(self, k: int = 0) -> np.ndarray:
        """Vector of s^(omega+k) for every element s"""
        if k not in self._omega_cache:
            values = np.array([self.omega_power(s, k) for s in range(self.order)], dtype=np.int64)
            values.setflags(write=False)
            self._omega_cache[k] = values
        return self._omega_cache[k]

    def reversed(self) -> "FiniteSemigroup":
        """The dual semigroup (products read right to left)"""
        return FiniteSemigroup(
            table=_frozen(self.table.T.copy()),
            identity=self.identity,
            element_names=self.element_names,
            name=f"{self.name}^rev" if self.name else None,
        )

    def relabel(self, permutation: Sequence[int]) -> "FiniteSemigroup":
        """
        Isomorphic copy with element i renamed permutation[i]

        Args:
            permutation: A permutation of range(order)
        """
        perm = np.asarray(permutation, dtype=np.int64)
        inverse = np.empty_like(perm)
        inverse[perm] = np.arange(self.order)
        table = perm[self.table[np.ix_(inverse, inverse)]]
        names = None
        if self.element_names is not None:
            names = tuple(self.element_names[i] for i in inverse)
        identity = int(perm[self.identity]) if self.identity is not None else None
        return FiniteSemigroup(table=_frozen(table), identity=identity, element_names=names, name=self.name)

    def to_dict(self) -> dict:
        data = {
            "name": self.name,
            "order": self.order,
            "elements": list(self.element_names) if self.element_names else None,
            "table": [list(row) for row in self.rows],
            "identity": self.identity,
        }
        return {k: v for k, v in data.items() if v is not None}

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteSemigroup):
            return NotImplemented
        return self.order == other.order and bool(np.array_equal(self.table, other.table))

    def __hash__(self) -> int:
        return hash((self.order, self.table.tobytes()))

    def __repr__(self) -> str:
        return f"FiniteSemigroup(name={self.name!r}, order={self.order}, identity={self.identity})"


def _frozen(array: np.ndarray) -> np.ndarray:
    array = np.ascontiguousarray(array, dtype=np.int64)
    array.setflags(write=False)
    return array


def find_associativity_failure(table: np.ndarray) -> Optional[Tuple[int, int, int]]:
    """Return the first triple (i, j, k) with (ij)k != i(jk), or None"""
    for i in range(table.shape[0]):
        left = table[table[i], :]   # left[j, k] = (ij)k
        right = table[i][table]     # right[j, k] = i(jk)
        mismatch = np.argwhere(left != right)
        if mismatch.size:
            j, k = mismatch[0]
            return i, int(j), int(k)
    return None


def find_identity(table: np.ndarray) -> Optional[int]:
    """Index of the two-sided identity, if any"""
    n = table.shape[0]
    span = np.arange(n)
    for e in range(n):
        if np.array_equal(table[e], span) and np.array_equal(table[:, e], span):
            return e
    return None


def build_semigroup(
    order: int,
    table: Sequence[Sequence[int]],
    names: Optional[Sequence[str]] = None,
    name: Optional[str] = None,
    identity: Optional[int] = None,
) -> FiniteSemigroup:
    """
    Validate a Cayley table and build a semigroup

    Args:
        order: Number of elements
        table: order x order product table
        names: Optional display names, one per element
        name: Optional semigroup name
        identity: Declared identity; checked against the table when given

    Returns:
        FiniteSemigroup with the identity auto-detected
    """
    if order < 1:
        raise InputError(f"order must be positive, got {order}")
    rows: List[List[int]] = [list(row) for row in table]
    if len(rows) != order:
        raise IndexOutOfRange("table", f"{len(rows)} rows for order {order}")
    for i, row in enumerate(rows):
        if len(row) != order:
            raise IndexOutOfRange(f"row {i}", f"{len(row)} columns for order {order}")
        for j, value in enumerate(row):
            if isinstance(value, bool) or not isinstance(value, (int, np.integer)) or not 0 <= value < order:
                raise IndexOutOfRange((i, j), value)

    array = _frozen(np.array(rows, dtype=np.int64).reshape(order, order))

    witness = find_associativity_failure(array)
    if witness is not None:
        raise NonAssociative(witness)

    detected = find_identity(array)
    if identity is not None and identity != detected:
        raise InputError(f"declared identity {identity} is not a two-sided identity")

    element_names = None
    if names is not None:
        element_names = tuple(str(n) for n in names)
        if len(element_names) != order:
            raise InputError(f"{len(element_names)} element names for order {order}")
        if len(set(element_names)) != order:
            raise InputError("element names must be distinct")

    semigroup = FiniteSemigroup(table=array, identity=detected, element_names=element_names, name=name)
    logger.debug(f"Built semigroup {name or '?'} of order {order} (identity={detected})")
    return semigroup


def omega_power(S: FiniteSemigroup, s: int, k: int = 0) -> int:
    """Module-level form of FiniteSemigroup.omega_power"""
    return S.omega_power(s, k)


__all__ = [
    'FiniteSemigroup', 'build_semigroup', 'omega_power',
    'find_associativity_failure', 'find_identity',
]
