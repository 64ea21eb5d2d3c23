#!/usr/bin/env python3
"""
Semigroup Constructions
Adjoined identity, local semigroups, generated subsemigroups, products and quotients
"""

from dataclasses import dataclass
from typing import Any, Dict, Iterable, List, Sequence, Tuple
import logging

import numpy as np

from algebra.green import green
from algebra.semigroup import FiniteSemigroup, build_semigroup
from errors import EmptyGeneratorSet, IndexOutOfRange, InputError, NotIdempotent

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Construction:
    """
    Result of a construction together with its element correspondence

    direction tells how to read mapping:
        embedding:  old element -> new element (adjoin-identity)
        inclusion:  new element -> old element (local, generated, regular core)
        projection: old element -> new element (quotient)
        pairing:    (left, right) pair -> new element (product)
    """

    semigroup: FiniteSemigroup
    mapping: Dict[Any, int]
    direction: str


class UnionFind:
    """Disjoint sets over range(n) with path halving"""

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x: int, y: int) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if rx < ry:
            self.parent[ry] = rx
        else:
            self.parent[rx] = ry
        return True


def closure(S: FiniteSemigroup, generators: Iterable[int]) -> List[int]:
    """
    Subsemigroup generated by a set of elements

    Args:
        S: Ambient semigroup
        generators: Element indices

    Returns:
        Sorted element indices of <generators>
    """
    gens = sorted(set(int(g) for g in generators))
    if not gens:
        raise EmptyGeneratorSet("cannot generate a subsemigroup from no elements")
    for g in gens:
        if not 0 <= g < S.order:
            raise IndexOutOfRange("generator", g)
    rows = S.rows
    elements = set(gens)
    frontier = list(gens)
    while frontier:
        fresh = []
        for s in frontier:
            row = rows[s]
            for g in gens:
                p = row[g]
                if p not in elements:
                    elements.add(p)
                    fresh.append(p)
        frontier = fresh
    return sorted(elements)


def restrict(S: FiniteSemigroup, subset: Iterable[int], name: str = None) -> Construction:
    """Restrict S to a subset closed under multiplication (inclusion map)"""
    members = sorted(set(int(s) for s in subset))
    position = {s: i for i, s in enumerate(members)}
    try:
        table = [[position[S.mul(a, b)] for b in members] for a in members]
    except KeyError as exc:
        raise InputError(f"subset is not closed under multiplication (product {exc.args[0]})") from None
    names = [S.name_of(s) for s in members]
    sub = build_semigroup(len(members), table, names=names, name=name)
    return Construction(semigroup=sub, mapping={i: s for i, s in enumerate(members)}, direction="inclusion")


def adjoin_identity(S: FiniteSemigroup) -> Construction:
    """
    S^I: always adjoin a fresh identity, even when S already has one

    The new identity gets index S.order and the name "I".
    """
    n = S.order
    table = np.empty((n + 1, n + 1), dtype=np.int64)
    table[:n, :n] = S.table
    table[n, :] = np.arange(n + 1)
    table[:, n] = np.arange(n + 1)
    names = [S.name_of(s) for s in range(n)]
    fresh = "I"
    while fresh in names:
        fresh += "'"
    monoid = build_semigroup(n + 1, table.tolist(), names=names + [fresh],
                             name=f"{S.name}^I" if S.name else None)
    return Construction(semigroup=monoid, mapping={s: s for s in range(n)}, direction="embedding")


def local_semigroup(S: FiniteSemigroup, e: int) -> Construction:
    """The local semigroup eSe at an idempotent e"""
    e = S.index_of(e)
    if not S.is_idempotent(e):
        raise NotIdempotent(e)
    rows = S.rows
    members = {rows[rows[e][s]][e] for s in range(S.order)}
    return restrict(S, members, name=f"{S.name_of(e)}S{S.name_of(e)}")


def generated(S: FiniteSemigroup, generators: Iterable[int]) -> Construction:
    """<X> with its inclusion into S"""
    gens = [S.index_of(g) for g in generators]
    return restrict(S, closure(S, gens), name=f"<{','.join(S.name_of(g) for g in sorted(set(gens)))}>")


def direct_product(S: FiniteSemigroup, T: FiniteSemigroup) -> Construction:
    """S x T with the pair (s, t) stored at index s * |T| + t"""
    n, m = S.order, T.order
    blocks = S.table[:, None, :, None] * m + T.table[None, :, None, :]
    table = blocks.reshape(n * m, n * m)
    names = [f"({S.name_of(s)},{T.name_of(t)})" for s in range(n) for t in range(m)]
    name = f"{S.name}x{T.name}" if S.name and T.name else None
    product = build_semigroup(n * m, table.tolist(), names=names, name=name)
    mapping = {(s, t): s * m + t for s in range(n) for t in range(m)}
    return Construction(semigroup=product, mapping=mapping, direction="pairing")


def least_congruence(S: FiniteSemigroup, pairs: Iterable[Tuple[int, int]]) -> UnionFind:
    """
    Smallest congruence containing the given pairs

    Worklist saturation: every merge (a, b) schedules (ax, bx) and (xa, xb)
    for all x.
    """
    rows = S.rows
    n = S.order
    classes = UnionFind(n)
    worklist = []
    for a, b in pairs:
        a, b = S.index_of(a), S.index_of(b)
        if classes.union(a, b):
            worklist.append((a, b))
    while worklist:
        a, b = worklist.pop()
        row_a, row_b = rows[a], rows[b]
        for x in range(n):
            for p, q in ((row_a[x], row_b[x]), (rows[x][a], rows[x][b])):
                if classes.union(p, q):
                    worklist.append((p, q))
    return classes


def quotient(S: FiniteSemigroup, pairs: Iterable[Tuple[int, int]]) -> Construction:
    """S modulo the least congruence containing pairs, with the projection"""
    classes = least_congruence(S, pairs)
    roots = sorted({classes.find(s) for s in range(S.order)})
    position = {r: i for i, r in enumerate(roots)}
    projection = {s: position[classes.find(s)] for s in range(S.order)}
    table = [[projection[S.mul(a, b)] for b in roots] for a in roots]
    names = ["[" + ",".join(S.name_of(s) for s in range(S.order) if projection[s] == i) + "]"
             for i in range(len(roots))]
    result = build_semigroup(len(roots), table, names=names, name=f"{S.name}/~" if S.name else None)
    logger.debug(f"Quotient of order {S.order} by congruence has order {result.order}")
    return Construction(semigroup=result, mapping=projection, direction="projection")


def regular_core(S: FiniteSemigroup) -> Construction:
    """<Reg(S)>, the subsemigroup generated by the regular elements"""
    construction = restrict(S, closure(S, green(S).regular),
                            name=f"<Reg({S.name})>" if S.name else None)
    return construction


def construct(kind: str, S: FiniteSemigroup, *args: Any) -> Construction:
    """
    Dispatch a named construction

    Args:
        kind: adjoin-identity | local | generated | product | quotient
        S: Base semigroup
        args: local(e), generated(X), product(T), quotient(pairs)

    Returns:
        Construction with the element correspondence
    """
    builders = {
        "adjoin-identity": adjoin_identity,
        "local": local_semigroup,
        "generated": generated,
        "product": direct_product,
        "quotient": quotient,
    }
    if kind not in builders:
        raise InputError(f"unknown construction '{kind}'. Valid options: {', '.join(builders)}")
    return builders[kind](S, *args)


def is_subsemigroup(S: FiniteSemigroup, subset: Sequence[int]) -> bool:
    members = set(subset)
    return bool(members) and all(S.mul(a, b) in members for a in members for b in members)


__all__ = [
    'Construction', 'UnionFind', 'closure', 'restrict', 'adjoin_identity', 'local_semigroup',
    'generated', 'direct_product', 'least_congruence', 'quotient', 'regular_core', 'construct',
    'is_subsemigroup',
]
