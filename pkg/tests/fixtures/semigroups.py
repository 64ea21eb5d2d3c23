#!/usr/bin/env python3
"""
Test Fixtures: Semigroups
=========================

Provides semigroup documents in the JSON file format and small builders.
"""

from itertools import combinations, product
from typing import Any, Dict, Iterator, List


# =============================================================================
# NAMED SEMIGROUPS
# =============================================================================

# Brandt semigroup B2: matrix units E12, E21, E11, E22 and zero
B2_NAMES = ["E12", "E21", "E11", "E22", "0"]

B2_DOCUMENT = {
    "name": "B2",
    "order": 5,
    "elements": B2_NAMES,
    "table": [
        [4, 2, 4, 0, 4],
        [3, 4, 1, 4, 4],
        [0, 4, 2, 4, 4],
        [4, 1, 4, 3, 4],
        [4, 4, 4, 4, 4],
    ],
}

TRIVIAL_DOCUMENT = {
    "name": "I1",
    "order": 1,
    "table": [[0]],
}

# x, x^2, x^3 with x^4 = x^2
MONOGENIC_INDEX2_PERIOD2 = {
    "name": "C(2,2)",
    "order": 3,
    "elements": ["x", "xx", "xxx"],
    "table": [
        [1, 2, 1],
        [2, 1, 2],
        [1, 2, 1],
    ],
}

# Symmetric group generators (points 0..2): a transposition and a 3-cycle
S3_GENERATORS = [(1, 0, 2), (1, 2, 0)]


# =============================================================================
# INVALID DOCUMENTS
# =============================================================================

# (0*0)*0 = 1*0 = 0 but 0*(0*0) = 0*1 = 1
NON_ASSOCIATIVE_DOCUMENT = {
    "name": "broken",
    "order": 2,
    "table": [[1, 1], [0, 0]],
}

OUT_OF_RANGE_DOCUMENT = {
    "name": "range",
    "order": 2,
    "table": [[0, 2], [0, 0]],
}

RAGGED_DOCUMENT = {
    "order": 2,
    "table": [[0, 0], [0]],
}

UNKNOWN_FIELD_DOCUMENT = {
    "order": 1,
    "table": [[0]],
    "colour": "blue",
}


# =============================================================================
# BUILDERS
# =============================================================================

def cyclic_group_document(n: int) -> Dict[str, Any]:
    """
    Cyclic group Z_n under addition

    Args:
        n: Order

    Returns:
        Semigroup document with identity 0
    """
    return {
        "name": f"Z{n}",
        "order": n,
        "table": [[(i + j) % n for j in range(n)] for i in range(n)],
    }


def klein_document() -> Dict[str, Any]:
    """Klein four-group as bitwise xor on 0..3"""
    return {
        "name": "V4",
        "order": 4,
        "table": [[i ^ j for j in range(4)] for i in range(4)],
    }


def null_document(n: int) -> Dict[str, Any]:
    """
    Null semigroup: every product is the zero

    Args:
        n: Order; index 0 is the zero, the others are named s1, s2, ...

    Returns:
        Semigroup document
    """
    return {
        "name": f"N{n}",
        "order": n,
        "elements": ["0"] + [f"s{i}" for i in range(1, n)],
        "table": [[0] * n for _ in range(n)],
    }


def chain_semilattice_document(n: int) -> Dict[str, Any]:
    """Chain 0 < 1 < ... < n-1 with product min"""
    return {
        "name": f"Ch{n}",
        "order": n,
        "table": [[min(i, j) for j in range(n)] for i in range(n)],
    }


def left_zero_document(n: int) -> Dict[str, Any]:
    """Left-zero semigroup: xy = x"""
    return {
        "name": f"LZ{n}",
        "order": n,
        "table": [[i] * n for i in range(n)],
    }


def semilattice_tables(order: int) -> Iterator[List[List[int]]]:
    """
    Every commutative idempotent associative table of a given order

    Not deduplicated up to isomorphism; order 4 has a few hundred labelled tables.

    Args:
        order: Number of elements

    Returns:
        Iterator over tables as nested lists
    """
    pairs = list(combinations(range(order), 2))
    for values in product(range(order), repeat=len(pairs)):
        table = [[i if i == j else 0 for j in range(order)] for i in range(order)]
        for (i, j), v in zip(pairs, values):
            table[i][j] = table[j][i] = v
        if all(table[table[i][j]][k] == table[i][table[j][k]]
               for i in range(order) for j in range(order) for k in range(order)):
            yield table
