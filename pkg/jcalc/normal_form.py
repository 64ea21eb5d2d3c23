#!/usr/bin/env python3
"""
J Normal Forms
Word/block normal forms of omega-terms modulo J-trivial semigroups
"""

from dataclasses import dataclass
from typing import FrozenSet, List, Optional, Sequence, Tuple, Union
import logging

import numpy as np

from terms.omega_term import Letter, OmegaTerm, Power, content

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WordItem:
    text: str

    def to_text(self) -> str:
        return self.text


@dataclass(frozen=True)
class BlockItem:
    """An idempotent block, known modulo J only through its content"""
    content: FrozenSet[str]

    def to_text(self) -> str:
        return "[" + "".join(sorted(self.content)) + "]"


Item = Union[WordItem, BlockItem]


@dataclass(frozen=True)
class JNormalForm:
    """
    Alternating words and blocks

    Adjacent blocks have incomparable contents, and no word letter next to a
    block belongs to that block's content.
    """

    items: Tuple[Item, ...]

    @property
    def words(self) -> Tuple[str, ...]:
        """Word skeleton u0, u1, ..., un (u0 and un possibly empty)"""
        words, current = [], ""
        for item in self.items:
            if isinstance(item, WordItem):
                current += item.text
            else:
                words.append(current)
                current = ""
        words.append(current)
        return tuple(words)

    @property
    def blocks(self) -> Tuple[FrozenSet[str], ...]:
        return tuple(item.content for item in self.items if isinstance(item, BlockItem))

    def to_text(self) -> str:
        return "".join(item.to_text() for item in self.items)

    def to_list(self) -> List[dict]:
        return [{"word": item.text} if isinstance(item, WordItem) else {"block": sorted(item.content)}
                for item in self.items]

    def __str__(self) -> str:
        return self.to_text()


def flatten_items(t: OmegaTerm) -> List[Item]:
    """Letters become one-letter words; every power becomes the block of its content"""
    if isinstance(t, Letter):
        return [WordItem(t.symbol)]
    if isinstance(t, Power):
        return [BlockItem(content(t))]
    items: List[Item] = []
    for factor in t.factors:
        items.extend(flatten_items(factor))
    return items


def _comparable(x: FrozenSet[str], y: FrozenSet[str]) -> bool:
    return x <= y or y <= x


def _sites(items: Sequence[Item]) -> List[Tuple[str, int]]:
    """Every place where a rewriting rule applies"""
    sites = []
    for i, item in enumerate(items):
        if isinstance(item, WordItem) and not item.text:
            sites.append(("drop", i))
        if i + 1 >= len(items):
            continue
        nxt = items[i + 1]
        if isinstance(item, WordItem) and isinstance(nxt, WordItem):
            sites.append(("coalesce", i))
        elif isinstance(item, BlockItem) and isinstance(nxt, BlockItem):
            if _comparable(item.content, nxt.content):
                sites.append(("merge", i))
        elif isinstance(item, WordItem) and item.text and item.text[-1] in nxt.content:
            sites.append(("absorb-left", i))
        elif isinstance(item, BlockItem) and isinstance(nxt, WordItem) and nxt.text and nxt.text[0] in item.content:
            sites.append(("absorb-right", i))
    return sites


def _apply(items: List[Item], rule: str, i: int) -> List[Item]:
    if rule == "drop":
        return items[:i] + items[i + 1:]
    left, right = items[i], items[i + 1]
    if rule == "coalesce":
        merged: List[Item] = [WordItem(left.text + right.text)]
    elif rule == "merge":
        merged = [BlockItem(left.content | right.content)]
    elif rule == "absorb-left":
        merged = [WordItem(left.text[:-1]), right]
    else:
        merged = [left, WordItem(right.text[1:])]
    return items[:i] + merged + items[i + 2:]


def normalize(items: Sequence[Item], rng: Optional[np.random.Generator] = None) -> Tuple[Item, ...]:
    """
    Rewrite to the J-reduced form

    Rules: drop empty words, coalesce adjacent words, merge adjacent blocks
    with comparable contents into their union, and absorb a word letter next
    to a block whose content contains it. Every rule shortens the sequence or
    a word, so rewriting terminates; the result does not depend on the order
    (pass rng to pick sites at random).
    """
    current = list(items)
    while True:
        sites = _sites(current)
        if not sites:
            return tuple(current)
        rule, i = sites[int(rng.integers(len(sites)))] if rng is not None else sites[0]
        current = _apply(current, rule, i)


def j_normal_form(t: OmegaTerm, rng: Optional[np.random.Generator] = None) -> JNormalForm:
    """
    J normal form of an omega-term

    Args:
        t: Omega-term
        rng: Optional generator to randomize rule order

    Returns:
        JNormalForm; two terms are equal in every J-trivial semigroup iff their
        normal forms coincide
    """
    return JNormalForm(normalize(flatten_items(t), rng))


def concat_normal_forms(*forms: JNormalForm) -> JNormalForm:
    items: List[Item] = []
    for form in forms:
        items.extend(form.items)
    return JNormalForm(normalize(items))


def j_equal(u: OmegaTerm, v: OmegaTerm) -> bool:
    """Does J satisfy u = v?"""
    return j_normal_form(u) == j_normal_form(v)


__all__ = [
    'WordItem', 'BlockItem', 'Item', 'JNormalForm', 'flatten_items', 'normalize', 'j_normal_form',
    'concat_normal_forms', 'j_equal',
]
