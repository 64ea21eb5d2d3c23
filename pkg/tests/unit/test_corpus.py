#!/usr/bin/env python3
"""
Unit Tests: Semigroup Corpora
=============================

Tests for algebra/corpus.py
"""

import pytest
import sys
import os

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

from algebra.corpus import (
    CorpusSpec, exhaustive, piecewise_syntactic, piecewise_words, random_transformation, small_corpus,
    transformation_semigroup,
)
from algebra.semigroup import find_associativity_failure
from errors import ExplosionCap, InputError, TooLarge
from terms.varieties import variety_member


class TestTransformationSemigroup:
    """Tests for closures of transformations"""

    @pytest.mark.unit
    def test_s3_closure(self, s3):
        """A transposition and a 3-cycle generate six permutations"""
        assert s3.order == 6
        assert s3.identity is not None

    @pytest.mark.unit
    def test_left_to_right_composition(self):
        """f*g applies f first: constant-to-0 then swap gives constant-to-1"""
        closure = transformation_semigroup([(0, 0), (1, 0)], labels=["c", "s"])
        S = closure.semigroup
        c, s = closure.generator_indices
        cs = S.mul(c, s)
        assert closure.transformations[cs] == (1, 1)
        assert S.name_of(cs) == "cs"

    @pytest.mark.unit
    def test_cap(self):
        """Exceeding the cap raises ExplosionCap"""
        with pytest.raises(ExplosionCap):
            transformation_semigroup([(1, 2, 3, 0), (1, 0, 2, 3)], cap=10)

    @pytest.mark.unit
    def test_bad_generator(self):
        """Images must be points"""
        with pytest.raises(InputError):
            transformation_semigroup([(0, 3)])


class TestExhaustive:
    """Tests for the enumeration up to isomorphism"""

    @pytest.mark.unit
    def test_order_two(self):
        """Five semigroups of order 2, four up to anti-isomorphism"""
        assert len(exhaustive(2)) == 5
        assert len(exhaustive(2, dual=True)) == 4

    @pytest.mark.unit
    def test_order_three(self):
        """24 semigroups of order 3, 18 up to anti-isomorphism"""
        assert len(exhaustive(3)) == 24
        assert len(exhaustive(3, dual=True)) == 18

    @pytest.mark.unit
    def test_names_and_associativity(self):
        """Members are named E<order>-<k> and associative"""
        members = exhaustive(2)
        assert [S.name for S in members] == [f"E2-{k}" for k in range(1, 6)]
        assert all(find_associativity_failure(S.table) is None for S in members)

    @pytest.mark.unit
    def test_order_bound(self):
        """Order 4 is beyond the brute-force bound"""
        with pytest.raises(TooLarge):
            exhaustive(4)


class TestRandomTransformation:
    """Tests for seeded random corpora"""

    @pytest.mark.unit
    def test_deterministic(self):
        """The same seed gives the same semigroup"""
        assert random_transformation(4, 2, seed=1) == random_transformation(4, 2, seed=1)

    @pytest.mark.unit
    def test_name(self):
        """Names record degree, generators and seed"""
        assert random_transformation(4, 2, seed=1).name == "T4/2/seed1"

    @pytest.mark.unit
    def test_bounds(self):
        """Degree <= 8 and generators <= 3"""
        with pytest.raises(InputError):
            random_transformation(9, 2, seed=0)
        with pytest.raises(InputError):
            random_transformation(3, 4, seed=0)


class TestPiecewise:
    """Tests for subword-language syntactic semigroups"""

    @pytest.mark.unit
    def test_words(self):
        """Canonical words list letters in first-appearance order"""
        assert piecewise_words("ab", 2) == ["a", "b", "aa", "ab", "ba", "bb"]
        assert piecewise_words("ab", 2, canonical=True) == ["a", "aa", "ab"]

    @pytest.mark.unit
    def test_single_letter_language(self):
        """Synt(A*aA*) is a two-element semilattice"""
        S = next(piecewise_syntactic(("a", "b"), 1))
        assert S.name == "PW(a)"
        assert S.order == 2
        assert variety_member(S, "Sl").member

    @pytest.mark.unit
    def test_all_j_trivial(self):
        """Piecewise-testable syntactic semigroups are J-trivial"""
        for S in piecewise_syntactic(("a", "b"), 3, canonical=True):
            assert variety_member(S, "J").member, S.name


class TestSmallCorpus:
    """Tests for corpus streams"""

    @pytest.mark.unit
    def test_random_stream_uses_consecutive_seeds(self):
        """Seeds seed, seed+1, ..."""
        spec = CorpusSpec(kind="random-transformation", degree=3, generators=2, seed=5, count=3)
        names = [S.name for S in small_corpus(spec)]
        assert names == ["T3/2/seed5", "T3/2/seed6", "T3/2/seed7"]

    @pytest.mark.unit
    def test_exhaustive_stream(self):
        """Exhaustive kind yields the enumeration"""
        assert len(list(small_corpus(CorpusSpec(kind="exhaustive", order=2)))) == 5

    @pytest.mark.unit
    def test_unknown_kind(self):
        """Unknown kinds are input errors"""
        with pytest.raises(InputError):
            list(small_corpus(CorpusSpec(kind="presentations")))
