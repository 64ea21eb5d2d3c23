#!/usr/bin/env python3
"""
Unit Tests: Expansion
=====================

Tests for expansion/pin_therien.py
"""

import pytest
import sys
import os

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

from algebra.isomorphism import is_isomorphic
from algebra.morphisms import Mode, letter_morphism
from errors import InputError, SignatureExplosion
from expansion.pin_therien import (
    expand, expansion_tower, kernel_check, regular_core_check, same_letter_semigroup,
)
from terms.varieties import variety_member


class TestExpand:
    """Tests for the signature semigroup"""

    @pytest.mark.unit
    def test_z2_semigroup_mode(self, z2):
        """Over A+ the first letter is remembered: a, aa, aaa"""
        r = expand(letter_morphism(z2, {"a": 1}))
        assert r.expanded.order == 3
        assert r.representatives == ("a", "aa", "aaa")
        assert r.projection == (1, 0, 1)
        assert r.expanded.name == "Z2_bd"
        assert r.expanded.identity is None

    @pytest.mark.unit
    def test_z2_monoid_mode(self, z2):
        """Over A* a group expands to itself"""
        r = expand(letter_morphism(z2, {"a": 1}, Mode.MONOID))
        assert r.expanded.order == 2
        assert r.expanded.name_of(0) == "1"
        assert r.expanded.identity == 0
        assert is_isomorphic(r.expanded, z2, respect_identity=True)[0]

    @pytest.mark.unit
    def test_trivial_over_two_letters(self, trivial):
        """Letters, then a single class for every longer word"""
        r = expand(letter_morphism(trivial, {"a": 0, "b": 0}))
        assert r.expanded.order == 3
        assert r.representatives == ("a", "b", "aa")

    @pytest.mark.unit
    def test_projection_is_a_morphism(self, b2):
        """projection(xy) = projection(x) projection(y)"""
        r = expand(letter_morphism(b2, {"a": "E12", "b": "E21"}))
        S, T = r.expanded, b2
        for i in range(S.order):
            for j in range(S.order):
                assert r.projection[S.mul(i, j)] == T.mul(r.projection[i], r.projection[j])

    @pytest.mark.unit
    def test_representatives_evaluate_to_their_element(self, b2):
        """phi_bd(representative[i]) = i"""
        r = expand(letter_morphism(b2, {"a": "E12", "b": "E21"}))
        for i, word in enumerate(r.representatives):
            assert r.phi_bd.evaluate(word) == i

    @pytest.mark.unit
    def test_signature_cap(self, z2):
        """More signatures than the cap raises SignatureExplosion"""
        with pytest.raises(SignatureExplosion):
            expand(letter_morphism(z2, {"a": 1}), cap=2)

    @pytest.mark.unit
    def test_to_dict(self, z2):
        """Projection is reported by element names"""
        data = expand(letter_morphism(z2, {"a": 1})).to_dict(with_signatures=True)
        assert data["mode"] == "semigroup"
        assert data["target"] == "Z2"
        assert data["projection"] == {"a": "1", "aa": "0", "aaa": "1"}
        assert set(data["signatures"]) == {"a", "aa", "aaa"}

    @pytest.mark.unit
    def test_semilattice_expands_into_j(self, semilattice2):
        """Expansions of semilattices are J-trivial with commuting idempotents"""
        r = expand(letter_morphism(semilattice2, {"a": 0, "b": 1}))
        assert variety_member(r.expanded, "J").member
        assert variety_member(r.expanded, "ECom").member


class TestChecks:
    """Tests for the regular-core and kernel checks"""

    @pytest.mark.unit
    def test_b2_checks(self, b2):
        """Both checks pass on B2"""
        r = expand(letter_morphism(b2, {"a": "E12", "b": "E21"}))
        assert regular_core_check(r).passed
        assert kernel_check(r, max_length=6).passed

    @pytest.mark.unit
    def test_null_semigroup_checks(self, null3):
        """The regular core of a null semigroup is its zero"""
        r = expand(letter_morphism(null3, {"a": "s1", "b": "s2"}))
        report = regular_core_check(r)
        assert report.passed
        assert report.target_core_order == 1
        assert kernel_check(r, max_length=5).passed

    @pytest.mark.unit
    def test_monoid_mode_kernel(self, s3):
        """Monoid mode checks include the empty word"""
        r = expand(letter_morphism(s3, {"a": 0, "b": 1}, Mode.MONOID))
        report = kernel_check(r, max_length=4)
        assert report.passed
        assert report.words_checked == 31


class TestTower:
    """Tests for iterated expansions"""

    @pytest.mark.unit
    def test_trivial_tower(self, trivial):
        """Orders 1, 2, 4 over one letter, all levels nilpotent"""
        tower = expansion_tower(letter_morphism(trivial, {"a": 0}), max_iter=2)
        assert tower.orders == [1, 2, 4]
        assert not tower.stabilized
        for level in tower.levels:
            assert variety_member(level.expanded, "N").member

    @pytest.mark.unit
    def test_group_tower_stabilizes_at_once(self, z3):
        """A group in monoid mode is a fixed point"""
        tower = expansion_tower(letter_morphism(z3, {"a": 1}, Mode.MONOID), max_iter=2)
        assert tower.stabilized
        assert tower.stabilized_at == 1
        assert tower.orders == [3, 3, 3]

    @pytest.mark.unit
    def test_max_iter_positive(self, z3):
        """At least one expansion"""
        with pytest.raises(InputError):
            expansion_tower(letter_morphism(z3, {"a": 1}), max_iter=0)

    @pytest.mark.unit
    def test_same_letter_semigroup(self, z3):
        """Letter images must correspond"""
        phi = letter_morphism(z3, {"a": 1})
        psi = letter_morphism(z3, {"a": 2})
        assert same_letter_semigroup(phi, phi)
        assert same_letter_semigroup(phi, psi)
        doubled = letter_morphism(z3, {"a": 1, "b": 1})
        assert not same_letter_semigroup(doubled, letter_morphism(z3, {"a": 1, "b": 2}))
