#!/usr/bin/env python3
"""
Unit Tests: Green's Relations
=============================

Tests for algebra/green.py
"""

import pytest
import sys
import os

import numpy as np

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

from algebra.corpus import exhaustive, random_transformation
from algebra.green import definitional_preorders, green, is_regular_element


def _named(S, partition):
    return {frozenset(S.name_of(s) for s in block) for block in partition}


class TestGreenClasses:
    """Tests for the classes of known semigroups"""

    @pytest.mark.unit
    def test_b2_r_classes(self, b2):
        """R-classes of B2 are rows of the matrix units"""
        assert _named(b2, green(b2).r_classes) == {
            frozenset({"E12", "E11"}), frozenset({"E21", "E22"}), frozenset({"0"}),
        }

    @pytest.mark.unit
    def test_b2_l_classes(self, b2):
        """L-classes of B2 are columns of the matrix units"""
        assert _named(b2, green(b2).l_classes) == {
            frozenset({"E12", "E22"}), frozenset({"E21", "E11"}), frozenset({"0"}),
        }

    @pytest.mark.unit
    def test_b2_j_classes_and_regular(self, b2):
        """B2 has two J-classes and every element is regular"""
        summary = green(b2)
        assert _named(b2, summary.j_classes) == {
            frozenset({"E12", "E21", "E11", "E22"}), frozenset({"0"}),
        }
        assert summary.regular == frozenset(range(5))
        assert all(len(block) == 1 for block in summary.h_classes)

    @pytest.mark.unit
    def test_group_is_one_class(self, z3):
        """Z3 is a single J-class with one idempotent"""
        summary = green(z3)
        assert len(summary.j_classes) == 1
        assert summary.regular == frozenset({0, 1, 2})
        assert summary.idempotents == frozenset({0})

    @pytest.mark.unit
    def test_null_semigroup_regular_is_zero(self, null2):
        """In {s, 0} only the zero is regular"""
        summary = green(null2)
        assert summary.regular == frozenset({0})
        assert summary.idempotents == frozenset({0})

    @pytest.mark.unit
    def test_strict_orders(self, b2):
        """0 lies strictly R-below E11, E11 is not strictly below itself"""
        summary = green(b2)
        assert summary.strictly_below_r(4, 2)
        assert not summary.strictly_below_r(2, 2)
        assert not summary.strictly_below_l(0, 3)

    @pytest.mark.unit
    def test_to_dict_uses_names(self, b2):
        """Serialized classes carry display names"""
        data = green(b2).to_dict(b2)
        assert ["E12", "E11"] in data["r_classes"]
        assert data["idempotents"] == ["E11", "E22", "0"]

    @pytest.mark.unit
    def test_regular_element_definition(self, null2, b2):
        """s is regular iff s = sxs for some x"""
        assert not is_regular_element(null2, 1)
        assert all(is_regular_element(b2, s) for s in range(5))


class TestDefinitionalAgreement:
    """Computed preorders agree with the ideal definitions"""

    @pytest.mark.unit
    def test_agreement_on_exhaustive_corpus(self):
        """Every semigroup of order <= 3"""
        for order in (1, 2, 3):
            for S in exhaustive(order):
                summary = green(S)
                leq_r, leq_l, leq_j = definitional_preorders(S)
                assert np.array_equal(summary.leq_r, leq_r), S.name
                assert np.array_equal(summary.leq_l, leq_l), S.name
                assert np.array_equal(summary.leq_j, leq_j), S.name

    @pytest.mark.unit
    def test_agreement_on_small_transformation_semigroups(self, b2):
        """Random transformation semigroups of order <= 6 and B2"""
        checked = 0
        for seed in range(40):
            S = random_transformation(3, 2, seed)
            if S.order > 6:
                continue
            summary = green(S)
            leq_r, leq_l, leq_j = definitional_preorders(S)
            assert np.array_equal(summary.leq_j, leq_j)
            assert np.array_equal(summary.leq_r, leq_r)
            assert np.array_equal(summary.leq_l, leq_l)
            checked += 1
        summary = green(b2)
        assert np.array_equal(summary.leq_j, definitional_preorders(b2)[2])
        assert checked > 0
