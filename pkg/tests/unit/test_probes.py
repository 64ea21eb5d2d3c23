#!/usr/bin/env python3
"""
Unit Tests: Closure Probes
==========================

Tests for languages/probes.py
"""

import pytest
import sys
import os

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

from errors import AlphabetMismatch, UnknownVariety
from languages.dfa import finite_language_dfa
from languages.probes import MembershipStatus, Verdict, closure_probe, operand_status
from languages.products import ONE
from terms.varieties import registry


class TestOperandStatus:
    """Tests for operand classification"""

    @pytest.mark.unit
    def test_one(self):
        """ONE is reported as the singleton empty word"""
        assert operand_status(registry.get("J"), ONE) is MembershipStatus.SINGLETON_EMPTY_WORD

    @pytest.mark.unit
    def test_in_and_outside(self, b_plus, ab_plus):
        """Synt(b+) is a semilattice, Synt((ab)+) is B2"""
        J = registry.get("J")
        assert operand_status(J, b_plus) is MembershipStatus.IN_VARIETY
        assert operand_status(J, ab_plus) is MembershipStatus.OUTSIDE


class TestClosureProbe:
    """Tests for single probes"""

    @pytest.mark.unit
    def test_semilattices_not_closed(self):
        """1 a 1 = {a} is bideterministic but Synt({a}) is not a semilattice"""
        report = closure_probe("Sl", ONE, "a", ONE)
        assert report.bidet
        assert not report.product_member
        assert report.verdict is Verdict.CLOSURE_VIOLATED

    @pytest.mark.unit
    def test_nilpotent_left_witness(self, a_plus):
        """a+ a is not a prefix code: (aa, aaa)"""
        report = closure_probe("N", a_plus, "a", ONE)
        assert report.l_status is MembershipStatus.IN_VARIETY
        assert report.left_code.witness == ("aa", "aaa")
        assert report.failing_side == "left"
        assert report.verdict is Verdict.NOT_APPLICABLE

    @pytest.mark.unit
    def test_j_closed(self, b_plus):
        """b+ a b+ stays J-trivial"""
        report = closure_probe("J", b_plus, "a", b_plus)
        assert report.bidet
        assert report.failing_side is None
        assert report.verdict is Verdict.CLOSURE_HOLDS

    @pytest.mark.unit
    def test_outside_operand_not_applicable(self, ab_plus, b_plus):
        """An operand outside V makes the probe inapplicable"""
        report = closure_probe("J", ab_plus, "a", b_plus)
        assert report.l_status is MembershipStatus.OUTSIDE
        assert report.verdict is Verdict.NOT_APPLICABLE

    @pytest.mark.unit
    def test_finite_operands_in_j(self):
        """Finite languages have nilpotent syntactic semigroups; their bideterministic products stay in J"""
        L = finite_language_dfa("ab", ["b"])
        K = finite_language_dfa("ab", ["bb"])
        report = closure_probe("J", L, "a", K)
        assert report.verdict is Verdict.CLOSURE_HOLDS

    @pytest.mark.unit
    def test_to_dict(self, b_plus):
        """Reports serialize verdicts and witnesses"""
        data = closure_probe("J", b_plus, "a", b_plus).to_dict()
        assert data["verdict"] == "closure-holds"
        assert data["witnesses"] == {"left": None, "right": None}
        assert data["l_status"] == "inVariety"

    @pytest.mark.unit
    def test_errors(self, a_plus):
        """Unknown varieties and alphabet mismatches are input errors"""
        with pytest.raises(UnknownVariety):
            closure_probe("Nope", ONE, "a", ONE)
        with pytest.raises(AlphabetMismatch):
            closure_probe("J", a_plus, "b", ONE)
