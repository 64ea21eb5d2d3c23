#!/usr/bin/env python3
"""
Unit Tests: Omega-Terms
=======================

Tests for terms/omega_term.py and terms/evaluation.py
"""

import pytest
import sys
import os

import numpy as np

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

from algebra.corpus import transformation_semigroup
from errors import TermSyntaxError, UnboundLetter
from terms.evaluation import eval_term, eval_transformation, satisfies, transformation_omega_power
from terms.omega_term import (
    Concat, Letter, Power, content, factors, is_multiregular, parse_identity, parse_term, random_term,
    substitute, to_text,
)


class TestParser:
    """Tests for parsing and printing"""

    @pytest.mark.unit
    def test_power_of_product(self):
        """(xy)^w is a power of a two-letter product"""
        assert parse_term("(xy)^w") == Power(Concat((Letter("x"), Letter("y"))), 0)

    @pytest.mark.unit
    def test_shifted_exponents(self):
        """^(w+1) and ^(w-2) carry their shifts"""
        assert parse_term("x^(w+1)") == Power(Letter("x"), 1)
        assert parse_term("x^(w-2)") == Power(Letter("x"), -2)
        assert parse_term("x^(w)") == Power(Letter("x"), 0)

    @pytest.mark.unit
    def test_concatenation_is_flattened(self):
        """Parentheses around products do not nest Concat"""
        assert parse_term("x(yz)") == parse_term("xyz")
        assert len(factors(parse_term("x(yz)"))) == 3

    @pytest.mark.unit
    def test_whitespace_and_unicode_omega(self):
        """Spaces are ignored and the omega symbol is accepted"""
        assert parse_term("a (b c)^ω b") == parse_term("a(bc)^wb")

    @pytest.mark.unit
    @pytest.mark.parametrize("text", [
        "(xy)^w", "x^(w+1)", "x^(w-2)y", "((xy)^w)^w", "((xy)^w(yx)^w(xy)^w)^w",
    ])
    def test_printer_is_canonical(self, text):
        """Printing a parsed term gives back canonical text"""
        assert to_text(parse_term(text)) == text

    @pytest.mark.unit
    def test_unclosed_parenthesis(self):
        """The error reports the position of the missing ')'"""
        with pytest.raises(TermSyntaxError) as exc:
            parse_term("(xy")
        assert exc.value.position == 3

    @pytest.mark.unit
    def test_bad_exponent(self):
        """Only omega exponents are allowed"""
        with pytest.raises(TermSyntaxError) as exc:
            parse_term("x^q")
        assert exc.value.position == 2

    @pytest.mark.unit
    @pytest.mark.parametrize("text", ["ωω", "w", "xw^w"])
    def test_omega_is_not_a_letter(self, text):
        """w and ω only appear as exponents"""
        with pytest.raises(TermSyntaxError):
            parse_term(text)

    @pytest.mark.unit
    def test_empty_term(self):
        """An empty string is not a term"""
        with pytest.raises(TermSyntaxError):
            parse_term("")


class TestIdentities:
    """Tests for pseudoidentity parsing"""

    @pytest.mark.unit
    def test_variables_sorted(self):
        """Variables of both sides, sorted"""
        identity = parse_identity("(yx)^w = x^w z")
        assert identity.variables == ("x", "y", "z")
        assert identity.to_text() == "(yx)^w = x^wz"

    @pytest.mark.unit
    def test_exactly_one_equals_sign(self):
        """Two '=' are rejected"""
        with pytest.raises(TermSyntaxError):
            parse_identity("x = y = z")

    @pytest.mark.unit
    def test_right_side_positions_are_global(self):
        """Errors on the right side count from the start of the text"""
        with pytest.raises(TermSyntaxError) as exc:
            parse_identity("x=")
        assert exc.value.position == 2


class TestStructure:
    """Tests for content, multiregularity and substitution"""

    @pytest.mark.unit
    def test_content_ignores_powers(self):
        """c(x(yz)^w) = {x, y, z}"""
        assert content(parse_term("x(yz)^w")) == frozenset("xyz")

    @pytest.mark.unit
    def test_multiregular(self):
        """Only products of omega-powers are multiregular"""
        assert is_multiregular(parse_term("(xy)^w z^w"))
        assert is_multiregular(parse_term("x^(w-1)"))
        assert not is_multiregular(parse_term("x(yz)^w"))

    @pytest.mark.unit
    def test_substitute(self):
        """Letters are replaced by terms, others are kept"""
        result = substitute(parse_term("xy"), {"x": parse_term("(ab)^w")})
        assert to_text(result) == "(ab)^wy"

    @pytest.mark.unit
    def test_random_term_is_seeded(self):
        """The same seed gives the same term"""
        first = random_term(np.random.default_rng(3))
        second = random_term(np.random.default_rng(3))
        assert first == second
        assert content(first) <= frozenset("xyz")


class TestEvaluation:
    """Tests for evaluation and satisfaction"""

    @pytest.mark.unit
    def test_eval_in_group(self, z3):
        """x^(w+1) = x in a group, x^(w-1) is the inverse"""
        assert eval_term(parse_term("x^(w+1)"), z3, {"x": 1}) == 1
        assert eval_term(parse_term("x^(w-1)"), z3, {"x": 1}) == 2

    @pytest.mark.unit
    def test_unbound_letter(self, z3):
        """Every letter needs a value"""
        with pytest.raises(UnboundLetter):
            eval_term(parse_term("xy"), z3, {"x": 1})

    @pytest.mark.unit
    def test_b2_fails_ds_witness(self, b2):
        """(xy)^w = (yx)^w fails in B2 first at x = E12, y = E21"""
        assert satisfies(b2, parse_identity("(xy)^w = (yx)^w")) == (False, {"x": 0, "y": 1})

    @pytest.mark.unit
    def test_commutative_group(self, z3):
        """Z3 is commutative"""
        assert satisfies(z3, parse_identity("xy = yx")) == (True, None)

    @pytest.mark.unit
    def test_aperiodicity(self, b2, z2):
        """x^w = x^(w+1) holds in B2 but not in Z2"""
        identity = parse_identity("x^w = x^(w+1)")
        assert satisfies(b2, identity)[0]
        assert satisfies(z2, identity) == (False, {"x": 1})


class TestTransformations:
    """Tests for evaluation over transformations"""

    @pytest.mark.unit
    def test_cycle_powers(self):
        """A 3-cycle has omega-power the identity and inverse at shift -1"""
        cycle = (1, 2, 0)
        assert transformation_omega_power(cycle) == (0, 1, 2)
        assert transformation_omega_power(cycle, -1) == (2, 0, 1)

    @pytest.mark.unit
    def test_idempotent_fixed(self):
        """An idempotent transformation is its own omega-power"""
        assert transformation_omega_power((1, 1, 2), 4) == (1, 1, 2)

    @pytest.mark.unit
    def test_agrees_with_table_evaluation(self):
        """Evaluation commutes with the transformation representation"""
        closure = transformation_semigroup([(1, 1, 0, 3), (0, 2, 3, 3)])
        S = closure.semigroup
        x, y = closure.generator_indices
        rng = np.random.default_rng(11)
        for _ in range(30):
            t = random_term(rng, variables=("x", "y"))
            value = eval_term(t, S, {"x": x, "y": y})
            acting = eval_transformation(t, {"x": closure.transformations[x], "y": closure.transformations[y]})
            assert closure.transformations[value] == acting, to_text(t)
