#!/usr/bin/env python3
"""
Unit Tests: Input Validation
============================

Tests for validation/input_validator.py
These tests verify file loading and command-line operand parsing.
"""

import pytest
import sys
import os

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

from errors import BadState, InputError, NonAssociative, UnknownVariety
from languages.products import ONE
from tests.fixtures import automata, semigroups
from validation.input_validator import InputValidator, load_dfa, load_operand, load_semigroup


class TestLoadSemigroup:
    """Tests for semigroup files"""

    @pytest.mark.unit
    def test_b2_file(self, write_json, b2):
        """A valid file gives the same semigroup"""
        S = load_semigroup(write_json(semigroups.B2_DOCUMENT, "b2.json"))
        assert S == b2
        assert S.name == "B2"
        assert S.name_of(0) == "E12"

    @pytest.mark.unit
    def test_name_defaults_to_file_stem(self, write_json):
        """Unnamed documents take the file name"""
        S = load_semigroup(write_json({"order": 1, "table": [[0]]}, "lonely.json"))
        assert S.name == "lonely"

    @pytest.mark.unit
    def test_non_associative(self, write_json):
        """The associativity witness is reported"""
        with pytest.raises(NonAssociative):
            load_semigroup(write_json(semigroups.NON_ASSOCIATIVE_DOCUMENT))

    @pytest.mark.unit
    @pytest.mark.parametrize("document", [
        semigroups.RAGGED_DOCUMENT,
        semigroups.UNKNOWN_FIELD_DOCUMENT,
        {"order": 0, "table": []},
        {"order": 2, "table": [[0, 0], [0, 0]], "elements": ["x", "x"]},
        {"table": [[0]]},
    ])
    def test_malformed_documents(self, write_json, document):
        """Schema violations are input errors"""
        with pytest.raises(InputError):
            load_semigroup(write_json(document))

    @pytest.mark.unit
    def test_invalid_json(self, tmp_path):
        """Broken JSON is an input error"""
        path = tmp_path / "broken.json"
        path.write_text("{\"order\": 1,", encoding="utf-8")
        with pytest.raises(InputError):
            load_semigroup(str(path))

    @pytest.mark.unit
    def test_missing_file(self, tmp_path):
        """Missing paths and directories are rejected"""
        with pytest.raises(InputError):
            load_semigroup(str(tmp_path / "absent.json"))
        with pytest.raises(InputError):
            load_semigroup(str(tmp_path))


class TestLoadDfa:
    """Tests for automaton files"""

    @pytest.mark.unit
    def test_partial_automaton(self, write_json):
        """Missing transitions are completed with a sink"""
        d = load_dfa(write_json(automata.PARTIAL_A_PLUS))
        assert d.states == 3
        assert d.accepts("aaa")

    @pytest.mark.unit
    def test_bad_state(self, write_json):
        """Out-of-range targets raise BadState"""
        with pytest.raises(BadState):
            load_dfa(write_json(automata.BAD_STATE))

    @pytest.mark.unit
    @pytest.mark.parametrize("document", [
        automata.LONG_LETTER,
        dict(automata.A_PLUS, alphabet=["a", "a"]),
        dict(automata.A_PLUS, colour="blue"),
        dict(automata.A_PLUS, states=0),
    ])
    def test_malformed_documents(self, write_json, document):
        """Schema violations are input errors"""
        with pytest.raises(InputError):
            load_dfa(write_json(document))

    @pytest.mark.unit
    def test_operand(self, write_json):
        """ONE is the empty-word language, anything else a path"""
        assert load_operand("ONE") is ONE
        assert load_operand(write_json(automata.B_PLUS)).accepts("bb")


class TestOperands:
    """Tests for command-line operand parsing"""

    @pytest.mark.unit
    def test_parse_images(self):
        """Indices become ints, names stay strings"""
        assert InputValidator.parse_images("a=0, b=E21") == {"a": 0, "b": "E21"}

    @pytest.mark.unit
    @pytest.mark.parametrize("text", ["", "a0", "a=0,a=1", "ab=0"])
    def test_parse_images_rejects(self, text):
        """Malformed or repeated assignments"""
        with pytest.raises(InputError):
            InputValidator.parse_images(text)

    @pytest.mark.unit
    @pytest.mark.parametrize("letter", ["ab", " ", ""])
    def test_validate_letter(self, letter):
        """Letters are single non-blank characters"""
        with pytest.raises(InputError):
            InputValidator.validate_letter(letter)

    @pytest.mark.unit
    def test_validate_variety_name(self):
        """Parametric names resolve, unknown names do not"""
        assert InputValidator.validate_variety_name(" LV(Sl) ").name == "LV(Sl)"
        with pytest.raises(UnknownVariety):
            InputValidator.validate_variety_name("Foo")
        with pytest.raises(InputError):
            InputValidator.validate_variety_name("  ")

    @pytest.mark.unit
    def test_validate_integer(self):
        """Ranges and types"""
        assert InputValidator.validate_integer(3, 1, 5) == 3
        with pytest.raises(InputError):
            InputValidator.validate_integer(0, min_val=1)
        with pytest.raises(InputError):
            InputValidator.validate_integer(True)
