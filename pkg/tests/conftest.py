#!/usr/bin/env python3
"""
Shared Test Fixtures and Configuration
======================================

This module provides shared fixtures for all tests.
Fixtures are organized by scope: session > module > function
"""

import json
import os
import sys

import pytest

# Add project root to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

# Never pick up a developer's configuration file
os.environ.pop("SEMIGROUP_LAB_CONFIG", None)

from algebra.corpus import transformation_semigroup
from algebra.semigroup import build_semigroup
from languages.dfa import build_dfa
from tests.fixtures import automata, semigroups


def _build(document):
    return build_semigroup(document["order"], document["table"], document.get("elements"), document.get("name"))


# =============================================================================
# SESSION-SCOPED FIXTURES (created once per test session)
# =============================================================================

@pytest.fixture(scope="session")
def b2():
    """Brandt semigroup B2 (E12, E21, E11, E22, 0)"""
    return _build(semigroups.B2_DOCUMENT)


@pytest.fixture(scope="session")
def trivial():
    return _build(semigroups.TRIVIAL_DOCUMENT)


@pytest.fixture(scope="session")
def z2():
    return _build(semigroups.cyclic_group_document(2))


@pytest.fixture(scope="session")
def z3():
    return _build(semigroups.cyclic_group_document(3))


@pytest.fixture(scope="session")
def z4():
    return _build(semigroups.cyclic_group_document(4))


@pytest.fixture(scope="session")
def klein():
    return _build(semigroups.klein_document())


@pytest.fixture(scope="session")
def s3():
    """Symmetric group on three points as a transformation semigroup"""
    return transformation_semigroup(semigroups.S3_GENERATORS, name="S3").semigroup


@pytest.fixture(scope="session")
def null2():
    """{0, s1} with all products 0"""
    return _build(semigroups.null_document(2))


@pytest.fixture(scope="session")
def null3():
    return _build(semigroups.null_document(3))


@pytest.fixture(scope="session")
def semilattice2():
    """Two-element chain {0 < 1} under min"""
    return _build(semigroups.chain_semilattice_document(2))


@pytest.fixture(scope="session")
def left_zero2():
    return _build(semigroups.left_zero_document(2))


@pytest.fixture(scope="session")
def monogenic_2_2():
    """x, x^2, x^3 with x^4 = x^2"""
    return _build(semigroups.MONOGENIC_INDEX2_PERIOD2)


# =============================================================================
# MODULE-SCOPED FIXTURES
# =============================================================================

@pytest.fixture(scope="module")
def dfa():
    """Builder turning a fixture document into a Dfa"""
    return build_dfa


@pytest.fixture(scope="module")
def ab_plus():
    return build_dfa(automata.AB_PLUS)


@pytest.fixture(scope="module")
def b_plus():
    return build_dfa(automata.B_PLUS)


@pytest.fixture(scope="module")
def a_plus():
    return build_dfa(automata.A_PLUS)


# =============================================================================
# FUNCTION-SCOPED FIXTURES (created fresh for each test)
# =============================================================================

@pytest.fixture
def write_json(tmp_path):
    """Write a document to a fresh JSON file and return its path"""
    def write(document, name="document.json"):
        path = tmp_path / name
        path.write_text(json.dumps(document), encoding="utf-8")
        return str(path)
    return write


@pytest.fixture
def config_file(tmp_path):
    """Write an INI configuration and return its path"""
    def write(text, name="config.ini"):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)
    return write


# =============================================================================
# PYTEST CONFIGURATION
# =============================================================================

def pytest_configure(config):
    """Register custom markers"""
    config.addinivalue_line("markers", "unit: Unit tests (fast, isolated)")
    config.addinivalue_line("markers", "integration: Integration tests (whole workbench)")
    config.addinivalue_line("markers", "slow: Corpus-scale tests (may take a minute or more)")
