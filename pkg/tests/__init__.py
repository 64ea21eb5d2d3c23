"""
Semigroup Lab Test Suite
========================

Organized test structure:
    tests/
    ├── __init__.py
    ├── conftest.py              # Shared fixtures
    ├── unit/                    # Unit tests (fast, isolated)
    │   ├── __init__.py
    │   ├── test_semigroup.py
    │   ├── test_green.py
    │   ├── test_constructions.py
    │   ├── test_isomorphism.py
    │   ├── test_corpus.py
    │   ├── test_omega_terms.py
    │   ├── test_varieties.py
    │   ├── test_signatures.py
    │   ├── test_expansion.py
    │   ├── test_automata.py
    │   ├── test_codes_products.py
    │   ├── test_probes.py
    │   ├── test_jcalc.py
    │   ├── test_input_validator.py
    │   ├── test_config_validator.py
    │   ├── test_export_utils.py
    │   └── test_corpus_runner.py
    ├── integration/             # Integration tests (whole workbench, slower)
    │   ├── __init__.py
    │   ├── test_cli.py
    │   └── test_acceptance.py
    └── fixtures/                # Test data
        ├── __init__.py
        ├── semigroups.py
        └── automata.py

Run tests:
    pytest                       # Run all tests
    pytest tests/unit            # Run only unit tests
    pytest tests/integration     # Run only integration tests
    pytest -m "not slow"         # Skip the corpus-scale acceptance runs
    pytest --cov=.               # With coverage report
"""
