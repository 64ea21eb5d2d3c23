#!/usr/bin/env python3
"""
Unit Tests: Corpus Runner
=========================

Tests for corpus_runner.py
"""

import pytest
import sys
import os

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

from corpus_runner import CorpusInstance, CorpusRunner
from errors import InputError


@pytest.fixture(scope="module")
def small_report():
    runner = CorpusRunner(kind="exhaustive", exhaustive_max_order=2, workers=2)
    return runner.report()


class TestCorpusRunner:
    """Tests for corpus runs"""

    @pytest.mark.unit
    def test_instances(self):
        """Keys follow the corpus order"""
        runner = CorpusRunner(kind="exhaustive", exhaustive_max_order=2)
        keys = [i.key for i in runner.instances()]
        assert keys[0] == "exhaustive/1/000"
        assert len(keys) == 6
        assert keys == sorted(keys)

    @pytest.mark.unit
    def test_random_keys_carry_seeds(self):
        """Random instances are keyed by their seed"""
        runner = CorpusRunner(kind="random", seed=10, count=2, random_degree=3)
        assert [i.key for i in runner.instances()] == ["random/000010", "random/000011"]

    @pytest.mark.unit
    def test_summary(self, small_report):
        """Small exhaustive semigroups pass every check"""
        summary = small_report["summary"]
        assert summary["instances"] == 6
        assert summary["failed"] == []
        assert summary["skipped"] == []
        assert summary["passed"] == 6

    @pytest.mark.unit
    def test_instance_fields(self, small_report):
        """Each instance reports the expansion and memberships"""
        first = small_report["instances"][0]
        assert first["order"] == 1
        assert first["generators"] == {"a": first["generators"]["a"]}
        assert first["expanded_order"] == 2
        assert first["regular_core"] is True
        assert first["kernel"] is True
        assert all(first["members"].values())

    @pytest.mark.unit
    def test_deterministic(self, small_report):
        """Reruns with more workers give the same report"""
        again = CorpusRunner(kind="exhaustive", exhaustive_max_order=2, workers=4).report()
        assert again == small_report

    @pytest.mark.unit
    def test_skipped_instances(self, trivial):
        """A capped expansion is skipped, not failed"""
        runner = CorpusRunner(kind="exhaustive", signature_cap=0)
        result = runner.process_instance(CorpusInstance("x", "exhaustive", trivial))
        assert result["error"].startswith("skipped")
        assert CorpusRunner.failures([result]) == []

    @pytest.mark.unit
    def test_disagreement_survives_skip(self, trivial, monkeypatch):
        """A capped expansion keeps the membership disagreement and still fails"""
        runner = CorpusRunner(kind="exhaustive", signature_cap=0)
        monkeypatch.setattr(runner, "_memberships", lambda S: ({}, ["J: basis and structural checkers differ"]))
        result = runner.process_instance(CorpusInstance("x", "exhaustive", trivial))
        assert result["error"].startswith("J: basis and structural checkers differ; skipped")
        assert CorpusRunner.failures([result]) == ["x"]

    @pytest.mark.unit
    def test_bad_arguments(self):
        """Unknown kinds and zero workers"""
        with pytest.raises(InputError):
            CorpusRunner(kind="everything")
        with pytest.raises(InputError):
            CorpusRunner(workers=0)
