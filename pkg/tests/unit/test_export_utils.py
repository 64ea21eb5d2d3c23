#!/usr/bin/env python3
"""
Unit Tests: Export Utilities
============================

Tests for export_utils.py
"""

import json
import pytest
import sys
import os

import numpy as np

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

from errors import InputError
from export_utils import CORPUS_COLUMNS, ExportManager

ROWS = [
    {"key": "exhaustive/1/000", "kind": "exhaustive", "order": 1, "expanded_order": 1,
     "regular_core": True, "kernel": True, "members": {"J": True, "DS": True}, "error": None},
    {"key": "random/000003", "kind": "random", "order": 9, "expanded_order": None,
     "regular_core": None, "kernel": None, "members": None, "error": "skipped: cap"},
]


class TestJson:
    """Tests for JSON documents"""

    @pytest.mark.unit
    def test_numpy_values_become_plain(self):
        """numpy scalars, arrays and sets are converted"""
        text = ExportManager.to_json({
            "n": np.int64(3), "flag": np.bool_(True), "row": np.array([1, 2]), "set": {"b", "a"},
        })
        assert json.loads(text) == {"n": 3, "flag": True, "row": [1, 2], "set": ["a", "b"]}

    @pytest.mark.unit
    def test_deterministic(self):
        """Equal documents give identical text"""
        doc = {"b": [1, (2, 3)], "a": {"x": None}}
        assert ExportManager.to_json(doc) == ExportManager.to_json(dict(doc))

    @pytest.mark.unit
    def test_export_json(self, tmp_path):
        """Files end with a newline"""
        path = tmp_path / "out.json"
        ExportManager().export_json({"ok": True}, str(path))
        text = path.read_text(encoding="utf-8")
        assert text.endswith("\n")
        assert json.loads(text) == {"ok": True}


class TestTables:
    """Tests for Cayley tables as text"""

    @pytest.mark.unit
    def test_format_table(self, null2):
        """Element names label rows and columns"""
        lines = ExportManager.format_table(null2).split("\n")
        assert len(lines) == 4
        assert lines[0] == "   |  0 s1"
        assert lines[3] == "s1 |  0  0"

    @pytest.mark.unit
    def test_export_txt(self, tmp_path, b2):
        """The heading names the semigroup and its order"""
        path = tmp_path / "b2.txt"
        ExportManager().export_txt(b2, str(path))
        assert path.read_text(encoding="utf-8").startswith("B2 (order 5)\n")

    @pytest.mark.unit
    def test_export_txt_missing_directory(self, tmp_path, b2):
        """An unwritable path is an input error"""
        with pytest.raises(InputError):
            ExportManager().export_txt(b2, str(tmp_path / "missing" / "b2.txt"))


class TestCorpusReports:
    """Tests for CSV and Markdown corpus reports"""

    @pytest.mark.unit
    def test_csv(self):
        """Memberships are flattened, empty cells stay empty"""
        lines = ExportManager.corpus_csv(ROWS).strip().split("\n")
        assert lines[0] == ",".join(CORPUS_COLUMNS)
        assert lines[1] == "exhaustive/1/000,exhaustive,1,1,True,True,J=True;DS=True,"
        assert lines[2] == "random/000003,random,9,,,,,skipped: cap"

    @pytest.mark.unit
    def test_export_report(self, tmp_path):
        """Every requested format is written"""
        base = str(tmp_path / "report")
        ExportManager().export_report({"instances": ROWS}, base, ["json", "csv", "md"])
        for ext in ("json", "csv", "md"):
            assert os.path.exists(f"{base}.{ext}")
        markdown = (tmp_path / "report.md").read_text(encoding="utf-8")
        assert "| exhaustive/1/000 | exhaustive | 1 | 1 | True | True | J: True, DS: True |  |" in markdown

    @pytest.mark.unit
    def test_unknown_format(self, tmp_path):
        """Unknown formats are rejected before anything is written"""
        with pytest.raises(InputError):
            ExportManager().export_report({"instances": []}, str(tmp_path / "r"), ["json", "xml"])
        assert not (tmp_path / "r.json").exists()

    @pytest.mark.unit
    def test_parse_formats(self):
        """Formats are split, trimmed and lowercased"""
        assert ExportManager.parse_formats("json, CSV,md") == ["json", "csv", "md"]
        with pytest.raises(InputError):
            ExportManager.parse_formats(" , ")

    @pytest.mark.unit
    def test_missing_directory(self, tmp_path):
        """A base path in a missing directory is an input error"""
        with pytest.raises(InputError):
            ExportManager().export_report({"instances": []}, str(tmp_path / "missing" / "r"), ["json"])
