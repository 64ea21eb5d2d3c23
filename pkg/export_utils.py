#!/usr/bin/env python3
"""
Export Utilities for Semigroup Lab
JSON documents, Cayley tables as text and corpus reports as CSV or Markdown
"""

import csv
import io
import json
import logging
from typing import Any, Dict, List, Optional, TextIO

import numpy as np

from algebra.semigroup import FiniteSemigroup
from errors import InputError

logger = logging.getLogger(__name__)

CORPUS_COLUMNS = ["key", "kind", "order", "expanded_order", "regular_core", "kernel", "members", "error"]
REPORT_FORMATS = ("json", "csv", "md")


def _plain(value: Any) -> Any:
    """Replace numpy scalars, sets and tuples by JSON values"""
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted(_plain(v) for v in value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, np.ndarray):
        return value.tolist()
    return value


class ExportManager:
    """Serialize workbench results"""

    @staticmethod
    def to_json(document: Dict[str, Any]) -> str:
        """
        Render a result document

        Keys keep their insertion order, so equal computations give
        byte-identical text.
        """
        return json.dumps(_plain(document), indent=2, ensure_ascii=False)

    def write_json(self, document: Dict[str, Any], stream: TextIO):
        stream.write(self.to_json(document))
        stream.write("\n")

    def export_json(self, document: Dict[str, Any], output_path: str):
        """
        Export a result document to a JSON file

        Args:
            document: Result dictionary
            output_path: Output file path
        """
        with open(output_path, 'w', encoding='utf-8') as f:
            self.write_json(document, f)
        logger.info(f"Exported JSON: {output_path}")

    @staticmethod
    def format_table(S: FiniteSemigroup) -> str:
        """Cayley table with element names as row and column headers"""
        names = [S.name_of(i) for i in range(S.order)]
        width = max(len(n) for n in names)
        lines = [" " * width + " | " + " ".join(n.rjust(width) for n in names)]
        lines.append("-" * (width + 1) + "+" + "-" * ((width + 1) * S.order))
        for i, row in enumerate(S.rows):
            lines.append(names[i].rjust(width) + " | " + " ".join(names[v].rjust(width) for v in row))
        return "\n".join(lines)

    def export_txt(self, S: FiniteSemigroup, output_path: str, title: Optional[str] = None):
        """
        Export a Cayley table to plain text

        Args:
            S: Semigroup
            output_path: Output file path
            title: Heading line; defaults to the semigroup name
        """
        try:
            with open(output_path, 'w', encoding='utf-8') as f:
                f.write(f"{title or S.name or 'Semigroup'} (order {S.order})\n\n")
                f.write(self.format_table(S))
                f.write("\n")
        except OSError as e:
            raise InputError(f"cannot write {output_path}: {e.strerror or e}") from e
        logger.info(f"Exported table: {output_path}")

    @staticmethod
    def corpus_csv(rows: List[Dict[str, Any]]) -> str:
        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=CORPUS_COLUMNS, extrasaction='ignore', lineterminator="\n")
        writer.writeheader()
        for row in rows:
            flat = dict(row)
            if isinstance(flat.get("members"), dict):
                flat["members"] = ";".join(f"{k}={v}" for k, v in flat["members"].items())
            writer.writerow(flat)
        return buffer.getvalue()

    def export_csv(self, rows: List[Dict[str, Any]], output_path: str):
        """
        Export corpus report rows to CSV

        Args:
            rows: Instance dictionaries from a corpus run
            output_path: Output file path
        """
        with open(output_path, 'w', encoding='utf-8', newline='') as f:
            f.write(self.corpus_csv(rows))
        logger.info(f"Exported CSV: {output_path}")

    def export_markdown(self, rows: List[Dict[str, Any]], output_path: str, title: str = "Corpus report"):
        """
        Export corpus report rows to a Markdown table

        Args:
            rows: Instance dictionaries from a corpus run
            output_path: Output file path
            title: Document title
        """
        with open(output_path, 'w', encoding='utf-8') as f:
            f.write(f"# {title}\n\n")
            f.write("| " + " | ".join(CORPUS_COLUMNS) + " |\n")
            f.write("|" + "---|" * len(CORPUS_COLUMNS) + "\n")
            for row in rows:
                cells = []
                for column in CORPUS_COLUMNS:
                    value = row.get(column)
                    if isinstance(value, dict):
                        value = ", ".join(f"{k}: {v}" for k, v in value.items())
                    cells.append("" if value is None else str(value))
                f.write("| " + " | ".join(cells) + " |\n")

    @staticmethod
    def parse_formats(text: str) -> List[str]:
        """
        Split a comma-separated format list

        Raises:
            InputError: On an empty list or an unknown format
        """
        formats = [f.strip().lower() for f in text.split(",") if f.strip()]
        if not formats:
            raise InputError("no export format given")
        unknown = [f for f in formats if f not in REPORT_FORMATS]
        if unknown:
            raise InputError(f"unknown export format '{unknown[0]}'. Valid options: {', '.join(REPORT_FORMATS)}")
        return formats

    def export_report(self, report: Dict[str, Any], base_path: str, formats: List[str]):
        """
        Export a corpus report to several formats

        Args:
            report: {"instances": [...], ...}
            base_path: Output path without extension
            formats: Any of json, csv, md

        Raises:
            InputError: Unknown format or an output file that cannot be written
        """
        exporters = {
            'json': lambda path: self.export_json(report, path),
            'csv': lambda path: self.export_csv(report.get("instances", []), path),
            'md': lambda path: self.export_markdown(report.get("instances", []), path),
        }
        for ext in self.parse_formats(",".join(formats)):
            path = f"{base_path}.{ext}"
            try:
                exporters[ext](path)
            except OSError as e:
                raise InputError(f"cannot write {path}: {e.strerror or e}") from e


__all__ = ['ExportManager', 'CORPUS_COLUMNS', 'REPORT_FORMATS']
