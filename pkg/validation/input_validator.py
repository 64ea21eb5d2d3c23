#!/usr/bin/env python3
"""
Input Validation
Pydantic models and helpers for semigroup files, automaton files and CLI operands
"""

import json
import logging
import re
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from algebra.semigroup import FiniteSemigroup, build_semigroup
from errors import InputError
from languages.dfa import Dfa, build_dfa
from languages.products import ONE, Operand
from terms.varieties import VarietyPredicate, registry

logger = logging.getLogger(__name__)

# Configuration
MAX_DOCUMENT_SIZE = 16 * 1024 * 1024  # 16MB
MAX_ORDER = 4096
MAX_STATES = 100000
ONE_OPERAND = "ONE"

_IMAGE_PAIR = re.compile(r'^\s*(\S)\s*=\s*(\S+)\s*$')


class InputValidator:
    """Validation of files and command-line operands"""

    @staticmethod
    def validate_file_path(path: str) -> Path:
        """Path must name an existing regular file of reasonable size"""
        if not path:
            raise InputError("path cannot be empty")
        path_obj = Path(path)
        if not path_obj.exists():
            raise InputError(f"path not found: {path}")
        if not path_obj.is_file():
            raise InputError(f"not a file: {path}")
        if path_obj.stat().st_size > MAX_DOCUMENT_SIZE:
            raise InputError(f"file too large: {path} (max {MAX_DOCUMENT_SIZE // 1024 // 1024}MB)")
        return path_obj

    @staticmethod
    def load_json(path: str) -> Any:
        path_obj = InputValidator.validate_file_path(path)
        try:
            with open(path_obj, 'r', encoding='utf-8') as f:
                return json.load(f)
        except json.JSONDecodeError as e:
            raise InputError(f"{path}: invalid JSON ({e.msg} at line {e.lineno})") from e
        except UnicodeDecodeError as e:
            raise InputError(f"{path}: not UTF-8 text") from e

    @staticmethod
    def validate_letter(letter: str, field_name: str = "letter") -> str:
        if not isinstance(letter, str) or len(letter) != 1 or letter.isspace():
            raise InputError(f"{field_name} must be a single non-blank character, got {letter!r}")
        return letter

    @staticmethod
    def validate_variety_name(name: str) -> VarietyPredicate:
        """Resolve a variety name through the registry (DV(..) and LV(..) included)"""
        if not name or not name.strip():
            raise InputError("variety name cannot be empty")
        return registry.get(name.strip())

    @staticmethod
    def parse_images(text: str) -> Dict[str, Union[int, str]]:
        """
        Parse letter images such as "a=0,b=1" or "a=e,b=f"

        Integer values are element indices; anything else is an element name.
        """
        if not text or not text.strip():
            raise InputError("letter images cannot be empty")
        images: Dict[str, Union[int, str]] = {}
        for part in text.split(","):
            match = _IMAGE_PAIR.match(part)
            if not match:
                raise InputError(f"malformed letter image '{part.strip()}' (expected letter=element)")
            letter, value = match.groups()
            if letter in images:
                raise InputError(f"letter '{letter}' is assigned twice")
            images[letter] = int(value) if value.lstrip("-").isdigit() else value
        return images

    @staticmethod
    def validate_integer(value: int, min_val: int = None, max_val: int = None, field_name: str = "value") -> int:
        """Validate integer within range"""
        if isinstance(value, bool) or not isinstance(value, int):
            raise InputError(f"{field_name} must be an integer")
        if min_val is not None and value < min_val:
            raise InputError(f"{field_name} must be >= {min_val}")
        if max_val is not None and value > max_val:
            raise InputError(f"{field_name} must be <= {max_val}")
        return value


# Pydantic models with validation
class SemigroupDocument(BaseModel):
    """Validated semigroup file"""
    model_config = ConfigDict(extra='forbid')

    name: Optional[str] = Field(None, max_length=200)
    order: int = Field(..., ge=1, le=MAX_ORDER)
    elements: Optional[List[str]] = None
    table: List[List[int]]
    identity: Optional[int] = Field(None, ge=0)

    @field_validator('elements')
    @classmethod
    def validate_elements(cls, v):
        if v is not None and len(set(v)) != len(v):
            raise ValueError("element names must be distinct")
        return v

    @model_validator(mode='after')
    def validate_shape(self):
        if len(self.table) != self.order:
            raise ValueError(f"table has {len(self.table)} rows for order {self.order}")
        for i, row in enumerate(self.table):
            if len(row) != self.order:
                raise ValueError(f"row {i} has {len(row)} columns for order {self.order}")
        if self.elements is not None and len(self.elements) != self.order:
            raise ValueError(f"{len(self.elements)} element names for order {self.order}")
        return self

    def to_semigroup(self, default_name: Optional[str] = None) -> FiniteSemigroup:
        """Associativity and index ranges are checked by build_semigroup"""
        return build_semigroup(self.order, self.table, self.elements, self.name or default_name, self.identity)


class DfaDocument(BaseModel):
    """Validated automaton file; null or -1 targets are missing transitions"""
    model_config = ConfigDict(extra='forbid')

    alphabet: List[str] = Field(..., min_length=1)
    states: int = Field(..., ge=1, le=MAX_STATES)
    initial: int
    accepting: List[int]
    delta: Dict[str, List[Optional[int]]]

    @field_validator('alphabet')
    @classmethod
    def validate_alphabet(cls, v):
        for letter in v:
            if len(letter) != 1 or letter.isspace():
                raise ValueError(f"letters must be single non-blank characters, got {letter!r}")
        if len(set(v)) != len(v):
            raise ValueError("alphabet has repeated letters")
        return v

    def to_dfa(self) -> Dfa:
        """State and transition ranges are checked by build_dfa"""
        return build_dfa(self.model_dump())


def _describe(error: ValidationError) -> str:
    first = error.errors()[0]
    location = ".".join(str(part) for part in first.get("loc", ())) or "document"
    return f"{location}: {first.get('msg', 'invalid value')}"


def load_semigroup(path: str) -> FiniteSemigroup:
    """Read and validate a semigroup JSON file"""
    data = InputValidator.load_json(path)
    try:
        document = SemigroupDocument.model_validate(data)
    except ValidationError as e:
        raise InputError(f"{path}: {_describe(e)}") from e
    semigroup = document.to_semigroup(default_name=Path(path).stem)
    logger.info(f"Loaded semigroup {semigroup.name} of order {semigroup.order} from {path}")
    return semigroup


def load_dfa(path: str) -> Dfa:
    """Read and validate an automaton JSON file"""
    data = InputValidator.load_json(path)
    try:
        document = DfaDocument.model_validate(data)
    except ValidationError as e:
        raise InputError(f"{path}: {_describe(e)}") from e
    d = document.to_dfa()
    logger.info(f"Loaded automaton with {d.states} states over {''.join(d.alphabet)} from {path}")
    return d


def load_operand(value: str) -> Operand:
    """ONE or the path of an automaton file"""
    if value == ONE_OPERAND:
        return ONE
    return load_dfa(value)


__all__ = [
    'InputValidator', 'SemigroupDocument', 'DfaDocument',
    'load_semigroup', 'load_dfa', 'load_operand', 'ONE_OPERAND',
]
