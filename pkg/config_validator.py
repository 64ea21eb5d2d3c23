#!/usr/bin/env python3
"""
Configuration Validator for Semigroup Lab
Validates configuration files and loads them over the defaults
"""

import argparse
import configparser
import copy
import logging
import os
import sys
from typing import Any, Dict, List, Optional

from algebra.corpus import EXHAUSTIVE_MAX_ORDER, MAX_RANDOM_DEGREE, MAX_RANDOM_GENERATORS
from errors import InputError

logger = logging.getLogger(__name__)

CONFIG_ENV_VAR = "SEMIGROUP_LAB_CONFIG"

DEFAULT_CONFIG: Dict[str, Dict[str, Any]] = {
    "General": {
        "verbose": False,
        "log_file": "",
    },
    "Limits": {
        "isomorphism_max_order": 12,
        "exhaustive_max_order": 3,
        "signature_cap": 20000,
        "transformation_cap": 10000,
    },
    "Corpus": {
        "seed": 0,
        "random_degree": 4,
        "random_generators": 2,
        "random_count": 20,
        "piecewise_max_word_length": 3,
        "workers": 4,
    },
    "JCalc": {
        "witness_max_length": 6,
        "soundness_max_length": 4,
    },
}


class ConfigValidator:
    """Validates workbench configuration"""

    # (section, key) -> (minimum, maximum); maximum None means unbounded
    INTEGER_RANGES = {
        ("Limits", "isomorphism_max_order"): (1, 64),
        ("Limits", "exhaustive_max_order"): (1, EXHAUSTIVE_MAX_ORDER),
        ("Limits", "signature_cap"): (1, None),
        ("Limits", "transformation_cap"): (1, None),
        ("Corpus", "seed"): (0, None),
        ("Corpus", "random_degree"): (1, MAX_RANDOM_DEGREE),
        ("Corpus", "random_generators"): (1, MAX_RANDOM_GENERATORS),
        ("Corpus", "random_count"): (0, None),
        ("Corpus", "piecewise_max_word_length"): (1, 8),
        ("Corpus", "workers"): (1, 64),
        ("JCalc", "witness_max_length"): (1, 12),
        ("JCalc", "soundness_max_length"): (1, 8),
    }

    def __init__(self, strict: bool = False):
        """
        Initialize validator

        Args:
            strict: If True, treats warnings as errors
        """
        self.strict = strict
        self.errors: List[str] = []
        self.warnings: List[str] = []

    def validate(self, config: Dict[str, Dict[str, Any]]) -> bool:
        """
        Validate configuration

        Args:
            config: Section -> key -> value

        Returns:
            True if valid, False otherwise
        """
        self.errors = []
        self.warnings = []

        self._validate_general(config)
        self._validate_integers(config)
        self._validate_consistency(config)

        if self.errors or (self.strict and self.warnings):
            return False
        return True

    def _validate_general(self, config: Dict[str, Dict[str, Any]]):
        general = config.get("General", {})
        verbose = general.get("verbose", False)
        log_file = general.get("log_file", "")

        if not isinstance(verbose, bool):
            self.errors.append(f"verbose must be a boolean, got {type(verbose).__name__}")
        if not isinstance(log_file, str):
            self.errors.append(f"log_file must be a string, got {type(log_file).__name__}")
        elif log_file:
            directory = os.path.dirname(os.path.abspath(log_file))
            if not os.path.isdir(directory):
                self.warnings.append(f"log_file directory does not exist: {directory}")

    def _validate_integers(self, config: Dict[str, Dict[str, Any]]):
        for (section, key), (low, high) in self.INTEGER_RANGES.items():
            value = config.get(section, {}).get(key, DEFAULT_CONFIG[section][key])
            if isinstance(value, bool) or not isinstance(value, int):
                self.errors.append(f"{section}.{key} must be an integer, got {type(value).__name__}")
            elif value < low or (high is not None and value > high):
                bound = f"{low}..{high}" if high is not None else f">= {low}"
                self.errors.append(f"{section}.{key} = {value} is out of range ({bound})")

    def _validate_consistency(self, config: Dict[str, Dict[str, Any]]):
        limits = config.get("Limits", {})
        corpus = config.get("Corpus", {})
        jcalc = config.get("JCalc", {})

        degree = corpus.get("random_degree", 4)
        cap = limits.get("transformation_cap", 10000)
        if isinstance(degree, int) and isinstance(cap, int) and degree ** degree > cap:
            self.warnings.append(
                f"random_degree {degree} can generate up to {degree ** degree} transformations, "
                f"more than transformation_cap {cap}; some instances may be skipped"
            )

        witness = jcalc.get("witness_max_length", 6)
        soundness = jcalc.get("soundness_max_length", 4)
        if isinstance(witness, int) and isinstance(soundness, int) and witness < soundness:
            self.warnings.append(
                f"witness_max_length ({witness}) is below soundness_max_length ({soundness})"
            )

        count = corpus.get("random_count", 20)
        if isinstance(count, int) and count > 1000:
            self.warnings.append(f"random_count {count} is large; corpus runs will be slow")

    def get_report(self) -> str:
        """Get validation report"""
        report = []

        if self.errors:
            report.append("ERRORS:")
            for error in self.errors:
                report.append(f"   - {error}")
            report.append("")

        if self.warnings:
            report.append("WARNINGS:")
            for warning in self.warnings:
                report.append(f"   - {warning}")
            report.append("")

        if not self.errors and not self.warnings:
            report.append("Configuration is valid")

        return "\n".join(report)

    def print_report(self):
        """Print validation report"""
        print(self.get_report())


def read_config_file(config_file: str) -> Dict[str, Dict[str, Any]]:
    """
    Parse an INI file over DEFAULT_CONFIG

    Values are converted to the type of their default; unknown keys are kept as strings.
    """
    parser = configparser.ConfigParser()
    try:
        with open(config_file, 'r', encoding='utf-8') as f:
            parser.read_file(f)
    except (OSError, configparser.Error) as e:
        raise InputError(f"cannot read configuration file {config_file}: {e}") from e

    config = copy.deepcopy(DEFAULT_CONFIG)
    for section in parser.sections():
        values = config.setdefault(section, {})
        for key in parser[section]:
            default = DEFAULT_CONFIG.get(section, {}).get(key)
            try:
                if isinstance(default, bool):
                    values[key] = parser.getboolean(section, key)
                elif isinstance(default, int):
                    values[key] = parser.getint(section, key)
                else:
                    values[key] = parser.get(section, key)
            except ValueError:
                values[key] = parser.get(section, key)
    return config


def validate_config_file(config_file: str, strict: bool = False) -> bool:
    """
    Validate a configuration file

    Args:
        config_file: Path to configuration file
        strict: If True, treats warnings as errors

    Returns:
        True if valid, False otherwise
    """
    if not os.path.exists(config_file):
        print(f"Configuration file not found: {config_file}")
        return False

    try:
        config = read_config_file(config_file)
    except InputError as e:
        print(f"Error parsing configuration file: {e}")
        return False

    validator = ConfigValidator(strict=strict)
    is_valid = validator.validate(config)
    validator.print_report()
    return is_valid


def load_config(config_file: Optional[str] = None) -> Dict[str, Dict[str, Any]]:
    """
    Load configuration over the defaults

    Args:
        config_file: Path; defaults to $SEMIGROUP_LAB_CONFIG, then to no file

    Returns:
        Validated configuration; warnings are logged

    Raises:
        InputError: the file is missing, unreadable or invalid
    """
    config_file = config_file or os.getenv(CONFIG_ENV_VAR)
    if not config_file:
        return copy.deepcopy(DEFAULT_CONFIG)
    if not os.path.exists(config_file):
        raise InputError(f"configuration file not found: {config_file}")

    config = read_config_file(config_file)
    validator = ConfigValidator()
    if not validator.validate(config):
        raise InputError(f"invalid configuration {config_file}: {'; '.join(validator.errors)}")
    for warning in validator.warnings:
        logger.warning(f"Configuration: {warning}")
    return config


def main():
    """Command-line interface for config validation"""
    parser = argparse.ArgumentParser(description="Validate Semigroup Lab configuration")
    parser.add_argument("config_file", help="Path to configuration file")
    parser.add_argument("--strict", action="store_true", help="Treat warnings as errors")

    args = parser.parse_args()
    is_valid = validate_config_file(args.config_file, args.strict)
    sys.exit(0 if is_valid else 1)


if __name__ == "__main__":
    main()


__all__ = [
    'CONFIG_ENV_VAR', 'DEFAULT_CONFIG', 'ConfigValidator', 'read_config_file',
    'validate_config_file', 'load_config',
]
