#!/usr/bin/env python3
"""
Semigroup Lab
Command-line workbench for finite semigroups, expansions, regular languages and omega-terms
"""

import argparse
import logging
import sys
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
from pydantic import ValidationError

from algebra.corpus import piecewise_syntactic
from algebra.green import green
from algebra.morphisms import letter_morphism
from config_validator import load_config
from corpus_runner import CORPUS_KINDS, CorpusRunner
from errors import InputError, WorkbenchError
from expansion.pin_therien import expand, expansion_tower, regular_core_check
from export_utils import ExportManager
from jcalc.bases import find_piecewise_witness
from jcalc.cut import Outcome, cut_compare
from jcalc.normal_form import j_normal_form
from jcalc.organized import organize, reduce_to_short_breaks
from languages.codes import SIDES, is_code
from languages.dfa import minimize_dfa
from languages.probes import Verdict, closure_probe
from languages.products import product_kind
from languages.syntactic import recognizing_set, syntactic_semigroup
from terms.evaluation import satisfies
from terms.omega_term import Pseudoidentity, parse_identity, parse_term, to_text
from terms.varieties import METHODS, variety_member
from validation.input_validator import InputValidator, load_dfa, load_operand, load_semigroup

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_INPUT = 2

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

CommandResult = Tuple[Dict[str, Any], int]


def setup_logging(verbose: bool, log_file: Optional[str] = None):
    """Log to stderr (stdout carries the JSON document), optionally to a rotating file"""
    handlers: List[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if log_file:
        file_handler = RotatingFileHandler(
            log_file,
            maxBytes=10*1024*1024,  # 10MB
            backupCount=5,
            encoding='utf-8'
        )
        file_handler.setFormatter(logging.Formatter(LOG_FORMAT))
        handlers.append(file_handler)
    logging.basicConfig(
        level=logging.INFO if verbose else logging.WARNING,
        format=LOG_FORMAT,
        handlers=handlers,
        force=True,
    )


class Workbench:
    """Subcommand handlers; each returns (JSON document, exit code)"""

    def __init__(self, config: Dict[str, Dict[str, Any]], args: argparse.Namespace):
        self.config = config
        self.args = args

    def setting(self, section: str, key: str, override: Optional[Any] = None) -> Any:
        return override if override is not None else self.config[section][key]

    @property
    def seed(self) -> int:
        return self.setting("Corpus", "seed", self.args.seed)

    def _morphism(self):
        S = load_semigroup(self.args.semigroup)
        images = InputValidator.parse_images(self.args.images)
        return letter_morphism(S, images, self.args.mode)

    # =========================================================================
    # SEMIGROUPS
    # =========================================================================

    def sg_check(self) -> CommandResult:
        S = load_semigroup(self.args.semigroup)
        summary = green(S)
        if self.args.table:
            ExportManager().export_txt(S, self.args.table)
        return {
            "valid": True,
            "semigroup": S.to_dict(),
            "identity": S.name_of(S.identity) if S.identity is not None else None,
            "idempotents": [S.name_of(e) for e in sorted(summary.idempotents)],
        }, EXIT_OK

    def sg_green(self) -> CommandResult:
        S = load_semigroup(self.args.semigroup)
        document = {"semigroup": S.name, "order": S.order}
        document.update(green(S).to_dict(S))
        return document, EXIT_OK

    def sg_member(self) -> CommandResult:
        S = load_semigroup(self.args.semigroup)
        V = InputValidator.validate_variety_name(self.args.variety)
        report = variety_member(S, V, self.args.method)
        document = {"semigroup": S.name}
        document.update(report.to_dict(S))
        return document, EXIT_OK if report.member else EXIT_FALSE

    def sg_satisfies(self) -> CommandResult:
        S = load_semigroup(self.args.semigroup)
        identity = parse_identity(self.args.identity)
        holds, assignment = satisfies(S, identity)
        return {
            "semigroup": S.name,
            "identity": identity.to_text(),
            "holds": holds,
            "counter_assignment": {v: S.name_of(e) for v, e in assignment.items()} if assignment else None,
        }, EXIT_OK if holds else EXIT_FALSE

    # =========================================================================
    # EXPANSIONS
    # =========================================================================

    def expand(self) -> CommandResult:
        if self.args.tower:
            return self.tower()
        phi = self._morphism()
        result = expand(phi, cap=self.setting("Limits", "signature_cap", self.args.cap))
        core = regular_core_check(result)
        document = result.to_dict(with_signatures=self.args.signatures)
        document["regular_core"] = core.to_dict()
        if self.args.table:
            ExportManager().export_txt(result.expanded, self.args.table, title=f"Expansion of {phi.target.name}")
        return document, EXIT_OK if core.passed else EXIT_FALSE

    def tower(self) -> CommandResult:
        phi = self._morphism()
        levels = self.args.tower or 3
        result = expansion_tower(
            phi, levels,
            cap=self.setting("Limits", "signature_cap", self.args.cap),
            max_order=self.setting("Limits", "isomorphism_max_order"),
        )
        return result.to_dict(), EXIT_OK

    # =========================================================================
    # LANGUAGES
    # =========================================================================

    def lang_syntactic(self) -> CommandResult:
        d = load_dfa(self.args.automaton)
        S, phi = syntactic_semigroup(d, cap=self.setting("Limits", "transformation_cap", self.args.cap),
                                     name=Path(self.args.automaton).stem)
        document = {
            "minimal_states": minimize_dfa(d).states,
            "semigroup": S.to_dict(),
            "letters": phi.to_dict()["images"],
            "recognizing": [S.name_of(s) for s in sorted(recognizing_set(d, phi))],
        }
        code = EXIT_OK
        if self.args.variety:
            report = variety_member(S, InputValidator.validate_variety_name(self.args.variety), self.args.method)
            document["membership"] = report.to_dict(S)
            code = EXIT_OK if report.member else EXIT_FALSE
        return document, code

    def lang_code(self) -> CommandResult:
        d = load_dfa(self.args.automaton)
        report = is_code(d, self.args.side)
        return report.to_dict(), EXIT_OK if report.is_code else EXIT_FALSE

    def lang_probe(self) -> CommandResult:
        letter = InputValidator.validate_letter(self.args.a, "marker letter")
        L, K = load_operand(self.args.L), load_operand(self.args.K)
        alphabet = list(self.args.alphabet) if self.args.alphabet else None
        report = closure_probe(self.args.variety, L, letter, K, alphabet)
        document = report.to_dict()
        document["product_kind"] = product_kind(L, letter, K, alphabet).to_dict()
        return document, EXIT_FALSE if report.verdict is Verdict.CLOSURE_VIOLATED else EXIT_OK

    # =========================================================================
    # OMEGA-TERMS
    # =========================================================================

    def jterm_nf(self) -> CommandResult:
        t = parse_term(self.args.term)
        nf = j_normal_form(t, np.random.default_rng(self.seed))
        document: Dict[str, Any] = {
            "term": to_text(t),
            "normal_form": nf.to_text(),
            "items": nf.to_list(),
            "organized": None,
            "reduced": None,
        }
        try:
            organized = organize(t)
        except WorkbenchError as e:
            logger.info(f"Term is not organizable: {e}")
        else:
            document["organized"] = organized.to_dict()
            document["reduced"] = reduce_to_short_breaks(organized, self.args.variety).to_dict()
        return document, EXIT_OK

    def jterm_eq(self) -> CommandResult:
        u, v = parse_term(self.args.left), parse_term(self.args.right)
        left, right = j_normal_form(u), j_normal_form(v)
        equal = left == right
        document: Dict[str, Any] = {
            "left": to_text(u),
            "right": to_text(v),
            "equal": equal,
            "left_normal_form": left.to_text(),
            "right_normal_form": right.to_text(),
        }
        if not equal:
            witness = find_piecewise_witness(u, v, self.setting("JCalc", "witness_max_length"))
            document["witness"] = witness.to_dict() if witness else None
        elif self.args.verify:
            document["verified"] = self._verify_on_piecewise(Pseudoidentity(u, v))
        return document, EXIT_OK if equal else EXIT_FALSE

    def _verify_on_piecewise(self, identity: Pseudoidentity) -> bool:
        """Check the identity on the subword-language corpus over its variables"""
        bound = self.setting("JCalc", "soundness_max_length")
        for S in piecewise_syntactic(identity.variables, bound, canonical=True):
            holds, _ = satisfies(S, identity)
            if not holds:
                logger.error(f"{identity.to_text()} fails in {S.name}")
                return False
        return True

    def jterm_cut(self) -> CommandResult:
        u, v = parse_term(self.args.left), parse_term(self.args.right)
        verdict = cut_compare(u, v, load_oracle(self.args.oracle), self.args.variety)
        return verdict.to_dict(), EXIT_FALSE if verdict.outcome is Outcome.DISTINCT else EXIT_OK

    # =========================================================================
    # CORPUS
    # =========================================================================

    def corpus_run(self) -> CommandResult:
        corpus = self.config["Corpus"]
        formats = ExportManager.parse_formats(self.args.format) if self.args.output else []
        runner = CorpusRunner(
            kind=self.args.kind,
            seed=self.seed,
            count=self.setting("Corpus", "random_count", self.args.count),
            exhaustive_max_order=self.config["Limits"]["exhaustive_max_order"],
            random_degree=corpus["random_degree"],
            random_generators=corpus["random_generators"],
            piecewise_max_word_length=corpus["piecewise_max_word_length"],
            workers=self.setting("Corpus", "workers", self.args.workers),
            signature_cap=self.setting("Limits", "signature_cap", self.args.cap),
            transformation_cap=self.config["Limits"]["transformation_cap"],
            show_progress=self.args.verbose or self.config["General"]["verbose"],
        )
        report = runner.report()
        if self.args.output:
            ExportManager().export_report(report, self.args.output, formats)
        return report, EXIT_FALSE if report["summary"]["failed"] else EXIT_OK


def load_oracle(spec: str):
    """'j' or 'corpus:<dir>' holding semigroup JSON files"""
    if spec == "j":
        return "j"
    if spec.startswith("corpus:"):
        directory = Path(spec[len("corpus:"):])
        if not directory.is_dir():
            raise InputError(f"oracle directory not found: {directory}")
        files = sorted(directory.glob("*.json"))
        if not files:
            raise InputError(f"oracle directory {directory} holds no .json files")
        return [load_semigroup(str(f)) for f in files]
    raise InputError(f"unknown oracle '{spec}'. Valid options: j, corpus:<dir>")


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one subcommand per verb"""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", "-c", help="Configuration file path")
    common.add_argument("--verbose", "-v", action="store_true", help="Log progress on stderr")
    common.add_argument("--seed", type=int, help="Seed for every random choice")
    common.add_argument("--cap", type=int, help="Signature or transformation cap")

    parser = argparse.ArgumentParser(
        description="Semigroup Lab - finite semigroups, expansions, languages and omega-terms",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  %(prog)s sg-member B2.json --variety DS --method both
  %(prog)s expand Z2.json --images a=1 --mode monoid
  %(prog)s tower trivial.json --images a=0 --tower 2
  %(prog)s lang-probe --variety J -L L.json -a a -K ONE
  %(prog)s jterm-eq "(xy)^w" "(yx)^w"
  %(prog)s corpus-run --kind exhaustive --seed 0
        """
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        return sub.add_parser(name, parents=[common], help=help_text)

    p = add("sg-check", "Validate a semigroup file")
    p.add_argument("semigroup", help="Semigroup JSON file")
    p.add_argument("--table", metavar="PATH", help="Also write the Cayley table as text")

    p = add("sg-green", "Green's relations of a semigroup")
    p.add_argument("semigroup", help="Semigroup JSON file")

    p = add("sg-member", "Membership in a variety")
    p.add_argument("semigroup", help="Semigroup JSON file")
    p.add_argument("--variety", required=True, help="Variety name, e.g. J, DS, DV(G), LV(Sl)")
    p.add_argument("--method", choices=METHODS, help="Checker to use (default: all available)")

    p = add("sg-satisfies", "Check a pseudoidentity")
    p.add_argument("semigroup", help="Semigroup JSON file")
    p.add_argument("identity", help='Pseudoidentity, e.g. "x^w y = x^w"')

    for name, help_text in (("expand", "Expansion of a letter morphism"), ("tower", "Tower of expansions")):
        p = add(name, help_text)
        p.add_argument("semigroup", help="Target semigroup JSON file")
        p.add_argument("--images", required=True, help="Letter images, e.g. a=0,b=1 (indices or names)")
        p.add_argument("--mode", choices=["semigroup", "monoid"], default="semigroup", help="A+ or A*")
        p.add_argument("--tower", type=int, help="Number of iterated expansions")
        if name == "expand":
            p.add_argument("--signatures", action="store_true", help="Include the signature of every element")
            p.add_argument("--table", metavar="PATH", help="Also write the expanded Cayley table as text")

    p = add("lang-syntactic", "Syntactic semigroup of an automaton")
    p.add_argument("automaton", help="DFA JSON file")
    p.add_argument("--variety", help="Also decide membership of the syntactic semigroup")
    p.add_argument("--method", choices=METHODS, help="Checker to use with --variety")

    p = add("lang-code", "Prefix or suffix code test")
    p.add_argument("automaton", help="DFA JSON file")
    p.add_argument("--side", choices=SIDES, default="prefix")

    p = add("lang-probe", "Closure probe for one bideterministic product")
    p.add_argument("--variety", required=True, help="Variety name")
    p.add_argument("-L", required=True, help="Left operand: DFA JSON file or ONE")
    p.add_argument("-a", required=True, help="Marker letter")
    p.add_argument("-K", required=True, help="Right operand: DFA JSON file or ONE")
    p.add_argument("--alphabet", help="Alphabet letters, e.g. ab (needed only when both operands are ONE)")

    p = add("jterm-nf", "J normal form and organized factorization of a term")
    p.add_argument("term", help='Omega-term, e.g. "a(bc)^w b"')
    p.add_argument("--variety", choices=["J", "DG", "DS"], default="J")

    p = add("jterm-eq", "Decide u = v modulo J")
    p.add_argument("left", help="Left omega-term")
    p.add_argument("right", help="Right omega-term")
    p.add_argument("--verify", action="store_true", help="Check equal pairs on the subword-language corpus")

    p = add("jterm-cut", "Compare two terms through their reduced factorizations")
    p.add_argument("left", help="Left omega-term")
    p.add_argument("right", help="Right omega-term")
    p.add_argument("--oracle", default="j", help="j or corpus:<dir>")
    p.add_argument("--variety", choices=["J", "DG", "DS"], default="J")

    p = add("corpus-run", "Expand a seeded corpus and check the invariants")
    p.add_argument("--kind", choices=CORPUS_KINDS, default="all")
    p.add_argument("--count", type=int, help="Number of random transformation semigroups")
    p.add_argument("--workers", type=int, help="Worker threads")
    p.add_argument("--output", "-o", help="Also export the report to this path (without extension)")
    p.add_argument("--format", "-f", default="json", help="Export formats: json,csv,md")

    return parser


HANDLERS: Dict[str, Callable[[Workbench], CommandResult]] = {
    "sg-check": Workbench.sg_check,
    "sg-green": Workbench.sg_green,
    "sg-member": Workbench.sg_member,
    "sg-satisfies": Workbench.sg_satisfies,
    "expand": Workbench.expand,
    "tower": Workbench.tower,
    "lang-syntactic": Workbench.lang_syntactic,
    "lang-code": Workbench.lang_code,
    "lang-probe": Workbench.lang_probe,
    "jterm-nf": Workbench.jterm_nf,
    "jterm-eq": Workbench.jterm_eq,
    "jterm-cut": Workbench.jterm_cut,
    "corpus-run": Workbench.corpus_run,
}


def run_cli(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run one command

    Args:
        argv: Arguments without the program name

    Returns:
        0 (property holds or neutral), 1 (property false) or 2 (input error)
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_INPUT

    try:
        config = load_config(args.config)
    except InputError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_INPUT
    setup_logging(args.verbose or config["General"]["verbose"], config["General"]["log_file"] or None)

    try:
        document, code = HANDLERS[args.command](Workbench(config, args))
    except (InputError, ValidationError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except WorkbenchError as e:
        logger.error(f"{args.command} failed: {e}")
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_INPUT

    ExportManager().write_json(document, sys.stdout)
    return code


def main():
    """Main entry point"""
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()


__all__ = ['run_cli', 'build_parser', 'setup_logging', 'Workbench', 'load_oracle', 'main']
