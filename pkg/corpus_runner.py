#!/usr/bin/env python3
"""
Corpus Runner
Expand every semigroup of a seeded corpus and check the expansion invariants
"""

import logging
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

from tqdm import tqdm

from algebra.corpus import (
    DEFAULT_TRANSFORMATION_CAP, EXHAUSTIVE_MAX_ORDER, exhaustive, piecewise_syntactic, random_transformation,
)
from algebra.isomorphism import generating_sequence
from algebra.morphisms import Mode, letter_morphism
from algebra.semigroup import FiniteSemigroup
from errors import InputError, PredicateDisagreement, WorkbenchError
from expansion.pin_therien import DEFAULT_SIGNATURE_CAP, expand, kernel_check, regular_core_check
from terms.varieties import variety_member

logger = logging.getLogger(__name__)

CORPUS_KINDS = ("exhaustive", "random", "piecewise", "all")
DEFAULT_VARIETIES = ("J", "DS", "N", "K", "D", "LI", "ECom", "DG", "DSRS")
LETTERS = "abcdefghijklmnopqrstuvwxyz"


@dataclass(frozen=True)
class CorpusInstance:
    key: str
    kind: str
    semigroup: FiniteSemigroup


class CorpusRunner:
    """Run the expansion checks over a corpus, in parallel, with a deterministic report"""

    def __init__(
        self,
        kind: str = "all",
        seed: int = 0,
        count: int = 20,
        exhaustive_max_order: int = EXHAUSTIVE_MAX_ORDER,
        random_degree: int = 4,
        random_generators: int = 2,
        piecewise_max_word_length: int = 3,
        workers: int = 4,
        signature_cap: int = DEFAULT_SIGNATURE_CAP,
        transformation_cap: int = DEFAULT_TRANSFORMATION_CAP,
        kernel_max_length: int = 4,
        varieties: Sequence[str] = DEFAULT_VARIETIES,
        show_progress: bool = False,
    ):
        """
        Initialize corpus runner

        Args:
            kind: exhaustive, random, piecewise or all
            seed: First seed of the random transformation semigroups
            count: Number of random transformation semigroups
            exhaustive_max_order: Exhaustive corpus covers orders 1..this
            random_degree: Points of the random transformations
            random_generators: Generators per random semigroup
            piecewise_max_word_length: Subword languages A*a1A*..akA* with k up to this
            workers: Worker threads
            signature_cap: Signature cap per expansion
            transformation_cap: Cap for transformation closures
            kernel_max_length: Word length bound of the kernel check
            varieties: Registered varieties whose membership is reported
            show_progress: Show a tqdm progress bar on stderr
        """
        if kind not in CORPUS_KINDS:
            raise InputError(f"unknown corpus kind '{kind}'. Valid options: {', '.join(CORPUS_KINDS)}")
        if workers < 1:
            raise InputError(f"workers must be at least 1, got {workers}")
        self.kind = kind
        self.seed = seed
        self.count = count
        self.exhaustive_max_order = exhaustive_max_order
        self.random_degree = random_degree
        self.random_generators = random_generators
        self.piecewise_max_word_length = piecewise_max_word_length
        self.workers = workers
        self.signature_cap = signature_cap
        self.transformation_cap = transformation_cap
        self.kernel_max_length = kernel_max_length
        self.varieties = tuple(varieties)
        self.show_progress = show_progress

    def instances(self) -> Iterator[CorpusInstance]:
        """Corpus members in key order"""
        if self.kind in ("exhaustive", "all"):
            for order in range(1, self.exhaustive_max_order + 1):
                for i, S in enumerate(exhaustive(order)):
                    yield CorpusInstance(f"exhaustive/{order}/{i:03d}", "exhaustive", S)
        if self.kind in ("random", "all"):
            for offset in range(self.count):
                seed = self.seed + offset
                S = random_transformation(self.random_degree, self.random_generators, seed,
                                          cap=self.transformation_cap)
                yield CorpusInstance(f"random/{seed:06d}", "random", S)
        if self.kind in ("piecewise", "all"):
            for i, S in enumerate(piecewise_syntactic(("a", "b"), self.piecewise_max_word_length, canonical=True)):
                yield CorpusInstance(f"piecewise/{i:03d}", "piecewise", S)

    def _memberships(self, S: FiniteSemigroup) -> Tuple[Dict[str, bool], List[str]]:
        members, disagreements = {}, []
        for name in self.varieties:
            try:
                members[name] = variety_member(S, name).member
            except PredicateDisagreement as e:
                disagreements.append(str(e))
        return members, disagreements

    def process_instance(self, instance: CorpusInstance) -> Dict[str, Any]:
        """
        Expand one corpus member along a greedy generating set

        Returns:
            Dictionary with the checks; a capped expansion is reported as skipped
        """
        S = instance.semigroup
        result: Dict[str, Any] = {
            "key": instance.key,
            "kind": instance.kind,
            "name": S.name,
            "order": S.order,
            "generators": None,
            "expanded_order": None,
            "regular_core": None,
            "kernel": None,
            "members": None,
            "error": None,
        }
        try:
            generators = generating_sequence(S)
            if len(generators) > len(LETTERS):
                raise InputError(f"{len(generators)} generators exceed the available letters")
            images = {LETTERS[k]: g for k, g in enumerate(generators)}
            result["generators"] = {letter: S.name_of(g) for letter, g in images.items()}
            members, disagreements = self._memberships(S)
            result["members"] = members
            if disagreements:
                result["error"] = "; ".join(disagreements)

            phi = letter_morphism(S, images, Mode.SEMIGROUP)
            expansion = expand(phi, cap=self.signature_cap)
            result["expanded_order"] = expansion.expanded.order
            result["regular_core"] = regular_core_check(expansion).passed
            result["kernel"] = kernel_check(expansion, self.kernel_max_length).passed
        except WorkbenchError as e:
            logger.warning(f"Skipped {instance.key}: {e}")
            skipped = f"skipped: {e}"
            result["error"] = f"{result['error']}; {skipped}" if result["error"] else skipped
        return result

    def run(self) -> List[Dict[str, Any]]:
        """
        Process the whole corpus

        Returns:
            Instance results sorted by key
        """
        instances = list(self.instances())
        logger.info(f"Corpus '{self.kind}' (seed {self.seed}): {len(instances)} instances, {self.workers} workers")
        results = []
        with ThreadPoolExecutor(max_workers=self.workers) as executor:
            futures = [executor.submit(self.process_instance, instance) for instance in instances]
            for future in tqdm(as_completed(futures), total=len(futures), desc="Corpus",
                               disable=not self.show_progress):
                results.append(future.result())
        results.sort(key=lambda r: r["key"])
        return results

    @staticmethod
    def failures(results: List[Dict[str, Any]]) -> List[str]:
        """Keys of instances where a check failed or the two membership checkers disagreed"""
        failed = []
        for r in results:
            disagreement = r["error"] is not None and not r["error"].startswith("skipped")
            if r["regular_core"] is False or r["kernel"] is False or disagreement:
                failed.append(r["key"])
        return failed

    def report(self, results: Optional[List[Dict[str, Any]]] = None) -> Dict[str, Any]:
        """Summary plus instances; contains nothing time-dependent"""
        results = self.run() if results is None else results
        failed = self.failures(results)
        skipped = [r["key"] for r in results if r["error"] and r["error"].startswith("skipped")]
        return {
            "kind": self.kind,
            "seed": self.seed,
            "count": self.count,
            "summary": {
                "instances": len(results),
                "passed": len(results) - len(failed) - len(skipped),
                "failed": failed,
                "skipped": skipped,
            },
            "instances": results,
        }


__all__ = ['CORPUS_KINDS', 'DEFAULT_VARIETIES', 'CorpusInstance', 'CorpusRunner']
