#!/usr/bin/env python
"""
Randomized property suites run across a process pool.

  index        Smith-form Ehrhart index against sampled lattice counts
  hive         hive lattice-point counts against the LR rule
  nonvanishing LP nonvanishing test against lr_coefficient > 0
  agreement    every multi-algorithm pair on all small inputs

Usage:
    python scripts/random_suite.py --suite index --count 200 --n 24 --workers 4
"""
import argparse
import logging
import os
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from itertools import product
from typing import Dict, List, Optional, Tuple

# Add parent directory to Python path to import modules
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from satpos.combinat import (
    compositions,
    frobenius_character,
    hive_polytope,
    kostka,
    kostka_bounded_height,
    lr_coefficient,
    partitions_of,
    sn_character,
)
from satpos.config import configure_logging
from satpos.multiplicity import (
    TensorEmbedding,
    klimyk_branching,
    kronecker_char,
    kronecker_two_row,
    plethysm_p_basis,
    plethysm_weyl_substitution,
)
from satpos.polytope import count_lattice_points
from satpos.satip import check_index, lr_nonvanishing, random_lr_triple, random_polytope

logger = logging.getLogger(__name__)


def index_case(seed: int, N: int) -> Tuple[Optional[bool], bool, bool]:
    """(agrees, consistent, dilation identity) for one random polytope; agrees is None when indeterminate."""
    rng = random.Random(seed)
    result = check_index(random_polytope(rng), N)
    return result.agrees, result.consistent, result.dilation_identity


def hive_case(seed: int, max_size: int) -> bool:
    rng = random.Random(seed)
    alpha, beta, lam = random_lr_triple(rng, max_size)
    side = max(1, len(alpha), len(beta), len(lam))
    return count_lattice_points(hive_polytope(alpha, beta, lam, side)) == lr_coefficient(alpha, beta, lam)


def nonvanishing_case(seed: int, max_size: int) -> bool:
    rng = random.Random(seed)
    alpha, beta, lam = random_lr_triple(rng, max_size)
    return lr_nonvanishing(alpha, beta, lam) == (lr_coefficient(alpha, beta, lam) > 0)


def _run_pool(func, seeds: List[int], arg: int, workers: int) -> list:
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(func, seeds, [arg] * len(seeds)))
    return [func(seed, arg) for seed in seeds]


def agreement_suite(max_kron: int = 8, max_pleth: int = 12, max_char: int = 8, max_kostka: int = 10) -> Dict[str, int]:
    """Count disagreements between the independent algorithms on every small input."""
    failures = {"kronecker": 0, "plethysm": 0, "characters": 0, "kostka": 0}

    for m in range(1, max_kron + 1):
        two_row = list(partitions_of(m, max_parts=2))
        for lam, mu in product(two_row, two_row):
            for pi in partitions_of(m, max_parts=4):
                expected = kronecker_char(lam, mu, pi, guard=max_kron)
                a, b = max(1, lam.height), max(1, mu.height)
                klimyk = klimyk_branching(a * b, TensorEmbedding(a=a, b=b), pi, (lam, mu)) \
                    if pi.height <= a * b else 0
                if kronecker_two_row(lam, mu, pi) != expected or klimyk != expected:
                    logger.error(f"Kronecker disagreement at {lam} {mu} {pi}")
                    failures["kronecker"] += 1

    for a in range(1, max_pleth + 1):
        for b in range(1, max_pleth // a + 1):
            for lam in partitions_of(a):
                for mu in partitions_of(b):
                    left = plethysm_p_basis(lam, mu, guard=max_pleth)
                    # every constituent of s_lam[s_mu] has at most a * l(mu) parts
                    right = plethysm_weyl_substitution(lam, mu, a * max(1, mu.height), guard=max_pleth)
                    if left != right:
                        logger.error(f"Plethysm disagreement at {lam} {mu}")
                        failures["plethysm"] += 1

    for m in range(1, max_char + 1):
        shapes = list(partitions_of(m))
        for lam, rho in product(shapes, shapes):
            if sn_character(lam, rho) != frobenius_character(lam, rho):
                logger.error(f"Character disagreement at {lam} {rho}")
                failures["characters"] += 1

    for m in range(1, max_kostka + 1):
        for lam in partitions_of(m, max_parts=4):
            for content in compositions(m, 4):
                if kostka(lam, content) != kostka_bounded_height(lam, content):
                    logger.error(f"Kostka disagreement at {lam} {content}")
                    failures["kostka"] += 1
    return failures


def main():
    parser = argparse.ArgumentParser(description="Randomized property suites")
    parser.add_argument("--suite", choices=["index", "hive", "nonvanishing", "agreement", "all"], default="all")
    parser.add_argument("--count", type=int, default=200)
    parser.add_argument("--n", type=int, default=24, help="Sample horizon for the index suite")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    args = parser.parse_args()

    configure_logging("INFO")
    seeds = [args.seed + i for i in range(args.count)]
    ok = True

    if args.suite in ("index", "all"):
        results = _run_pool(index_case, seeds, args.n, args.workers)
        agree = sum(1 for a, _, _ in results if a is True)
        disagree = sum(1 for a, _, _ in results if a is False)
        indeterminate = [c for a, c, _ in results if a is None]
        identity = sum(1 for _, _, i in results if i)
        logger.info(f"index: {agree} agree, {disagree} disagree, {len(indeterminate)} indeterminate "
                    f"({sum(indeterminate)} consistent), {identity}/{len(results)} dilation identities hold")
        ok &= disagree == 0 and all(indeterminate) and identity == len(results)

    if args.suite in ("hive", "all"):
        results = _run_pool(hive_case, seeds, 10, args.workers)
        logger.info(f"hive: {sum(results)}/{len(results)} hive counts equal the LR rule")
        ok &= all(results)

    if args.suite in ("nonvanishing", "all"):
        results = _run_pool(nonvanishing_case, seeds, 12, args.workers)
        logger.info(f"nonvanishing: {sum(results)}/{len(results)} LP verdicts agree")
        ok &= all(results)

    if args.suite in ("agreement", "all"):
        failures = agreement_suite()
        logger.info(f"agreement: failures {failures}")
        ok &= not any(failures.values())

    sys.exit(0 if ok else 1)


if __name__ == "__main__":
    main()
