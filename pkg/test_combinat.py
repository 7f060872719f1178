"""
Tests for partitions, Kostka numbers, LR coefficients, hives, characters and weight multiplicities.
"""
import random
from fractions import Fraction
from itertools import product

import pytest
from pydantic import ValidationError

from satpos.combinat import (
    CycleType,
    Partition,
    centralizer_size,
    character_table,
    compositions,
    frobenius_character,
    hive_polytope,
    kostant_partition,
    kostka,
    kostka_bounded_height,
    lr_coefficient,
    partitions_of,
    rational_hive_polytope,
    sn_character,
    weight_multiplicity,
    weyl_dim_poly,
    weyl_dimension,
)
from satpos.errors import DimensionMismatch, HeightExceedsRank, SizeMismatch
from satpos.polytope import count_lattice_points, is_empty
from satpos.satip import random_lr_triple


# ---------------------------------------------------------------------------
# Partitions
# ---------------------------------------------------------------------------

def test_partition_parsing():
    assert Partition.parse("87,62").parts == (87, 62)
    assert Partition.parse("").parts == ()
    assert Partition(parts=(3, 1, 0, 0)).parts == (3, 1)
    with pytest.raises(ValidationError):
        Partition.parse("1,3")
    with pytest.raises(ValidationError):
        Partition(parts=(2, -1))


def test_partition_shape_operations():
    lam = Partition(parts=(3, 1))
    assert lam.conjugate().parts == (2, 1, 1)
    assert lam.contains(Partition(parts=(2, 1)))
    assert not lam.contains(Partition(parts=(1, 1, 1)))
    assert lam.scaled(2).parts == (6, 2)
    assert lam.padded(4) == (3, 1, 0, 0)
    assert str(lam) == "3,1"


def test_partitions_of_and_compositions():
    assert len(list(partitions_of(4))) == 5
    assert [p.parts for p in partitions_of(5, max_parts=2)] == [(5,), (4, 1), (3, 2)]
    assert len(list(partitions_of(6, max_part=2))) == 4
    assert len(list(compositions(3, 3))) == 10
    assert next(compositions(2, 2)) == (2, 0)


def test_centralizer_sizes():
    assert centralizer_size((2, 1, 1)) == 4
    assert CycleType(parts=(3, 3)).centralizer_size == 18
    assert CycleType(parts=(2, 1, 1)).class_size == 6


# ---------------------------------------------------------------------------
# Kostka numbers
# ---------------------------------------------------------------------------

def test_kostka_examples():
    assert kostka((2, 1), (1, 1, 1)) == 2
    assert kostka((3,), (1, 1, 1)) == 1
    assert kostka((1, 1, 1), (3,)) == 0
    assert kostka((2, 2), (1, 1, 1, 1)) == 2
    assert kostka((2, 1), (1, 2)) == 1


def test_kostka_bounded_height_examples():
    assert kostka_bounded_height((50, 50), (50, 50, 0, 0)) == 1
    assert kostka_bounded_height((2, 1), (1, 1, 1)) == 2
    with pytest.raises(ValueError):
        kostka_bounded_height((1, 1, 1, 1, 1), (1, 1, 1, 1, 1))


def _assert_kostka_methods_agree(sizes) -> None:
    for m in sizes:
        for lam in partitions_of(m, max_parts=4):
            for content in compositions(m, 4):
                assert kostka(lam, content) == kostka_bounded_height(lam, content), f"{lam} {content}"


def test_kostka_methods_agree():
    _assert_kostka_methods_agree(range(1, 7))


@pytest.mark.slow
def test_kostka_methods_agree_up_to_ten():
    _assert_kostka_methods_agree(range(7, 11))


def test_kostka_sums_to_dimension():
    for m in range(1, 6):
        for lam in partitions_of(m, max_parts=3):
            assert sum(kostka(lam, c) for c in compositions(m, 3)) == weyl_dimension(3, lam)


# ---------------------------------------------------------------------------
# LR coefficients and hives
# ---------------------------------------------------------------------------

def test_lr_examples():
    assert lr_coefficient((2, 1), (2, 1), (3, 2, 1)) == 2
    assert lr_coefficient((1,), (1,), (2,)) == 1
    assert lr_coefficient((1,), (1,), (1, 1)) == 1
    assert lr_coefficient((2,), (1,), (1, 1, 1)) == 0
    assert lr_coefficient((1,), (1,), (3,)) == 0
    assert lr_coefficient((), (2, 1), (2, 1)) == 1


def test_lr_symmetry():
    for a, b in product(range(1, 4), repeat=2):
        for alpha in partitions_of(a):
            for beta in partitions_of(b):
                for lam in partitions_of(a + b):
                    assert lr_coefficient(alpha, beta, lam) == lr_coefficient(beta, alpha, lam)


def test_hive_counts_match_lr_rule():
    for a, b in product(range(1, 3), repeat=2):
        for alpha in partitions_of(a):
            for beta in partitions_of(b):
                for lam in partitions_of(a + b):
                    side = max(alpha.height, beta.height, lam.height)
                    P = hive_polytope(alpha, beta, lam, side)
                    assert count_lattice_points(P) == lr_coefficient(alpha, beta, lam)


@pytest.mark.slow
def test_hive_counts_match_lr_rule_on_random_triples():
    for seed in range(60):
        alpha, beta, lam = random_lr_triple(random.Random(seed), 10)
        side = max(1, len(alpha), len(beta), len(lam))
        P = hive_polytope(alpha, beta, lam, side)
        assert count_lattice_points(P) == lr_coefficient(alpha, beta, lam), f"seed {seed}"


def test_hive_examples():
    assert count_lattice_points(hive_polytope((2, 1), (2, 1), (3, 2, 1), 3)) == 2
    assert count_lattice_points(hive_polytope((1, 1), (1, 1), (4,), 2)) == 0


def test_hive_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        hive_polytope((1, 1, 1), (1,), (2, 1, 1), 2)
    with pytest.raises(DimensionMismatch):
        hive_polytope((1,), (1,), (3,), 2)


def test_rational_hive_of_halved_triple():
    P = rational_hive_polytope(["1", "1/2"], ["1", "1/2"], ["3/2", "3/2"], 2)
    assert not is_empty(P)


# ---------------------------------------------------------------------------
# Characters
# ---------------------------------------------------------------------------

def test_character_examples():
    assert sn_character((2, 1), (1, 1, 1)) == 2
    assert sn_character((2, 1), (3,)) == -1
    assert sn_character((2, 1), (2, 1)) == 0
    assert sn_character((1, 1, 1), (2, 1)) == -1
    assert sn_character((3, 1), (1, 1, 1, 1)) == 3


def test_character_size_mismatch():
    with pytest.raises(SizeMismatch):
        sn_character((2, 1), (2,))
    with pytest.raises(SizeMismatch):
        frobenius_character((2, 1), (2,))


def _assert_characters_agree(sizes) -> None:
    for m in sizes:
        shapes = list(partitions_of(m))
        for lam, rho in product(shapes, shapes):
            assert frobenius_character(lam, rho) == sn_character(lam, rho), f"{lam} {rho}"


def test_frobenius_agrees_with_murnaghan_nakayama():
    _assert_characters_agree(range(1, 6))


@pytest.mark.slow
def test_frobenius_agrees_with_murnaghan_nakayama_up_to_eight():
    _assert_characters_agree(range(6, 9))


def test_character_table_column_orthogonality():
    m = 5
    table = character_table(m)
    shapes = [p.parts for p in partitions_of(m)]
    for rho, sigma in product(shapes, shapes):
        inner = sum(table[(lam, rho)] * table[(lam, sigma)] for lam in shapes)
        assert inner == (centralizer_size(rho) if rho == sigma else 0)


# ---------------------------------------------------------------------------
# Kostant partition function and weight multiplicities
# ---------------------------------------------------------------------------

def test_kostant_partition_examples():
    assert kostant_partition(2, (0, 0)) == 1
    assert kostant_partition(2, (1, 1)) == 2
    assert kostant_partition(2, (2, 1)) == 2
    assert kostant_partition(2, (-1, 1)) == 0
    with pytest.raises(ValueError):
        kostant_partition(2, (1,))


def test_weight_multiplicity_methods_agree():
    for m in range(1, 5):
        for lam in partitions_of(m, max_parts=3):
            for weight in compositions(m, 3):
                expected = weight_multiplicity(lam, weight, method="kostka")
                assert weight_multiplicity(lam, weight, method="kostant") == expected


def test_weight_multiplicity_unknown_method():
    with pytest.raises(ValueError):
        weight_multiplicity((2, 1), (1, 1, 1), method="other")


# ---------------------------------------------------------------------------
# Weyl dimension polynomials
# ---------------------------------------------------------------------------

def test_weyl_dim_poly_examples():
    assert weyl_dim_poly(3, (1, 1)).coefficients == (1, Fraction(3, 2), Fraction(1, 2))
    assert weyl_dim_poly(2, (1,)).coefficients == (1, 1)
    assert weyl_dim_poly(3, (21, 19)).coefficients == (1, Fraction(63, 2), Fraction(517, 2), 399)
    assert weyl_dim_poly(3, (12, 9, 5)).coefficients == (1, Fraction(21, 2), Fraction(73, 2), 42)


def test_weyl_dimension_values():
    assert weyl_dimension(3, (2, 1)) == 8
    assert weyl_dimension(4, (1,)) == 4
    assert weyl_dim_poly(3, (2, 1))(2) == weyl_dimension(3, (4, 2))


def test_weyl_dim_poly_height_exceeds_rank():
    with pytest.raises(HeightExceedsRank):
        weyl_dim_poly(1, (1, 1))
