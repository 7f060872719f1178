"""
Tests for exact arithmetic: rationals, linear systems, polynomials, series and Smith normal form.
"""
import random
from fractions import Fraction

import pytest
import sympy

from satpos.exact import (
    IntMatrix,
    RationalFunction,
    RationalMatrix,
    RationalPolynomial,
    determinant,
    series_coefficients,
    smith_normal_form,
    solve_rational,
    to_rational,
)


def test_to_rational_accepts_supported_types():
    assert to_rational(3) == Fraction(3)
    assert to_rational("3/6") == Fraction(1, 2)
    assert to_rational(Fraction(2, 3)) == Fraction(2, 3)
    assert to_rational(sympy.Rational(5, 7)) == Fraction(5, 7)


def test_to_rational_rejects_garbage():
    with pytest.raises(ValueError):
        to_rational("x")


# ---------------------------------------------------------------------------
# Linear systems
# ---------------------------------------------------------------------------

def test_solve_rational_unique_solution():
    A = RationalMatrix.from_rows([[1, 1], [1, -1]])
    solution = solve_rational(A, [3, 1])
    assert solution.particular == [Fraction(2), Fraction(1)]
    assert solution.nullspace_basis == []


def test_solve_rational_underdetermined():
    A = RationalMatrix.from_rows([[1, 2]])
    solution = solve_rational(A, ["1/2"])
    assert solution.particular == [Fraction(1, 2), Fraction(0)]
    assert solution.nullspace_basis == [[Fraction(-2), Fraction(1)]]


def test_solve_rational_inconsistent_returns_none():
    A = RationalMatrix.from_rows([[1, 1], [2, 2]])
    assert solve_rational(A, [1, 3]) is None


def test_solve_rational_length_mismatch():
    with pytest.raises(ValueError):
        solve_rational(RationalMatrix.from_rows([[1]]), [1, 2])


# ---------------------------------------------------------------------------
# Polynomials and rational functions
# ---------------------------------------------------------------------------

def test_polynomial_basics():
    p = RationalPolynomial(coefficients=[1, 2, 0, 0])
    assert p.coefficients == (Fraction(1), Fraction(2))
    assert p.degree == 1
    assert p(3) == 7
    assert RationalPolynomial(coefficients=[]).degree == -1
    assert RationalPolynomial(coefficients=[-1, 1]).shift(1) == RationalPolynomial(coefficients=[0, 1])


def test_polynomial_divmod_and_gcd():
    p = RationalPolynomial(coefficients=[-1, 0, 1])
    q = RationalPolynomial(coefficients=[-1, 1])
    quotient, remainder = p.divmod(q)
    assert quotient == RationalPolynomial(coefficients=[1, 1])
    assert remainder.is_zero
    assert p.gcd(q).degree == 1


def test_rational_function_normalizes():
    F = RationalFunction(numerator=[1, 0, -1], denominator=[1, -1])
    assert F.numerator.coefficients == (Fraction(1), Fraction(1))
    assert F.denominator.coefficients == (Fraction(1),)


def test_rational_function_zero_denominator():
    with pytest.raises(ValueError):
        RationalFunction(numerator=[1], denominator=[])


def test_series_geometric():
    F = RationalFunction.from_factors([1], [(1, 1)])
    assert series_coefficients(F, 5) == [1] * 6


def test_series_counts_partitions_into_two_parts():
    F = RationalFunction.from_factors([1], [(1, 1), (2, 1)])
    assert series_coefficients(F, 7) == [1, 1, 2, 2, 3, 3, 4, 4]


def test_series_of_squares_plus_one():
    # sum (n + 1)^2 t^n = (1 + t) / (1 - t)^3
    F = RationalFunction.from_factors([1, 1], [(1, 3)])
    assert series_coefficients(F, 5) == [(n + 1) ** 2 for n in range(6)]


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------

def _check_decomposition(A: IntMatrix):
    snf = smith_normal_form(A)
    assert snf.U @ A @ snf.V == snf.D
    assert abs(determinant(snf.U)) == 1
    assert abs(determinant(snf.V)) == 1
    D = snf.D.to_rows()
    for i in range(A.rows):
        for j in range(A.cols):
            if i != j:
                assert D[i][j] == 0
    diagonal = snf.diagonal
    assert all(d > 0 for d in diagonal)
    for a, b in zip(diagonal, diagonal[1:]):
        assert b % a == 0
    return snf


def test_snf_small_example():
    snf = _check_decomposition(IntMatrix.from_rows([[2, 4], [6, 8]]))
    assert snf.diagonal == [2, 4]
    assert snf.rank == 2


def test_snf_identity_and_single_entry():
    assert _check_decomposition(IntMatrix.identity(3)).diagonal == [1, 1, 1]
    assert _check_decomposition(IntMatrix.from_rows([[-6]])).diagonal == [6]


def test_snf_rank_deficient():
    snf = _check_decomposition(IntMatrix.from_rows([[1, 2, 3], [2, 4, 6]]))
    assert snf.rank == 1
    assert snf.diagonal == [1]


def test_snf_random_matrices():
    rng = random.Random(7)
    for _ in range(30):
        rows, cols = rng.randint(1, 4), rng.randint(1, 4)
        A = IntMatrix.from_rows([[rng.randint(-6, 6) for _ in range(cols)] for _ in range(rows)])
        snf = _check_decomposition(A)
        entries = [abs(v) for row in A.to_rows() for v in row]
        if any(entries):
            g = 0
            for v in entries:
                g = sympy.igcd(g, v)
            assert snf.diagonal[0] == g
