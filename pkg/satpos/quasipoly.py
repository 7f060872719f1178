"""
Quasi-polynomials and their generating functions.

A quasi-polynomial of period l is stored as l constituent polynomials;
constituent j (1-based) governs the integers n with n = j mod l, so the
last constituent covers n = 0 mod l.
"""
import logging
from collections import defaultdict
from fractions import Fraction
from itertools import combinations_with_replacement
from math import ceil
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from satpos.errors import CapExceeded, InconsistentSamples, InsufficientSamples
from satpos.exact import (
    RationalFunction,
    RationalMatrix,
    RationalPolynomial,
    one_minus_t_power,
    solve_rational,
    to_rational,
)
from satpos.models import PositiveFormDocument, QuasiPolynomialDocument

logger = logging.getLogger(__name__)

Sample = Tuple[int, Fraction]


class QuasiPolynomial(BaseModel):
    """f(n) = constituents[(n - 1) mod period](n)."""
    model_config = ConfigDict(frozen=True)

    period: int
    constituents: Tuple[RationalPolynomial, ...]

    @field_validator("constituents", mode="before")
    @classmethod
    def _polys(cls, value: Iterable[Any]) -> Tuple[RationalPolynomial, ...]:
        return tuple(p if isinstance(p, RationalPolynomial) else RationalPolynomial(coefficients=p)
                     for p in value)

    @model_validator(mode="after")
    def _check_period(self) -> "QuasiPolynomial":
        if self.period < 1 or len(self.constituents) != self.period:
            raise ValueError(f"Period {self.period} needs exactly that many constituents, got {len(self.constituents)}")
        return self

    @classmethod
    def polynomial(cls, coefficients: Sequence[Any]) -> "QuasiPolynomial":
        """Period-1 quasi-polynomial."""
        return cls(period=1, constituents=[coefficients])

    @classmethod
    def zero(cls) -> "QuasiPolynomial":
        return cls(period=1, constituents=[()])

    @classmethod
    def from_document(cls, document: Union[QuasiPolynomialDocument, dict]) -> "QuasiPolynomial":
        if isinstance(document, dict):
            document = QuasiPolynomialDocument.model_validate(document)
        return cls(period=document.period, constituents=document.constituents)

    def to_document(self) -> QuasiPolynomialDocument:
        return QuasiPolynomialDocument(period=self.period,
                                       constituents=[p.to_strings() for p in self.constituents])

    def constituent_for(self, n: int) -> RationalPolynomial:
        return self.constituents[(n - 1) % self.period]

    def __call__(self, n: int) -> Fraction:
        return self.constituent_for(n)(n)

    @property
    def degree(self) -> int:
        """Largest constituent degree; -1 for the zero quasi-polynomial."""
        return max(p.degree for p in self.constituents)

    @property
    def is_zero(self) -> bool:
        return all(p.is_zero for p in self.constituents)

    def minimal_period(self) -> "QuasiPolynomial":
        """Same function with the smallest period dividing the current one."""
        for p in range(1, self.period + 1):
            if self.period % p:
                continue
            if all(self.constituents[i] == self.constituents[i % p] for i in range(self.period)):
                return QuasiPolynomial(period=p, constituents=self.constituents[:p])
        return self

    def __str__(self) -> str:
        if self.period == 1:
            return str(self.constituents[0])
        parts = [f"[n={j + 1} mod {self.period}] {p}" for j, p in enumerate(self.constituents)]
        return "; ".join(parts)


def evaluate(f: QuasiPolynomial, n: int) -> Fraction:
    """f(n) under the residue convention."""
    return f(n)


def fit(samples: Sequence[Tuple[int, Any]], period: int, degree: int) -> QuasiPolynomial:
    """
    Interpolate a quasi-polynomial through samples, one residue class at a time.

    Args:
        samples: (n, value) pairs.
        period: Period l of the result.
        degree: Degree bound d for every constituent.

    Returns:
        The unique quasi-polynomial of period l and degree <= d through the samples.

    Raises:
        InsufficientSamples: If a residue class has fewer than d + 1 distinct samples.
        InconsistentSamples: If some residue class does not lie on a degree-d polynomial.
    """
    by_residue: Dict[int, Dict[int, Fraction]] = defaultdict(dict)
    for n, value in samples:
        value = to_rational(value)
        bucket = by_residue[(n - 1) % period]
        if n in bucket and bucket[n] != value:
            raise InconsistentSamples(f"Two different values at n={n}")
        bucket[n] = value

    constituents = []
    for j in range(period):
        points = sorted(by_residue.get(j, {}).items())
        if len(points) < degree + 1:
            raise InsufficientSamples(
                f"Residue {j + 1} mod {period} has {len(points)} samples, needs {degree + 1}")
        head = points[:degree + 1]
        A = RationalMatrix.from_rows([[Fraction(n) ** k for k in range(degree + 1)] for n, _ in head],
                                     cols=degree + 1)
        solution = solve_rational(A, [v for _, v in head])
        poly = RationalPolynomial(coefficients=solution.particular)
        for n, v in points[degree + 1:]:
            if poly(n) != v:
                raise InconsistentSamples(
                    f"Residue {j + 1} mod {period}: sample at n={n} is off the degree-{degree} interpolant")
        constituents.append(poly)
    logger.debug(f"Fitted period {period}, degree {degree} quasi-polynomial from {len(samples)} samples")
    return QuasiPolynomial(period=period, constituents=constituents)


def index(f: QuasiPolynomial) -> int:
    """Smallest residue j whose constituent is not identically zero; 0 for f = 0."""
    reduced = f.minimal_period()
    for j, p in enumerate(reduced.constituents):
        if not p.is_zero:
            return j + 1
    return 0


def shift(f: QuasiPolynomial, s: int) -> QuasiPolynomial:
    """g with g(n) = f(n + s)."""
    if s == 0:
        return f
    l = f.period
    return QuasiPolynomial(period=l, constituents=[f.constituents[(j + s) % l].shift(s) for j in range(l)])


def _positive_on_naturals(p: RationalPolynomial) -> bool:
    """True iff p(n) > 0 for every integer n >= 1."""
    lead = p.leading_coefficient
    if lead <= 0:
        return False
    bound = 1 + max((abs(c / lead) for c in p.coefficients[:-1]), default=Fraction(0))
    return all(p(n) > 0 for n in range(1, ceil(bound) + 1))


def is_strictly_saturated(f: QuasiPolynomial) -> bool:
    """Every constituent is identically zero or positive at every n >= 1."""
    return all(p.is_zero or _positive_on_naturals(p) for p in f.constituents)


def is_positive(f: QuasiPolynomial) -> bool:
    """Every coefficient of every constituent is nonnegative."""
    return all(c >= 0 for p in f.constituents for c in p.coefficients)


def saturation_index(f: QuasiPolynomial, cap: int) -> int:
    """
    Smallest shift s <= cap such that f(n + s) is strictly saturated.

    Raises:
        CapExceeded: If no shift up to cap works.
    """
    for s in range(cap + 1):
        if is_strictly_saturated(shift(f, s)):
            return s
    raise CapExceeded(f"No saturating shift up to {cap}", cap=cap)


def positivity_index(f: QuasiPolynomial, cap: int) -> int:
    """
    Smallest shift s <= cap such that f(n + s) has only nonnegative coefficients.

    Raises:
        CapExceeded: If no shift up to cap works.
    """
    for s in range(cap + 1):
        if is_positive(shift(f, s)):
            return s
    raise CapExceeded(f"No positive shift up to {cap}", cap=cap)


def generating_function(f: QuasiPolynomial) -> RationalFunction:
    """Sum of f(n) t^n over n >= 0, in canonical form."""
    d = f.degree
    if d < 0:
        return RationalFunction(numerator=RationalPolynomial(), denominator=RationalPolynomial.constant(1))
    l = f.period
    horizon = l * (d + 1)
    denominator = one_minus_t_power(l) ** (d + 1)
    series = RationalPolynomial(coefficients=[f(n) for n in range(horizon)])
    numerator = (denominator * series).truncate(horizon)
    return RationalFunction(numerator=numerator, denominator=denominator)


class PositiveForm(BaseModel):
    """h(t) / prod (1 - t^a)^mult with h_0 = 1 and h_i >= 0."""
    model_config = ConfigDict(frozen=True)

    numerator_h: Tuple[int, ...]
    denominator_factors: Tuple[Tuple[int, int], ...]

    @model_validator(mode="after")
    def _check(self) -> "PositiveForm":
        if not self.numerator_h or self.numerator_h[0] != 1:
            raise ValueError("Positive form needs h_0 = 1")
        if any(h < 0 for h in self.numerator_h):
            raise ValueError("Positive form needs nonnegative h_i")
        if any(a < 1 or m < 1 for a, m in self.denominator_factors):
            raise ValueError("Denominator factors must be positive")
        return self

    @property
    def modular_index(self) -> int:
        return max((a for a, _ in self.denominator_factors), default=0)

    @property
    def has_unit_factor(self) -> bool:
        return any(a == 1 for a, _ in self.denominator_factors)

    def to_rational_function(self) -> RationalFunction:
        return RationalFunction.from_factors(self.numerator_h, self.denominator_factors)

    def to_document(self) -> PositiveFormDocument:
        return PositiveFormDocument(h=list(self.numerator_h),
                                    den=[[a, m] for a, m in self.denominator_factors])

    @classmethod
    def from_document(cls, document: Union[PositiveFormDocument, dict]) -> "PositiveForm":
        if isinstance(document, dict):
            document = PositiveFormDocument.model_validate(document)
        return cls(numerator_h=document.h, denominator_factors=[tuple(p) for p in document.den])

    def __str__(self) -> str:
        den = " ".join(f"(1-t^{a})^{m}" for a, m in self.denominator_factors)
        return f"({' + '.join(f'{h}t^{i}' for i, h in enumerate(self.numerator_h) if h)}) / {den}"


def positive_form_search(F: RationalFunction, degree: int, max_a: int) -> Optional[PositiveForm]:
    """
    First positive form of F in graded-lex order of the denominator multiset.

    Args:
        F: Generating function of a degree-``degree`` quasi-polynomial.
        degree: The quasi-polynomial degree d; the denominator has d + 1 factors.
        max_a: Largest allowed exponent a.

    Returns:
        The PositiveForm, or None if no candidate works.
    """
    if degree < 0:
        return None
    candidates = sorted(combinations_with_replacement(range(1, max_a + 1), degree + 1),
                        key=lambda c: (sum(c), c))
    for exponents in candidates:
        product = RationalPolynomial.constant(1)
        for a in exponents:
            product = product * one_minus_t_power(a)
        h, remainder = (F.numerator * product).divmod(F.denominator)
        if not remainder.is_zero:
            continue
        coeffs = h.coefficients
        if not coeffs or coeffs[0] != 1:
            continue
        if any(c < 0 or c.denominator != 1 for c in coeffs):
            continue
        factors = tuple((a, exponents.count(a)) for a in sorted(set(exponents)))
        logger.debug(f"Positive form found with denominator exponents {exponents}")
        return PositiveForm(numerator_h=tuple(int(c) for c in coeffs), denominator_factors=factors)
    return None


def saturated_by_form(form: Optional[PositiveForm], sat: Optional[int]) -> Optional[bool]:
    """
    Whether a positive form with a (1 - t) factor is matched by saturation index 0.

    None when there is no form or it has no (1 - t) factor. An unknown
    saturation index (cap exceeded) counts as a mismatch.
    """
    if form is None or not form.has_unit_factor:
        return None
    return sat == 0
