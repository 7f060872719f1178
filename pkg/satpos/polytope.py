"""
Rational polytopes in H-representation.

Rows are a · x (rel) b with rel one of LE (<=), LT (<) or EQ (=). Emptiness,
implicit equalities and bounding boxes are settled with the exact simplex
engine; lattice points are enumerated by recursive interval tightening
inside the bounding box.
"""
import logging
from enum import Enum
from fractions import Fraction
from math import ceil, floor, gcd
from typing import Any, Iterator, List, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from satpos import simplex
from satpos.errors import EmptyPolytope, Unbounded
from satpos.exact import IntMatrix, RationalLike, lcm, rational_to_str, to_rational
from satpos.models import PolytopeDocument, RowDocument

logger = logging.getLogger(__name__)


class Relation(str, Enum):
    LE = "le"
    LT = "lt"
    EQ = "eq"


class Row(BaseModel):
    """a · x (rel) b."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    coeffs: Tuple[Fraction, ...]
    rel: Relation
    rhs: Fraction

    @field_validator("coeffs", mode="before")
    @classmethod
    def _coeffs(cls, value: Any) -> Tuple[Fraction, ...]:
        return tuple(to_rational(v) for v in value)

    @field_validator("rhs", mode="before")
    @classmethod
    def _rhs(cls, value: Any) -> Fraction:
        return to_rational(value)

    def value(self, x: Sequence[Fraction]) -> Fraction:
        return sum((a * v for a, v in zip(self.coeffs, x)), Fraction(0))

    def holds(self, x: Sequence[Fraction]) -> bool:
        lhs = self.value(x)
        if self.rel == Relation.LE:
            return lhs <= self.rhs
        if self.rel == Relation.LT:
            return lhs < self.rhs
        return lhs == self.rhs


class HPolytope(BaseModel):
    """Rational polytope {x in Q^dim : every row holds}."""
    model_config = ConfigDict(frozen=True)

    dim: int
    rows: Tuple[Row, ...] = ()

    @model_validator(mode="after")
    def _check_rows(self) -> "HPolytope":
        if self.dim < 0:
            raise ValueError("Negative dimension")
        for row in self.rows:
            if len(row.coeffs) != self.dim:
                raise ValueError(f"Row has {len(row.coeffs)} coefficients, expected {self.dim}")
        return self

    @classmethod
    def from_rows(cls, dim: int, rows: Sequence[Tuple[Sequence[RationalLike], str, RationalLike]]) -> "HPolytope":
        """Build from (coeffs, rel, rhs) triples with rel in {"le", "lt", "eq", "ge", "gt"}."""
        built = []
        for coeffs, rel, rhs in rows:
            rel = rel.lower()
            if rel in ("ge", "gt"):
                coeffs = [-to_rational(c) for c in coeffs]
                rhs = -to_rational(rhs)
                rel = "le" if rel == "ge" else "lt"
            built.append(Row(coeffs=coeffs, rel=Relation(rel), rhs=rhs))
        return cls(dim=dim, rows=tuple(built))

    @classmethod
    def box(cls, lo: Sequence[RationalLike], hi: Sequence[RationalLike]) -> "HPolytope":
        """Axis-parallel box lo <= x <= hi."""
        dim = len(lo)
        rows = []
        for k in range(dim):
            unit = [0] * dim
            unit[k] = 1
            rows.append((unit, "le", hi[k]))
            rows.append((unit, "ge", lo[k]))
        return cls.from_rows(dim, rows)

    @classmethod
    def from_document(cls, document: Union[PolytopeDocument, dict]) -> "HPolytope":
        if isinstance(document, dict):
            document = PolytopeDocument.model_validate(document)
        return cls(dim=document.dim, rows=tuple(
            Row(coeffs=r.a, rel=Relation(r.rel), rhs=r.b) for r in document.rows))

    def to_document(self) -> PolytopeDocument:
        return PolytopeDocument(dim=self.dim, rows=[
            RowDocument(a=[rational_to_str(c) for c in r.coeffs], rel=r.rel.value, b=rational_to_str(r.rhs))
            for r in self.rows])

    def closure_rows(self) -> Tuple[List[simplex.LinearRow], List[simplex.LinearRow]]:
        """LE rows (strict rows relaxed) and EQ rows for the LP engine."""
        le = [(r.coeffs, r.rhs) for r in self.rows if r.rel != Relation.EQ]
        eq = [(r.coeffs, r.rhs) for r in self.rows if r.rel == Relation.EQ]
        return le, eq


def contains(P: HPolytope, x: Sequence[RationalLike]) -> bool:
    """True iff x satisfies every row of P."""
    if len(x) != P.dim:
        raise ValueError(f"Point has {len(x)} coordinates, polytope dimension is {P.dim}")
    point = [to_rational(v) for v in x]
    return all(row.holds(point) for row in P.rows)


def dilate(P: HPolytope, n: int) -> HPolytope:
    """The dilation nP: every right-hand side multiplied by n."""
    if n < 1:
        raise ValueError(f"Dilation factor must be positive, got {n}")
    return HPolytope(dim=P.dim, rows=tuple(
        Row(coeffs=r.coeffs, rel=r.rel, rhs=r.rhs * n) for r in P.rows))


def maximize(P: HPolytope, objective: Sequence[RationalLike]) -> simplex.LPResult:
    """Exact LP over the closure of P (strict rows relaxed)."""
    le, eq = P.closure_rows()
    return simplex.maximize([to_rational(c) for c in objective], le, eq)


def is_empty(P: HPolytope) -> bool:
    """True iff P contains no rational point."""
    le, eq = P.closure_rows()
    if not simplex.feasible(le, eq, P.dim):
        return True
    strict = [r for r in P.rows if r.rel == Relation.LT]
    if not strict:
        return False

    # maximize eps subject to a.x + eps <= b on strict rows, eps <= 1
    rows_le = []
    for r in P.rows:
        if r.rel == Relation.LE:
            rows_le.append((list(r.coeffs) + [Fraction(0)], r.rhs))
        elif r.rel == Relation.LT:
            rows_le.append((list(r.coeffs) + [Fraction(1)], r.rhs))
    rows_le.append(([Fraction(0)] * P.dim + [Fraction(1)], Fraction(1)))
    rows_eq = [(list(c) + [Fraction(0)], b) for c, b in eq]
    result = simplex.maximize([Fraction(0)] * P.dim + [Fraction(1)], rows_le, rows_eq)
    return result.value is None or result.value <= 0


class AffineSpan(BaseModel):
    """Integral system C x = d cutting out the affine span of a polytope."""
    model_config = ConfigDict(frozen=True)

    C: IntMatrix
    d: Tuple[int, ...]


def integerize(coeffs: Sequence[Fraction], rhs: Fraction) -> Tuple[List[int], int]:
    """Scale a rational row to coprime integers (gcd taken together with the rhs)."""
    denom = 1
    for v in list(coeffs) + [rhs]:
        denom = lcm(denom, v.denominator)
    ints = [int(v * denom) for v in coeffs]
    b = int(rhs * denom)
    g = 0
    for v in ints + [b]:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
        b //= g
    return ints, b


def affine_span(P: HPolytope) -> AffineSpan:
    """
    Compute the implicit equalities of P.

    EQ rows are kept; an inequality row joins the system when its minimum
    over P equals its right-hand side.

    Raises:
        EmptyPolytope: If P is empty.
    """
    if is_empty(P):
        raise EmptyPolytope("Affine span of an empty polytope")
    le, eq = P.closure_rows()
    equalities: List[Tuple[Sequence[Fraction], Fraction]] = []
    for row in P.rows:
        if row.rel == Relation.EQ:
            equalities.append((row.coeffs, row.rhs))
        elif row.rel == Relation.LE:
            result = simplex.maximize([-c for c in row.coeffs], le, eq)
            if result.status == simplex.LPStatus.OPTIMAL and -result.value == row.rhs:
                equalities.append((row.coeffs, row.rhs))

    seen = set()
    C: List[List[int]] = []
    d: List[int] = []
    for coeffs, rhs in equalities:
        ints, b = integerize(coeffs, rhs)
        lead = next((v for v in ints if v), 0)
        if lead == 0:
            continue
        if lead < 0:
            ints, b = [-v for v in ints], -b
        key = (tuple(ints), b)
        if key not in seen:
            seen.add(key)
            C.append(ints)
            d.append(b)
    logger.debug(f"Affine span has {len(C)} implicit equalities in dimension {P.dim}")
    return AffineSpan(C=IntMatrix.from_rows(C, cols=P.dim), d=tuple(d))


def bounding_box(P: HPolytope) -> Tuple[List[Fraction], List[Fraction]]:
    """
    Coordinate-wise exact minima and maxima over P.

    Raises:
        EmptyPolytope: If P is empty.
        Unbounded: If some coordinate is unbounded.
    """
    if is_empty(P):
        raise EmptyPolytope("Bounding box of an empty polytope")
    lo, hi = [], []
    for k in range(P.dim):
        unit = [Fraction(int(i == k)) for i in range(P.dim)]
        top = maximize(P, unit)
        bottom = maximize(P, [-v for v in unit])
        if top.status == simplex.LPStatus.UNBOUNDED or bottom.status == simplex.LPStatus.UNBOUNDED:
            raise Unbounded(f"Coordinate {k} is unbounded")
        hi.append(top.value)
        lo.append(-bottom.value)
    return lo, hi


class _IntegerSystem:
    """Integer rows A x <= B equivalent to P on the integer lattice, plus the integral box."""

    def __init__(self, P: HPolytope, lo: List[int], hi: List[int]):
        self.dim = P.dim
        self.lo = lo
        self.hi = hi
        self.rows: List[Tuple[List[int], int]] = []
        self.infeasible = False
        for row in P.rows:
            ints, b = integerize(row.coeffs, row.rhs)
            g = 0
            for v in ints:
                g = gcd(g, v)
            if g == 0:
                if not row.holds([Fraction(0)] * P.dim):
                    self.infeasible = True
                continue
            if row.rel == Relation.EQ:
                if b % g:
                    self.infeasible = True
                    continue
                self.rows.append((ints, b))
                self.rows.append(([-v for v in ints], -b))
            else:
                bound = b - 1 if row.rel == Relation.LT else b
                self.rows.append(([v // g for v in ints], bound // g))

        # rest_min[r][k]: smallest contribution of coordinates k.. of row r over the box
        self.rest_min = []
        for a, _ in self.rows:
            suffix = [0] * (self.dim + 1)
            for k in range(self.dim - 1, -1, -1):
                suffix[k] = suffix[k + 1] + min(a[k] * lo[k], a[k] * hi[k])
            self.rest_min.append(suffix)

    def interval(self, k: int, partial: List[int]) -> Optional[Tuple[int, int]]:
        """Feasible range of coordinate k given the partial row sums of coordinates < k."""
        low, high = self.lo[k], self.hi[k]
        for r, (a, b) in enumerate(self.rows):
            slack = b - partial[r] - self.rest_min[r][k + 1]
            coef = a[k]
            if coef > 0:
                high = min(high, slack // coef)
            elif coef < 0:
                low = max(low, -(slack // -coef))
            elif slack < 0:
                return None
            if low > high:
                return None
        return low, high


def _integral_box(P: HPolytope) -> Optional[Tuple[List[int], List[int]]]:
    if is_empty(P):
        return None
    lo, hi = bounding_box(P)
    ilo = [ceil(v) for v in lo]
    ihi = [floor(v) for v in hi]
    if any(a > b for a, b in zip(ilo, ihi)):
        return None
    return ilo, ihi


def _walk(system: _IntegerSystem, k: int, partial: List[int], prefix: List[int]) -> Iterator[List[int]]:
    bounds = system.interval(k, partial)
    if bounds is None:
        return
    for v in range(bounds[0], bounds[1] + 1):
        if k == system.dim - 1:
            yield prefix + [v]
        else:
            nxt = [p + a[k] * v for p, (a, _) in zip(partial, system.rows)]
            yield from _walk(system, k + 1, nxt, prefix + [v])


def _count(system: _IntegerSystem, k: int, partial: List[int]) -> int:
    bounds = system.interval(k, partial)
    if bounds is None:
        return 0
    if k == system.dim - 1:
        return bounds[1] - bounds[0] + 1
    total = 0
    for v in range(bounds[0], bounds[1] + 1):
        total += _count(system, k + 1, [p + a[k] * v for p, (a, _) in zip(partial, system.rows)])
    return total


def _prepare(P: HPolytope) -> Optional[_IntegerSystem]:
    box = _integral_box(P)
    if box is None:
        return None
    system = _IntegerSystem(P, *box)
    return None if system.infeasible else system


def lattice_points(P: HPolytope) -> List[Tuple[int, ...]]:
    """
    All integer points of P in lexicographic order.

    Raises:
        Unbounded: If P is nonempty and unbounded.
    """
    if P.dim == 0:
        return [()] if contains(P, []) else []
    system = _prepare(P)
    if system is None:
        return []
    points = [tuple(p) for p in _walk(system, 0, [0] * len(system.rows), [])]
    logger.debug(f"Enumerated {len(points)} lattice points in dimension {P.dim}")
    return points


def count_lattice_points(P: HPolytope) -> int:
    """Number of integer points of P, without materialising them."""
    if P.dim == 0:
        return 1 if contains(P, []) else 0
    system = _prepare(P)
    if system is None:
        return 0
    return _count(system, 0, [0] * len(system.rows))
