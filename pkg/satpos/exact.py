"""
Exact arithmetic module.

Integers are Python ints and rationals are ``fractions.Fraction`` values;
nothing in this module ever rounds. On top of those it provides integer and
rational matrices, univariate rational polynomials, rational functions in
canonical form, exact linear solving and the Smith normal form.
"""
import logging
from fractions import Fraction
from math import gcd
from typing import Any, Iterable, List, NamedTuple, Optional, Sequence, Tuple, Union

import sympy
from pydantic import BaseModel, ConfigDict, field_validator, model_validator

logger = logging.getLogger(__name__)

Rational = Fraction
RationalLike = Union[int, str, Fraction]

_T = sympy.Symbol("t")


def to_rational(value: Any) -> Fraction:
    """
    Convert an int, Fraction or "p/q" / "p" string into a Fraction.

    Raises:
        ValueError: If the value cannot be read as an exact rational.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError(f"Not a rational number: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError(f"Not a rational number: {value!r}") from e
    if isinstance(value, sympy.Rational):
        return Fraction(int(value.p), int(value.q))
    raise ValueError(f"Not an exact rational: {value!r}")


def rational_to_str(value: Fraction) -> str:
    """Render a Fraction as "p" or "p/q"."""
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def _to_sympy(value: Fraction) -> sympy.Rational:
    return sympy.Rational(value.numerator, value.denominator)


def lcm(a: int, b: int) -> int:
    """Least common multiple of two nonnegative ints (lcm(0, b) = b)."""
    if a == 0:
        return b
    if b == 0:
        return a
    return a * b // gcd(a, b)


# ---------------------------------------------------------------------------
# Matrices
# ---------------------------------------------------------------------------

class IntMatrix(BaseModel):
    """Integer matrix stored row-major."""
    model_config = ConfigDict(frozen=True)

    rows: int
    cols: int
    entries: Tuple[int, ...]

    @model_validator(mode="after")
    def _check_shape(self) -> "IntMatrix":
        if self.rows < 0 or self.cols < 0 or len(self.entries) != self.rows * self.cols:
            raise ValueError(f"{len(self.entries)} entries do not fill a {self.rows}x{self.cols} matrix")
        return self

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> "IntMatrix":
        """Build a matrix from a list of rows (``cols`` is needed only for zero rows)."""
        rows = [list(r) for r in rows]
        width = len(rows[0]) if rows else (cols or 0)
        if any(len(r) != width for r in rows):
            raise ValueError("Ragged rows")
        return cls(rows=len(rows), cols=width, entries=tuple(int(v) for r in rows for v in r))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls.from_rows([[1 if i == j else 0 for j in range(n)] for i in range(n)], cols=n)

    def to_rows(self) -> List[List[int]]:
        return [list(self.entries[i * self.cols:(i + 1) * self.cols]) for i in range(self.rows)]

    def __getitem__(self, index: Tuple[int, int]) -> int:
        i, j = index
        return self.entries[i * self.cols + j]

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"Cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        a, b = self.to_rows(), other.to_rows()
        product = [[sum(a[i][k] * b[k][j] for k in range(self.cols)) for j in range(other.cols)]
                   for i in range(self.rows)]
        return IntMatrix.from_rows(product, cols=other.cols)

    def apply(self, vector: Sequence[int]) -> List[int]:
        """Matrix-vector product."""
        return [sum(self[i, j] * vector[j] for j in range(self.cols)) for i in range(self.rows)]


class RationalMatrix(BaseModel):
    """Rational matrix stored row-major."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    rows: int
    cols: int
    entries: Tuple[Fraction, ...]

    @field_validator("entries", mode="before")
    @classmethod
    def _rationalize(cls, value: Iterable[Any]) -> Tuple[Fraction, ...]:
        return tuple(to_rational(v) for v in value)

    @model_validator(mode="after")
    def _check_shape(self) -> "RationalMatrix":
        if self.rows < 0 or self.cols < 0 or len(self.entries) != self.rows * self.cols:
            raise ValueError(f"{len(self.entries)} entries do not fill a {self.rows}x{self.cols} matrix")
        return self

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[RationalLike]], cols: Optional[int] = None) -> "RationalMatrix":
        rows = [list(r) for r in rows]
        width = len(rows[0]) if rows else (cols or 0)
        if any(len(r) != width for r in rows):
            raise ValueError("Ragged rows")
        return cls(rows=len(rows), cols=width, entries=[v for r in rows for v in r])

    def to_rows(self) -> List[List[Fraction]]:
        return [list(self.entries[i * self.cols:(i + 1) * self.cols]) for i in range(self.rows)]

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        i, j = index
        return self.entries[i * self.cols + j]

    def apply(self, vector: Sequence[Fraction]) -> List[Fraction]:
        return [sum((self[i, j] * vector[j] for j in range(self.cols)), Fraction(0)) for i in range(self.rows)]


def determinant(matrix: Union[IntMatrix, RationalMatrix]) -> Fraction:
    """Exact determinant of a square matrix."""
    if matrix.rows != matrix.cols:
        raise ValueError("Determinant of a non-square matrix")
    if matrix.rows == 0:
        return Fraction(1)
    rows = [[_to_sympy(to_rational(v)) for v in r] for r in matrix.to_rows()]
    return to_rational(sympy.Matrix(rows).det())


# ---------------------------------------------------------------------------
# Linear systems
# ---------------------------------------------------------------------------

class AffineSolution(NamedTuple):
    """One solution of A x = b plus a basis of the solutions of A x = 0."""
    particular: List[Fraction]
    nullspace_basis: List[List[Fraction]]


def solve_rational(A: RationalMatrix, b: Sequence[RationalLike]) -> Optional[AffineSolution]:
    """
    Solve A x = b exactly.

    Args:
        A: Coefficient matrix.
        b: Right-hand side, one entry per row of A.

    Returns:
        An AffineSolution, or None when the system is inconsistent.
    """
    b = [to_rational(v) for v in b]
    if len(b) != A.rows:
        raise ValueError(f"Right-hand side has {len(b)} entries for {A.rows} rows")
    n = A.cols
    if A.rows == 0:
        unit = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        return AffineSolution([Fraction(0)] * n, unit)

    augmented = sympy.Matrix([[_to_sympy(v) for v in row] + [_to_sympy(rhs)]
                              for row, rhs in zip(A.to_rows(), b)])
    reduced, pivots = augmented.rref()
    if n in pivots:
        return None

    particular = [Fraction(0)] * n
    for r, p in enumerate(pivots):
        particular[p] = to_rational(reduced[r, n])

    basis = []
    for free in (j for j in range(n) if j not in pivots):
        vector = [Fraction(0)] * n
        vector[free] = Fraction(1)
        for r, p in enumerate(pivots):
            vector[p] = -to_rational(reduced[r, free])
        basis.append(vector)
    return AffineSolution(particular, basis)


# ---------------------------------------------------------------------------
# Polynomials and rational functions
# ---------------------------------------------------------------------------

class RationalPolynomial(BaseModel):
    """Univariate polynomial with Fraction coefficients in ascending degree."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    coefficients: Tuple[Fraction, ...] = ()

    @field_validator("coefficients", mode="before")
    @classmethod
    def _canonical(cls, value: Iterable[Any]) -> Tuple[Fraction, ...]:
        coeffs = [to_rational(c) for c in value]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        return tuple(coeffs)

    @classmethod
    def constant(cls, value: RationalLike) -> "RationalPolynomial":
        return cls(coefficients=[value])

    @classmethod
    def monomial(cls, degree: int, coefficient: RationalLike = 1) -> "RationalPolynomial":
        return cls(coefficients=[0] * degree + [coefficient])

    @classmethod
    def from_sympy(cls, poly: sympy.Poly) -> "RationalPolynomial":
        return cls(coefficients=[to_rational(c) for c in reversed(poly.all_coeffs())])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def leading_coefficient(self) -> Fraction:
        return self.coefficients[-1] if self.coefficients else Fraction(0)

    def coefficient(self, degree: int) -> Fraction:
        return self.coefficients[degree] if 0 <= degree < len(self.coefficients) else Fraction(0)

    def __call__(self, x: RationalLike) -> Fraction:
        x = to_rational(x)
        value = Fraction(0)
        for c in reversed(self.coefficients):
            value = value * x + c
        return value

    def __add__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        size = max(len(self.coefficients), len(other.coefficients))
        return RationalPolynomial(coefficients=[self.coefficient(i) + other.coefficient(i) for i in range(size)])

    def __neg__(self) -> "RationalPolynomial":
        return RationalPolynomial(coefficients=[-c for c in self.coefficients])

    def __sub__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        return self + (-other)

    def __mul__(self, other: Union["RationalPolynomial", RationalLike]) -> "RationalPolynomial":
        if not isinstance(other, RationalPolynomial):
            factor = to_rational(other)
            return RationalPolynomial(coefficients=[c * factor for c in self.coefficients])
        if self.is_zero or other.is_zero:
            return RationalPolynomial()
        product = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients):
                    product[i + j] += a * b
        return RationalPolynomial(coefficients=product)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "RationalPolynomial":
        result = RationalPolynomial.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def shift(self, s: RationalLike) -> "RationalPolynomial":
        """Return q with q(n) = p(n + s)."""
        linear = RationalPolynomial(coefficients=[s, 1])
        result = RationalPolynomial()
        for c in reversed(self.coefficients):
            result = result * linear + RationalPolynomial.constant(c)
        return result

    def truncate(self, degree: int) -> "RationalPolynomial":
        """Drop every term of degree >= ``degree``."""
        return RationalPolynomial(coefficients=self.coefficients[:degree])

    def to_sympy(self) -> sympy.Poly:
        desc = [_to_sympy(c) for c in reversed(self.coefficients)] or [sympy.Integer(0)]
        return sympy.Poly.from_list(desc, _T, domain=sympy.QQ)

    def divmod(self, other: "RationalPolynomial") -> Tuple["RationalPolynomial", "RationalPolynomial"]:
        """Euclidean division over Q."""
        if other.is_zero:
            raise ZeroDivisionError("Polynomial division by zero")
        quotient, remainder = self.to_sympy().div(other.to_sympy())
        return RationalPolynomial.from_sympy(quotient), RationalPolynomial.from_sympy(remainder)

    def gcd(self, other: "RationalPolynomial") -> "RationalPolynomial":
        """Monic greatest common divisor (zero if both are zero)."""
        return RationalPolynomial.from_sympy(self.to_sympy().gcd(other.to_sympy()))

    def to_strings(self) -> List[str]:
        return [rational_to_str(c) for c in self.coefficients]

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for k, c in enumerate(self.coefficients):
            if c == 0:
                continue
            coeff = rational_to_str(c)
            terms.append(coeff if k == 0 else f"{coeff}*n" if k == 1 else f"{coeff}*n^{k}")
        return " + ".join(terms)


def one_minus_t_power(a: int) -> RationalPolynomial:
    """The polynomial 1 - t^a."""
    return RationalPolynomial(coefficients=[1] + [0] * (a - 1) + [-1])


class RationalFunction(BaseModel):
    """
    Quotient of two rational polynomials in t.

    Construction always normalizes: common factors are cancelled and the
    denominator is scaled so that its constant term is 1.
    """
    model_config = ConfigDict(frozen=True)

    numerator: RationalPolynomial
    denominator: RationalPolynomial

    @model_validator(mode="before")
    @classmethod
    def _normalize(cls, data: Any) -> Any:
        if not isinstance(data, dict):
            return data
        num = data.get("numerator")
        den = data.get("denominator")
        if not isinstance(num, RationalPolynomial):
            num = RationalPolynomial(coefficients=num or ())
        if not isinstance(den, RationalPolynomial):
            den = RationalPolynomial(coefficients=den or ())
        if den.is_zero:
            raise ValueError("Rational function with zero denominator")
        if num.is_zero:
            return {"numerator": num, "denominator": RationalPolynomial.constant(1)}
        common = num.gcd(den)
        if common.degree > 0:
            num, _ = num.divmod(common)
            den, _ = den.divmod(common)
        head = den.coefficient(0)
        if head == 0:
            raise ValueError("Denominator vanishes at t = 0 after cancellation")
        return {"numerator": num * (1 / head), "denominator": den * (1 / head)}

    @classmethod
    def from_factors(cls, numerator: Sequence[RationalLike],
                     factors: Sequence[Tuple[int, int]]) -> "RationalFunction":
        """Build h(t) / prod (1 - t^a)^mult."""
        denominator = RationalPolynomial.constant(1)
        for a, mult in factors:
            denominator = denominator * one_minus_t_power(a) ** mult
        return cls(numerator=RationalPolynomial(coefficients=numerator), denominator=denominator)

    def __str__(self) -> str:
        return f"({self.numerator}) / ({self.denominator})".replace("n", "t")


def series_coefficients(F: RationalFunction, N: int) -> List[Fraction]:
    """
    Taylor coefficients of F at t = 0.

    Args:
        F: The rational function.
        N: Highest power of t required.

    Returns:
        Coefficients of t^0 .. t^N.
    """
    den = F.denominator.coefficients
    head = den[0]
    coeffs: List[Fraction] = []
    for n in range(N + 1):
        acc = F.numerator.coefficient(n)
        for k in range(1, min(n, len(den) - 1) + 1):
            acc -= den[k] * coeffs[n - k]
        coeffs.append(acc / head)
    return coeffs


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------

class SmithDecomposition(BaseModel):
    """D = U * A * V with U, V unimodular and D diagonal with a divisibility chain."""
    model_config = ConfigDict(frozen=True)

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix
    rank: int

    @property
    def diagonal(self) -> List[int]:
        return [self.D[i, i] for i in range(self.rank)]


def _swap_rows(M: List[List[int]], i: int, j: int) -> None:
    M[i], M[j] = M[j], M[i]


def _swap_cols(M: List[List[int]], i: int, j: int) -> None:
    for row in M:
        row[i], row[j] = row[j], row[i]


def _add_row(M: List[List[int]], target: int, source: int, factor: int) -> None:
    """Row[target] += factor * Row[source]."""
    src = M[source]
    M[target] = [a + factor * b for a, b in zip(M[target], src)]


def _add_col(M: List[List[int]], target: int, source: int, factor: int) -> None:
    """Col[target] += factor * Col[source]."""
    for row in M:
        row[target] += factor * row[source]


def smith_normal_form(A: IntMatrix) -> SmithDecomposition:
    """
    Compute the Smith normal form D = U A V together with the transforms.

    Pivots are chosen with minimal absolute value among the remaining
    nonzero entries; rows and columns are cleared by Euclidean steps.

    Args:
        A: Nonempty integer matrix.

    Returns:
        The SmithDecomposition of A.
    """
    if A.rows == 0 or A.cols == 0:
        raise ValueError("Smith normal form of an empty matrix")

    m, n = A.rows, A.cols
    D = A.to_rows()
    U = IntMatrix.identity(m).to_rows()
    V = IntMatrix.identity(n).to_rows()

    t = 0
    while t < min(m, n):
        candidates = [(abs(D[i][j]), i, j) for i in range(t, m) for j in range(t, n) if D[i][j]]
        if not candidates:
            break
        _, i, j = min(candidates)
        _swap_rows(D, t, i)
        _swap_rows(U, t, i)
        _swap_cols(D, t, j)
        _swap_cols(V, t, j)

        while True:
            pivot = D[t][t]
            for i in range(t + 1, m):
                q = D[i][t] // pivot
                if q:
                    _add_row(D, i, t, -q)
                    _add_row(U, i, t, -q)
            for j in range(t + 1, n):
                q = D[t][j] // pivot
                if q:
                    _add_col(D, j, t, -q)
                    _add_col(V, j, t, -q)

            leftovers = [(abs(D[i][t]), i, "row") for i in range(t + 1, m) if D[i][t]]
            leftovers += [(abs(D[t][j]), j, "col") for j in range(t + 1, n) if D[t][j]]
            if leftovers:
                _, k, kind = min(leftovers)
                if kind == "row":
                    _swap_rows(D, t, k)
                    _swap_rows(U, t, k)
                else:
                    _swap_cols(D, t, k)
                    _swap_cols(V, t, k)
                continue

            # pivot must divide the whole trailing block
            offender = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                             if D[i][j] % pivot), None)
            if offender is None:
                break
            _add_row(D, t, offender[0], 1)
            _add_row(U, t, offender[0], 1)

        if D[t][t] < 0:
            D[t] = [-v for v in D[t]]
            U[t] = [-v for v in U[t]]
        t += 1

    logger.debug(f"Smith normal form of {m}x{n} matrix has rank {t}")
    return SmithDecomposition(
        U=IntMatrix.from_rows(U, cols=m),
        D=IntMatrix.from_rows(D, cols=n),
        V=IntMatrix.from_rows(V, cols=n),
        rank=t,
    )
