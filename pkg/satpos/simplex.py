"""
Exact two-phase simplex over Fractions.

Variables are free; the problem is brought to standard form by splitting
each variable into a difference of two nonnegative ones and adding slacks.
Bland's rule (smallest eligible index for both entering and leaving
variables) guarantees termination on degenerate problems.
"""
import logging
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict

logger = logging.getLogger(__name__)

LinearRow = Tuple[Sequence[Fraction], Fraction]


class LPStatus(str, Enum):
    OPTIMAL = "optimal"
    UNBOUNDED = "unbounded"
    INFEASIBLE = "infeasible"


class LPResult(BaseModel):
    """Outcome of an exact LP solve."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    status: LPStatus
    value: Optional[Fraction] = None
    point: Optional[Tuple[Fraction, ...]] = None


class SimplexTableau:
    """
    Dense tableau with an objective row kept in the last position.

    Each constraint row holds the coefficients of every column followed by
    its right-hand side. ``basis[i]`` is the column basic in row i.
    """

    def __init__(self, rows: List[List[Fraction]], basis: List[int], columns: int):
        self.rows = rows
        self.basis = basis
        self.columns = columns
        self.objective: List[Fraction] = [Fraction(0)] * (columns + 1)
        self.pivots = 0

    def set_objective(self, costs: Sequence[Fraction]) -> None:
        """Install ``maximize costs · z`` and price out the current basis."""
        obj = [-c for c in costs] + [Fraction(0)]
        for row, b in zip(self.rows, self.basis):
            factor = obj[b]
            if factor:
                obj = [o - factor * v for o, v in zip(obj, row)]
        self.objective = obj

    def pivot(self, i: int, j: int) -> None:
        row = self.rows[i]
        piv = row[j]
        if piv != 1:
            row = [v / piv for v in row]
            self.rows[i] = row
        for k, other in enumerate(self.rows):
            if k != i:
                f = other[j]
                if f:
                    self.rows[k] = [a - f * b for a, b in zip(other, row)]
        f = self.objective[j]
        if f:
            self.objective = [a - f * b for a, b in zip(self.objective, row)]
        self.basis[i] = j
        self.pivots += 1

    def bland_step(self, allowed: int) -> str:
        """One Bland's-rule pivot among the first ``allowed`` columns."""
        entering = next((j for j in range(allowed) if self.objective[j] < 0), None)
        if entering is None:
            return "optimal"
        best = None
        for i, row in enumerate(self.rows):
            a = row[entering]
            if a > 0:
                key = (row[-1] / a, self.basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            return "unbounded"
        self.pivot(best[1], entering)
        return "go_on"

    def run(self, allowed: int) -> str:
        while True:
            status = self.bland_step(allowed)
            if status != "go_on":
                return status

    def value_of(self, column: int) -> Fraction:
        for row, b in zip(self.rows, self.basis):
            if b == column:
                return row[-1]
        return Fraction(0)


def maximize(
    objective: Sequence[Fraction],
    le_rows: Sequence[LinearRow] = (),
    eq_rows: Sequence[LinearRow] = (),
) -> LPResult:
    """
    Maximize ``objective · x`` over free x subject to the given rows.

    Args:
        objective: Cost vector; its length fixes the dimension.
        le_rows: Rows (a, b) meaning a · x <= b.
        eq_rows: Rows (a, b) meaning a · x = b.

    Returns:
        LPResult with status, optimal value and an optimal point.
    """
    n = len(objective)
    n_le = len(le_rows)
    # columns: x+ (n), x- (n), slacks (n_le), artificials (appended as needed)
    structural = 2 * n + n_le

    raw: List[Tuple[List[Fraction], Fraction, Optional[int]]] = []
    for k, (a, b) in enumerate(le_rows):
        coeffs = [Fraction(v) for v in a] + [-Fraction(v) for v in a] + [Fraction(0)] * n_le
        coeffs[2 * n + k] = Fraction(1)
        raw.append((coeffs, Fraction(b), 2 * n + k))
    for a, b in eq_rows:
        coeffs = [Fraction(v) for v in a] + [-Fraction(v) for v in a] + [Fraction(0)] * n_le
        raw.append((coeffs, Fraction(b), None))

    needs_artificial = []
    for idx, (coeffs, rhs, slack) in enumerate(raw):
        if rhs < 0:
            raw[idx] = ([-v for v in coeffs], -rhs, None)
            needs_artificial.append(idx)
        elif slack is None:
            needs_artificial.append(idx)

    columns = structural + len(needs_artificial)
    rows: List[List[Fraction]] = []
    basis: List[int] = []
    art_of = {row_idx: structural + k for k, row_idx in enumerate(needs_artificial)}
    for idx, (coeffs, rhs, slack) in enumerate(raw):
        full = coeffs + [Fraction(0)] * len(needs_artificial) + [rhs]
        if idx in art_of:
            full[art_of[idx]] = Fraction(1)
            basis.append(art_of[idx])
        else:
            basis.append(slack)
        rows.append(full)

    tableau = SimplexTableau(rows, basis, columns)

    if needs_artificial:
        phase_one = [Fraction(0)] * structural + [Fraction(-1)] * len(needs_artificial)
        tableau.set_objective(phase_one)
        tableau.run(columns)
        if tableau.objective[-1] < 0:
            logger.debug(f"LP infeasible after {tableau.pivots} pivots")
            return LPResult(status=LPStatus.INFEASIBLE)
        _drive_out_artificials(tableau, structural)

    tableau.set_objective([Fraction(c) for c in objective] + [-Fraction(c) for c in objective]
                          + [Fraction(0)] * (columns - 2 * n))
    status = tableau.run(structural)
    if status == "unbounded":
        logger.debug(f"LP unbounded after {tableau.pivots} pivots")
        return LPResult(status=LPStatus.UNBOUNDED)

    point = tuple(tableau.value_of(k) - tableau.value_of(n + k) for k in range(n))
    value = sum((Fraction(c) * x for c, x in zip(objective, point)), Fraction(0))
    logger.debug(f"LP optimal value {value} after {tableau.pivots} pivots")
    return LPResult(status=LPStatus.OPTIMAL, value=value, point=point)


def _drive_out_artificials(tableau: SimplexTableau, structural: int) -> None:
    """Pivot zero-valued artificials out of the basis; drop redundant rows."""
    i = 0
    while i < len(tableau.rows):
        if tableau.basis[i] >= structural:
            row = tableau.rows[i]
            j = next((j for j in range(structural) if row[j] != 0), None)
            if j is None:
                del tableau.rows[i]
                del tableau.basis[i]
                continue
            tableau.pivot(i, j)
        i += 1


def feasible(le_rows: Sequence[LinearRow], eq_rows: Sequence[LinearRow], dim: int) -> bool:
    """True iff the system has a rational solution."""
    return maximize([Fraction(0)] * dim, le_rows, eq_rows).status != LPStatus.INFEASIBLE
