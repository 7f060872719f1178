"""
Saturated and positive integer programming.

The Ehrhart index of a rational polytope is read off the Smith normal form
of its affine span; saturated integer programs then reduce to divisibility
by that index. Also hosts LR nonvanishing through hive-polytope emptiness
and the polytope-pair obstruction check.
"""
import logging
import random
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from satpos.combinat import Partition, as_partition, hive_polytope, partitions_of, rational_hive_polytope
from satpos.config import settings
from satpos.errors import (
    CapExceeded,
    DimensionMismatch,
    InconsistentSamples,
    InconsistentSpan,
    InsufficientSamples,
    RelaxationTooSmall,
)
from satpos.exact import lcm, smith_normal_form, to_rational
from satpos.polytope import HPolytope, affine_span, count_lattice_points, dilate, is_empty
from satpos.quasipoly import QuasiPolynomial, fit, index, positivity_index, saturation_index

logger = logging.getLogger(__name__)


def ehrhart_samples(P: HPolytope, N: int) -> List[int]:
    """Lattice-point counts of nP for n = 1..N."""
    return [count_lattice_points(dilate(P, n)) for n in range(1, N + 1)]


def ehrhart_quasipoly(P: HPolytope, period_bound: int, degree_bound: Optional[int] = None) -> QuasiPolynomial:
    """
    Fit the Ehrhart quasi-polynomial from samples n = 1..period_bound * (degree_bound + 2).

    Periods are tried in ascending order up to period_bound.

    Raises:
        InconsistentSamples: If no period up to period_bound fits.
    """
    degree = P.dim if degree_bound is None else degree_bound
    N = period_bound * (degree + 2)
    samples = list(zip(range(1, N + 1), ehrhart_samples(P, N)))
    for period in range(1, period_bound + 1):
        try:
            return fit(samples, period, degree)
        except (InsufficientSamples, InconsistentSamples) as e:
            logger.debug(f"Ehrhart fit with period {period} rejected: {e}")
    raise InconsistentSamples(f"No Ehrhart quasi-polynomial of period <= {period_bound}, degree <= {degree}")


def _transformed_span(P: HPolytope):
    span = affine_span(P)
    if span.C.rows == 0:
        return None, []
    snf = smith_normal_form(span.C)
    return snf, snf.U.apply(list(span.d))


def ehrhart_index(P: HPolytope) -> int:
    """
    Index of the Ehrhart quasi-polynomial of P without counting points.

    Each diagonal equation c z = d of the Smith-transformed affine span is
    reduced to coprime form; the index is the lcm of the reduced c.

    Raises:
        InconsistentSpan: If a zero row of the transformed system has nonzero rhs.
    """
    if is_empty(P):
        return 0
    snf, rhs = _transformed_span(P)
    if snf is None:
        return 1
    result = 1
    for i, value in enumerate(rhs):
        if i < snf.rank:
            c = snf.D[i, i]
            result = lcm(result, c // gcd(c, value))
        elif value != 0:
            raise InconsistentSpan(f"Transformed row {i} reads 0 = {value}")
    logger.debug(f"Ehrhart index {result} from Smith diagonal {snf.diagonal}")
    return result


def affine_span_has_integer_point(P: HPolytope) -> bool:
    """
    True iff the affine span of P contains an integer point.

    Raises:
        EmptyPolytope: If P is empty.
    """
    snf, rhs = _transformed_span(P)
    if snf is None:
        return True
    for i, value in enumerate(rhs):
        if i < snf.rank:
            if value % snf.D[i, i]:
                return False
        elif value != 0:
            return False
    return True


class SaturatedIPInstance(BaseModel):
    """A polytope with a caller-supplied saturation or positivity index estimate."""
    model_config = ConfigDict(frozen=True)

    P: HPolytope
    sie: Optional[int] = None
    pie: Optional[int] = None

    @model_validator(mode="after")
    def _one_estimate(self) -> "SaturatedIPInstance":
        if (self.sie is None) == (self.pie is None):
            raise ValueError("Exactly one of sie and pie must be given")
        if self.estimate < 0:
            raise ValueError("Estimates are nonnegative")
        return self

    @property
    def estimate(self) -> int:
        return self.sie if self.sie is not None else self.pie


def saturated_ip_decide(inst: SaturatedIPInstance, c: int) -> bool:
    """
    Does cP contain an integer point, for c above the supplied estimate?

    Raises:
        RelaxationTooSmall: If c <= the estimate.
    """
    if c <= inst.estimate:
        raise RelaxationTooSmall(f"Relaxation {c} must exceed the estimate {inst.estimate}",
                                  c=c, estimate=inst.estimate)
    idx = ehrhart_index(inst.P)
    return idx != 0 and c % idx == 0


def _as_weight(value) -> Tuple[Fraction, ...]:
    if isinstance(value, str):
        value = as_partition(value).parts
    elif isinstance(value, Partition):
        value = value.parts
    return tuple(to_rational(v) for v in value)


def _is_integral_partition(values: Sequence[Fraction]) -> bool:
    return (all(v.denominator == 1 and v >= 0 for v in values)
            and all(a >= b for a, b in zip(values, values[1:])))


def lr_nonvanishing(alpha, beta, lam, n: Optional[int] = None) -> bool:
    """
    Decide c_{alpha, beta}^lam != 0 by rational emptiness of the hive polytope.

    For rational weight triples this decides membership in the
    Littlewood-Richardson cone instead. A triple with |alpha| + |beta| !=
    |lam| is answered False rather than raised, since its coefficient is 0.

    Raises:
        DimensionMismatch: If a label does not fit a hive of side n.
    """
    labels = [_as_weight(v) for v in (alpha, beta, lam)]
    side = n if n is not None else max(1, max(len(v) for v in labels))
    if all(_is_integral_partition(v) for v in labels):
        a, b, l = (as_partition([int(x) for x in v]) for v in labels)
        if a.size + b.size != l.size:
            return False
        P = hive_polytope(a, b, l, side)
    else:
        if any(len(v) > side for v in labels):
            raise DimensionMismatch(f"Weights do not fit a hive of side {side}")
        totals = [sum(v, Fraction(0)) for v in labels]
        if totals[0] + totals[1] != totals[2]:
            return False
        P = rational_hive_polytope(*labels, side)
    return not is_empty(P)


class Verdict(str, Enum):
    GEOMETRIC = "GEOMETRIC"
    MODULAR = "MODULAR"
    NONE = "NONE"


def robust_obstruction_check(P: HPolytope, Q: HPolytope) -> Verdict:
    """Classify the pair: Q empty with P nonempty, or aff(Q) lattice-free with aff(P) lattice-meeting."""
    p_empty, q_empty = is_empty(P), is_empty(Q)
    if q_empty and not p_empty:
        return Verdict.GEOMETRIC
    if not p_empty and not q_empty:
        if not affine_span_has_integer_point(Q) and affine_span_has_integer_point(P):
            return Verdict.MODULAR
    return Verdict.NONE


class SaturationProfile(BaseModel):
    """Fitted Ehrhart quasi-polynomial with its indices."""
    model_config = ConfigDict(frozen=True)

    quasipolynomial: QuasiPolynomial
    index: int
    ehrhart_index: int
    saturation_index: Optional[int] = None
    positivity_index: Optional[int] = None


def saturation_profile(P: HPolytope, period_bound: int, degree_bound: Optional[int] = None,
                       cap: Optional[int] = None) -> SaturationProfile:
    """True saturation and positivity indices of a small polytope, via its fitted Ehrhart function."""
    cap = settings.saturation_cap if cap is None else cap
    f = ehrhart_quasipoly(P, period_bound, degree_bound)
    try:
        sat = saturation_index(f, cap)
    except CapExceeded:
        sat = None
    try:
        pos = positivity_index(f, cap)
    except CapExceeded:
        pos = None
    return SaturationProfile(quasipolynomial=f, index=index(f), ehrhart_index=ehrhart_index(P),
                             saturation_index=sat, positivity_index=pos)


# ---------------------------------------------------------------------------
# Randomized validation
# ---------------------------------------------------------------------------

def random_polytope(rng: random.Random, max_dim: int = 4, force_equality: Optional[bool] = None) -> HPolytope:
    """
    Random bounded polytope around a random rational point: a small box,
    one or two cuts through the point, and optionally an equality through it.
    """
    dim = rng.randint(1, max_dim)
    point = [Fraction(rng.randint(0, 6), rng.randint(1, 3)) for _ in range(dim)]
    rows = []
    for k in range(dim):
        unit = [0] * dim
        unit[k] = 1
        width = Fraction(rng.randint(1, 3), 2)
        rows.append((unit, "le", point[k] + width))
        rows.append((unit, "ge", point[k] - width))
    for _ in range(rng.randint(1, 2)):
        a = [rng.randint(-5, 5) for _ in range(dim)]
        value = sum((c * x for c, x in zip(a, point)), Fraction(0))
        rows.append((a, "le", value + Fraction(rng.randint(0, 4), rng.randint(1, 3))))
    if force_equality if force_equality is not None else rng.random() < 0.5:
        a = [rng.randint(-5, 5) for _ in range(dim)]
        if any(a):
            value = sum((c * x for c, x in zip(a, point)), Fraction(0))
            rows.append((a, "eq", value))
    return HPolytope.from_rows(dim, rows)


def brute_force_index(samples: Sequence[int]) -> int:
    """gcd of the n (1-based) with a nonzero sample; 0 if every sample vanishes."""
    result = 0
    for n, value in enumerate(samples, start=1):
        if value:
            result = gcd(result, n)
    return result


class IndexCheck(BaseModel):
    """Outcome of comparing the Smith-form index with sampled lattice counts."""
    index: int
    brute_force: int
    determinate: bool
    agrees: Optional[bool] = None
    consistent: bool
    dilation_identity: bool


def check_index(P: HPolytope, N: int) -> IndexCheck:
    """
    Compare ehrhart_index with the counts of nP for n <= N.

    The comparison is determinate when two consecutive multiples of the
    index carry nonzero counts (or when every count vanishes and P is empty).
    Also verifies f_P(n) = 0 off multiples of the index and
    f_P(c m) = f_{cP}(m). ``agrees`` is None for an indeterminate
    comparison; ``consistent`` then only says the sampled gcd is a multiple
    of the index.
    """
    idx = ehrhart_index(P)
    samples = ehrhart_samples(P, N)
    brute = brute_force_index(samples)
    if idx == 0:
        determinate = True
        identity = not any(samples)
    else:
        multiples = [samples[m * idx - 1] for m in range(1, N // idx + 1)]
        determinate = any(a and b for a, b in zip(multiples, multiples[1:]))
        scaled = ehrhart_samples(dilate(P, idx), N // idx)
        identity = (all(v == 0 for n, v in enumerate(samples, start=1) if n % idx)
                    and scaled == multiples)
    agrees = brute == idx if determinate else None
    consistent = brute == idx if determinate else (brute == 0 or brute % idx == 0)
    return IndexCheck(index=idx, brute_force=brute, determinate=determinate, agrees=agrees,
                      consistent=consistent, dilation_identity=identity)


def random_lr_triple(rng: random.Random, max_size: int) -> Tuple[Tuple[int, ...], Tuple[int, ...], Tuple[int, ...]]:
    """
    Random (alpha, beta, lam) with |alpha| + |beta| = |lam| <= max_size;
    lam contains alpha and beta whenever such a lam exists.
    """
    total = rng.randint(1, max_size)
    split = rng.randint(0, total)
    alpha = rng.choice(list(partitions_of(split)))
    beta = rng.choice(list(partitions_of(total - split)))
    shapes = [p for p in partitions_of(total) if p.contains(alpha) and p.contains(beta)]
    lam = rng.choice(shapes or list(partitions_of(total)))
    return alpha.parts, beta.parts, lam.parts
