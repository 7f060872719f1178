"""
Structural constants of representation theory and their stretching functions.

Kronecker coefficients are available three ways (character inner products,
two-row Weyl-group inclusion-exclusion over Gelfand-Tsetlin counts, and
Klimyk's branching formula), plethysm constants two ways (power-sum
substitution, Weyl substitution with an inverse Kostka change of basis).
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from enum import Enum
from fractions import Fraction
from functools import partial
from itertools import permutations
from math import lcm
from typing import Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from satpos.combinat import (
    Partition,
    PartitionLike,
    as_partition,
    centralizer_size,
    compositions,
    kostka,
    kostka_bounded_height,
    lr_coefficient,
    murnaghan_nakayama,
    partitions_of,
    permutation_sign,
    semistandard_contents,
)
from satpos.config import settings
from satpos.errors import (
    CapExceeded,
    HeightViolation,
    InconsistentSamples,
    InsufficientHorizon,
    InsufficientSamples,
    SizeGuardExceeded,
    SizeMismatch,
    UnsupportedEmbedding,
)
from satpos.exact import RationalFunction
from satpos.quasipoly import (
    PositiveForm,
    QuasiPolynomial,
    fit,
    generating_function,
    index,
    positive_form_search,
    positivity_index,
    saturated_by_form,
    saturation_index,
)

logger = logging.getLogger(__name__)


class SchurExpansion(BaseModel):
    """Integer combination of Schur functions keyed by partition parts."""
    model_config = ConfigDict(frozen=True)

    terms: Dict[Tuple[int, ...], int] = Field(default_factory=dict)

    @field_validator("terms", mode="before")
    @classmethod
    def _drop_zeros(cls, value: Dict) -> Dict[Tuple[int, ...], int]:
        return {tuple(k.parts if isinstance(k, Partition) else k): int(v) for k, v in value.items() if v}

    def coefficient(self, pi: PartitionLike) -> int:
        return self.terms.get(as_partition(pi).parts, 0)

    def truncated(self, height: int) -> "SchurExpansion":
        """Terms whose partition has at most ``height`` parts."""
        return SchurExpansion(terms={k: v for k, v in self.terms.items() if len(k) <= height})

    def to_rows(self) -> List[Dict[str, object]]:
        return [{"partition": ",".join(map(str, k)), "coefficient": v}
                for k, v in sorted(self.terms.items(), reverse=True)]


# ---------------------------------------------------------------------------
# Kronecker coefficients
# ---------------------------------------------------------------------------

def kronecker_char(lam: PartitionLike, mu: PartitionLike, pi: PartitionLike,
                   guard: Optional[int] = None) -> int:
    """
    g(lam, mu, pi) as the inner product of S_m characters.

    Raises:
        SizeMismatch: If the three sizes differ.
        SizeGuardExceeded: If m is above the guard.
    """
    lam, mu, pi = as_partition(lam), as_partition(mu), as_partition(pi)
    m = lam.size
    if mu.size != m or pi.size != m:
        raise SizeMismatch(f"Sizes {lam.size}, {mu.size}, {pi.size} differ", sizes=[lam.size, mu.size, pi.size])
    guard = settings.kronecker_char_max_size if guard is None else guard
    if m > guard:
        raise SizeGuardExceeded(f"Character sum over S_{m} exceeds guard {guard}", size=m, guard=guard)
    memo: Dict = {}
    total = Fraction(0)
    for rho in partitions_of(m):
        value = (murnaghan_nakayama(lam.parts, rho.parts, memo)
                 * murnaghan_nakayama(mu.parts, rho.parts, memo)
                 * murnaghan_nakayama(pi.parts, rho.parts, memo))
        if value:
            total += Fraction(value, centralizer_size(rho))
    return int(total)


def _restricted_weight_count(pi: Partition, p: Tuple[int, int], q: Tuple[int, int]) -> int:
    """Dimension of the GL_2 x GL_2 weight space (p, q) inside V_pi(GL_4)."""
    if min(p) < 0 or min(q) < 0:
        return 0
    total = 0
    for t in range(max(0, q[0] - p[1]), min(p[0], q[0]) + 1):
        total += kostka_bounded_height(pi, (t, p[0] - t, q[0] - t, p[1] - q[0] + t))
    return total


def kronecker_two_row(lam: PartitionLike, mu: PartitionLike, pi: PartitionLike) -> int:
    """
    g(lam, mu, pi) for two-row lam, mu as the multiplicity of V_lam x V_mu in
    V_pi(GL_4) restricted to GL_2 x GL_2.

    Raises:
        HeightViolation: If lam or mu has more than 2 parts or pi more than 4.
        SizeMismatch: If the sizes differ.
    """
    lam, mu, pi = as_partition(lam), as_partition(mu), as_partition(pi)
    if lam.height > 2 or mu.height > 2 or pi.height > 4:
        raise HeightViolation("Two-row Kronecker needs heights (2, 2, 4)")
    if mu.size != lam.size or pi.size != lam.size:
        raise SizeMismatch(f"Sizes {lam.size}, {mu.size}, {pi.size} differ", sizes=[lam.size, mu.size, pi.size])
    l1, l2 = lam.padded(2)
    m1, m2 = mu.padded(2)
    total = 0
    for sl, p in ((1, (l1, l2)), (-1, (l1 + 1, l2 - 1))):
        for sm, q in ((1, (m1, m2)), (-1, (m1 + 1, m2 - 1))):
            total += sl * sm * _restricted_weight_count(pi, p, q)
    return total


class TensorEmbedding(BaseModel):
    """GL_a x GL_b inside GL_ab acting on C^a (x) C^b; basis e_ij has index i * b + j."""
    model_config = ConfigDict(frozen=True)

    a: int = Field(..., ge=1)
    b: int = Field(..., ge=1)

    @property
    def rank(self) -> int:
        return self.a * self.b

    def restrict(self, weight: Sequence[int]) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        rows = tuple(sum(weight[i * self.b + j] for j in range(self.b)) for i in range(self.a))
        cols = tuple(sum(weight[i * self.b + j] for i in range(self.a)) for j in range(self.b))
        return rows, cols


def klimyk_branching(m: int, restriction: TensorEmbedding, lam: PartitionLike,
                     pi_pair: Tuple[PartitionLike, PartitionLike]) -> int:
    """
    Multiplicity of V_pi1 x V_pi2 in V_lam(GL_m) restricted to GL_a x GL_b.

    The restricted weight multiplicities are accumulated from the Kostka
    numbers of the weights that actually occur in V_lam, then an alternating
    sum over the Weyl group of GL_a x GL_b extracts the multiplicity.

    Raises:
        UnsupportedEmbedding: Unless the restriction is a tensor embedding with ab = m.
    """
    if not isinstance(restriction, TensorEmbedding) or restriction.rank != m:
        raise UnsupportedEmbedding(f"Only GL_a x GL_b inside GL_ab is supported (m = {m})")
    lam = as_partition(lam)
    first, second = as_partition(pi_pair[0]), as_partition(pi_pair[1])
    a, b = restriction.a, restriction.b
    if lam.height > m or first.height > a or second.height > b:
        raise HeightViolation("Labels too tall for the embedding")
    if first.size != lam.size or second.size != lam.size:
        return 0

    restricted: Dict[Tuple[Tuple[int, ...], Tuple[int, ...]], int] = {}
    for content in compositions(lam.size, m):
        count = kostka(lam, content)
        if count:
            key = restriction.restrict(content)
            restricted[key] = restricted.get(key, 0) + count

    rho_a = [a - 1 - i for i in range(a)]
    rho_b = [b - 1 - i for i in range(b)]
    nu_a, nu_b = first.padded(a), second.padded(b)
    total = 0
    for wa in permutations(range(a)):
        shift_a = tuple(nu_a[i] + rho_a[i] - rho_a[wa[i]] for i in range(a))
        for wb in permutations(range(b)):
            shift_b = tuple(nu_b[i] + rho_b[i] - rho_b[wb[i]] for i in range(b))
            value = restricted.get((shift_a, shift_b), 0)
            if value:
                total += permutation_sign(wa) * permutation_sign(wb) * value
    return total


# ---------------------------------------------------------------------------
# Plethysm
# ---------------------------------------------------------------------------

PowerSum = Dict[Tuple[int, ...], Fraction]


def _schur_to_power_sum(lam: Partition, memo: Dict) -> PowerSum:
    """s_lam = sum_rho chi^lam(rho) / z_rho p_rho."""
    result: PowerSum = {}
    for rho in partitions_of(lam.size):
        chi = murnaghan_nakayama(lam.parts, rho.parts, memo)
        if chi:
            result[rho.parts] = Fraction(chi, centralizer_size(rho))
    return result


def _multiply(left: PowerSum, right: PowerSum) -> PowerSum:
    product: PowerSum = {}
    for p, a in left.items():
        for q, b in right.items():
            key = tuple(sorted(p + q, reverse=True))
            product[key] = product.get(key, Fraction(0)) + a * b
    return product


def _check_guard(lam: Partition, mu: Partition, guard: Optional[int]) -> None:
    guard = settings.plethysm_max_size if guard is None else guard
    if lam.size * mu.size > guard:
        raise SizeGuardExceeded(f"|lam| * |mu| = {lam.size * mu.size} exceeds guard {guard}",
                                size=lam.size * mu.size, guard=guard)


def plethysm_p_basis(lam: PartitionLike, mu: PartitionLike, guard: Optional[int] = None) -> SchurExpansion:
    """
    Schur expansion of s_lam[s_mu] through the power-sum basis, using
    p_k[s_mu] = sum_sigma chi^mu(sigma) / z_sigma p_{k sigma}.

    Raises:
        SizeGuardExceeded: If |lam| * |mu| is above the guard.
    """
    lam, mu = as_partition(lam), as_partition(mu)
    _check_guard(lam, mu, guard)
    memo: Dict = {}
    inner = _schur_to_power_sum(mu, memo)
    stretched: Dict[int, PowerSum] = {}
    for k in range(1, lam.size + 1):
        stretched[k] = {tuple(k * v for v in sigma): c for sigma, c in inner.items()}

    expansion: PowerSum = {}
    for rho, coeff in _schur_to_power_sum(lam, memo).items():
        term: PowerSum = {(): coeff}
        for k in rho:
            term = _multiply(term, stretched[k])
        for key, value in term.items():
            expansion[key] = expansion.get(key, Fraction(0)) + value

    total = lam.size * mu.size
    terms = {}
    for pi in partitions_of(total):
        value = sum((c * murnaghan_nakayama(pi.parts, nu, memo) for nu, c in expansion.items()), Fraction(0))
        if value:
            terms[pi.parts] = int(value)
    return SchurExpansion(terms=terms)


def plethysm_weyl_substitution(lam: PartitionLike, mu: PartitionLike, k: int,
                               guard: Optional[int] = None) -> SchurExpansion:
    """
    Schur expansion of s_lam[s_mu] in k variables.

    The monomials of the semistandard tableaux of shape mu are substituted
    for the variables of s_lam; the resulting symmetric polynomial is read
    off on dominant monomials and converted to the Schur basis with the
    inverse Kostka matrix. Only partitions with at most k parts appear.
    """
    lam, mu = as_partition(lam), as_partition(mu)
    _check_guard(lam, mu, guard)
    letters: List[Tuple[int, ...]] = []
    for content, count in semistandard_contents(mu, k).items():
        letters.extend([content] * count)

    # states: shape nu inside lam -> {t exponent vector: coefficient}
    zero = (0,) * k
    states: Dict[Tuple[int, ...], Dict[Tuple[int, ...], int]] = {(): {zero: 1}}
    for letter in letters:
        nxt: Dict[Tuple[int, ...], Dict[Tuple[int, ...], int]] = {}
        for shape, poly in states.items():
            for grown in _strips_added(shape, lam.parts):
                s = sum(grown) - sum(shape)
                bucket = nxt.setdefault(grown, {})
                for exp, c in poly.items():
                    key = tuple(e + s * v for e, v in zip(exp, letter)) if s else exp
                    bucket[key] = bucket.get(key, 0) + c
        states = nxt
    final = states.get(lam.parts, {})

    total = lam.size * mu.size
    dominant = [p for p in partitions_of(total, max_parts=k)]
    terms: Dict[Tuple[int, ...], int] = {}
    for nu in dominant:
        value = final.get(nu.padded(k), 0)
        for pi, a in terms.items():
            value -= a * kostka(Partition(parts=pi), nu.padded(k))
        if value:
            terms[nu.parts] = value
    return SchurExpansion(terms=terms)


def _strips_added(inner: Tuple[int, ...], outer: Tuple[int, ...]) -> List[Tuple[int, ...]]:
    """Shapes grown from ``inner`` by a horizontal strip (possibly empty) inside ``outer``."""
    h = len(outer)
    inner = inner + (0,) * (h - len(inner))
    results: List[Tuple[int, ...]] = []

    def rows(i: int, acc: Tuple[int, ...]) -> None:
        if i == h:
            results.append(tuple(v for v in acc if v > 0))
            return
        ceiling = outer[i] if i == 0 else min(outer[i], inner[i - 1])
        for v in range(inner[i], ceiling + 1):
            rows(i + 1, acc + (v,))

    rows(0, ())
    return results


# ---------------------------------------------------------------------------
# Hilbert functions
# ---------------------------------------------------------------------------

def partition_counts(k: int, N: int) -> List[int]:
    """Number of partitions of n into at most k parts, n = 0..N."""
    counts = [1] + [0] * N
    for part in range(1, k + 1):
        for n in range(part, N + 1):
            counts[n] += counts[n - part]
    return counts


def syminv_hilbert(k: int, N: int) -> QuasiPolynomial:
    """
    Hilbert function of the symmetric invariants in k variables: partitions
    of n into at most k parts, fitted with period lcm(1..k) and degree k - 1.

    Raises:
        InsufficientHorizon: If N < lcm(1..k) * k.
    """
    if k < 1:
        raise ValueError("k must be positive")
    period = lcm(*range(1, k + 1))
    if N < period * k:
        raise InsufficientHorizon(f"Horizon {N} too short: need at least {period * k} samples",
                                  horizon=N, needed=period * k)
    counts = partition_counts(k, N)
    return fit([(n, counts[n]) for n in range(1, N + 1)], period, k - 1)


def gp_dimension(k: int, lam: Partition) -> int:
    """dim V_lam(GL_k) as a sum of weight multiplicities."""
    if lam.height > k:
        return 0
    count = kostka_bounded_height if k <= 4 else kostka
    return sum(count(lam, content) for content in compositions(lam.size, k))


def gp_hilbert(k: int, lam: PartitionLike, N: int) -> QuasiPolynomial:
    """
    Hilbert polynomial of G/P_lam for G = GL_k from weight-space dimensions
    of V_{n lam}, n = 1..N.

    Raises:
        InsufficientHorizon: If N does not cover the degree k(k-1)/2 plus one.
    """
    lam = as_partition(lam)
    degree = k * (k - 1) // 2
    if N < degree + 1:
        raise InsufficientHorizon(f"Horizon {N} too short for degree {degree}", horizon=N, needed=degree + 1)
    samples = [(n, gp_dimension(k, lam.scaled(n))) for n in range(1, N + 1)]
    return fit(samples, 1, degree)


# ---------------------------------------------------------------------------
# Stretching functions
# ---------------------------------------------------------------------------

class StretchKind(str, Enum):
    LR = "lr"
    KRONECKER2ROW = "kronecker2row"
    PLETHYSM = "plethysm"
    SYMINV = "syminv"
    GP_HILBERT = "gp_hilbert"


_LABEL_COUNT = {
    StretchKind.LR: 3,
    StretchKind.KRONECKER2ROW: 3,
    StretchKind.PLETHYSM: 3,
    StretchKind.SYMINV: 0,
    StretchKind.GP_HILBERT: 1,
}


class StretchSpec(BaseModel):
    """
    A stretching function n -> f(n lam, ...) and its fitting bounds.

    Labels: LR (alpha, beta, lam); KRONECKER2ROW (lam, mu, pi);
    PLETHYSM (lam, mu, pi) with mu not stretched; SYMINV none (uses k);
    GP_HILBERT (lam) with k.
    """
    model_config = ConfigDict(frozen=True)

    kind: StretchKind
    labels: Tuple[Partition, ...] = ()
    k: Optional[int] = None
    horizon: int = Field(default_factory=lambda: settings.stretch_horizon, ge=1)
    period_bound: int = Field(default_factory=lambda: settings.stretch_period_bound, ge=1)
    degree_bound: int = Field(default_factory=lambda: settings.stretch_degree_bound, ge=0)

    @field_validator("labels", mode="before")
    @classmethod
    def _labels(cls, value: Sequence) -> Tuple[Partition, ...]:
        return tuple(as_partition(v) for v in value)

    @model_validator(mode="after")
    def _check(self) -> "StretchSpec":
        if len(self.labels) != _LABEL_COUNT[self.kind]:
            raise ValueError(f"{self.kind.value} needs {_LABEL_COUNT[self.kind]} partitions")
        if self.kind in (StretchKind.SYMINV, StretchKind.GP_HILBERT) and not self.k:
            raise ValueError(f"{self.kind.value} needs k")
        return self


def stretch_sample(spec: StretchSpec, n: int) -> int:
    """f(n) for the stretching function described by spec."""
    if spec.kind == StretchKind.LR:
        alpha, beta, lam = (p.scaled(n) for p in spec.labels)
        return lr_coefficient(alpha, beta, lam)
    if spec.kind == StretchKind.KRONECKER2ROW:
        lam, mu, pi = (p.scaled(n) for p in spec.labels)
        return kronecker_two_row(lam, mu, pi)
    if spec.kind == StretchKind.PLETHYSM:
        lam, mu, pi = spec.labels
        return plethysm_p_basis(lam.scaled(n), mu).coefficient(pi.scaled(n))
    if spec.kind == StretchKind.SYMINV:
        return partition_counts(spec.k, n)[n]
    return gp_dimension(spec.k, spec.labels[0].scaled(n))


class StretchResult(BaseModel):
    """Samples, fitted quasi-polynomial and derived invariants of a stretching function."""
    model_config = ConfigDict(frozen=True)

    samples: Tuple[Tuple[int, int], ...]
    quasipolynomial: QuasiPolynomial
    generating_function: RationalFunction
    positive_form: Optional[PositiveForm] = None
    index: int
    saturation_index: Optional[int] = None
    positivity_index: Optional[int] = None
    saturated_by_form: Optional[bool] = None


def stretching_quasipolynomial(spec: StretchSpec, threads: Optional[int] = None,
                               cap: Optional[int] = None) -> StretchResult:
    """
    Sample a stretching function at n = 1..horizon, fit the smallest period
    up to period_bound, and derive its generating function, positive form and
    index, saturation index and positivity index.

    Raises:
        InconsistentSamples: If no period up to period_bound fits.
    """
    threads = settings.stretch_workers if threads is None else threads
    cap = settings.saturation_cap if cap is None else cap
    ns = list(range(1, spec.horizon + 1))
    logger.info(f"Sampling {spec.kind.value} stretching function at n = 1..{spec.horizon} with {threads} worker(s)")
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            values = list(pool.map(partial(stretch_sample, spec), ns))
    else:
        values = [stretch_sample(spec, n) for n in ns]
    samples = tuple(zip(ns, values))
    logger.debug(f"Samples: {samples}")

    fitted = None
    for period in range(1, spec.period_bound + 1):
        try:
            fitted = fit(samples, period, spec.degree_bound)
            break
        except (InsufficientSamples, InconsistentSamples) as e:
            logger.debug(f"Period {period} rejected: {e}")
    if fitted is None:
        raise InconsistentSamples(
            f"No quasi-polynomial of period <= {spec.period_bound} and degree <= {spec.degree_bound} fits")
    logger.info(f"Fitted period {fitted.period}, degree {fitted.degree}: {fitted}")

    F = generating_function(fitted)
    form = positive_form_search(F, fitted.degree, spec.period_bound)
    try:
        sat = saturation_index(fitted, cap)
    except CapExceeded:
        logger.warning(f"Saturation index exceeds cap {cap}")
        sat = None
    try:
        pos = positivity_index(fitted, cap)
    except CapExceeded:
        logger.warning(f"Positivity index exceeds cap {cap}")
        pos = None
    consistent = saturated_by_form(form, sat)
    if consistent is False:
        logger.warning(f"Positive form {form} has a (1 - t) factor but the saturation index is {sat}")
    return StretchResult(samples=samples, quasipolynomial=fitted, generating_function=F,
                         positive_form=form, index=index(fitted),
                         saturation_index=sat, positivity_index=pos, saturated_by_form=consistent)
