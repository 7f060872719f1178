"""
Partitions, tableau counting and characters.

Kostka numbers (two ways), Littlewood-Richardson coefficients and hive
polytopes, symmetric group characters (two ways), Kostant partition
functions, GL_k weight multiplicities and Weyl dimension polynomials.
"""
import logging
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import factorial
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple, Union

import sympy
from pydantic import BaseModel, ConfigDict, field_validator

from satpos.errors import DimensionMismatch, HeightExceedsRank, SizeMismatch
from satpos.exact import RationalLike, RationalPolynomial, to_rational
from satpos.polytope import HPolytope

logger = logging.getLogger(__name__)


class Partition(BaseModel):
    """Weakly decreasing positive parts; zero parts are dropped."""
    model_config = ConfigDict(frozen=True)

    parts: Tuple[int, ...] = ()

    @field_validator("parts", mode="before")
    @classmethod
    def _canonical(cls, value: Any) -> Tuple[int, ...]:
        parts = [int(v) for v in value]
        if any(v < 0 for v in parts):
            raise ValueError(f"Negative part in {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"Parts {parts} are not weakly decreasing")
        return tuple(v for v in parts if v > 0)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Read "87,62" style input; the empty string is the zero partition."""
        text = text.strip()
        if not text:
            return cls()
        return cls(parts=[int(v) for v in text.split(",") if v.strip()])

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def height(self) -> int:
        return len(self.parts)

    def part(self, i: int) -> int:
        """The i-th part (0-based), 0 beyond the height."""
        return self.parts[i] if i < len(self.parts) else 0

    def padded(self, k: int) -> Tuple[int, ...]:
        return self.parts + (0,) * (k - len(self.parts))

    def conjugate(self) -> "Partition":
        return Partition(parts=[sum(1 for p in self.parts if p > i) for i in range(self.part(0))])

    def contains(self, other: "Partition") -> bool:
        """Young diagram of ``other`` fits inside this one."""
        return other.height <= self.height and all(self.parts[i] >= v for i, v in enumerate(other.parts))

    def scaled(self, n: int) -> "Partition":
        return Partition(parts=[n * v for v in self.parts])

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.parts)


class CycleType(Partition):
    """Cycle lengths of a permutation class in S_m."""

    @property
    def multiplicities(self) -> Dict[int, int]:
        counts: Dict[int, int] = {}
        for v in self.parts:
            counts[v] = counts.get(v, 0) + 1
        return counts

    @property
    def centralizer_size(self) -> int:
        z = 1
        for j, i in self.multiplicities.items():
            z *= j ** i * factorial(i)
        return z

    @property
    def class_size(self) -> int:
        return factorial(self.size) // self.centralizer_size


PartitionLike = Union[Partition, str, Sequence[int]]


def as_partition(value: PartitionLike) -> Partition:
    if isinstance(value, Partition):
        return value
    if isinstance(value, str):
        return Partition.parse(value)
    return Partition(parts=value)


def as_cycle_type(value: PartitionLike) -> CycleType:
    if isinstance(value, CycleType):
        return value
    return CycleType(parts=as_partition(value).parts)


def centralizer_size(rho: PartitionLike) -> int:
    """z_rho = prod j^{i_j} i_j!."""
    return as_cycle_type(rho).centralizer_size


def partitions_of(m: int, max_parts: Optional[int] = None, max_part: Optional[int] = None) -> Iterator[Partition]:
    """Partitions of m in reverse lexicographic order, optionally bounded."""
    max_parts = m if max_parts is None else max_parts
    max_part = m if max_part is None else max_part

    def build(remaining: int, cap: int, slots: int) -> Iterator[Tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(cap, remaining), 0, -1):
            if first * slots < remaining:
                break
            for rest in build(remaining - first, first, slots - 1):
                yield (first,) + rest

    for parts in build(m, max_part, max_parts):
        yield Partition(parts=parts)


def compositions(total: int, k: int) -> Iterator[Tuple[int, ...]]:
    """Weak compositions of ``total`` into k parts, lexicographically descending."""
    if k == 0:
        if total == 0:
            yield ()
        return
    for first in range(total, -1, -1):
        for rest in compositions(total - first, k - 1):
            yield (first,) + rest


# ---------------------------------------------------------------------------
# Kostka numbers
# ---------------------------------------------------------------------------

def _strips_removed(shape: Tuple[int, ...], size: int) -> Iterator[Tuple[int, ...]]:
    """Shapes mu with shape / mu a horizontal strip of the given size."""
    k = len(shape)

    def rows(i: int, left: int) -> Iterator[Tuple[int, ...]]:
        if i == k:
            if left == 0:
                yield ()
            return
        floor_ = shape[i + 1] if i + 1 < k else 0
        for v in range(shape[i], floor_ - 1, -1):
            taken = shape[i] - v
            if taken > left:
                break
            for rest in rows(i + 1, left - taken):
                yield (v,) + rest

    for mu in rows(0, size):
        yield tuple(v for v in mu if v > 0)


def kostka(lam: PartitionLike, content: Sequence[int]) -> int:
    """
    Number of semistandard tableaux of shape lam and the given content.

    Peels off the horizontal strip of the largest letter, one letter at a time.
    """
    lam = as_partition(lam)
    content = tuple(int(c) for c in content)
    if any(c < 0 for c in content) or sum(content) != lam.size:
        return 0

    @lru_cache(maxsize=None)
    def count(shape: Tuple[int, ...], letters: int) -> int:
        if letters == 0:
            return 1 if not shape else 0
        if len(shape) > letters:
            return 0
        return sum(count(mu, letters - 1) for mu in _strips_removed(shape, content[letters - 1]))

    return count(lam.parts, len(content))


def kostka_bounded_height(pi: PartitionLike, content: Sequence[int]) -> int:
    """
    Kostka number for GL_4 by counting Gelfand-Tsetlin patterns.

    With the top row pi and row sums fixed by the content, the pattern has
    the free entries x1, x2 (third row) and y1 (second row); y1 ranges over
    an interval counted in closed form.
    """
    pi = as_partition(pi)
    if pi.height > 4 or len(content) > 4:
        raise ValueError("Gelfand-Tsetlin counting needs height and content length at most 4")
    c = list(content) + [0] * (4 - len(content))
    if any(v < 0 for v in c) or sum(c) != pi.size:
        return 0
    p1, p2, p3, p4 = pi.padded(4)
    s1 = c[0]
    s2 = s1 + c[1]
    s3 = s2 + c[2]

    total = 0
    for x1 in range(p2, p1 + 1):
        for x2 in range(max(p3, s3 - x1 - p3), min(p2, s3 - x1 - p4) + 1):
            x3 = s3 - x1 - x2
            low = max(x2, s2 - x2, s1, s2 - s1)
            high = min(x1, s2 - x3)
            if high >= low:
                total += high - low + 1
    return total


# ---------------------------------------------------------------------------
# Littlewood-Richardson coefficients and hives
# ---------------------------------------------------------------------------

def lr_coefficient(alpha: PartitionLike, beta: PartitionLike, lam: PartitionLike) -> int:
    """Count LR skew tableaux of shape lam / alpha and content beta."""
    alpha, beta, lam = as_partition(alpha), as_partition(beta), as_partition(lam)
    if alpha.size + beta.size != lam.size or not lam.contains(alpha):
        return 0
    if beta.size == 0:
        return 1
    letters = beta.height
    target = beta.parts
    h = lam.height

    def fill_row(i: int, above: List[int], counts: List[int]) -> int:
        if i == h:
            return 1 if tuple(counts) == target else 0
        start, end = alpha.part(i), lam.part(i)
        prev_start = alpha.part(i - 1) if i > 0 else None
        total = 0
        row: List[int] = []

        def place(j: int, low: int) -> None:
            nonlocal total
            if j == end:
                row_counts = [0] * letters
                for v in row:
                    row_counts[v - 1] += 1
                new_counts = [a + b for a, b in zip(counts, row_counts)]
                if any(n > t for n, t in zip(new_counts, target)):
                    return
                # lattice condition after reading this row right to left
                for k in range(letters - 1):
                    if counts[k + 1] + row_counts[k + 1] > counts[k]:
                        return
                total += fill_row(i + 1, [0] * start + row, new_counts)
                return
            bound = low
            if prev_start is not None and j >= prev_start:
                bound = max(bound, above[j] + 1)
            for v in range(bound, min(letters, i + 1) + 1):
                row.append(v)
                place(j + 1, v)
                row.pop()

        place(start, 1)
        return total

    return fill_row(0, [], [0] * letters)


def _hive(alpha: Sequence[Fraction], beta: Sequence[Fraction], lam: Sequence[Fraction], n: int) -> HPolytope:
    """
    Hive of side n. Vertex (r, c), 0 <= c <= r <= n; the left edge carries the
    partial sums of alpha, the bottom edge |alpha| plus partial sums of beta,
    the right edge partial sums of lam. Interior vertices are the variables.
    """
    fixed: Dict[Tuple[int, int], Fraction] = {}
    acc = Fraction(0)
    fixed[(0, 0)] = acc
    for r in range(1, n + 1):
        acc += alpha[r - 1]
        fixed[(r, 0)] = acc
    for c in range(1, n + 1):
        acc += beta[c - 1]
        fixed[(n, c)] = acc
    acc = Fraction(0)
    for r in range(1, n + 1):
        acc += lam[r - 1]
        if (r, r) in fixed and fixed[(r, r)] != acc:
            raise DimensionMismatch("Hive boundary does not close: |alpha| + |beta| != |lambda|")
        fixed[(r, r)] = acc

    interior = [(r, c) for r in range(n + 1) for c in range(1, r) if r < n]
    position = {v: k for k, v in enumerate(interior)}

    rows = []

    def rhombus(obtuse: Sequence[Tuple[int, int]], acute: Sequence[Tuple[int, int]]) -> None:
        # obtuse sum >= acute sum, written as (acute - obtuse) . x <= constants
        coeffs = [Fraction(0)] * len(interior)
        rhs = Fraction(0)
        for v, sign in [(o, -1) for o in obtuse] + [(a, 1) for a in acute]:
            if v in position:
                coeffs[position[v]] += sign
            else:
                rhs -= sign * fixed[v]
        rows.append((coeffs, "le", rhs))

    for r in range(1, n):
        for c in range(0, r):
            rhombus([(r, c), (r, c + 1)], [(r - 1, c), (r + 1, c + 1)])
    for r in range(1, n):
        for c in range(1, r + 1):
            rhombus([(r, c), (r + 1, c)], [(r, c - 1), (r + 1, c + 1)])
    for r in range(0, n):
        for c in range(0, r):
            rhombus([(r, c), (r + 1, c + 1)], [(r + 1, c), (r, c + 1)])
    return HPolytope.from_rows(len(interior), rows)


def hive_polytope(alpha: PartitionLike, beta: PartitionLike, lam: PartitionLike, n: int) -> HPolytope:
    """
    Hive polytope whose integer points count c_{alpha, beta}^lam.

    Raises:
        DimensionMismatch: If a partition is taller than n or the sizes do not add up.
    """
    alpha, beta, lam = as_partition(alpha), as_partition(beta), as_partition(lam)
    if max(alpha.height, beta.height, lam.height) > n:
        raise DimensionMismatch(f"Partitions do not fit a hive of side {n}")
    if alpha.size + beta.size != lam.size:
        raise DimensionMismatch("|alpha| + |beta| != |lambda|")
    return _hive([Fraction(v) for v in alpha.padded(n)], [Fraction(v) for v in beta.padded(n)],
                 [Fraction(v) for v in lam.padded(n)], n)


def rational_hive_polytope(alpha: Sequence[RationalLike], beta: Sequence[RationalLike],
                           lam: Sequence[RationalLike], n: int) -> HPolytope:
    """Hive polytope for rational weight triples (entries padded with zeros to n)."""
    triple = []
    for weight in (alpha, beta, lam):
        if len(weight) > n:
            raise DimensionMismatch(f"Weight of length {len(weight)} does not fit a hive of side {n}")
        triple.append([to_rational(v) for v in weight] + [Fraction(0)] * (n - len(weight)))
    if sum(triple[0]) + sum(triple[1]) != sum(triple[2]):
        raise DimensionMismatch("|alpha| + |beta| != |lambda|")
    return _hive(*triple, n)


# ---------------------------------------------------------------------------
# Symmetric group characters
# ---------------------------------------------------------------------------

def murnaghan_nakayama(parts: Tuple[int, ...], rho: Tuple[int, ...], memo: Dict) -> int:
    if not rho:
        return 1 if not parts else 0
    key = (parts, rho)
    if key in memo:
        return memo[key]
    r, rest = rho[0], rho[1:]
    k = len(parts)
    beta = [parts[i] + k - 1 - i for i in range(k)]
    taken = set(beta)
    total = 0
    for b in beta:
        t = b - r
        if t < 0 or t in taken:
            continue
        sign = -1 if sum(1 for x in beta if t < x < b) % 2 else 1
        moved = sorted((t if x == b else x for x in beta), reverse=True)
        smaller = tuple(v for v in (moved[i] - (k - 1 - i) for i in range(k)) if v > 0)
        total += sign * murnaghan_nakayama(smaller, rest, memo)
    memo[key] = total
    return total


def sn_character(lam: PartitionLike, rho: PartitionLike) -> int:
    """
    Character of the irreducible S_m representation lam on the class rho.

    Raises:
        SizeMismatch: If |lam| != |rho|.
    """
    lam, rho = as_partition(lam), as_cycle_type(rho)
    if lam.size != rho.size:
        raise SizeMismatch(f"|{lam}| != |{rho}|", sizes=[lam.size, rho.size])
    return murnaghan_nakayama(lam.parts, rho.parts, {})


def character_table(m: int) -> Dict[Tuple[Tuple[int, ...], Tuple[int, ...]], int]:
    """All characters of S_m keyed by (lambda parts, rho parts)."""
    memo: Dict = {}
    classes = [p.parts for p in partitions_of(m)]
    return {(lam, rho): murnaghan_nakayama(lam, rho, memo) for lam in classes for rho in classes}


def permutation_sign(perm: Sequence[int]) -> int:
    inversions = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


def frobenius_character(lam: PartitionLike, rho: PartitionLike) -> int:
    """
    Character value as the coefficient of x^l in Delta(x) * prod_j p_{rho_j}(x),
    with l_i = lam_i + k - i and Delta the Vandermonde product.

    Raises:
        SizeMismatch: If |lam| != |rho|.
    """
    lam, rho = as_partition(lam), as_cycle_type(rho)
    if lam.size != rho.size:
        raise SizeMismatch(f"|{lam}| != |{rho}|", sizes=[lam.size, rho.size])
    k = max(lam.height, 1)
    xs = sympy.symbols(f"x0:{k}")
    product = sympy.Poly(1, *xs)
    for r in rho.parts:
        product = product * sympy.Poly(sum(x ** r for x in xs), *xs)
    coeffs = product.as_dict()

    target = [lam.part(i) + k - 1 - i for i in range(k)]
    total = 0
    for perm in permutations(range(k)):
        exponent = tuple(target[i] - (k - 1 - perm[i]) for i in range(k))
        if min(exponent) < 0:
            continue
        value = coeffs.get(exponent)
        if value:
            total += permutation_sign(perm) * int(value)
    return total


# ---------------------------------------------------------------------------
# Kostant partition function and weight multiplicities
# ---------------------------------------------------------------------------

def positive_roots(rank: int) -> List[Tuple[int, ...]]:
    """Positive roots of A_rank in simple-root coordinates."""
    roots = []
    for i in range(rank):
        for j in range(i, rank):
            roots.append(tuple(1 if i <= k <= j else 0 for k in range(rank)))
    return roots


def kostant_partition(rank: int, weight: Sequence[int]) -> int:
    """Number of ways to write ``weight`` as a sum of positive roots of A_rank."""
    weight = tuple(int(v) for v in weight)
    if len(weight) != rank:
        raise ValueError(f"Weight has {len(weight)} coordinates, rank is {rank}")
    if any(v < 0 for v in weight):
        return 0
    roots = positive_roots(rank)

    @lru_cache(maxsize=None)
    def ways(index: int, remaining: Tuple[int, ...]) -> int:
        if index == len(roots):
            return 1 if not any(remaining) else 0
        root = roots[index]
        total = 0
        current = remaining
        while all(v >= 0 for v in current):
            total += ways(index + 1, current)
            current = tuple(v - a for v, a in zip(current, root))
        return total

    return ways(0, weight)


def semistandard_contents(shape: PartitionLike, k: int) -> Dict[Tuple[int, ...], int]:
    """Contents of the semistandard tableaux of the shape in k letters, with counts."""
    shape = as_partition(shape)
    result = {}
    if shape.height > k:
        return result
    for content in compositions(shape.size, k):
        count = kostka(shape, content)
        if count:
            result[content] = count
    return result


def weight_multiplicity(lam: PartitionLike, weight: Sequence[int], method: str = "kostka") -> int:
    """
    Multiplicity of ``weight`` in V_lam(GL_k), k = len(weight).

    Args:
        lam: Highest weight.
        weight: Weight vector.
        method: "kostka" (tableau count) or "kostant" (alternating sum of
            Kostant partition functions over the Weyl group).
    """
    lam = as_partition(lam)
    k = len(weight)
    if lam.height > k or sum(weight) != lam.size or any(v < 0 for v in weight):
        return 0
    if method == "kostka":
        return kostka(lam, weight)
    if method != "kostant":
        raise ValueError(f"Unknown weight multiplicity method {method!r}")

    shifted = [lam.part(i) + k - 1 - i for i in range(k)]
    target = [weight[i] + k - 1 - i for i in range(k)]
    total = 0
    for perm in permutations(range(k)):
        diff = [shifted[perm[i]] - target[i] for i in range(k)]
        coords, acc = [], 0
        for v in diff[:-1]:
            acc += v
            coords.append(acc)
        if k > 1 and all(c >= 0 for c in coords):
            total += permutation_sign(perm) * kostant_partition(k - 1, coords)
        elif k == 1:
            total += 1 if diff[0] == 0 else 0
    return total


def weyl_dim_poly(k: int, lam: PartitionLike) -> RationalPolynomial:
    """
    p(n) = dim V_{n lam}(GL_k) by the Weyl product formula.

    Raises:
        HeightExceedsRank: If lam has more than k parts.
    """
    lam = as_partition(lam)
    if lam.height > k:
        raise HeightExceedsRank(f"Partition {lam} has more than {k} parts")
    parts = lam.padded(k)
    result = RationalPolynomial.constant(1)
    for i in range(k):
        for j in range(i + 1, k):
            gap = j - i
            result = result * RationalPolynomial(coefficients=[1, Fraction(parts[i] - parts[j], gap)])
    return result


def weyl_dimension(k: int, lam: PartitionLike) -> int:
    """dim V_lam(GL_k)."""
    return int(weyl_dim_poly(k, lam)(1))
