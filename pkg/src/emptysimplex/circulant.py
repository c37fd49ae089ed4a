"""The circulant simplex family S(d, m) and general circulant simplices.

S(d, m) is the convex hull of the d+1 cyclic shifts of the generator
(1, m, 0, ..., 0, -m), a d-simplex in the hyperplane sum(x) = 1. For even d
its width is exactly 2m, and it is empty precisely while m^(d-1) < c_(d-1),
where c_k are the continuant numbers c_k = c_(k-1) + m^2 c_(k-2). All
emptiness and threshold decisions here are exact integer comparisons;
floating point appears only in the hyperbolic cross-check of the threshold.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .arith import gcd_vec
from .cyclic import CyclicSimplex, new_cyclic
from .errors import (
    BadFactor,
    BadParameters,
    BudgetExceeded,
    DegenerateGenerator,
    NotCyclic,
    ValidationFailed,
    VerifyBudgetExceeded,
)
from .width import WidthCertificate, embedded_width_at_most

_DET_CROSSCHECK_MAX_D = 12
_ADJUGATE_CHECK_MAX_D = 12
_GCD_CHECK_MAX_D = 20
_POINT_BUDGET = 10**8


# ---------------------------------------------------------------------------
# continuants


@dataclass(frozen=True)
class ContinuantTable:
    """Continuant values c_(-1), c_0, ..., c_K at one integer m."""

    m: int
    values: tuple[int, ...]  # values[k + 1] == c_k

    def __getitem__(self, k: int) -> int:
        if k < -1:
            raise IndexError(k)
        return self.values[k + 1]

    @property
    def top_index(self) -> int:
        return len(self.values) - 2


def continuants(K: int, m: int) -> ContinuantTable:
    """Table of c_k for k = -1..K via the two-term recursion."""
    if K < 0:
        raise BadParameters("K must be >= 0")
    vals = [0, 1]  # c_(-1), c_0
    for _ in range(K):
        vals.append(vals[-1] + m * m * vals[-2])
    return ContinuantTable(m, tuple(vals))


def continuant_binomial(k: int, m: int) -> int:
    """c_k as the closed binomial sum; independent cross-check of the recursion."""
    if k == -1:
        return 0
    return sum(math.comb(k - i, i) * m ** (2 * i) for i in range(k // 2 + 1))


def fibonacci_poly(h: int, x):
    """Fibonacci polynomial F_h evaluated at x (exact for int/Fraction x).

    F_h(x) = sum_j C(h-1-j, j) x^(h-1-2j); satisfies c_k(m) = m^k F_(k+1)(1/m)
    and F_(2n)(2 sinh z) = sinh(2nz)/cosh(z).
    """
    if h < 1:
        raise BadParameters("h must be >= 1")
    return sum(math.comb(h - 1 - j, j) * x ** (h - 1 - 2 * j) for j in range((h - 1) // 2 + 1))


# ---------------------------------------------------------------------------
# exact linear algebra helpers


def bareiss_determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Exact integer determinant by fraction-free elimination."""
    a = [list(row) for row in matrix]
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def exact_adjugate(matrix: Sequence[Sequence[int]]) -> list[list[int]]:
    """det(M) * M^(-1) with exact rational elimination; entries are integers."""
    n = len(matrix)
    det = bareiss_determinant(matrix)
    if det == 0:
        raise DegenerateGenerator("matrix is singular")
    frac = [[Fraction(x) for x in row] for row in matrix]
    inv = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if frac[r][col] != 0)
        frac[col], frac[piv] = frac[piv], frac[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        scale = frac[col][col]
        frac[col] = [x / scale for x in frac[col]]
        inv[col] = [x / scale for x in inv[col]]
        for r in range(n):
            if r != col and frac[r][col] != 0:
                factor = frac[r][col]
                frac[r] = [x - factor * y for x, y in zip(frac[r], frac[col])]
                inv[r] = [x - factor * y for x, y in zip(inv[r], inv[col])]
    adj = [[x * det for x in row] for row in inv]
    out = []
    for row in adj:
        assert all(x.denominator == 1 for x in row)
        out.append([int(x) for x in row])
    return out


def _circulant_columns(v: Sequence[int]) -> list[list[int]]:
    """Matrix whose column i is the i-th cyclic right shift of v."""
    n = len(v)
    return [[v[(i - j) % n] for j in range(n)] for i in range(n)]


# ---------------------------------------------------------------------------
# the S(d, m) family


def circulant_generator(d: int, m: int) -> tuple[int, ...]:
    if d < 2:
        raise BadParameters("d must be >= 2")
    return (1, m) + (0,) * (d - 2) + (-m,)


def vertex_matrix(d: int, m: int) -> list[list[int]]:
    """The (d+1)x(d+1) circulant vertex matrix of S(d, m).

    Diagonal 1, subdiagonal m, superdiagonal -m, corners m (top-right) and
    -m (bottom-left); column i is the i-th shift of (1, m, 0, ..., 0, -m).
    """
    return _circulant_columns(circulant_generator(d, m))


def vertices(d: int, m: int) -> list[tuple[int, ...]]:
    mat = vertex_matrix(d, m)
    n = d + 1
    return [tuple(mat[i][j] for i in range(n)) for j in range(n)]


def volume(d: int, m: int) -> int:
    """Normalized volume of S(d, m) for even d, as an exact integer.

    Computed from the cycle-matching binomial sum and cross-checked against
    c_d + 2 m^2 c_(d-1) always, and against the exact determinant for small d.
    """
    if d % 2 != 0 or d < 2:
        raise BadParameters("closed form requires even d >= 2")
    total = sum(
        (d + 1) * math.comb(d + 1 - i, i) // (d + 1 - i) * m ** (2 * i)
        for i in range(d // 2 + 1)
    )
    table = continuants(d, m)
    assert total == table[d] + 2 * m * m * table[d - 1]
    if d <= _DET_CROSSCHECK_MAX_D:
        assert total == bareiss_determinant(vertex_matrix(d, m))
    return total


def general_circulant_volume(v: Sequence[int]) -> int:
    """|det / sum(v)| for the circulant simplex with generator v."""
    s = sum(v)
    if s == 0:
        raise DegenerateGenerator("generator entries sum to zero")
    det = bareiss_determinant(_circulant_columns(v))
    if det == 0:
        raise DegenerateGenerator("circulant shifts are affinely dependent")
    assert det % s == 0
    return abs(det // s)


@dataclass(frozen=True)
class UVector:
    """First row of det(M) * M(d,m)^(-1); its shifts are the facet normals."""

    d: int
    m: int
    entries: tuple[int, ...]


def u_vector(d: int, m: int) -> UVector:
    """Closed form u_k = c_(d-k) m^k + (-1)^(d+k-1) c_(k-1) m^(d+1-k)."""
    if d % 2 != 0 or d < 2:
        raise BadParameters("u-vector closed form requires even d >= 2")
    table = continuants(d, m)
    entries = tuple(
        table[d - k] * m**k + (-1) ** (d + k - 1) * table[k - 1] * m ** (d + 1 - k)
        for k in range(d + 1)
    )
    if d <= _ADJUGATE_CHECK_MAX_D:
        mat = vertex_matrix(d, m)
        det = bareiss_determinant(mat)
        n = d + 1
        for i in range(n):
            dot = sum(entries[r] * mat[r][i] for r in range(n))
            assert dot == (det if i == 0 else 0)
    return UVector(d, m, entries)


def is_empty_circulant(d: int, m: int) -> bool:
    """S(d, m) is empty iff m^(d-1) < c_(d-1)(m); exact integer comparison."""
    if d % 2 != 0 or d < 2:
        raise BadParameters("emptiness criterion requires even d >= 2")
    if m < 1:
        raise BadParameters("m must be >= 1")
    return m ** (d - 1) < continuants(d - 1, m)[d - 1]


@dataclass(frozen=True)
class ThresholdReport:
    """Integer and hyperbolic-float views of the emptiness threshold m0(d)."""

    d: int
    m0_floor: int
    m0_float: float
    z: float  # solves sinh(d z) = cosh(z)
    alpha: float  # arcsinh(1 / (2 m0_float)), equal to z

    def __post_init__(self) -> None:
        assert abs(2.0 * math.sinh(self.z) * self.m0_float - 1.0) < 1e-12


def m0(d: int) -> ThresholdReport:
    """The unique positive solution of m^(d-1) = c_(d-1)(m), two ways.

    The integer floor comes from exact bracketing (largest m with
    m^(d-1) <= c_(d-1)(m), so an exact integer root counts as its own
    floor); the float value from bisecting sinh(d z) = cosh(z).
    """
    if d % 2 != 0 or d < 2:
        raise BadParameters("threshold requires even d >= 2")

    def below(m: int) -> bool:
        return m ** (d - 1) <= continuants(d - 1, m)[d - 1]

    lo, hi = 1, max(2, d)  # m0(d) < 0.57 d + 1, comfortably inside
    assert below(lo) and not below(hi)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if below(mid):
            lo = mid
        else:
            hi = mid
    floor = lo

    zlo, zhi = 0.5 / d, 2.0 / d
    glo = math.sinh(d * zlo) - math.cosh(zlo)
    ghi = math.sinh(d * zhi) - math.cosh(zhi)
    assert glo < 0 < ghi
    for _ in range(200):
        zmid = 0.5 * (zlo + zhi)
        if math.sinh(d * zmid) - math.cosh(zmid) < 0:
            zlo = zmid
        else:
            zhi = zmid
    z = 0.5 * (zlo + zhi)
    m0_float = 1.0 / (2.0 * math.sinh(z))
    return ThresholdReport(d, floor, m0_float, z, math.asinh(1.0 / (2.0 * m0_float)))


def width_circulant(d: int, m: int, verify: bool = False) -> int:
    """Width of S(d, m): 1 for odd d, 2m for even d.

    With ``verify`` (d <= 8) the theorem is cross-checked by the direct
    embedded search: a certificate must exist at the claimed width and, for
    even d, none at one less.
    """
    if d < 2 or m < 1:
        raise BadParameters("need d >= 2 and m >= 1")
    w = 1 if d % 2 == 1 else 2 * m
    if verify:
        if d > 8:
            raise VerifyBudgetExceeded(f"direct verification impractical for d={d}")
        verts = vertices(d, m)
        assert embedded_width_at_most(verts, w, symmetric=True) is not None
        if d % 2 == 0 and w > 1:
            assert embedded_width_at_most(verts, w - 1, symmetric=True) is None
    return w


def facet_volume_and_group(d: int, m: int) -> tuple[int, str]:
    """Common facet volume of S(d, m) and its quotient-group descriptor.

    Facets have volume 2 (group Z_(N/2) + Z_2) exactly when d == 2 (mod 6)
    and m is odd; otherwise facets are unimodular and the group is cyclic.
    """
    if d % 2 != 0 or d < 2 or m < 1:
        raise BadParameters("need even d >= 2 and m >= 1")
    n = volume(d, m)
    if d % 6 == 2 and m % 2 == 1:
        fv, group = 2, f"Z_{n // 2} x Z_2"
    else:
        fv, group = 1, f"Z_{n}"
    if d <= _GCD_CHECK_MAX_D:
        assert gcd_vec(u_vector(d, m).entries) == fv
    return fv, group


def circulant_to_cyclic(d: int, m: int) -> CyclicSimplex:
    """Cyclic form of S(d, m) when its facets are unimodular.

    The generator is the barycentric numerator vector of the basis point e_d,
    which is the reversed u-vector because the adjugate of a circulant matrix
    is circulant.
    """
    fv, _ = facet_volume_and_group(d, m)
    if fv != 1:
        raise NotCyclic(f"S({d},{m}) has facet volume 2; quotient group not cyclic")
    n = volume(d, m)
    gen = tuple(reversed(u_vector(d, m).entries))
    return new_cyclic(d, n, gen)


# ---------------------------------------------------------------------------
# brute-force lattice point oracle


def integer_points_in_circulant(
    v: Sequence[int], budget: int = _POINT_BUDGET
) -> list[tuple[int, ...]]:
    """All lattice points of the closed circulant simplex with generator v.

    Enumerates the integer box spanned by the vertex coordinates inside the
    hyperplane sum(x) = sum(v) and keeps points whose barycentric coordinates
    (exact, via the adjugate) are all non-negative. Output in lexicographic
    order. Independent of the modular emptiness machinery.
    """
    n = len(v)
    s = sum(v)
    if s == 0:
        raise DegenerateGenerator("generator entries sum to zero")
    mat = _circulant_columns(v)
    det = bareiss_determinant(mat)
    if det == 0:
        raise DegenerateGenerator("circulant shifts are affinely dependent")
    adj = exact_adjugate(mat)
    if det < 0:
        det = -det
        adj = [[-x for x in row] for row in adj]
    lo, hi = min(v), max(v)
    span = hi - lo + 1
    if span ** (n - 1) > budget:
        raise BudgetExceeded(f"box of size {span}^{n - 1} exceeds budget {budget}")
    # max |adjugate entry| * |coordinate| * n must fit int64
    bound = max(abs(x) for row in adj for x in row) * max(abs(lo), abs(hi), abs(s)) * n
    if bound >= 2**62:
        return _integer_points_bigint(mat, adj, s, lo, hi)
    adj_t = np.array(adj, dtype=np.int64).T
    total = span ** (n - 1)
    points: list[tuple[int, ...]] = []
    chunk = 1 << 18
    pows = span ** np.arange(n - 2, -1, -1, dtype=np.int64)
    for start in range(0, total, chunk):
        ranks = np.arange(start, min(start + chunk, total), dtype=np.int64)
        digits = (ranks[:, None] // pows) % span + lo
        last = s - digits.sum(axis=1)
        keep = (last >= lo) & (last <= hi)
        if not keep.any():
            continue
        pts = np.hstack([digits[keep], last[keep, None]])
        inside = (pts @ adj_t >= 0).all(axis=1)
        points.extend(tuple(int(c) for c in row) for row in pts[inside])
    return sorted(points)


def _integer_points_bigint(mat, adj, s, lo, hi) -> list[tuple[int, ...]]:
    """Pure-Python fallback when adjugate entries are too large for int64."""
    import itertools

    n = len(mat)
    points = []
    for head in itertools.product(range(lo, hi + 1), repeat=n - 1):
        last = s - sum(head)
        if not lo <= last <= hi:
            continue
        x = head + (last,)
        if all(sum(row[i] * x[i] for i in range(n)) >= 0 for row in adj):
            points.append(x)
    return sorted(points)


def brute_force_points(d: int, m: int, budget: int = _POINT_BUDGET) -> list[tuple[int, ...]]:
    """Lattice points of S(d, m) by direct enumeration; the emptiness oracle."""
    return integer_points_in_circulant(circulant_generator(d, m), budget=budget)


def brute_force_is_empty(d: int, m: int, budget: int = _POINT_BUDGET) -> bool:
    """True iff the brute-force listing finds only the d+1 vertices."""
    return sorted(set(brute_force_points(d, m, budget=budget))) == sorted(
        set(vertices(d, m))
    )


# ---------------------------------------------------------------------------
# general circulant simplices and the skip construction


@dataclass(frozen=True)
class GeneralCirculant:
    """Circulant simplex with an arbitrary integer generator."""

    generator: tuple[int, ...]

    def __post_init__(self) -> None:
        if sum(self.generator) == 0:
            raise DegenerateGenerator("generator entries sum to zero")
        if bareiss_determinant(self.matrix()) == 0:
            raise DegenerateGenerator("circulant shifts are affinely dependent")

    def matrix(self) -> list[list[int]]:
        return _circulant_columns(self.generator)

    def vertices(self) -> list[tuple[int, ...]]:
        mat = self.matrix()
        n = len(self.generator)
        return [tuple(mat[i][j] for i in range(n)) for j in range(n)]


def skip_circulant(d: int, m: int, a: int, point_budget: int = _POINT_BUDGET) -> GeneralCirculant:
    """Width-one empty circulant simplex for composite d+1 = a*b.

    The generator places 1 at index 0, m at index 1 and -m at the largest
    index congruent to 1 mod a, so the functional summing coordinates with
    index divisible by a takes only the values 0 and 1 on the vertices.
    The construction is validated post hoc: the width-one functional must
    check out, and small instances must pass the brute-force emptiness
    oracle.
    """
    if m < 1:
        raise BadParameters("m must be >= 1")
    if a < 2 or (d + 1) % a != 0 or (d + 1) // a < 2:
        raise BadFactor(f"{a} does not divide {d + 1} nontrivially")
    q = 1 + a * ((d - 1) // a)
    gen = [0] * (d + 1)
    gen[0] = 1
    gen[1] += m
    gen[q] -= m
    simplex = GeneralCirculant(tuple(gen))

    # width-one functional: indicator of indices divisible by a
    n = d + 1
    values = [
        sum(gen[(i - j) % n] for i in range(0, n, a)) for j in range(n)
    ]
    if set(values) != {0, 1}:
        raise ValidationFailed(f"skip functional takes values {sorted(set(values))}")
    span = max(gen) - min(gen) + 1
    if span**d <= point_budget:
        pts = integer_points_in_circulant(simplex.generator, budget=point_budget)
        if sorted(set(pts)) != sorted(set(simplex.vertices())):
            raise ValidationFailed("skip simplex is not empty")
    return simplex
