"""Cyclic lattice simplices in (volume, generator) form.

A cyclic d-simplex of volume N is encoded by a generator vector
b = (b_0, ..., b_d) of residues mod N whose entries sum to 0 mod N and
satisfy gcd(N, b_0, ..., b_d) = 1. The entries are the N-scaled barycentric
coordinates of a generator of the quotient group of the simplex; lattice
points correspond to the multiples j*b (mod N) whose reduced coordinates
sum to exactly N.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .arith import gcd_vec, mod_inv
from .errors import BadLength, BadParameters, BoundExceeded, GcdNotOne, SumNotZero

# Scan block: j-values per numpy chunk in the emptiness scan.
_SCAN_BLOCK = 1 << 17

DEFAULT_POINT_BOUND = 10**7


@dataclass(frozen=True)
class CyclicSimplex:
    """Immutable (dim, volume, generator) triple; build via :func:`new_cyclic`."""

    dim: int
    volume: int
    generator: tuple[int, ...]

    def __str__(self) -> str:
        return to_line(self)


@dataclass(frozen=True)
class LatticePointBary:
    """A non-vertex lattice point, as N-scaled barycentric numerators."""

    index: int  # the multiplier j of the generator
    numerators: tuple[int, ...]


def new_cyclic(d: int, volume: int, generator: Iterable[int]) -> CyclicSimplex:
    """Validate and build a cyclic simplex, reducing the generator mod N."""
    if d < 1 or volume < 1:
        raise BadParameters("dimension and volume must be positive")
    b = tuple(x % volume for x in generator)
    if len(b) != d + 1:
        raise BadLength(f"generator needs {d + 1} entries, got {len(b)}")
    if sum(b) % volume != 0:
        raise SumNotZero(f"generator entries sum to {sum(b)} != 0 mod {volume}")
    if math.gcd(volume, gcd_vec(b)) != 1:
        raise GcdNotOne("gcd(volume, generator) must be 1")
    return CyclicSimplex(d, volume, b)


def signed_form(s: CyclicSimplex) -> tuple[int, ...]:
    """Generator with entries mapped into (-N/2, N/2]; for display only."""
    n = s.volume
    return tuple(b if 2 * b <= n else b - n for b in s.generator)


def to_line(s: CyclicSimplex) -> str:
    return f"d={s.dim} N={s.volume} b={','.join(str(x) for x in s.generator)}"


def from_line(line: str) -> CyclicSimplex:
    """Parse the ``d=<d> N=<N> b=<b0,...>`` serialization."""
    fields = dict(part.split("=", 1) for part in line.split())
    b = tuple(int(x) for x in fields["b"].split(","))
    return new_cyclic(int(fields["d"]), int(fields["N"]), b)


def _scan_witness(s: CyclicSimplex) -> int | None:
    """Smallest j in 1..N-1 whose reduction of j*b sums to N, or None.

    Chunked over j so that sweeps at volumes ~2^31 stay within memory;
    products j*b_i stay below 2^63 for all 64-bit-word volumes of interest.
    """
    n, b = s.volume, s.generator
    if n == 1:
        return None
    if n <= 2048:
        # numpy setup costs more than the whole scan at this size
        for j in range(1, n):
            if sum((j * bi) % n for bi in b) == n:
                return j
        return None
    bv = np.array(b, dtype=np.int64)
    target = n
    for start in range(1, n, _SCAN_BLOCK):
        stop = min(start + _SCAN_BLOCK, n)
        j = np.arange(start, stop, dtype=np.int64)
        sums = np.zeros(stop - start, dtype=np.int64)
        for bi in bv:
            sums += (j * bi) % n
        hits = np.nonzero(sums == target)[0]
        if hits.size:
            return start + int(hits[0])
    return None


def is_empty(s: CyclicSimplex) -> bool:
    """True iff no multiple j*b (j=1..N-1) reduces to a barycentric vector.

    Exits at the first witness when the simplex is not empty; a full O(N*d)
    scan is required to certify emptiness.
    """
    return _scan_witness(s) is None


def lattice_points_in(
    s: CyclicSimplex, bound: int = DEFAULT_POINT_BOUND
) -> list[LatticePointBary]:
    """All non-vertex lattice points of the closed simplex, by direct listing.

    Pure-Python oracle counterpart of :func:`is_empty`; refuses volumes above
    ``bound`` to keep memory and time sane.
    """
    if s.volume > bound:
        raise BoundExceeded(f"volume {s.volume} exceeds listing bound {bound}")
    n, b = s.volume, s.generator
    points = []
    for j in range(1, n):
        numerators = tuple((j * bi) % n for bi in b)
        if sum(numerators) == n:
            points.append(LatticePointBary(j, numerators))
    return points


def facet_volumes(s: CyclicSimplex) -> tuple[int, ...]:
    """Normalized volume of the i-th facet is gcd(N, b_i)."""
    return tuple(math.gcd(s.volume, bi) for bi in s.generator)


def equivalent(s: CyclicSimplex, t: CyclicSimplex) -> bool:
    """Unimodular equivalence: equal volume and b' = unit * b up to permutation.

    Candidate scalars are b'_j * b_i^{-1} for one fixed invertible coordinate
    b_i and every j, falling back to a scan over all units when no coordinate
    of b is invertible.
    """
    if s.volume != t.volume or s.dim != t.dim:
        return False
    n = s.volume
    if n == 1:
        return True
    target = sorted(t.generator)
    pivot = next((bi for bi in s.generator if math.gcd(bi, n) == 1), None)
    if pivot is not None:
        inv = mod_inv(pivot, n)
        candidates = {(bj * inv) % n for bj in t.generator}
    else:
        candidates = {u for u in range(1, n) if math.gcd(u, n) == 1}
    for lam in candidates:
        if math.gcd(lam, n) != 1:
            continue
        if sorted((lam * bi) % n for bi in s.generator) == target:
            return True
    return False


def white_simplex(p: int, q: int) -> CyclicSimplex:
    """The 3-simplex T(p, q): volume q, generator (p, -p, -1, 1) mod q.

    Every empty 3-simplex is unimodularly equivalent to one of these.
    """
    if q < 2 or not 1 <= p <= q - 1 or math.gcd(p, q) != 1:
        raise BadParameters(f"need q >= 2, 1 <= p < q, gcd(p, q) = 1; got p={p} q={q}")
    return new_cyclic(3, q, (p, -p, -1, 1))
