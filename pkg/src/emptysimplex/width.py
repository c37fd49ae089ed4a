"""Lattice width decision procedures for cyclic and embedded simplices.

A functional is represented by its vector f of values at the d+1 vertices.
For a cyclic simplex with generator b and volume N, f is an integer lattice
functional iff f . b == 0 (mod N); the width it attains is max(f) - min(f).
Deciding "width <= w" is a search over the cube {0..w}^(d+1), optionally
restricted to f_0 = 0 when the simplex has a cyclic symmetry, and optionally
accelerated by a meet-in-the-middle split of the coordinates.

Witness determinism: both the naive search and the meet-in-the-middle search
return the lexicographically least non-constant witness (coordinate 0
slowest), so the two procedures agree certificate-for-certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .cyclic import CyclicSimplex
from .errors import (
    BadParameters,
    BudgetExceeded,
    MemoryBudgetExceeded,
    WidthAboveCap,
)

_CHUNK = 1 << 18
_NAIVE_CAP = 1 << 26
_MITM_CAP = 1 << 24
_EMBED_BUDGET = 1 << 28


@dataclass(frozen=True)
class WidthCertificate:
    """A functional witnessing "width <= spread" for the simplex it certifies."""

    functional: tuple[int, ...]
    spread: int

    def __str__(self) -> str:
        return f"w={self.spread} f={','.join(str(x) for x in self.functional)}"


def parse_certificate(text: str) -> WidthCertificate:
    fields = dict(part.split("=", 1) for part in text.split())
    f = tuple(int(x) for x in fields["f"].split(","))
    return WidthCertificate(f, int(fields["w"]))


def certificate_is_valid(s: CyclicSimplex, cert: WidthCertificate, w: int) -> bool:
    """Post-hoc check applied to every returned certificate."""
    f = cert.functional
    if len(f) != s.dim + 1 or len(set(f)) == 1:
        return False
    if max(f) - min(f) != cert.spread or cert.spread > w:
        return False
    return sum(fi * bi for fi, bi in zip(f, s.generator)) % s.volume == 0


def _digits(ranks: np.ndarray, nfree: int, base: int) -> np.ndarray:
    """Mixed-radix digits of each rank, most significant digit first."""
    pows = base ** np.arange(nfree - 1, -1, -1, dtype=np.int64)
    return (ranks[:, None] // pows) % base


def _free_positions(n: int, symmetric: bool) -> list[int]:
    # under cyclic symmetry the functional can be normalized to f_0 = 0
    return list(range(1, n)) if symmetric else list(range(n))


def _assemble(
    n: int, free: list[int], digits: Sequence[int]
) -> tuple[int, ...]:
    f = [0] * n
    for pos, val in zip(free, digits):
        f[pos] = int(val)
    return tuple(f)


def width_at_most(
    s: CyclicSimplex, w: int, symmetric: bool = False
) -> WidthCertificate | None:
    """Exhaustive search of the functional cube, lex order, numpy-chunked."""
    if w < 1:
        raise BadParameters("target width must be >= 1")
    n = s.dim + 1
    free = _free_positions(n, symmetric)
    base = w + 1
    total = base ** len(free)
    if total > _NAIVE_CAP:
        raise MemoryBudgetExceeded(f"naive cube of size {total} exceeds cap")
    bfree = np.array([s.generator[i] for i in free], dtype=np.int64)
    for start in range(0, total, _CHUNK):
        ranks = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        digits = _digits(ranks, len(free), base)
        vals = (digits @ bfree) % s.volume
        for idx in np.nonzero(vals == 0)[0]:
            f = _assemble(n, free, digits[idx])
            if len(set(f)) > 1:
                cert = WidthCertificate(f, max(f) - min(f))
                assert certificate_is_valid(s, cert, w)
                return cert
    return None


def _half_values(bpart: np.ndarray, base: int, volume: int) -> np.ndarray:
    """Dot products of the full sub-cube with bpart, in lex order, mod volume."""
    vals = np.zeros(1, dtype=np.int64)
    for bc in bpart:
        contrib = (np.arange(base, dtype=np.int64) * int(bc)) % volume
        vals = (vals[:, None] + contrib[None, :]).reshape(-1) % volume
    return vals


def width_at_most_mitm(
    s: CyclicSimplex,
    w: int,
    symmetric: bool = False,
    want_certificate: bool = True,
    mem_cap: int = _MITM_CAP,
) -> WidthCertificate | None:
    """Meet-in-the-middle variant of :func:`width_at_most`; same contract.

    The free coordinates are split into halves of sizes ceil/floor; the left
    half's dot products and the negated right half's dot products are matched
    modulo N. With ``want_certificate`` false only existence is decided
    (constant solutions discounted by counting), which skips the witness
    bookkeeping entirely.
    """
    if w < 1:
        raise BadParameters("target width must be >= 1")
    n = s.dim + 1
    free = _free_positions(n, symmetric)
    base = w + 1
    h = (len(free) + 1) // 2
    if base**h > mem_cap:
        raise MemoryBudgetExceeded(f"half-list of size {base ** h} exceeds cap")
    left, right = free[:h], free[h:]
    bleft = np.array([s.generator[i] for i in left], dtype=np.int64)
    bright = np.array([s.generator[i] for i in right], dtype=np.int64)
    volume = s.volume
    l1 = _half_values(bleft, base, volume)
    l2 = (-_half_values(bright, base, volume)) % volume

    if not want_certificate:
        # a solution f = const always matches (t*sum(b) == 0 mod N); the cube
        # contains w+1 such f in full mode and only f = 0 under symmetry
        n_constants = 1 if symmetric else base
        u1, c1 = np.unique(l1, return_counts=True)
        u2, c2 = np.unique(l2, return_counts=True)
        common, i1, i2 = np.intersect1d(u1, u2, return_indices=True)
        pairs = int((c1[i1].astype(object) * c2[i2]).sum()) if common.size else 0
        if pairs > n_constants:
            return WidthCertificate((), w)  # existence marker, no witness
        return None

    order = np.argsort(l2, kind="stable")  # runs keep ascending suffix rank
    l2sorted = l2[order]
    pos = np.searchsorted(l2sorted, l1)
    ok = pos < l2sorted.size
    ok[ok] = l2sorted[pos[ok]] == l1[ok]
    for p in np.nonzero(ok)[0]:
        # suffixes matching this prefix, in lex order
        q = int(pos[p])
        prefix = _digits(np.array([p], dtype=np.int64), len(left), base)[0]
        while q < l2sorted.size and l2sorted[q] == l1[p]:
            suffix = _digits(
                np.array([order[q]], dtype=np.int64), len(right), base
            )[0]
            f = _assemble(n, free, list(prefix) + list(suffix))
            if len(set(f)) > 1:
                cert = WidthCertificate(f, max(f) - min(f))
                assert certificate_is_valid(s, cert, w)
                return cert
            q += 1
        # only a constant matched this prefix; try the next prefix
    return None


def lattice_width(
    s: CyclicSimplex,
    symmetric: bool = False,
    cap: int | None = None,
    use_mitm: bool = True,
    want_certificate: bool = True,
) -> tuple[int, WidthCertificate | None]:
    """Least w >= 1 admitting a certificate, found by incrementing w.

    A witness first found at target w has spread exactly w: a smaller-spread
    witness would already have appeared at its own spread value.
    """
    if cap is not None and cap < 1:
        raise BadParameters("cap must be >= 1")
    w = 1
    while cap is None or w <= cap:
        if use_mitm:
            cert = width_at_most_mitm(
                s, w, symmetric=symmetric, want_certificate=want_certificate
            )
        else:
            cert = width_at_most(s, w, symmetric=symmetric)
        if cert is not None:
            if want_certificate:
                return cert.spread, cert
            return w, None
        w += 1
    raise WidthAboveCap(cap)


def embedded_width_at_most(
    vertices: Sequence[Sequence[int]],
    w: int,
    symmetric: bool = False,
    budget: int = _EMBED_BUDGET,
) -> WidthCertificate | None:
    """Direct width check for a simplex embedded in the standard lattice.

    Vertices must lie in the hyperplane sum(x) = 1, where every integer
    coefficient vector is a lattice functional. Searches non-constant
    f in {0..w}^n (f_0 = 0 under cyclic symmetry) for value spread <= w.
    The certificate's spread field records the attained value spread.
    """
    verts = [tuple(v) for v in vertices]
    if any(sum(v) != 1 for v in verts):
        raise BadParameters("vertices must lie in the hyperplane sum(x) = 1")
    n = len(verts[0])
    if any(len(v) != n for v in verts):
        raise BadParameters("vertices must share one dimension")
    if w < 1:
        raise BadParameters("target width must be >= 1")
    free = _free_positions(n, symmetric)
    base = w + 1
    total = base ** len(free)
    if total > budget:
        raise BudgetExceeded(f"cube of size {total} exceeds budget {budget}")
    # vfree[i, j] = coordinate free[i] of vertex j
    vfree = np.array([[v[i] for v in verts] for i in free], dtype=np.int64)
    for start in range(0, total, _CHUNK):
        ranks = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        digits = _digits(ranks, len(free), base)
        vals = digits @ vfree
        spread = vals.max(axis=1) - vals.min(axis=1)
        hits = np.nonzero((spread <= w) & (spread > 0))[0]
        if hits.size:
            idx = int(hits[0])
            f = _assemble(n, free, digits[idx])
            return WidthCertificate(f, int(spread[idx]))
    return None
