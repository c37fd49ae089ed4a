"""Exact integer foundations: modular arithmetic, primality, prime streams.

All moduli used by the search engines fit in a 64-bit word; Python's native
integers make the arithmetic exact regardless, so no widening tricks are
needed here. Arbitrary-precision values (circulant volumes, continuants) are
plain ``int`` as well.
"""

from __future__ import annotations

import math
from typing import Iterator, Sequence

import numpy as np

from .errors import NotInvertible

# Deterministic Miller-Rabin witness set, exact for all n < 2^64.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# Below this candidate density we test candidates one by one instead of
# sieving the whole interval.
_SIEVE_MAX_STEP = 64


def mod_pow(base: int, exp: int, modulus: int) -> int:
    """base**exp reduced modulo ``modulus``; exp must be non-negative."""
    if exp < 0:
        raise ValueError("exponent must be non-negative")
    return pow(base % modulus, exp, modulus)


def mod_inv(a: int, modulus: int) -> int:
    """Multiplicative inverse of ``a`` modulo ``modulus``."""
    try:
        return pow(a % modulus, -1, modulus)
    except ValueError as exc:
        raise NotInvertible(f"{a} has no inverse modulo {modulus}") from exc


def is_prime(n: int) -> bool:
    """Deterministic primality for all n < 2^64 (no probabilistic answers)."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _small_primes(limit: int) -> np.ndarray:
    """All primes <= limit via a plain boolean sieve."""
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    sieve = np.ones(limit + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    return np.nonzero(sieve)[0].astype(np.int64)


def _sieve_segment(lo: int, hi: int, base: np.ndarray) -> np.ndarray:
    """Primes in [lo, hi] given base primes up to sqrt(hi)."""
    seg = np.ones(hi - lo + 1, dtype=bool)
    for p in base:
        p = int(p)
        if p * p > hi:
            break
        start = max(p * p, ((lo + p - 1) // p) * p)
        seg[start - lo :: p] = False
    if lo <= 1:
        seg[: 2 - lo] = False
    return np.nonzero(seg)[0] + lo


def primes_in_progression(lo: int, hi: int, step: int, residue: int) -> Iterator[int]:
    """Primes p in [lo, hi] with p == residue (mod step), in increasing order.

    Dense progressions (small step) are served by a segmented sieve; sparse
    ones fall back to per-candidate deterministic Miller-Rabin.
    """
    if not 0 <= residue < step:
        raise ValueError("residue must satisfy 0 <= residue < step")
    if hi < lo:
        return
    if step <= _SIEVE_MAX_STEP:
        base = _small_primes(math.isqrt(hi))
        block = 1 << 20
        start = max(lo, 2)
        while start <= hi:
            end = min(start + block - 1, hi)
            for p in _sieve_segment(start, end, base):
                if p % step == residue:
                    yield int(p)
            start = end + 1
    else:
        first = lo + (residue - lo) % step
        for n in range(first, hi + 1, step):
            if is_prime(n):
                yield n


def gcd_vec(values: Sequence[int]) -> int:
    """gcd of the absolute values; all-zero input gives 0."""
    if len(values) == 0:
        raise ValueError("gcd_vec needs a non-empty list")
    g = 0
    for v in values:
        g = math.gcd(g, v)
        if g == 1:
            return 1
    return g


def factorize_small(n: int) -> dict[int, int]:
    """Prime factorization by trial division; meant for small n like d+1."""
    factors: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def multiplicative_order_divides(k: int, n: int, modulus: int) -> bool:
    """True iff k^n == 1 (mod modulus)."""
    return pow(k, n, modulus) == 1


def has_order_exactly(k: int, n: int, modulus: int) -> bool:
    """True iff the multiplicative order of k modulo ``modulus`` is exactly n."""
    if pow(k, n, modulus) != 1:
        return False
    return all(pow(k, n // p, modulus) != 1 for p in factorize_small(n))
