"""Unit tests for the arithmetic foundations."""

import math
import random

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from emptysimplex.arith import (
    factorize_small,
    gcd_vec,
    has_order_exactly,
    is_prime,
    mod_inv,
    mod_pow,
    primes_in_progression,
)
from emptysimplex.errors import NotInvertible


def test_mod_pow_basic():
    assert mod_pow(95, 5, 101) == pow(95, 5) % 101
    assert mod_pow(0, 0, 7) == 1
    assert mod_pow(-3, 2, 7) == 2
    with pytest.raises(ValueError):
        mod_pow(2, -1, 7)


@given(st.integers(0, 10**6), st.integers(0, 50), st.integers(2, 10**6))
def test_mod_pow_matches_bigint(base, exp, modulus):
    assert mod_pow(base, exp, modulus) == base**exp % modulus


def test_mod_inv():
    assert mod_inv(99, 101) == 50  # 99 == -2, and (-2) * 50 == -100 == 1
    assert mod_inv(1, 2) == 1
    for n in (7, 12, 101):
        for a in range(1, n):
            if math.gcd(a, n) == 1:
                assert a * mod_inv(a, n) % n == 1
            else:
                with pytest.raises(NotInvertible):
                    mod_inv(a, n)


def test_is_prime_against_sympy_small():
    for n in range(200000):
        assert is_prime(n) == sympy.isprime(n), n


def test_is_prime_against_sympy_random_large():
    rng = random.Random(7)
    for _ in range(300):
        n = rng.randrange(2, 2**62)
        assert is_prime(n) == sympy.isprime(n), n


def test_is_prime_known_hard_cases():
    # Carmichael numbers and strong-pseudoprime bait
    for n in (561, 1105, 1729, 2465, 2821, 6601, 8911, 3215031751):
        assert not is_prime(n)
    for n in (2, 3, 2**31 - 1, 2**61 - 1, 4294967291, 1000000007):
        assert is_prime(n)


def test_primes_in_progression_sieve_path():
    # step <= 64 takes the segmented-sieve branch
    got = list(primes_in_progression(2, 2000, 7, 1))
    want = [p for p in range(2, 2001) if p % 7 == 1 and sympy.isprime(p)]
    assert got == want


def test_primes_in_progression_mr_path():
    got = list(primes_in_progression(10**6, 10**6 + 10**4, 997, 1))
    want = [
        p
        for p in range(10**6, 10**6 + 10**4 + 1)
        if p % 997 == 1 and sympy.isprime(p)
    ]
    assert got == want


def test_primes_in_progression_crossing_blocks():
    got = list(primes_in_progression(2**20 - 100, 2**20 + 100, 5, 1))
    want = [
        p
        for p in range(2**20 - 100, 2**20 + 101)
        if p % 5 == 1 and sympy.isprime(p)
    ]
    assert got == want


def test_primes_in_progression_validation():
    with pytest.raises(ValueError):
        list(primes_in_progression(2, 100, 5, 5))
    assert list(primes_in_progression(100, 50, 5, 1)) == []


@given(st.lists(st.integers(-10**9, 10**9), min_size=1, max_size=8))
def test_gcd_vec_matches_math(values):
    assert gcd_vec(values) == math.gcd(*values)


def test_gcd_vec_empty_rejected():
    with pytest.raises(ValueError):
        gcd_vec([])


@given(st.integers(2, 10**6))
@settings(max_examples=200)
def test_factorize_small_roundtrip(n):
    factors = factorize_small(n)
    prod = 1
    for p, e in factors.items():
        assert sympy.isprime(p)
        prod *= p**e
    assert prod == n


def test_has_order_exactly():
    # 3 has order 5 mod 11; 10 has order 2
    assert has_order_exactly(3, 5, 11)
    assert not has_order_exactly(3, 10, 11)
    assert has_order_exactly(10, 2, 11)
    assert not has_order_exactly(1, 5, 11)
    for n in (11, 29, 101):
        for k in range(2, n):
            order = sympy.n_order(k, n)
            assert has_order_exactly(k, order, n)
            for wrong in (order + 1, 2 * order):
                if wrong != order:
                    assert not has_order_exactly(k, wrong, n)
