"""Unit tests for the width engines: naive, meet-in-the-middle, embedded."""

import math
import random

import pytest

from emptysimplex.cyclic import new_cyclic
from emptysimplex.errors import BadParameters, MemoryBudgetExceeded, WidthAboveCap
from emptysimplex.width import (
    WidthCertificate,
    certificate_is_valid,
    embedded_width_at_most,
    lattice_width,
    parse_certificate,
    width_at_most,
    width_at_most_mitm,
)


def _random_simplex(rng, max_d=6, max_n=2000):
    while True:
        d = rng.randint(1, max_d)
        n = rng.randint(2, max_n)
        b = [rng.randrange(n) for _ in range(d)]
        b.append(-sum(b) % n)
        if math.gcd(n, math.gcd(*b)) == 1:
            return new_cyclic(d, n, b)


def test_certificate_str_roundtrip():
    cert = WidthCertificate((0, 2, 2, 1, 4), 4)
    assert str(cert) == "w=4 f=0,2,2,1,4"
    assert parse_certificate(str(cert)) == cert


def test_certificate_is_valid():
    s = new_cyclic(4, 101, (100, 6, 65, 14, 17))
    good = WidthCertificate((0, 2, 3, 2, 4), 4)
    assert sum(f * b for f, b in zip(good.functional, s.generator)) % 101 == 0
    assert certificate_is_valid(s, good, 4)
    assert not certificate_is_valid(s, good, 3)  # above target
    assert not certificate_is_valid(s, WidthCertificate((1, 1, 1, 1, 1), 0), 4)
    assert not certificate_is_valid(s, WidthCertificate((0, 1, 2, 3, 4), 4), 4)


def test_known_width_cycl_4_101():
    s = new_cyclic(4, 101, (100, 6, 65, 14, 17))
    for symmetric in (False, True):
        w, cert = lattice_width(s, symmetric=symmetric)
        assert w == 4
        assert certificate_is_valid(s, cert, 4)
        assert width_at_most_mitm(s, 3, symmetric=symmetric) is None
        assert width_at_most(s, 3, symmetric=symmetric) is None


def test_width_one_simplex():
    s = new_cyclic(3, 2, (1, 1, 1, 1))
    w, cert = lattice_width(s)
    assert w == 1 and cert.spread == 1


def test_cap_raises():
    s = new_cyclic(4, 101, (100, 6, 65, 14, 17))
    with pytest.raises(WidthAboveCap):
        lattice_width(s, cap=2)
    with pytest.raises(BadParameters):
        lattice_width(s, cap=0)
    with pytest.raises(BadParameters):
        width_at_most(s, 0)


def test_mitm_memory_cap():
    s = new_cyclic(4, 101, (100, 6, 65, 14, 17))
    with pytest.raises(MemoryBudgetExceeded):
        width_at_most_mitm(s, 10, mem_cap=100)


def test_mitm_matches_naive_with_identical_witness():
    rng = random.Random(20260823)
    for _ in range(300):
        s = _random_simplex(rng)
        w = rng.randint(1, 6)
        for symmetric in (False, True):
            a = width_at_most(s, w, symmetric=symmetric)
            b = width_at_most_mitm(s, w, symmetric=symmetric)
            assert (a is None) == (b is None), (s, w, symmetric)
            if a is not None:
                # both engines promise the lex-least non-constant witness
                assert a == b, (s, w, symmetric)
            c = width_at_most_mitm(s, w, symmetric=symmetric, want_certificate=False)
            assert (c is None) == (a is None), (s, w, symmetric)


def test_symmetric_flag_agrees_on_cyclotomic():
    # f_0 = 0 normalization must not change the width when the symmetry holds
    from emptysimplex.cyclotomic import cyclotomic_simplex

    for d, n in ((4, 11), (4, 41), (4, 101), (6, 29), (6, 127)):
        s = cyclotomic_simplex(d, n)
        w_full, _ = lattice_width(s, symmetric=False)
        w_sym, _ = lattice_width(s, symmetric=True)
        assert w_full == w_sym, (d, n)


def test_embedded_width_standard_simplex():
    # the unimodular simplex conv(e_0, ..., e_d) has width 1
    verts = [tuple(int(i == j) for i in range(4)) for j in range(4)]
    cert = embedded_width_at_most(verts, 1)
    assert cert is not None and cert.spread == 1
    with pytest.raises(BadParameters):
        embedded_width_at_most([(1, 1), (1, 0)], 1)


def test_embedded_width_matches_cyclic():
    # embed T(2, 7) = conv rows of an explicit unimodular realization:
    # use the circulant S(4,1) vertices, whose width is 2 by theorem
    from emptysimplex.circulant import vertices, width_circulant

    verts = vertices(4, 1)
    assert width_circulant(4, 1) == 2
    assert embedded_width_at_most(verts, 1, symmetric=True) is None
    cert = embedded_width_at_most(verts, 2, symmetric=True)
    assert cert is not None and cert.spread == 2
