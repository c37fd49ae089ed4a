"""Unit tests for the circulant family S(d, m)."""

import math
from fractions import Fraction

import pytest

from emptysimplex.circulant import (
    GeneralCirculant,
    bareiss_determinant,
    brute_force_is_empty,
    brute_force_points,
    circulant_generator,
    circulant_to_cyclic,
    continuant_binomial,
    continuants,
    exact_adjugate,
    facet_volume_and_group,
    fibonacci_poly,
    general_circulant_volume,
    integer_points_in_circulant,
    is_empty_circulant,
    m0,
    skip_circulant,
    u_vector,
    vertex_matrix,
    vertices,
    volume,
    width_circulant,
)
from emptysimplex.cyclic import equivalent, is_empty, lattice_points_in
from emptysimplex.cyclotomic import cyclotomic_simplex
from emptysimplex.errors import (
    BadFactor,
    BadParameters,
    DegenerateGenerator,
    NotCyclic,
    VerifyBudgetExceeded,
)


def test_continuants_match_recurrence_and_binomial():
    for m in range(1, 8):
        table = continuants(30, m)
        assert table[-1] == 0 and table[0] == 1
        assert table[1] == 1 and table[2] == 1 + m * m
        for k in range(1, 31):
            assert table[k] == table[k - 1] + m * m * table[k - 2]
            assert table[k] == continuant_binomial(k, m)
            # oracle: determinant of the tridiagonal continuant matrix
            if k <= 9:
                mat = [
                    [
                        1 if i == j else (-m if j == i + 1 else (m if j == i - 1 else 0))
                        for j in range(k)
                    ]
                    for i in range(k)
                ]
                assert table[k] == bareiss_determinant(mat)


def test_fibonacci_bridge_exact():
    # c_k(m) = m^k * F_(k+1)(1/m), exactly over the rationals
    for m in range(1, 6):
        table = continuants(30, m)
        for k in range(31):
            bridge = Fraction(m) ** k * fibonacci_poly(k + 1, Fraction(1, m))
            assert bridge == table[k], (k, m)


def test_fibonacci_hyperbolic_identity():
    # F_2n(2 sinh z) = sinh(2nz)/cosh z; F_(2n+1)(2 sinh z) = cosh((2n+1)z)/cosh z
    for z in (0.05, 0.1, 0.3, 0.7, 1.1):
        x = 2 * math.sinh(z)
        for n in range(1, 12):
            lhs = fibonacci_poly(2 * n, x)
            rhs = math.sinh(2 * n * z) / math.cosh(z)
            assert abs(lhs - rhs) < 1e-12 * max(1.0, abs(rhs))
            lhs = fibonacci_poly(2 * n + 1, x)
            rhs = math.cosh((2 * n + 1) * z) / math.cosh(z)
            assert abs(lhs - rhs) < 1e-12 * max(1.0, abs(rhs))


def test_bareiss_determinant_oracle():
    import sympy

    mats = [
        [[2]],
        [[1, 2], [3, 4]],
        [[3, -1, 2], [0, 4, 1], [5, 2, -2]],
        vertex_matrix(6, 3),
    ]
    for mat in mats:
        assert bareiss_determinant(mat) == sympy.Matrix(mat).det()


def test_exact_adjugate_oracle():
    import sympy

    for mat in ([[1, 2], [3, 5]], vertex_matrix(4, 2), vertex_matrix(6, 1)):
        adj = exact_adjugate(mat)
        assert sympy.Matrix(adj) == sympy.Matrix(mat).adjugate()


def test_volume_three_way():
    # binomial sum == continuant form == exact determinant (checked inside),
    # and against the general circulant determinant route
    for d in range(2, 13, 2):
        for m in range(1, 6):
            v = volume(d, m)
            assert v == general_circulant_volume(circulant_generator(d, m))
    assert volume(4, 2) == 101
    assert volume(6, 3) == 6301
    assert volume(8, 4) == 719761
    assert volume(16, 9) == 36373816216801891
    with pytest.raises(BadParameters):
        volume(5, 2)


def test_big_volume_windows():
    assert 28 * 10**37 < volume(30, 17) < 30 * 10**37
    assert 65 * 10**65 < volume(46, 26) < 67 * 10**65
    assert 53 * 10**92 < volume(60, 34) < 55 * 10**92


def test_u_vector_values_and_adjugate_identity():
    assert u_vector(4, 2).entries == (29, 34, 12, 28, -2)
    # adjugate-row oracle on a grid (internal assert covers small d; here we
    # check independently against exact_adjugate)
    for d in (2, 4, 6, 8):
        for m in (1, 2, 3):
            adj = exact_adjugate(vertex_matrix(d, m))
            assert tuple(adj[0]) == u_vector(d, m).entries, (d, m)


def test_u_monotonicity_grid():
    # u_k > 0 for odd k; u_k > u_(k+2) for even k — full grid d <= 20, m <= 10
    for d in range(2, 21, 2):
        for m in range(1, 11):
            u = u_vector(d, m).entries
            for k in range(1, d, 2):
                assert u[k] > 0, (d, m, k)
            for k in range(0, d - 1, 2):
                assert u[k] > u[k + 2], (d, m, k)


def test_emptiness_criterion_vs_brute_force():
    for d in (2, 4, 6):
        for m in (1, 2, 3, 4):
            assert is_empty_circulant(d, m) == brute_force_is_empty(d, m), (d, m)


def test_brute_force_points_details():
    # S(2, m) is never empty for m >= 1? d=2: criterion m < c_1 = 1: never.
    pts = brute_force_points(2, 1)
    verts = set(vertices(2, 1))
    assert any(p not in verts for p in pts)
    # an empty case has exactly the vertices
    assert set(brute_force_points(4, 2)) == set(vertices(4, 2))


def test_integer_points_validation():
    with pytest.raises(DegenerateGenerator):
        general_circulant_volume((1, -1))
    with pytest.raises(DegenerateGenerator):
        integer_points_in_circulant((1, -1))


def test_m0_reports():
    for d, floor in ((4, 2), (16, 9), (30, 17), (46, 26), (60, 34)):
        rep = m0(d)
        assert rep.m0_floor == floor
        # sandwich: floor is the last integer where the non-strict criterion holds
        c = continuants(d - 1, floor)[d - 1]
        assert floor ** (d - 1) <= c
        c2 = continuants(d - 1, floor + 1)[d - 1]
        assert (floor + 1) ** (d - 1) > c2
        # hyperbolic characterization: sinh(d z) = cosh(z), m0 = 1/(2 sinh z)
        assert abs(math.sinh(d * rep.z) - math.cosh(rep.z)) < 1e-9
        assert floor <= rep.m0_float < floor + 1


def test_m0_formula_small():
    asinh1 = math.asinh(1)
    for d in range(2, 101, 2):
        assert m0(d).m0_floor == int(d / (2 * asinh1)), d


def test_width_circulant():
    assert width_circulant(5, 3) == 1
    assert width_circulant(4, 2) == 4
    assert width_circulant(16, 9) == 18
    assert width_circulant(4, 2, verify=True) == 4
    assert width_circulant(5, 3, verify=True) == 1
    assert width_circulant(6, 2, verify=True) == 4
    with pytest.raises(VerifyBudgetExceeded):
        width_circulant(10, 2, verify=True)
    with pytest.raises(BadParameters):
        width_circulant(4, 0)


def test_facet_volume_and_group():
    # d == 2 (mod 6) and odd m gives facet volume 2 and a non-cyclic group
    fv, group = facet_volume_and_group(8, 1)
    assert fv == 2 and group == "Z_38 x Z_2"
    fv, group = facet_volume_and_group(8, 2)
    assert fv == 1 and group.startswith("Z_")
    fv, group = facet_volume_and_group(4, 3)
    assert fv == 1
    fv, group = facet_volume_and_group(14, 5)
    assert fv == 2
    # oracle: gcd of the u-vector is the common facet volume
    for d in range(2, 21, 2):
        for m in range(1, 6):
            fv, _ = facet_volume_and_group(d, m)
            assert fv == math.gcd(*u_vector(d, m).entries), (d, m)


def test_circulant_to_cyclic_bridge():
    s4 = circulant_to_cyclic(4, 2)
    assert s4.volume == 101
    assert equivalent(s4, cyclotomic_simplex(4, 101))
    s6 = circulant_to_cyclic(6, 3)
    assert s6.volume == 6301
    assert equivalent(s6, cyclotomic_simplex(6, 6301))
    # cyclic-form emptiness must agree with the circulant criterion
    assert is_empty(s4) and is_empty_circulant(4, 2)
    assert is_empty(s6) and is_empty_circulant(6, 3)
    assert lattice_points_in(s6) == []
    with pytest.raises(NotCyclic):
        circulant_to_cyclic(8, 1)


def test_general_circulant_validation():
    with pytest.raises(DegenerateGenerator):
        GeneralCirculant((1, 2, -3))
    g = GeneralCirculant((1, 2, 0, -2))
    assert sum(g.generator) == 1


def test_skip_circulant():
    g = skip_circulant(5, 2, 3)
    assert g.generator == (1, 2, 0, 0, -2, 0)
    g2 = skip_circulant(8, 2, 3)
    assert len(g2.generator) == 9
    with pytest.raises(BadFactor):
        skip_circulant(5, 2, 4)  # 4 does not divide 6
    with pytest.raises(BadFactor):
        skip_circulant(5, 2, 6)  # quotient must be >= 2
    with pytest.raises(BadFactor):
        skip_circulant(5, 2, 1)
