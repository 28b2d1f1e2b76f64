from fractions import Fraction as F

import pytest

from lpoly.chebyshev import (
    chebyshev_T,
    continuous_lead_bound,
    correction_term,
    map_from_unit,
    map_to_unit,
)
from lpoly.errors import DegreeMismatch
from lpoly.poly import PointSet, Polynomial
from lpoly.solver import solve


def P(*coeffs):
    return Polynomial(tuple(F(c) for c in coeffs))


@pytest.mark.parametrize("d, expected", [
    (0, P(1)),
    (1, P(0, 1)),
    (2, P(-1, 0, 2)),
    (3, P(0, -3, 0, 4)),
    (4, P(1, 0, -8, 0, 8)),
    (5, P(0, 5, 0, -20, 0, 16)),
])
def test_chebyshev_T(d, expected):
    assert chebyshev_T(d) == expected


def test_negative_degree():
    with pytest.raises(ValueError):
        chebyshev_T(-1)


@pytest.mark.parametrize("d", range(13))
def test_endpoint_values(d):
    T = chebyshev_T(d)
    assert T(1) == 1
    assert T(-1) == (-1) ** d


@pytest.mark.parametrize("d", range(1, 13))
def test_lead(d):
    assert chebyshev_T(d).lead == 2 ** (d - 1)


@pytest.mark.parametrize("m", [1, 2, 3])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_nesting(m, n):
    Tm, Tn = chebyshev_T(m), chebyshev_T(n)
    composed = Polynomial.zero()
    power = Polynomial.constant(1)
    for c in Tm.coefficients:
        composed = composed + power.scale(c)
        power = power * Tn
    assert composed == chebyshev_T(m * n)


@pytest.mark.parametrize("xs, expected", [
    ((-1, 1), (F(1), F(0))),
    ((1, 2, 3), (F(1), F(-2))),
    (tuple(range(1, 8)), (F(1, 3), F(-4, 3))),
])
def test_map_to_unit(xs, expected):
    assert map_to_unit(PointSet(xs)) == expected


@pytest.mark.parametrize("k, expected", [
    (3, (F(1), F(2))),
    (2, (F(1, 2), F(3, 2))),
    (6, (F(5, 2), F(7, 2))),
])
def test_map_from_unit(k, expected):
    assert map_from_unit(k) == expected


@pytest.mark.parametrize("k", range(2, 15))
def test_maps_are_inverse(k):
    a, b = map_to_unit(PointSet.first_integers(k))
    c, e = map_from_unit(k)
    # s(t(x)) = a (c x + e) + b
    assert (a * c, a * e + b) == (1, 0)


@pytest.mark.parametrize("d, x1, xk, expected", [
    (1, -1, 1, F(1)),
    (2, 1, 3, F(2)),
    (4, 1, 5, F(1, 2)),
])
def test_continuous_lead_bound(d, x1, xk, expected):
    assert continuous_lead_bound(d, x1, xk) == expected


def test_continuous_bound_matches_stretched_chebyshev():
    ps = PointSet((F(-3, 2), 0, F(7, 3)))
    a, b = map_to_unit(ps)
    for d in range(1, 7):
        stretched = chebyshev_T(d).compose_affine(a, b)
        assert stretched.lead == continuous_lead_bound(d, ps.xs[0], ps.xs[-1])


@pytest.mark.parametrize("d, k, expected", [
    (2, 5, Polynomial.zero()),
    (4, 5, P(0, 0, -1, 0, 1).scale(F(8, 3))),
    (3, 6, P(0, -1, 0, 1).scale(F(1, 6))),
])
def test_correction_term(d, k, expected):
    L = solve(PointSet.first_integers(k), d).polynomial
    ct = correction_term(L, d, k)
    assert ct.delta == expected
    assert ct.vanishes_at_unit_endpoints()


def test_correction_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        correction_term(P(7, -8, 2), 3, 3)


@pytest.mark.parametrize("d", range(1, 7))
@pytest.mark.parametrize("k", [8, 9, 12])
def test_correction_vanishes_at_endpoints(d, k):
    L = solve(PointSet.first_integers(k), d).polynomial
    ct = correction_term(L, d, k)
    assert ct.delta.degree <= d
    assert ct.vanishes_at_unit_endpoints()
