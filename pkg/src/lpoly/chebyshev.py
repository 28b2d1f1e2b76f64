"""Chebyshev T-polynomials and the maps between [x_1, x_k] and [-1, 1]."""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction

from .errors import DegreeMismatch
from .poly import PointSet, Polynomial, RationalLike, parse_rational

__all__ = [
    "CorrectionTerm",
    "chebyshev_T",
    "map_to_unit",
    "map_from_unit",
    "continuous_lead_bound",
    "correction_term",
]

_T_CACHE: list[Polynomial] = [Polynomial.constant(1), Polynomial.x()]
_T_LOCK = threading.Lock()


def chebyshev_T(d: int) -> Polynomial:
    """T_d from the three-term recurrence ``T_{n+1} = 2x T_n - T_{n-1}``."""
    if d < 0:
        raise ValueError("Chebyshev degree must be non-negative")
    if d < len(_T_CACHE):
        return _T_CACHE[d]
    with _T_LOCK:
        two_x = Polynomial((0, 2))
        while len(_T_CACHE) <= d:
            _T_CACHE.append(two_x * _T_CACHE[-1] - _T_CACHE[-2])
    return _T_CACHE[d]


def map_to_unit(ps: PointSet) -> tuple[Fraction, Fraction]:
    """Coefficients ``(a, b)`` of s(x) = a x + b sending x_1 -> -1, x_k -> 1."""
    x1, xk = ps.xs[0], ps.xs[-1]
    width = xk - x1
    return Fraction(2) / width, -(xk + x1) / width


def map_from_unit(k: int) -> tuple[Fraction, Fraction]:
    """Coefficients of t(x) = (k-1)/2 x + (k+1)/2, sending [-1, 1] onto [1, k]."""
    if k < 2:
        raise ValueError("need k >= 2")
    return Fraction(k - 1, 2), Fraction(k + 1, 2)


def continuous_lead_bound(d: int, x1: RationalLike, xk: RationalLike) -> Fraction:
    """Lead coefficient of T_d stretched onto [x1, xk]: 2^(2d-1) / (xk-x1)^d.

    Bounding on the whole interval is stronger than bounding on a finite
    subset, so this never exceeds the discrete optimum.
    """
    if d < 1:
        raise ValueError("degree must be at least 1")
    x1, xk = parse_rational(x1), parse_rational(xk)
    if not xk > x1:
        raise ValueError("need xk > x1")
    return Fraction(2 ** (2 * d - 1)) / (xk - x1) ** d


@dataclass(frozen=True)
class CorrectionTerm:
    """``L(t(x)) - T_d(x)`` for an extremal polynomial L on {1..k}."""

    delta: Polynomial
    d: int
    k: int

    def vanishes_at_unit_endpoints(self) -> bool:
        return self.delta(1) == 0 and self.delta(-1) == 0


def correction_term(L: Polynomial, d: int, k: int) -> CorrectionTerm:
    if L.degree != d:
        raise DegreeMismatch(f"expected degree {d}, got {L.degree}")
    a, b = map_from_unit(k)
    return CorrectionTerm(L.compose_affine(a, b) - chebyshev_T(d), d, k)
