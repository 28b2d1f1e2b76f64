"""Closed-form extremal polynomials for degrees 1-4 on arithmetic progressions.

All formulas are stated for the progression {1, ..., k} with bound 1; a
bound M and step delta enter only through the factor M / delta**d.

The constructions work in the centred coordinate where the k points are
{-(k-1)/2, ..., (k-1)/2}.  There the extremal polynomial is even for even d
and odd for odd d, which leaves at most three unknown coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt

from .errors import NoMaximum, UnsupportedDegree
from .poly import Polynomial, RationalLike, parse_rational

__all__ = [
    "ClosedFormQuery",
    "QuarticScan",
    "lead_coefficient_closed_form",
    "closed_form_lead",
    "quartic_scan",
    "quartic_hint_points",
    "centered_closed_form",
    "closed_form_polynomial",
]


@dataclass(frozen=True)
class ClosedFormQuery:
    d: int
    k: int
    M: Fraction = Fraction(1)
    delta: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "M", parse_rational(self.M))
        object.__setattr__(self, "delta", parse_rational(self.delta))
        if not 1 <= self.d <= 4:
            raise UnsupportedDegree(
                f"closed forms cover degrees 1..4, got {self.d}; use solver.solve"
            )
        if self.k <= self.d:
            raise NoMaximum(self.d, self.k)
        if self.M <= 0 or self.delta <= 0:
            raise ValueError("M and delta must be positive")


@dataclass(frozen=True)
class QuarticScan:
    """Outcome of the d=4 scan over interior centred grid points."""

    lead: Fraction
    minimizers: tuple[Fraction, ...]
    # neighbours of the continuous minimiser (k-1)/(2 sqrt 2), for reference
    hint: tuple[Fraction, ...] = field(default=())


def _quartic_bound(k: int, x: Fraction) -> Fraction | None:
    n2 = (k - 1) ** 2
    if k % 2:
        den = x * x * n2 - 4 * x**4
        return Fraction(8) / den if den > 0 else None
    den = 16 * x**4 - 4 * (n2 + 1) * x * x + n2
    return Fraction(-32) / den if den < 0 else None


def quartic_hint_points(k: int) -> tuple[Fraction, ...]:
    """Floor/ceil neighbours of the continuous d=4 minimiser, exactly.

    Odd k: integers around (k-1)/(2 sqrt 2).  Even k: halves of the
    integers around (k-1)/sqrt 2.  No floating point is involved.
    """
    n2 = (k - 1) ** 2
    if k % 2:
        lo = isqrt(n2 // 8)
        hi = lo if 8 * lo * lo == n2 else lo + 1
        return tuple(sorted({Fraction(lo), Fraction(hi)}))
    lo = isqrt(n2 // 2)
    hi = lo if 2 * lo * lo == n2 else lo + 1
    return tuple(sorted({Fraction(lo, 2), Fraction(hi, 2)}))


def quartic_scan(k: int) -> QuarticScan:
    """Minimum of the binding d=4 lower-bound constraints over the grid.

    Scans every non-negative interior point of the centred grid (integers
    for odd k, half-odd integers for even k) and ignores points where the
    constraint carries no upper bound on the lead coefficient.
    """
    if k <= 4:
        raise NoMaximum(4, k)
    half = Fraction(k - 1, 2)
    if k % 2:
        grid = [Fraction(i) for i in range(1, (k - 1) // 2)]
    else:
        grid = [Fraction(2 * i + 1, 2) for i in range(1, (k - 1) // 2)]
    best: Fraction | None = None
    argmin: list[Fraction] = []
    for x in grid:
        assert 0 < x < half
        bound = _quartic_bound(k, x)
        if bound is None:
            continue
        if best is None or bound < best:
            best, argmin = bound, [x]
        elif bound == best:
            argmin.append(x)
    if best is None:
        raise AssertionError(f"no binding constraint for k={k}")
    return QuarticScan(best, tuple(argmin), quartic_hint_points(k))


def _unit_lead(d: int, k: int) -> Fraction:
    if d == 1:
        return Fraction(2, k - 1)
    if d == 2:
        if k % 2:
            return Fraction(8, (k - 1) ** 2)
        return Fraction(8, k * (k - 2))
    if d == 3:
        r = k % 4
        if r == 1:
            return Fraction(32, (k - 1) ** 3)
        if r == 3:
            return Fraction(32, (k + 1) * (k - 1) * (k - 3))
        # k = 0 or 2 (mod 4) share a formula
        return Fraction(32, k * (k - 1) * (k - 2))
    return quartic_scan(k).lead


def lead_coefficient_closed_form(q: ClosedFormQuery) -> Fraction:
    """Maximum lead coefficient of a degree-d polynomial bounded by M on
    the k-term progression with step delta."""
    return q.M / q.delta**q.d * _unit_lead(q.d, q.k)


def closed_form_lead(d: int, k: int, M: RationalLike = 1, delta: RationalLike = 1) -> Fraction:
    return lead_coefficient_closed_form(ClosedFormQuery(d, k, M, delta))


def centered_closed_form(d: int, k: int) -> Polynomial:
    """Extremal polynomial on the centred grid {-(k-1)/2, ..., (k-1)/2}."""
    a = _unit_lead(ClosedFormQuery(d, k).d, k)
    c = Fraction(k - 1, 2)
    if d == 1:
        return Polynomial((0, a))
    if d == 2:
        return Polynomial((1 - a * c * c, 0, a))
    if d == 3:
        a1 = (8 - a * (k - 1) ** 3) / (4 * (k - 1))
        return Polynomial((0, a1, 0, a))
    n2 = (k - 1) ** 2
    if k % 2:
        # touches +1 at the centre and at both ends
        return Polynomial((1, 0, -a * c * c, 0, a))
    # touches +1 at +-1/2 and at both ends
    return Polynomial((a * Fraction(n2, 16) + 1, 0, -a * Fraction(n2 + 1, 4), 0, a))


def closed_form_polynomial(d: int, k: int) -> Polynomial:
    """Extremal degree-d polynomial on {1, ..., k} (bound 1, step 1)."""
    return centered_closed_form(d, k).compose_affine(1, Fraction(-(k + 1), 2))
