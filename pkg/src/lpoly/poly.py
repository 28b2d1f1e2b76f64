"""Exact rational polynomials, point sets and Newton interpolation.

Every scalar is a :class:`fractions.Fraction`; nothing in here touches
floating point.  Polynomials are dense and immutable, stored lowest degree
first.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import DegenerateMap, DuplicateAbscissa, ZeroPolynomial

RationalLike = Union[Fraction, int, str]

__all__ = [
    "Polynomial",
    "PointSet",
    "parse_rational",
    "format_rational",
    "evaluate",
    "interpolate",
    "affine_compose",
    "add",
    "scale",
    "lead_coefficient",
    "degree",
]


def parse_rational(value: RationalLike) -> Fraction:
    """Parse ``"p/q"``, ``"p"``, a terminating decimal string or an int."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def format_rational(value: Fraction) -> str:
    """Canonical ``"p/q"`` string, or ``"p"`` when the denominator is 1."""
    return str(Fraction(value))


@dataclass(frozen=True)
class Polynomial:
    coefficients: tuple[Fraction, ...] = ()

    def __post_init__(self):
        cs = [parse_rational(c) for c in self.coefficients]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coefficients", tuple(cs))

    @classmethod
    def zero(cls) -> Polynomial:
        return cls(())

    @classmethod
    def constant(cls, c: RationalLike) -> Polynomial:
        return cls((c,))

    @classmethod
    def x(cls) -> Polynomial:
        return cls((0, 1))

    @classmethod
    def from_strings(cls, items: Iterable[str]) -> Polynomial:
        return cls(tuple(parse_rational(s) for s in items))

    def to_strings(self) -> list[str]:
        return [format_rational(c) for c in self.coefficients]

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def lead(self) -> Fraction:
        if not self.coefficients:
            raise ZeroPolynomial("the zero polynomial has no lead coefficient")
        return self.coefficients[-1]

    def __call__(self, x: RationalLike) -> Fraction:
        x = parse_rational(x)
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __add__(self, other: Polynomial) -> Polynomial:
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(tuple(out))

    def __neg__(self) -> Polynomial:
        return Polynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other: Polynomial) -> Polynomial:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            if self.is_zero() or other.is_zero():
                return Polynomial.zero()
            out = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
            for i, a in enumerate(self.coefficients):
                if a == 0:
                    continue
                for j, b in enumerate(other.coefficients):
                    out[i + j] += a * b
            return Polynomial(tuple(out))
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def scale(self, c: RationalLike) -> Polynomial:
        c = parse_rational(c)
        return Polynomial(tuple(c * a for a in self.coefficients))

    def compose_affine(self, a: RationalLike, b: RationalLike) -> Polynomial:
        """Return ``q`` with ``q(x) = self(a*x + b)``."""
        a, b = parse_rational(a), parse_rational(b)
        if a == 0:
            raise DegenerateMap("affine map with zero slope is not invertible")
        # Horner in the polynomial ring: acc = acc*(a x + b) + c
        acc: list[Fraction] = []
        for c in reversed(self.coefficients):
            nxt = [Fraction(0)] * (len(acc) + 1)
            for i, v in enumerate(acc):
                nxt[i] += v * b
                nxt[i + 1] += v * a
            nxt[0] += c
            acc = nxt
        return Polynomial(tuple(acc))

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        terms = []
        for i in range(len(self.coefficients) - 1, -1, -1):
            c = self.coefficients[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mono and abs(c) == 1:
                body = mono
            elif mono:
                body = f"{format_rational(abs(c))}*{mono}"
            else:
                body = format_rational(abs(c))
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


@dataclass(frozen=True)
class PointSet:
    """A strictly increasing list of at least two rational abscissae."""

    xs: tuple[Fraction, ...]

    def __post_init__(self):
        xs = tuple(parse_rational(x) for x in self.xs)
        if len(xs) < 2:
            raise ValueError("a point set needs at least two points")
        for lo, hi in zip(xs, xs[1:]):
            if not lo < hi:
                raise ValueError(f"points must be strictly increasing ({lo} then {hi})")
        object.__setattr__(self, "xs", xs)

    @classmethod
    def progression(cls, start: RationalLike, step: RationalLike, count: int) -> PointSet:
        start, step = parse_rational(start), parse_rational(step)
        if step <= 0:
            raise ValueError("progression step must be positive")
        return cls(tuple(start + i * step for i in range(count)))

    @classmethod
    def first_integers(cls, k: int) -> PointSet:
        """The set {1, 2, ..., k}."""
        return cls.progression(1, 1, k)

    @property
    def k(self) -> int:
        return len(self.xs)

    def __len__(self) -> int:
        return len(self.xs)

    def __iter__(self):
        return iter(self.xs)

    def __getitem__(self, i):
        return self.xs[i]

    def arithmetic_step(self) -> Fraction | None:
        """Common difference if the points form a progression, else None."""
        step = self.xs[1] - self.xs[0]
        for lo, hi in zip(self.xs, self.xs[1:]):
            if hi - lo != step:
                return None
        return step

    def is_first_integers(self) -> bool:
        return self.xs[0] == 1 and self.arithmetic_step() == 1

    def affine_image(self, alpha: RationalLike, beta: RationalLike) -> PointSet:
        alpha, beta = parse_rational(alpha), parse_rational(beta)
        if alpha <= 0:
            raise ValueError("order-preserving image needs a positive slope")
        return PointSet(tuple(alpha * x + beta for x in self.xs))


def evaluate(p: Polynomial, x: RationalLike) -> Fraction:
    return p(x)


def interpolate(points: Sequence[tuple[RationalLike, RationalLike]]) -> Polynomial:
    """Unique polynomial of degree <= n-1 through ``n`` points.

    Builds the Newton divided-difference table in place and expands the
    Newton form into the monomial basis by nested multiplication.
    """
    if not points:
        raise ValueError("interpolation needs at least one point")
    xs = [parse_rational(x) for x, _ in points]
    coef = [parse_rational(y) for _, y in points]
    if len(set(xs)) != len(xs):
        raise DuplicateAbscissa("interpolation nodes must be distinct")
    n = len(xs)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])

    # p = c[n-1]; p = p*(x - xs[i]) + c[i] for i = n-2 .. 0
    acc = [coef[n - 1]]
    for i in range(n - 2, -1, -1):
        xi = xs[i]
        nxt = [Fraction(0)] * (len(acc) + 1)
        for m, v in enumerate(acc):
            nxt[m + 1] += v
            nxt[m] -= v * xi
        nxt[0] += coef[i]
        acc = nxt
    return Polynomial(tuple(acc))


def affine_compose(p: Polynomial, a: RationalLike, b: RationalLike) -> Polynomial:
    return p.compose_affine(a, b)


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def scale(p: Polynomial, c: RationalLike) -> Polynomial:
    return p.scale(c)


def lead_coefficient(p: Polynomial) -> Fraction:
    return p.lead


def degree(p: Polynomial) -> int:
    return p.degree
