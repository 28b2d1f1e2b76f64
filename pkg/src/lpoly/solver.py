"""Extremal polynomial on an arbitrary finite point set by enumeration.

The extremal degree-d polynomial takes the alternating values
(-1)**(d+1-i) on d+1 points b_1 < ... < b_{d+1} of the set, with b_1 = x_1
and b_{d+1} = x_k.  Enumerating every choice of the d-1 inner points,
interpolating, and keeping the bounded interpolant with the largest lead
coefficient therefore finds it.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

from .errors import InternalInconsistency, NoMaximum
from .kernel import candidate_node_sets
from .poly import PointSet, Polynomial, interpolate

__all__ = [
    "AlternationCertificate",
    "ExtremalResult",
    "VerificationReport",
    "alternating_values",
    "solve",
    "verify",
    "sign_changes",
]

log = logging.getLogger(__name__)


def alternating_values(d: int) -> tuple[int, ...]:
    """Values (-1)**(d+1-i) for i = 1..d+1: starts at (-1)**d, ends at +1."""
    return tuple(1 if (d - i) % 2 == 0 else -1 for i in range(d + 1))


@dataclass(frozen=True)
class AlternationCertificate:
    points: tuple[Fraction, ...]

    @property
    def degree(self) -> int:
        return len(self.points) - 1

    @property
    def values(self) -> tuple[int, ...]:
        return alternating_values(self.degree)


@dataclass(frozen=True)
class ExtremalResult:
    polynomial: Polynomial
    lead: Fraction
    certificate: AlternationCertificate
    candidates_enumerated: int
    candidates_feasible: int
    # node sets of every feasible candidate, in enumeration order
    feasible_nodes: tuple[tuple[Fraction, ...], ...] = ()


@dataclass(frozen=True)
class VerificationReport:
    terminal_ok: bool
    bounded_ok: bool
    alternation_ok: bool
    sign_change_count: int
    unique_max_ok: bool
    passed: bool

    def as_dict(self) -> dict:
        return {
            "terminal_ok": self.terminal_ok,
            "bounded_ok": self.bounded_ok,
            "alternation_ok": self.alternation_ok,
            "sign_change_count": self.sign_change_count,
            "unique_max_ok": self.unique_max_ok,
            "passed": self.passed,
        }


def _feasible(q: Polynomial, d: int, xs: tuple[Fraction, ...]) -> bool:
    if q.degree != d or q.lead <= 0:
        return False
    return all(abs(q(x)) <= 1 for x in xs)


def solve(ps: PointSet, d: int, backend: str = "auto") -> ExtremalResult:
    """Degree-d polynomial with maximum lead coefficient bounded by 1 on ``ps``.

    ``backend`` picks the float prefilter: ``"auto"`` (compiled kernel when
    built, else numpy), ``"cython"``, ``"numpy"``, or ``"exact"`` to
    interpolate every candidate in rational arithmetic.  All acceptance
    decisions are exact whichever backend runs.
    """
    if d < 1:
        raise ValueError("degree must be at least 1")
    if ps.k <= d:
        raise NoMaximum(d, ps.k)

    xs = ps.xs
    ys = alternating_values(d)
    enumerated, node_sets = candidate_node_sets(ps, d, backend)

    feasible: list[tuple[tuple[Fraction, ...], Polynomial]] = []
    checked = 0
    for idx in node_sets:
        checked += 1
        nodes = tuple(xs[i] for i in idx)
        q = interpolate(list(zip(nodes, ys)))
        if _feasible(q, d, xs):
            feasible.append((nodes, q))
    log.debug("d=%d k=%d: %d enumerated, %d checked exactly, %d feasible",
              d, ps.k, enumerated, checked, len(feasible))

    if not feasible:
        raise InternalInconsistency(f"no feasible candidate for d={d}, k={ps.k}")
    best = max(q.lead for _, q in feasible)
    winners = [(nodes, q) for nodes, q in feasible if q.lead == best]
    poly = winners[0][1]
    if any(q != poly for _, q in winners[1:]):
        raise InternalInconsistency("two distinct polynomials attain the maximum lead")

    return ExtremalResult(
        polynomial=poly,
        lead=best,
        certificate=AlternationCertificate(winners[0][0]),
        candidates_enumerated=enumerated,
        candidates_feasible=len(feasible),
        feasible_nodes=tuple(nodes for nodes, _ in feasible),
    )


def sign_changes(values) -> int:
    """Strict sign changes in a sequence, zeros skipped."""
    count = 0
    prev = 0
    for v in values:
        if v == 0:
            continue
        s = 1 if v > 0 else -1
        if prev and s != prev:
            count += 1
        prev = s
    return count


def verify(result: ExtremalResult, ps: PointSet, d: int) -> VerificationReport:
    """Re-check the structural properties of a solved instance exactly.

    Failures are reported through the flags, never raised.
    """
    L = result.polynomial
    xs = ps.xs
    vals = [L(x) for x in xs]

    terminal_ok = L.degree == d and vals[0] == (-1) ** d and vals[-1] == 1
    bounded_ok = all(abs(v) <= 1 for v in vals)

    pts = result.certificate.points
    members = set(xs)
    alternation_ok = (
        len(pts) == d + 1
        and all(a < b for a, b in zip(pts, pts[1:]))
        and pts[0] == xs[0]
        and pts[-1] == xs[-1]
        and all(p in members for p in pts)
        and all(L(p) == y for p, y in zip(pts, alternating_values(d)))
    )

    count = sign_changes(vals)

    unique_max_ok = (
        L.degree == d
        and result.lead == L.lead
        and result.candidates_feasible == len(result.feasible_nodes) >= 1
    )
    if unique_max_ok:
        attained = False
        ys = alternating_values(d)
        for nodes in result.feasible_nodes:
            q = interpolate(list(zip(nodes, ys)))
            if q.lead > result.lead or (q.lead == result.lead and q != L):
                unique_max_ok = False
                break
            attained = attained or q == L
        unique_max_ok = unique_max_ok and attained

    passed = terminal_ok and bounded_ok and alternation_ok and unique_max_ok and count == d
    return VerificationReport(terminal_ok, bounded_ok, alternation_ok, count, unique_max_ok, passed)
