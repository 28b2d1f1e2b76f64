"""Exit criteria.  Every comparison is exact; time limits are wall clock.

Run alone with ``pytest tests/test_acceptance.py``; the terminal summary
prints one PASS/FAIL line per criterion.
"""

import csv
import io
import time
from fractions import Fraction as F

import pytest

from golden import correction as published_correction
from lpoly.chebyshev import continuous_lead_bound, correction_term
from lpoly.cli import main
from lpoly.closed_forms import closed_form_lead
from lpoly.errors import NoMaximum
from lpoly.poly import PointSet
from lpoly.solver import solve, verify


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start


def test_criterion_1_golden_tables():
    cases = [(1, k) for k in range(2, 31)]
    cases += [(2, k) for k in range(3, 31)]
    cases += [(3, k) for k in range(4, 31)]
    cases += [(4, k) for k in range(5, 22)]
    mismatches = []
    with Timer() as t:
        for d, k in cases:
            L = solve(PointSet.first_integers(k), d).polynomial
            delta = correction_term(L, d, k).delta
            if delta != published_correction(d, k):
                mismatches.append((d, k, str(delta)))
    assert mismatches == []
    assert t.elapsed < 5.0


def test_criterion_2_closed_form_vs_enumeration():
    residues = set()
    with Timer() as t:
        for d in range(1, 5):
            for k in range(d + 1, 31):
                assert closed_form_lead(d, k) == solve(PointSet.first_integers(k), d).lead, (d, k)
                residues.add((d, k % (4 if d == 3 else 2)))
    # every congruence branch was exercised
    assert {(2, 0), (2, 1), (3, 0), (3, 1), (3, 2), (3, 3), (4, 0), (4, 1)} <= residues
    assert t.elapsed < 10.0


def test_criterion_3_scaling_law():
    with Timer() as t:
        for d in range(1, 5):
            for k in (5, 8, 11):
                unit = closed_form_lead(d, k)
                for M, delta in ((F(1), F(1)), (F(3), F(2)), (F(1, 2), F(1, 3))):
                    scaled = closed_form_lead(d, k, M, delta)
                    assert scaled == M / delta**d * unit
                    for start in (F(1), F(-7, 3)):
                        # bound M: multiply the unit-bound optimum by M
                        lead = solve(PointSet.progression(start, delta, k), d).lead
                        assert M * lead == scaled, (d, k, M, delta, start)
    assert t.elapsed < 2.0


def test_criterion_4_structural_certificates():
    failures = []
    with Timer() as t:
        for d in range(1, 7):
            for k in range(d + 1, 16):
                ps = PointSet.first_integers(k)
                rep = verify(solve(ps, d), ps, d)
                ok = (rep.terminal_ok and rep.bounded_ok and rep.alternation_ok
                      and rep.unique_max_ok and rep.sign_change_count == d and rep.passed)
                if not ok:
                    failures.append((d, k, rep))
    assert failures == []
    assert t.elapsed < 30.0


def test_criterion_5_chebyshev_floor():
    leads = {}
    for d in range(1, 7):
        for k in range(d + 1, 16):
            leads[d, k] = solve(PointSet.first_integers(k), d).lead
    with Timer() as t:
        for (d, k), lead in leads.items():
            assert lead >= F(2 ** (2 * d - 1), (k - 1) ** d) == continuous_lead_bound(d, 1, k)
        assert leads[2, 3] == continuous_lead_bound(2, 1, 3)
    assert t.elapsed < 1.0


@pytest.mark.parametrize("d, k", [(2, 2), (3, 2), (5, 4)])
def test_criterion_6_k_at_most_d(d, k):
    with pytest.raises(NoMaximum):
        solve(PointSet.first_integers(k), d)


def test_criterion_7_performance():
    with Timer() as small:
        r = solve(PointSet.first_integers(20), 6)
    assert r.candidates_enumerated == 8568
    assert small.elapsed < 1.0

    with Timer() as large:
        r = solve(PointSet.first_integers(30), 8)
    assert r.candidates_enumerated == 1_184_040
    assert verify(r, PointSet.first_integers(30), 8).passed
    assert large.elapsed < 60.0


@pytest.mark.parametrize("d, k", [(5, 6), (6, 7)])
def test_criterion_8_figure_instances(d, k, capsys):
    ps = PointSet.first_integers(k)
    assert verify(solve(ps, d), ps, d).passed
    code = main(["plotdata", "-d", str(d), "--start", "1", "--step", "1", "--count", str(k), "-n", "50"])
    out = capsys.readouterr().out
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert sum(r["kind"] == "sample" for r in rows) == 50
    assert sum(r["kind"] == "grid" for r in rows) == k
