"""Compare the compiled scan kernel, the numpy fallback and the exact-only path.

    python benchmarks/bench_kernel.py [--repeat N] [--skip-exact]
"""

import argparse
import time

from lpoly.kernel import available_backends
from lpoly.poly import PointSet
from lpoly.solver import solve

CASES = [(4, 20), (6, 20), (6, 25), (7, 26), (8, 30)]
# exact-only enumeration is far slower; keep it to the small cases
EXACT_LIMIT = 10_000


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--skip-exact", action="store_true")
    args = ap.parse_args()

    backends = available_backends()
    if args.skip_exact:
        backends.remove("exact")
    print(f"{'d':>2} {'k':>3} {'candidates':>11}  " + "  ".join(f"{b:>10}" for b in backends))
    for d, k in CASES:
        ps = PointSet.first_integers(k)
        cells, leads, count = [], set(), None
        for backend in backends:
            if backend == "exact" and count is not None and count > EXACT_LIMIT:
                cells.append(f"{'-':>10}")
                continue
            elapsed, r = best_of(lambda: solve(ps, d, backend=backend), args.repeat)
            count = r.candidates_enumerated
            leads.add(r.lead)
            cells.append(f"{elapsed:>9.3f}s")
        assert len(leads) == 1, "backends disagree"
        print(f"{d:>2} {k:>3} {count:>11}  " + "  ".join(cells))


if __name__ == "__main__":
    main()
