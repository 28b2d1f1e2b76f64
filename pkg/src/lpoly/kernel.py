"""Backend selection for the candidate scan.

The compiled extension ``lpoly._scan`` is preferred; if it was not built
the numpy implementation is used.  Set ``LPOLY_KERNEL=numpy`` to force the
fallback.
"""

from __future__ import annotations

import os
from itertools import combinations
from math import comb
from typing import Iterator

import numpy as np

from . import _scan_numpy
from .poly import PointSet

try:
    if os.environ.get("LPOLY_KERNEL", "").lower() == "numpy":
        raise ImportError("numpy kernel forced")
    from . import _scan as _compiled
except ImportError:
    _compiled = None

BACKEND = "cython" if _compiled is not None else "numpy"

_UNIT_ROUNDOFF = 2.0**-53
# below this the barycentric weights risk overflow; scan exactly instead
_MIN_SCALED_GAP_POWER = 1e-250


def available_backends() -> list[str]:
    out = ["numpy", "exact"]
    if _compiled is not None:
        out.insert(0, "cython")
    return out


def scaled_differences(ps: PointSet) -> np.ndarray:
    """(x_j - x_m) / (x_k - x_1), each entry rounded once from the exact value."""
    span = ps.xs[-1] - ps.xs[0]
    k = ps.k
    out = np.empty((k, k), dtype=np.float64)
    for j, xj in enumerate(ps.xs):
        for m, xm in enumerate(ps.xs):
            out[j, m] = float((xj - xm) / span)
    return out


def rounding_slack(d: int) -> float:
    """Relative error factor for the barycentric evaluation of a degree-d
    interpolant; covers the input rounding of every difference, the weight
    products, the quotient, the sum and the final product, times a safety
    factor of 4."""
    n = 5 * d + 8
    return 4.0 * n * _UNIT_ROUNDOFF / (1.0 - n * _UNIT_ROUNDOFF)


def float_safe(ps: PointSet, d: int) -> bool:
    span = ps.xs[-1] - ps.xs[0]
    gap = min(b - a for a, b in zip(ps.xs, ps.xs[1:])) / span
    return float(gap) ** d > _MIN_SCALED_GAP_POWER


def candidate_node_sets(ps: PointSet, d: int, backend: str = "auto") -> tuple[int, Iterator[tuple[int, ...]]]:
    """Return ``(enumerated, node index tuples needing an exact check)``.

    ``backend="exact"`` skips the float prefilter and yields every node set.
    """
    k = ps.k
    if backend == "auto":
        backend = BACKEND if float_safe(ps, d) else "exact"
    if backend == "exact":
        count = comb(k - 2, d - 1)
        gen = ((0, *c, k - 1) for c in combinations(range(1, k - 1), d - 1))
        return count, gen
    if backend == "cython":
        if _compiled is None:
            raise RuntimeError("compiled kernel is not available")
        scan = _compiled.scan_candidates
    elif backend == "numpy":
        scan = _scan_numpy.scan_candidates
    else:
        raise ValueError(f"unknown backend {backend!r}")
    enumerated, survivors = scan(scaled_differences(ps), d, rounding_slack(d))
    return enumerated, iter(survivors)
