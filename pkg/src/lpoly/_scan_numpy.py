"""Vectorised fallback for the candidate scan, used when the compiled
extension is not built."""

from __future__ import annotations

from itertools import combinations, islice

import numpy as np

CHUNK = 1 << 16


def scan_candidates(diff: np.ndarray, d: int, slack: float):
    """Same contract as the compiled ``lpoly._scan.scan_candidates``."""
    k = diff.shape[0]
    n = d + 1
    signs = np.array([1.0 if (d - i) % 2 == 0 else -1.0 for i in range(n)])
    diag = np.arange(n)
    combos = combinations(range(1, k - 1), d - 1)
    enumerated = 0
    survivors: list[tuple[int, ...]] = []

    while True:
        block = list(islice(combos, CHUNK))
        if not block:
            break
        enumerated += len(block)
        inner = np.array(block, dtype=np.intp).reshape(len(block), d - 1)
        nodes = np.empty((len(block), n), dtype=np.intp)
        nodes[:, 0] = 0
        nodes[:, -1] = k - 1
        nodes[:, 1:-1] = inner

        gram = diff[nodes[:, :, None], nodes[:, None, :]]
        gram[:, diag, diag] = 1.0
        w = signs / gram.prod(axis=2)

        alive = np.arange(len(block))
        for j in range(k):
            if alive.size == 0:
                break
            nd = nodes[alive]
            t = diff[j][nd]
            hit = (nd == j).any(axis=1)
            with np.errstate(divide="ignore", invalid="ignore"):
                om = t.prod(axis=1)
                v = w[alive] / t
                s = v.sum(axis=1)
                sa = np.abs(v).sum(axis=1)
                excess = np.abs(om * s) - slack * np.abs(om) * sa
                bad = (excess > 1.0) & ~hit
            alive = alive[~bad]
        survivors.extend(tuple(int(i) for i in row) for row in nodes[alive])

    return enumerated, survivors
