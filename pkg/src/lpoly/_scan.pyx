# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled candidate scan for the alternation-set enumeration.

Same contract as ``lpoly._scan_numpy.scan_candidates``.
"""

from libc.math cimport fabs
from libc.stdlib cimport malloc, free


def scan_candidates(const double[:, ::1] diff, int d, double slack):
    """Enumerate every alternation node set and drop the certainly infeasible.

    ``diff[j, m]`` holds (x_j - x_m) / (x_k - x_1) rounded once to double.
    Returns ``(enumerated, survivors)`` where survivors are node index
    tuples, in lexicographic order, whose interpolant might satisfy
    |Q(x_j)| <= 1 on every point.  Rejection happens only when the float
    value exceeds 1 by more than ``slack * sum_i |l_i(x_j)|``.
    """
    cdef Py_ssize_t k = diff.shape[0]
    cdef int r = d - 1
    cdef int n = d + 1
    cdef int *nodes = <int *> malloc(n * sizeof(int))
    cdef double *w = <double *> malloc(n * sizeof(double))
    cdef char *is_node = <char *> malloc(k * sizeof(char))
    if nodes == NULL or w == NULL or is_node == NULL:
        free(nodes); free(w); free(is_node)
        raise MemoryError()

    cdef long long enumerated = 0
    cdef int i, m, j, jj, last_bad = -1
    cdef double p, t, v, om, s, sa, sgn
    cdef bint ok
    survivors = []

    try:
        for j in range(k):
            is_node[j] = 0
        nodes[0] = 0
        nodes[d] = <int>(k - 1)
        for i in range(r):
            nodes[i + 1] = i + 1

        while True:
            enumerated += 1
            for i in range(n):
                is_node[nodes[i]] = 1
            for i in range(n):
                p = 1.0
                for m in range(n):
                    if m != i:
                        p *= diff[nodes[i], nodes[m]]
                sgn = 1.0 if (d - i) % 2 == 0 else -1.0
                w[i] = sgn / p

            ok = True
            for jj in range(-1, k):
                if jj < 0:
                    j = last_bad
                    if j < 0:
                        continue
                else:
                    j = jj
                    if j == last_bad:
                        continue
                if is_node[j]:
                    continue
                om = 1.0
                s = 0.0
                sa = 0.0
                for i in range(n):
                    t = diff[j, nodes[i]]
                    om *= t
                    v = w[i] / t
                    s += v
                    sa += fabs(v)
                # NaN compares false and is kept for the exact pass
                if fabs(om * s) - slack * fabs(om) * sa > 1.0:
                    ok = False
                    last_bad = j
                    break
            if ok:
                survivors.append(tuple([nodes[i] for i in range(n)]))
            for i in range(n):
                is_node[nodes[i]] = 0

            # next (d-1)-subset of the interior indices 1..k-2
            i = r
            while i >= 1 and nodes[i] == <int>(k - 2) - (r - i):
                i -= 1
            if i < 1:
                break
            nodes[i] += 1
            for m in range(i + 1, r + 1):
                nodes[m] = nodes[m - 1] + 1
    finally:
        free(nodes)
        free(w)
        free(is_node)
    return int(enumerated), survivors
