# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled batch kernels, mirroring cuberow._pykernels function for function.

The pure module is the reference; this one exists because the exhaustive
self-checks sweep every cut of rows up to 2**12 nodes (and every fine cut up
to 2**10), where the interpreted inner loops start to dominate.  Inputs are
assumed validated by the callers.
"""

from libc.stdlib cimport free, malloc

BACKEND_NAME = "compiled"


def accumulate_spans(Py_ssize_t num_cuts, list lows, list highs):
    """Coverage count at each cut index for inclusive ranges [low, high]."""
    cdef Py_ssize_t nspans = len(lows)
    cdef long long* diff = <long long*> malloc((num_cuts + 1) * sizeof(long long))
    if diff == NULL:
        raise MemoryError()
    cdef Py_ssize_t idx
    cdef long long low, high, running
    try:
        for idx in range(num_cuts + 1):
            diff[idx] = 0
        for idx in range(nspans):
            low = lows[idx]
            high = highs[idx]
            diff[low] += 1
            diff[high + 1] -= 1
        counts = []
        running = 0
        for idx in range(num_cuts):
            running += diff[idx]
            counts.append(running)
        return counts
    finally:
        free(diff)


def density_profile(long long n):
    """Crossing count at every intercolumn cut 0..n of an n-node row."""
    cdef int dims = 0
    while (<long long> 1) << dims < n:
        dims += 1
    cdef long long cut, total, half, period, term
    cdef int dim, block
    counts = []
    for cut in range(n + 1):
        total = 0
        for dim in range(1, dims + 1):
            half = (<long long> 1) << (dim - 1)
            period = half << 1
            if cut == 0:
                continue  # C division truncates; the cut-0 term is 0 anyway
            block = <int> (((cut - 1) / half) & 1)
            term = (cut * (1 - 2 * block)) % period
            if term < 0:
                term += period
            total += term
        counts.append(total)
    return counts


def bitsum_profile(long long n):
    """Interior-cut densities via the bit-decomposition form, 0 at both ends."""
    cdef int dims = 0
    while (<long long> 1) << dims < n:
        dims += 1
    cdef long long excess[64]
    cdef long long cut, acc
    cdef int pos
    counts = [0] * (n + 1)
    for cut in range(1, n):
        excess[dims] = 0
        for pos in range(dims, 0, -1):
            if (cut >> (pos - 1)) & 1:
                excess[pos - 1] = excess[pos] + 1
            else:
                excess[pos - 1] = excess[pos] - 1
        acc = 2 * (excess[0] + n - 1)
        for pos in range(1, dims):
            if (cut >> (pos - 1)) & 1:
                acc -= ((<long long> 1) << pos) * excess[pos]
            else:
                acc += ((<long long> 1) << pos) * excess[pos]
        counts[cut] = acc // 4
    return counts
