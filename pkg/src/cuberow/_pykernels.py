"""Pure-Python batch kernels.

Reference implementations of the three inner loops the package leans on for
exhaustive sweeps.  `cuberow._speedups` carries the same functions compiled
with Cython; :mod:`cuberow.kernels` picks whichever is importable.  Inputs
are assumed validated by the callers.
"""

from __future__ import annotations

BACKEND_NAME = "pure-python"


def accumulate_spans(num_cuts: int, lows: list[int], highs: list[int]) -> list[int]:
    """Coverage count at each cut index for inclusive ranges [low, high].

    Plain difference-array accumulation: every range contributes +1 at its
    low end and -1 just past its high end, then a prefix sum recovers the
    per-cut totals.  Requires 0 <= low <= high < num_cuts for every range.
    """
    diff = [0] * (num_cuts + 1)
    for low, high in zip(lows, highs):
        diff[low] += 1
        diff[high + 1] -= 1
    counts = []
    running = 0
    for index in range(num_cuts):
        running += diff[index]
        counts.append(running)
    return counts


def density_profile(n: int) -> list[int]:
    """Crossing count at every intercolumn cut 0..n of an n-node row.

    Evaluates the per-dimension ramp formula at each cut and sums over the
    dimensions.  n must be a power of two.
    """
    dims = n.bit_length() - 1
    counts = []
    for cut in range(n + 1):
        total = 0
        for dim in range(1, dims + 1):
            half = 1 << (dim - 1)
            sign = 1 - 2 * (((cut - 1) // half) & 1)
            total += (cut * sign) % (half << 1)
        counts.append(total)
    return counts


def bitsum_profile(n: int) -> list[int]:
    """Interior-cut densities via the bit-decomposition form, 0 at both ends.

    For each interior cut the suffix excess (ones minus zeros above each bit
    position) is built in one right-to-left pass, then combined with the
    cut's bits.  The running total is kept scaled by 4 so everything stays
    integral.  n must be a power of two.
    """
    dims = n.bit_length() - 1
    counts = [0] * (n + 1)
    for cut in range(1, n):
        excess = [0] * (dims + 1)
        for pos in range(dims, 0, -1):
            excess[pos - 1] = excess[pos] + (1 if (cut >> (pos - 1)) & 1 else -1)
        acc = 2 * (excess[0] + n - 1)
        for pos in range(1, dims):
            signed = 1 - 2 * ((cut >> (pos - 1)) & 1)
            acc += (1 << pos) * signed * excess[pos]
        counts[cut] = acc // 4
    return counts
