"""Exact wire-density analysis for a row of hypercube nodes.

A row holds the 2**d nodes of a binary hypercube, one node per column, with
node u sitting in column u.  Every pair of nodes whose labels differ in one
bit is joined by a horizontal wire.  This module answers, in closed form, how
many wires cross each vertical cutline between columns, where that count
peaks, and at exactly which cuts the peak is attained.  Everything here is
formula-driven; :mod:`cuberow.oracle` recomputes the same quantities by brute
force so the two routes can be checked against each other.

Cut positions are plain integers: cut ``i`` has ``i`` node columns to its
left, so ``i = 0`` and ``i = n`` are the (always empty) outer cuts.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from cuberow import kernels
from cuberow.errors import (
    DegenerateRowError,
    InvalidCutError,
    InvalidDimensionError,
    RowSizeError,
)

# Contract cap: every operation is exact up to this many nodes.  Density
# values stay far below 2**63, but inputs beyond the cap are rejected rather
# than silently accepted.
MAX_NODES = 2**30


@dataclass(frozen=True)
class HypercubeRow:
    """A single-row layout instance: ``n = 2**dims`` nodes, one per column."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise RowSizeError(f"node count must be positive, got {self.n}")
        if self.n & (self.n - 1):
            raise RowSizeError(f"node count must be a power of two, got {self.n}")
        if self.n > MAX_NODES:
            raise RowSizeError(f"node count {self.n} exceeds the supported cap {MAX_NODES}")

    @property
    def dims(self) -> int:
        """Number of hypercube dimensions, log2 of the node count."""
        return self.n.bit_length() - 1


@dataclass(frozen=True)
class BitView:
    """Bit-indexed view of a nonnegative integer over a fixed width.

    Positions count from 1 at the right end.  The view provides the three
    bit statistics the density formulas are built from: single bits, the
    ones-minus-zeros excess above a position, and the trailing-zero run.
    """

    value: int
    width: int

    def __post_init__(self):
        if self.width < 0:
            raise ValueError(f"width must be nonnegative, got {self.width}")
        if not 0 <= self.value < (1 << self.width):
            raise ValueError(f"value {self.value} does not fit in {self.width} bits")

    def bit(self, position: int) -> int:
        if not 1 <= position <= self.width:
            raise ValueError(f"bit position {position} outside 1..{self.width}")
        return (self.value >> (position - 1)) & 1

    def excess_above(self, position: int) -> int:
        """Ones minus zeros among the bits strictly above ``position``.

        ``position`` may be 0 (statistic over the whole width) through
        ``width`` (empty range, always 0).
        """
        if not 0 <= position <= self.width:
            raise ValueError(f"position {position} outside 0..{self.width}")
        span = self.width - position
        ones = bin(self.value >> position).count("1")
        return 2 * ones - span

    @property
    def trailing_zeros(self) -> int:
        """Length of the zero run at the right end; ``width`` when value is 0."""
        if self.value == 0:
            return self.width
        return (self.value & -self.value).bit_length() - 1


def _check_cut(row: HypercubeRow, cut: int) -> None:
    if not 0 <= cut <= row.n:
        raise InvalidCutError(f"cut {cut} outside 0..{row.n}")


def dimension_link_count(row: HypercubeRow, cut: int, dim: int) -> int:
    """Number of dimension-``dim`` wires crossing intercolumn ``cut``.

    A dimension-``dim`` wire spans ``2**(dim-1)`` columns, so the count ramps
    from 0 up to ``2**(dim-1)`` and back down, repeating across the row.
    """
    if not 1 <= dim <= row.dims:
        raise InvalidDimensionError(f"dimension {dim} outside 1..{row.dims}")
    _check_cut(row, cut)
    half = 1 << (dim - 1)
    # Floor division and nonnegative remainder are both required here: the
    # cut-0 case walks through a negative intermediate.
    sign = 1 - 2 * (((cut - 1) // half) & 1)
    return (cut * sign) % (half << 1)


def cut_density(row: HypercubeRow, cut: int) -> int:
    """Total number of wires crossing intercolumn ``cut``, summed over dimensions."""
    _check_cut(row, cut)
    total = 0
    for dim in range(1, row.dims + 1):
        half = 1 << (dim - 1)
        sign = 1 - 2 * (((cut - 1) // half) & 1)
        total += (cut * sign) % (half << 1)
    return total


def cut_density_profile(row: HypercubeRow) -> list[int]:
    """Formula-evaluated density at every cut 0..n (kernel-backed batch)."""
    return kernels.density_profile(row.n)


def max_cut_density(row: HypercubeRow) -> int:
    """Peak crossing count over the interior cuts; 0 for a single node.

    Closed form ``(4n - (-1)**dims - 3) / 6``, which equals ``floor(2n/3)``
    for every row with at least two nodes.
    """
    sign = -1 if row.dims & 1 else 1
    return (4 * row.n - sign - 3) // 6


def leftmost_max_cut(row: HypercubeRow) -> int:
    """Smallest interior cut whose density equals the peak: ``(n - (-1)**dims)/3``."""
    if row.n < 2:
        raise DegenerateRowError("a single-node row has no interior cut")
    sign = -1 if row.dims & 1 else 1
    return (row.n - sign) // 3


def cut_density_bitsum(row: HypercubeRow, cut: int) -> int:
    """Density at an interior cut, evaluated from the cut's bit decomposition.

    Independent re-derivation of :func:`cut_density` in terms of the cut
    index's bits and their excess statistics; the two must agree everywhere.
    Only interior cuts (0 < cut < n) are defined for this form.
    """
    if not 0 < cut < row.n:
        raise InvalidCutError(f"cut {cut} outside the open range 0..{row.n}")
    width = row.dims
    view = BitView(cut, width)
    # Scaled by 4 to stay in integers; the total is always divisible by 4.
    acc = 2 * (view.excess_above(0) + row.n - 1)
    for pos in range(1, width):
        signed = 1 - 2 * view.bit(pos)
        acc += (1 << pos) * signed * view.excess_above(pos)
    q, r = divmod(acc, 4)
    assert r == 0, f"bit-decomposition sum not divisible by 4 at cut {cut}"
    return q


def cut_density_bitsum_profile(row: HypercubeRow) -> list[int]:
    """Bit-decomposition density for cuts 0..n (outer cuts reported as 0)."""
    return kernels.bitsum_profile(row.n)


def max_density_cuts(row: HypercubeRow) -> list[int]:
    """Every interior cut attaining the peak density, in increasing order.

    The maximizers are exactly the cut indexes whose binary representation,
    read from the left in adjacent pairs, uses only the patterns 01 and 10,
    except that the final pair may also be 11 when the width is even; an odd
    width instead ends with a single 1 bit.
    """
    if row.n < 2:
        raise DegenerateRowError("a single-node row has no interior cut")
    width = row.dims
    npairs = width // 2
    choices = [(0b01, 0b10)] * npairs
    if width % 2 == 0 and npairs:
        choices[-1] = (0b01, 0b10, 0b11)
    cuts = []
    for combo in product(*choices):
        value = 0
        for pair in combo:
            value = (value << 2) | pair
        if width % 2:
            value = (value << 1) | 1
        cuts.append(value)
    return cuts
