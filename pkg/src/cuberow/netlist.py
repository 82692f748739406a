"""Wire lists for a hypercube row under a placement and terminal-ordering mode.

A netlist enumerates every hypercube link as a horizontal wire between two
columns.  Columns either hold node u at column u (normal placement) or follow
a binary-reflected gray sequence.  Terminals are either freely permutable per
node, or pinned so that slot p of every node carries its dimension-p link.

This module also owns the fine cutline coordinate system used by the router
and the oracle: each column contributes one cut just after each of its
``dims`` terminal slots, plus the intercolumn gap to its right.  Fine index
``col * (dims + 1) + slot`` addresses the cut after ``slot`` (1-based), and
``slot = dims + 1`` is the gap; index 0 is the gap left of the whole row.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from cuberow.density import BitView, HypercubeRow, cut_density
from cuberow.errors import (
    DegenerateRowError,
    InvalidCutError,
    LayoutError,
    NetlistFormatError,
)


class Placement(str, Enum):
    NORMAL = "normal"
    GRAY = "gray"


class TerminalMode(str, Enum):
    FREE = "free"
    DIM_ORDERED = "dim-ordered"


def gray_code(index: int) -> int:
    """Binary-reflected gray value at position ``index`` of the sequence."""
    return index ^ (index >> 1)


def gray_rank(value: int) -> int:
    """Position of ``value`` in the binary-reflected gray sequence."""
    rank = value
    shift = 1
    while (value >> shift) > 0:
        rank ^= value >> shift
        shift += 1
    return rank


@dataclass(frozen=True)
class Wire:
    """One hypercube link, laid out as a horizontal span between two columns.

    Slots locate the terminal on each endpoint node (1..dims, counted from
    the node's left edge).  They are structural only in dimension-ordered
    netlists; free-mode netlists carry slot = dim as a drawing convention.
    """

    dim: int
    left_col: int
    right_col: int
    left_slot: int
    right_slot: int

    def __post_init__(self):
        if self.left_col >= self.right_col:
            raise LayoutError(
                f"wire columns must satisfy left < right, got ({self.left_col}, {self.right_col})"
            )

    @property
    def span(self) -> int:
        """Horizontal length in column units."""
        return self.right_col - self.left_col


@dataclass(frozen=True)
class Netlist:
    row: HypercubeRow
    placement: Placement
    mode: TerminalMode
    wires: tuple[Wire, ...]


def fine_cut_count(row: HypercubeRow) -> int:
    """Number of fine cutline positions across the whole row."""
    return row.n * (row.dims + 1) + 1


def gap_cut_index(row: HypercubeRow, cut: int) -> int:
    """Fine index of intercolumn cut ``cut`` (0..n)."""
    return cut * (row.dims + 1)


def node_cut_index(row: HypercubeRow, col: int, slot: int) -> int:
    """Fine index of the through-node cut just right of ``slot`` on ``col``."""
    return col * (row.dims + 1) + slot


def build_netlist(
    row: HypercubeRow,
    placement: Placement = Placement.NORMAL,
    mode: TerminalMode = TerminalMode.FREE,
    slot_order: tuple[int, ...] | None = None,
) -> Netlist:
    """Enumerate every link of the row's hypercube as a placed wire.

    ``slot_order`` optionally remaps which terminal slot carries each
    dimension, uniformly on every node: entry k-1 is the slot for dimension
    k.  It requires dimension-ordered mode (the identity order is the
    mode's definition; other uniform orders exist for penalty experiments).
    """
    dims = row.dims
    if slot_order is not None:
        if mode is not TerminalMode.DIM_ORDERED:
            raise LayoutError("slot_order applies to dimension-ordered netlists only")
        if sorted(slot_order) != list(range(1, dims + 1)):
            raise LayoutError(f"slot_order must permute 1..{dims}, got {slot_order!r}")

    if placement is Placement.NORMAL:
        col_of = lambda node: node
    else:
        col_of = gray_rank

    wires = []
    for dim in range(1, dims + 1):
        half = 1 << (dim - 1)
        slot = slot_order[dim - 1] if slot_order is not None else dim
        for node in range(row.n):
            if node & half:
                continue
            a = col_of(node)
            b = col_of(node | half)
            left, right = (a, b) if a < b else (b, a)
            wires.append(Wire(dim, left, right, slot, slot))
    wires.sort(key=lambda w: (w.dim, w.left_col))
    return Netlist(row, placement, mode, tuple(wires))


def total_wirelength(net: Netlist) -> int:
    """Sum of horizontal spans over all wires, in column units."""
    return sum(w.span for w in net.wires)


def max_wirelength(net: Netlist) -> int:
    """Longest horizontal span; 0 for a wireless single-node row."""
    return max((w.span for w in net.wires), default=0)


def terminal_cut_density(row: HypercubeRow, cut: int, slot: int) -> int:
    """Wires crossing the fine cut just right of ``slot`` on column ``cut - 1``.

    Defined for the normal placement with dimension-ordered terminals.  The
    count decomposes as the intercolumn density at ``cut`` plus the bit
    excess of ``cut - 1`` above ``slot``: every dimension whose bit is set
    on that node enters from the left, every clear one leaves to the right,
    and only the dimensions above ``slot`` shift the tally either way.
    """
    if not 1 <= cut <= row.n:
        raise InvalidCutError(f"cut {cut} outside 1..{row.n}")
    if not 1 <= slot <= row.dims:
        raise InvalidCutError(f"terminal slot {slot} outside 1..{row.dims}")
    return cut_density(row, cut) + BitView(cut - 1, row.dims).excess_above(slot)


def terminal_cut_densities(row: HypercubeRow, cut: int) -> list[int]:
    """Slot-cut densities at one cut for every slot 1..dims, in order.

    Same quantity as :func:`terminal_cut_density`, amortized: the base
    density is computed once and the per-slot excesses come from a single
    right-to-left pass over the bits of ``cut - 1``.
    """
    if not 1 <= cut <= row.n:
        raise InvalidCutError(f"cut {cut} outside 1..{row.n}")
    dims = row.dims
    base = cut_density(row, cut)
    node = cut - 1
    excess = [0] * (dims + 1)
    for pos in range(dims, 0, -1):
        excess[pos - 1] = excess[pos] + (1 if (node >> (pos - 1)) & 1 else -1)
    return [base + excess[slot] for slot in range(1, dims + 1)]


def max_terminal_cut_density(row: HypercubeRow) -> tuple[int, list[tuple[int, int]]]:
    """Peak fine-cut density under dimension-ordered terminals.

    Returns the peak value together with every ``(cut, slot)`` attaining it,
    scanned in increasing order.  The peak is one above the intercolumn
    maximum for every row bigger than two nodes, and it lands only on cuts
    that already attain the intercolumn maximum.
    """
    if row.n < 2:
        raise DegenerateRowError("terminal density needs at least two nodes")
    best = -1
    where: list[tuple[int, int]] = []
    for cut in range(1, row.n + 1):
        for slot, value in enumerate(terminal_cut_densities(row, cut), start=1):
            if value > best:
                best = value
                where = [(cut, slot)]
            elif value == best:
                where.append((cut, slot))
    return best, where


def dump_netlist(net: Netlist) -> str:
    """Line-oriented text form: header ``n placement mode``, then one wire
    per line as ``dim left_col left_slot right_col right_slot``."""
    lines = [f"{net.row.n} {net.placement.value} {net.mode.value}"]
    for w in net.wires:
        lines.append(f"{w.dim} {w.left_col} {w.left_slot} {w.right_col} {w.right_slot}")
    return "\n".join(lines) + "\n"


def load_netlist(text: str) -> Netlist:
    """Parse and validate the text form produced by :func:`dump_netlist`.

    Validation covers the full structural contract: wire count, per-dimension
    counts, column ranges, and that each wire joins two nodes differing in
    exactly its dimension bit under the declared placement.
    """
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise NetlistFormatError("empty netlist text")
    header = lines[0].split()
    if len(header) != 3:
        raise NetlistFormatError(f"bad header {lines[0]!r}, want 'n placement mode'")
    try:
        row = HypercubeRow(int(header[0]))
        placement = Placement(header[1])
        mode = TerminalMode(header[2])
    except ValueError as exc:
        raise NetlistFormatError(f"bad header {lines[0]!r}: {exc}") from None

    dims = row.dims
    node_at = (lambda col: col) if placement is Placement.NORMAL else gray_code
    wires = []
    per_dim = [0] * (dims + 1)
    for line in lines[1:]:
        fields = line.split()
        if len(fields) != 5:
            raise NetlistFormatError(f"bad wire line {line!r}, want 5 fields")
        try:
            dim, left, lslot, right, rslot = (int(f) for f in fields)
        except ValueError:
            raise NetlistFormatError(f"non-integer field in {line!r}") from None
        if not 1 <= dim <= dims:
            raise NetlistFormatError(f"dimension {dim} outside 1..{dims}")
        if not 0 <= left < right < row.n:
            raise NetlistFormatError(f"bad column pair ({left}, {right})")
        if not (1 <= lslot <= dims and 1 <= rslot <= dims):
            raise NetlistFormatError(f"slot outside 1..{dims} in {line!r}")
        if node_at(left) ^ node_at(right) != 1 << (dim - 1):
            raise NetlistFormatError(
                f"columns {left} and {right} do not hold a dimension-{dim} pair"
            )
        per_dim[dim] += 1
        wires.append(Wire(dim, left, right, lslot, rslot))
    expected = row.n // 2
    for dim in range(1, dims + 1):
        if per_dim[dim] != expected:
            raise NetlistFormatError(
                f"dimension {dim} has {per_dim[dim]} wires, want {expected}"
            )
    return Netlist(row, placement, mode, tuple(wires))
