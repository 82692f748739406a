"""Brute-force ground truth for every density and track-count claim.

Everything here recomputes results by direct enumeration of the netlist's
wires, on purpose sharing nothing with the closed-form modules beyond the
netlist itself and the fine-cut coordinate conventions.  Tests compare the
two routes; agreement is the evidence, not either side alone.

The oracle is deliberately unclever.  Keep it that way.
"""

from __future__ import annotations

from dataclasses import dataclass

from cuberow import kernels
from cuberow.errors import TooManyWiresError
from cuberow.netlist import Netlist, TerminalMode, fine_cut_count

__all__ = [
    "CrossingTable",
    "crossing_profile",
    "brute_maximizers",
    "brute_link_count",
    "brute_track_count",
    "coverage_bound",
]


@dataclass(frozen=True)
class CrossingTable:
    """Crossing count at every fine cut of a routed row.

    ``counts[f]`` is the number of wires whose crossing range covers fine
    cut ``f``; gap and through-node cuts are addressed via the accessors.
    """

    n: int
    dims: int
    counts: tuple[int, ...]

    def gap(self, cut: int) -> int:
        """Crossings at intercolumn position ``cut`` (0..n)."""
        return self.counts[cut * (self.dims + 1)]

    def node_cut(self, col: int, slot: int) -> int:
        """Crossings at the through-node cut right of ``slot`` on ``col``."""
        return self.counts[col * (self.dims + 1) + slot]

    def gap_profile(self) -> list[int]:
        """Intercolumn crossings for cuts 0..n, in order."""
        step = self.dims + 1
        return [self.counts[cut * step] for cut in range(self.n + 1)]

    def interior_gap_max(self) -> int:
        """Largest intercolumn crossing count strictly inside the row."""
        return max(self.gap_profile()[1 : self.n], default=0)

    def fine_max(self) -> int:
        """Largest crossing count over every fine cut."""
        return max(self.counts, default=0)


def _wire_fine_span(wire, step: int, free: bool) -> tuple[int, int]:
    # The oracle's own statement of what a wire blocks.  Free terminals: just
    # the gaps strictly between the endpoint columns.  Pinned terminals: the
    # wire is overhead from right of its left slot to left of its right slot.
    if free:
        return (wire.left_col + 1) * step, wire.right_col * step
    return (
        wire.left_col * step + wire.left_slot,
        wire.right_col * step + wire.right_slot - 1,
    )


def crossing_profile(net: Netlist) -> CrossingTable:
    """Count, for every fine cut, the wires crossing it, one wire at a time."""
    row = net.row
    step = row.dims + 1
    free = net.mode is TerminalMode.FREE
    lows = []
    highs = []
    for w in net.wires:
        lo, hi = _wire_fine_span(w, step, free)
        lows.append(lo)
        highs.append(hi)
    counts = kernels.accumulate_spans(fine_cut_count(row), lows, highs)
    return CrossingTable(row.n, row.dims, tuple(counts))


def brute_maximizers(net: Netlist) -> list[int]:
    """All interior intercolumn cuts attaining the profile maximum, by scan."""
    profile = crossing_profile(net).gap_profile()
    interior = profile[1 : net.row.n]
    if not interior:
        return []
    peak = max(interior)
    return [cut for cut in range(1, net.row.n) if profile[cut] == peak]


def brute_link_count(net: Netlist, cut: int, dim: int) -> int:
    """Dimension-``dim`` wires crossing intercolumn ``cut``, by enumeration."""
    return sum(
        1 for w in net.wires if w.dim == dim and w.left_col < cut <= w.right_col
    )


def coverage_bound(intervals) -> int:
    """Largest number of intervals stacked on one cut, by endpoint sweep.

    Any assignment needs at least this many tracks.  This is the fallback
    answer for instances too large for :func:`brute_track_count`.
    """
    events = sorted(
        [(iv.lo, 1) for iv in intervals] + [(iv.hi + 1, -1) for iv in intervals]
    )
    best = running = 0
    for _, delta in events:
        running += delta
        best = max(best, running)
    return best


def brute_track_count(intervals, exact_limit: int = 24) -> int:
    """Exact minimum track count by exhaustive branch and bound.

    Assigns intervals in left-to-right order, trying every compatible
    existing track plus one fresh track, pruning branches that cannot beat
    the best complete assignment found so far.  No interval-graph shortcuts
    are taken; that independence is the point.  Instances above
    ``exact_limit`` wires raise :class:`TooManyWiresError`.
    """
    if len(intervals) > exact_limit:
        raise TooManyWiresError(
            f"{len(intervals)} wires exceed the exact-search cap of {exact_limit}"
        )
    order = sorted(intervals, key=lambda iv: (iv.lo, iv.hi))
    best = len(order)  # one track per wire always works
    track_last: list[int] = []

    def place(index: int) -> None:
        nonlocal best
        if len(track_last) >= best:
            return
        if index == len(order):
            best = len(track_last)
            return
        iv = order[index]
        for track in range(len(track_last)):
            if track_last[track] < iv.lo:
                saved = track_last[track]
                track_last[track] = iv.hi
                place(index + 1)
                track_last[track] = saved
        track_last.append(iv.hi)
        place(index + 1)
        track_last.pop()

    if order:
        place(0)
        return best
    return 0
