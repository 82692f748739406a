"""Text and SVG drawings of a routed row.

Both renderers share one geometry: every node occupies one sub-column per
terminal slot plus a trailing gap sub-column, tracks are stacked above the
node row (track 0 nearest the nodes), and each wire is a horizontal segment
on its track with vertical stubs dropping to its two terminals.
"""

from __future__ import annotations

from dataclasses import dataclass

from cuberow.errors import RenderSizeError
from cuberow.netlist import Netlist, Placement, gray_code
from cuberow.routing import TrackAssignment

MAX_TEXT_COLUMNS = 512

_DIM_COLORS = (
    "#1f77b4",
    "#d62728",
    "#2ca02c",
    "#9467bd",
    "#ff7f0e",
    "#17becf",
    "#8c564b",
    "#e377c2",
)


@dataclass(frozen=True)
class RenderSpec:
    """Rendering knobs; cell sizes apply to SVG output only."""

    cell_width: int = 12
    cell_height: int = 12
    show_tracks: bool = True

    def __post_init__(self):
        if self.cell_width <= 0 or self.cell_height <= 0:
            raise RenderSizeError(
                f"cell size must be positive, got {self.cell_width}x{self.cell_height}"
            )


def _node_label(net: Netlist, col: int) -> str:
    return str(gray_code(col) if net.placement is Placement.GRAY else col)


def render_text(net: Netlist, assignment: TrackAssignment, spec: RenderSpec = RenderSpec()) -> str:
    """ASCII drawing: track rows over a terminal-tick row and node labels."""
    n, dims = net.row.n, net.row.dims
    step = dims + 1
    width = n * step
    if width > MAX_TEXT_COLUMNS:
        raise RenderSizeError(
            f"text rendering needs {width} columns, cap is {MAX_TEXT_COLUMNS}"
        )
    ntracks = assignment.track_count if spec.show_tracks else 0
    grid = [[" "] * width for _ in range(ntracks)]

    def x_of(col: int, slot: int) -> int:
        return col * step + slot - 1

    if spec.show_tracks:
        # Horizontal spans first, then stubs; stubs crossing a foreign span
        # become '+' so the weave stays readable.
        for w in net.wires:
            r = ntracks - 1 - assignment.by_wire[w]
            xa, xb = x_of(w.left_col, w.left_slot), x_of(w.right_col, w.right_slot)
            for x in range(xa, xb + 1):
                grid[r][x] = "-"
        for w in net.wires:
            r = ntracks - 1 - assignment.by_wire[w]
            xa, xb = x_of(w.left_col, w.left_slot), x_of(w.right_col, w.right_slot)
            grid[r][xa] = "+"
            grid[r][xb] = "+"
            for rr in range(r + 1, ntracks):
                for x in (xa, xb):
                    grid[rr][x] = "+" if grid[rr][x] == "-" else "|"

    ticks = [" "] * width
    labels = [" "] * width
    for col in range(n):
        for slot in range(1, dims + 1):
            ticks[x_of(col, slot)] = str(slot % 10)
        label = _node_label(net, col)[:dims]
        for k, ch in enumerate(label):
            labels[col * step + k] = ch

    lines = ["".join(r).rstrip() for r in grid]
    lines.append("".join(ticks).rstrip())
    lines.append("".join(labels).rstrip())
    lines.append("")
    lines.append(f"tracks: {assignment.track_count}  channel density: {assignment.density}")
    return "\n".join(lines) + "\n"


def _fmt(value: float) -> str:
    return f"{value:g}"


def render_svg(net: Netlist, assignment: TrackAssignment, spec: RenderSpec = RenderSpec()) -> str:
    """Standalone SVG drawing of the routed row, colored by dimension."""
    n, dims = net.row.n, net.row.dims
    step = dims + 1
    cw, ch = spec.cell_width, spec.cell_height
    margin = 2 * cw
    ntracks = assignment.track_count if spec.show_tracks else 0
    node_top = margin + (ntracks + 1) * ch
    width = 2 * margin + n * step * cw
    height = node_top + 2 * ch + margin

    def slot_x(col: int, slot: int) -> float:
        return margin + (col * step + slot - 1) * cw + cw / 2

    def track_y(track: int) -> float:
        return margin + (ntracks - 1 - track) * ch + ch / 2

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<title>{n}-node row, {net.placement.value} placement, {net.mode.value} '
        f"terminals, {assignment.track_count} tracks</title>",
        f'<rect width="{width}" height="{height}" fill="white"/>',
    ]

    for col in range(n):
        x = margin + col * step * cw
        parts.append(
            f'<rect x="{x}" y="{node_top}" width="{dims * cw}" height="{2 * ch}" '
            'fill="#f2f2f2" stroke="black"/>'
        )
        for slot in range(1, dims + 1):
            sx = slot_x(col, slot)
            parts.append(
                f'<line x1="{_fmt(sx)}" y1="{node_top}" x2="{_fmt(sx)}" '
                f'y2="{node_top + ch // 3}" stroke="black"/>'
            )
        parts.append(
            f'<text x="{_fmt(x + dims * cw / 2)}" y="{node_top + ch + ch // 2}" '
            'font-family="monospace" font-size="'
            f'{ch}" text-anchor="middle">{_node_label(net, col)}</text>'
        )

    if spec.show_tracks:
        for w in net.wires:
            color = _DIM_COLORS[(w.dim - 1) % len(_DIM_COLORS)]
            y = track_y(assignment.by_wire[w])
            xa = slot_x(w.left_col, w.left_slot)
            xb = slot_x(w.right_col, w.right_slot)
            parts.append(
                f'<polyline fill="none" stroke="{color}" stroke-width="1.5" points="'
                f'{_fmt(xa)},{node_top} {_fmt(xa)},{_fmt(y)} '
                f'{_fmt(xb)},{_fmt(y)} {_fmt(xb)},{node_top}"/>'
            )

    parts.append("</svg>")
    return "\n".join(parts) + "\n"
