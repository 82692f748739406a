"""Command-line front end.

Subcommands: ``density`` (cut-density tables), ``route`` (routed drawings and
track tables), ``compare`` (normal vs gray placement metrics), and ``check``
(the formula-versus-oracle suite).  Exit codes: 0 ok, 1 usage error, 2 an
invariant check failed, 3 internal error.
"""

from __future__ import annotations

import argparse
import json
import sys

from cuberow import density, netlist, oracle, routing, selfcheck
from cuberow.density import HypercubeRow
from cuberow.errors import LayoutError
from cuberow.netlist import Placement, TerminalMode
from cuberow.render import RenderSpec, render_svg, render_text

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CHECK_FAILED = 2
EXIT_INTERNAL = 3

MAX_CLOSED_FORM_NODES = 2**20
MAX_ORACLE_NODES = 2**12
MAX_ROUTE_NODES = 2**12
MAX_COMPARE_NODES = 2**10


class UsageError(Exception):
    pass


class InternalError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _parse_row(n: int, cap: int) -> HypercubeRow:
    if n < 2 or n & (n - 1):
        raise UsageError(f"--n must be a power of two with n >= 2, got {n}")
    if n > cap:
        raise UsageError(f"--n {n} exceeds this command's cap of {cap}")
    return HypercubeRow(n)


def _write_output(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w") as handle:
            handle.write(text)


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _gap_summary(profile: list[int]) -> tuple[int, int, list[int]]:
    """(peak, leftmost peak cut, all peak cuts) from a 0..n gap profile."""
    interior = profile[1:-1]
    peak = max(interior)
    cuts = [cut for cut, value in enumerate(profile) if 0 < cut < len(profile) - 1 and value == peak]
    return peak, cuts[0], cuts


def _density_data(row: HypercubeRow, placement: Placement, mode: TerminalMode):
    """Profile plus summary fields; the gray placement goes through the oracle."""
    if placement is Placement.NORMAL:
        profile = density.cut_density_profile(row)
        peak = density.max_cut_density(row)
        first = density.leftmost_max_cut(row)
        cuts = density.max_density_cuts(row)
    else:
        net = netlist.build_netlist(row, placement, TerminalMode.FREE)
        profile = oracle.crossing_profile(net).gap_profile()
        peak, first, cuts = _gap_summary(profile)

    terminal_rows = None
    terminal_max = None
    if mode is TerminalMode.DIM_ORDERED:
        if placement is Placement.NORMAL:
            terminal_rows = [
                netlist.terminal_cut_densities(row, cut) for cut in range(1, row.n)
            ]
            terminal_max = netlist.max_terminal_cut_density(row)[0]
        else:
            net = netlist.build_netlist(row, placement, TerminalMode.DIM_ORDERED)
            table = oracle.crossing_profile(net)
            terminal_rows = [
                [table.node_cut(cut - 1, slot) for slot in range(1, row.dims + 1)]
                for cut in range(1, row.n)
            ]
            terminal_max = table.fine_max()
    return profile, peak, first, cuts, terminal_rows, terminal_max


def cmd_density(args) -> int:
    placement = Placement(args.placement)
    mode = TerminalMode(args.mode)
    cap = MAX_CLOSED_FORM_NODES if placement is Placement.NORMAL else MAX_ORACLE_NODES
    row = _parse_row(args.n, cap)
    if args.format == "svg":
        raise UsageError("svg output is available for the route command only")

    profile, peak, first, cuts, terminal_rows, terminal_max = _density_data(
        row, placement, mode
    )
    interior = profile[1 : row.n]

    if args.format == "json":
        payload = {
            "n": row.n,
            "placement": placement.value,
            "mode": mode.value,
            "profile": interior,
            "m": peak,
            "p": first,
            "maximizers": cuts,
            "tracks": None,
        }
        if terminal_max is not None:
            payload["terminal_max"] = terminal_max
        _write_output(_json_text(payload), args.out)
        return EXIT_OK

    slot_headers = [f"T{slot}" for slot in range(1, row.dims + 1)] if terminal_rows else []
    if args.format == "csv":
        lines = ["i,S" + ("," + ",".join(slot_headers) if slot_headers else "")]
        for cut, value in enumerate(interior, start=1):
            extra = "," + ",".join(map(str, terminal_rows[cut - 1])) if terminal_rows else ""
            lines.append(f"{cut},{value}{extra}")
        summary = f"# m={peak} p={first} maximizers={' '.join(map(str, cuts))}"
        if terminal_max is not None:
            summary += f" terminal_max={terminal_max}"
        lines.append(summary)
        _write_output("\n".join(lines) + "\n", args.out)
        return EXIT_OK

    width = max(len(str(row.n)), len(str(peak + 1)), 3)
    header = f"{'i':>{width}}  {'S':>{width}}"
    for name in slot_headers:
        header += f"  {name:>{width}}"
    lines = [header]
    for cut, value in enumerate(interior, start=1):
        line = f"{cut:>{width}}  {value:>{width}}"
        if terminal_rows:
            for t in terminal_rows[cut - 1]:
                line += f"  {t:>{width}}"
        lines.append(line)
    lines.append(f"m = {peak}   p = {first}   maximizers: {' '.join(map(str, cuts))}")
    if terminal_max is not None:
        lines.append(f"peak terminal density: {terminal_max}")
    _write_output("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def _route(row: HypercubeRow, placement: Placement, mode: TerminalMode):
    net = netlist.build_netlist(row, placement, mode)
    intervals = routing.wire_intervals(net)
    assignment = routing.left_edge_route(intervals)
    cert = routing.verify_assignment(intervals, assignment)
    if not cert.ok:
        raise InternalError(f"routing verification failed: {cert.reason} {cert.detail}")
    return net, intervals, assignment


def cmd_route(args) -> int:
    placement = Placement(args.placement)
    mode = TerminalMode(args.mode)
    row = _parse_row(args.n, MAX_ROUTE_NODES)
    net, intervals, assignment = _route(row, placement, mode)

    if args.emit_netlist:
        with open(args.emit_netlist, "w") as handle:
            handle.write(netlist.dump_netlist(net))
    if args.emit_assignment:
        with open(args.emit_assignment, "w") as handle:
            handle.write(routing.dump_assignment(intervals, assignment))

    spec = RenderSpec(
        cell_width=args.cell_width,
        cell_height=args.cell_height,
        show_tracks=not args.hide_tracks,
    )
    if args.format == "text":
        _write_output(render_text(net, assignment, spec), args.out)
    elif args.format == "svg":
        _write_output(render_svg(net, assignment, spec), args.out)
    elif args.format == "csv":
        lines = ["dim,left_col,right_col,track"]
        for iv in sorted(intervals, key=lambda iv: (iv.wire.dim, iv.wire.left_col)):
            w = iv.wire
            lines.append(f"{w.dim},{w.left_col},{w.right_col},{assignment.by_wire[w]}")
        _write_output("\n".join(lines) + "\n", args.out)
    else:
        profile, peak, first, cuts, _, terminal_max = _density_data(row, placement, mode)
        payload = {
            "n": row.n,
            "placement": placement.value,
            "mode": mode.value,
            "profile": profile[1 : row.n],
            "m": peak,
            "p": first,
            "maximizers": cuts,
            "tracks": assignment.track_count,
        }
        if terminal_max is not None:
            payload["terminal_max"] = terminal_max
        payload["wires"] = [
            {
                "dim": iv.wire.dim,
                "left_col": iv.wire.left_col,
                "right_col": iv.wire.right_col,
                "track": assignment.by_wire[iv.wire],
            }
            for iv in sorted(intervals, key=lambda iv: (iv.wire.dim, iv.wire.left_col))
        ]
        _write_output(_json_text(payload), args.out)
    return EXIT_OK


def cmd_compare(args) -> int:
    row = _parse_row(args.n, MAX_COMPARE_NODES)
    if args.format == "svg":
        raise UsageError("svg output is available for the route command only")

    metrics = {}
    for placement in Placement:
        free_net = netlist.build_netlist(row, placement, TerminalMode.FREE)
        peak = oracle.crossing_profile(free_net).interior_gap_max()
        tracks = {}
        for mode in TerminalMode:
            _, _, assignment = _route(row, placement, mode)
            tracks[mode] = assignment.track_count
        metrics[placement.value] = {
            "max_density": peak,
            "tracks_free": tracks[TerminalMode.FREE],
            "tracks_dim_ordered": tracks[TerminalMode.DIM_ORDERED],
            "total_wirelength": netlist.total_wirelength(free_net),
            "max_wirelength": netlist.max_wirelength(free_net),
        }

    if args.format == "json":
        _write_output(_json_text({"n": row.n, **metrics}), args.out)
        return EXIT_OK

    labels = [
        ("max density", "max_density"),
        ("tracks (free)", "tracks_free"),
        ("tracks (dim-ordered)", "tracks_dim_ordered"),
        ("total wirelength", "total_wirelength"),
        ("max wirelength", "max_wirelength"),
    ]
    if args.format == "csv":
        lines = ["metric,normal,gray"]
        for _, key in labels:
            lines.append(f"{key},{metrics['normal'][key]},{metrics['gray'][key]}")
        _write_output("\n".join(lines) + "\n", args.out)
        return EXIT_OK

    name_w = max(len(label) for label, _ in labels)
    val_w = max(len(str(v)) for m in metrics.values() for v in m.values())
    val_w = max(val_w, len("normal"), len("gray"))
    lines = [f"{'':{name_w}}  {'normal':>{val_w}}  {'gray':>{val_w}}"]
    for label, key in labels:
        lines.append(
            f"{label:{name_w}}  {metrics['normal'][key]:>{val_w}}  "
            f"{metrics['gray'][key]:>{val_w}}"
        )
    _write_output("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_check(args) -> int:
    if args.max_n < 2 or args.max_n & (args.max_n - 1):
        raise UsageError(f"--max-n must be a power of two with n >= 2, got {args.max_n}")
    if args.max_n > MAX_ORACLE_NODES:
        raise UsageError(f"--max-n {args.max_n} exceeds the oracle cap of {MAX_ORACLE_NODES}")
    outcomes = selfcheck.run_all(args.max_n)
    lines = []
    total = 0
    failed = 0
    for outcome in outcomes:
        status = "PASS" if outcome.passed else "FAIL"
        line = f"{outcome.name:<22} {status}  ({outcome.assertions} assertions)"
        if not outcome.passed:
            line += f"  {outcome.detail}"
            failed += 1
        total += outcome.assertions
        lines.append(line)
    lines.append(
        f"{failed or 'no'} check(s) failed, {total} assertions, rows up to {args.max_n} nodes"
        if failed
        else f"all checks passed, {total} assertions, rows up to {args.max_n} nodes"
    )
    _write_output("\n".join(lines) + "\n", args.out)
    return EXIT_CHECK_FAILED if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cuberow", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, formats):
        p.add_argument("--n", type=int, required=True, help="node count (power of two)")
        p.add_argument("--placement", choices=["normal", "gray"], default="normal")
        p.add_argument("--mode", choices=["free", "dim-ordered"], default="free")
        p.add_argument("--format", choices=formats, default="text")
        p.add_argument("--out", metavar="FILE", help="write output here instead of stdout")

    p_density = sub.add_parser("density", help="cut-density table with peak summary")
    add_common(p_density, ["text", "json", "csv", "svg"])
    p_density.set_defaults(func=cmd_density)

    p_route = sub.add_parser("route", help="route the row and draw or tabulate it")
    add_common(p_route, ["text", "svg", "json", "csv"])
    p_route.add_argument("--cell-width", type=int, default=12, help="svg cell width")
    p_route.add_argument("--cell-height", type=int, default=12, help="svg cell height")
    p_route.add_argument("--hide-tracks", action="store_true", help="draw nodes only")
    p_route.add_argument("--emit-netlist", metavar="FILE", help="also write the netlist text format")
    p_route.add_argument("--emit-assignment", metavar="FILE", help="also write the track table text format")
    p_route.set_defaults(func=cmd_route)

    p_compare = sub.add_parser("compare", help="normal vs gray placement metrics")
    p_compare.add_argument("--n", type=int, required=True)
    p_compare.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p_compare.add_argument("--out", metavar="FILE")
    p_compare.set_defaults(func=cmd_compare)

    p_check = sub.add_parser("check", help="run the formula-versus-oracle suite")
    p_check.add_argument("--max-n", type=int, default=256)
    p_check.add_argument("--out", metavar="FILE")
    p_check.set_defaults(func=cmd_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"cuberow: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except LayoutError as exc:
        print(f"cuberow: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InternalError as exc:
        print(f"cuberow: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except BrokenPipeError:
        return EXIT_OK
    except Exception as exc:  # anything else is a bug, not a usage problem
        print(f"cuberow: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    raise SystemExit(main())
