"""The command-line surface: tables, drawings, machine formats, exit codes."""

import io
import json
import subprocess
import sys
import xml.etree.ElementTree as ET
from contextlib import redirect_stderr, redirect_stdout

import pytest

from cuberow.cli import (
    EXIT_CHECK_FAILED,
    EXIT_INTERNAL,
    EXIT_OK,
    EXIT_USAGE,
    main,
)
from cuberow.netlist import load_netlist
from cuberow.routing import load_assignment

JSON_FIELDS = ["n", "placement", "mode", "profile", "m", "p", "maximizers", "tracks"]


def run_cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


class TestDensityCommand:
    def test_table_n8(self):
        code, out, _ = run_cli("density", "--n", "8")
        assert code == EXIT_OK
        rows = [line.split() for line in out.splitlines()[1:8]]
        assert [int(r[1]) for r in rows] == [3, 4, 5, 4, 5, 4, 3]
        assert "m = 5" in out and "p = 3" in out and "maximizers: 3 5" in out

    def test_table_n2(self):
        code, out, _ = run_cli("density", "--n", "2")
        assert code == EXIT_OK
        assert out.splitlines()[1].split() == ["1", "1"]

    def test_dim_ordered_summary(self):
        code, out, _ = run_cli("density", "--n", "8", "--mode", "dim-ordered")
        assert code == EXIT_OK
        assert "peak terminal density: 6" in out
        assert out.splitlines()[0].split() == ["i", "S", "T1", "T2", "T3"]

    def test_gray_placement_uses_oracle(self):
        code, out, _ = run_cli("density", "--n", "8", "--placement", "gray", "--format", "json")
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload["profile"] == [3, 4, 5, 4, 5, 4, 3]
        assert payload["m"] == 5

    def test_json_schema(self):
        code, out, _ = run_cli("density", "--n", "8", "--format", "json")
        payload = json.loads(out)
        assert list(payload) == JSON_FIELDS
        assert payload["tracks"] is None
        assert payload["maximizers"] == [3, 5]

    def test_csv(self):
        code, out, _ = run_cli("density", "--n", "4", "--format", "csv")
        lines = out.splitlines()
        assert lines[0] == "i,S"
        assert lines[1:4] == ["1,2", "2,2", "3,2"]
        assert lines[4].startswith("# m=2 p=1 maximizers=1 2 3")

    def test_rejects_non_power_of_two(self):
        code, _, err = run_cli("density", "--n", "7")
        assert code == EXIT_USAGE
        assert "power of two" in err

    def test_rejects_svg(self):
        code, _, err = run_cli("density", "--n", "8", "--format", "svg")
        assert code == EXIT_USAGE
        assert "route" in err

    def test_rejects_oversized_gray(self):
        code, _, err = run_cli("density", "--n", str(2**13), "--placement", "gray")
        assert code == EXIT_USAGE


class TestRouteCommand:
    def test_text_track_counts(self):
        code, out, _ = run_cli("route", "--n", "2")
        assert code == EXIT_OK
        assert "tracks: 1" in out
        _, out_free, _ = run_cli("route", "--n", "8", "--format", "text")
        assert "tracks: 5" in out_free
        _, out_dim, _ = run_cli("route", "--n", "8", "--mode", "dim-ordered", "--format", "text")
        assert "tracks: 6" in out_dim

    def test_text_row_count_matches_tracks(self):
        _, out, _ = run_cli("route", "--n", "8", "--format", "text")
        lines = out.splitlines()
        # track rows + tick row + label row + blank + summary
        assert len(lines) == 5 + 4
        _, out_dim, _ = run_cli("route", "--n", "8", "--mode", "dim-ordered", "--format", "text")
        assert len(out_dim.splitlines()) == 6 + 4

    def test_json_fields_and_values(self):
        code, out, _ = run_cli("route", "--n", "8", "--format", "json")
        payload = json.loads(out)
        assert list(payload) == JSON_FIELDS + ["wires"]
        assert payload["tracks"] == 5
        assert len(payload["wires"]) == 12
        code, out, _ = run_cli("route", "--n", "8", "--mode", "dim-ordered", "--format", "json")
        payload = json.loads(out)
        assert payload["tracks"] == 6
        assert payload["terminal_max"] == 6

    def test_svg_structure(self):
        code, out, _ = run_cli("route", "--n", "8", "--format", "svg")
        assert code == EXIT_OK
        root = ET.fromstring(out)
        assert root.tag.endswith("svg")
        polylines = [el for el in root.iter() if el.tag.endswith("polyline")]
        assert len(polylines) == 12  # one routed wire each
        rects = [el for el in root.iter() if el.tag.endswith("rect")]
        assert len(rects) == 9  # 8 node boxes + background

    def test_svg_draws_reported_track_count(self):
        for n, mode, expected in ((8, "free", 5), (8, "dim-ordered", 6), (2, "free", 1)):
            _, out, _ = run_cli("route", "--n", str(n), "--mode", mode, "--format", "svg")
            root = ET.fromstring(out)
            track_rows = {
                el.attrib["points"].split()[1].split(",")[1]
                for el in root.iter()
                if el.tag.endswith("polyline")
            }
            assert len(track_rows) == expected

    def test_svg_hide_tracks(self):
        _, out, _ = run_cli("route", "--n", "8", "--format", "svg", "--hide-tracks")
        assert "polyline" not in out

    def test_svg_rejects_bad_cell_size(self):
        code, _, err = run_cli("route", "--n", "8", "--format", "svg", "--cell-width", "0")
        assert code == EXIT_USAGE

    def test_csv_assignment_table(self):
        code, out, _ = run_cli("route", "--n", "4", "--format", "csv")
        lines = out.splitlines()
        assert lines[0] == "dim,left_col,right_col,track"
        assert len(lines) == 5
        tracks = {int(line.split(",")[3]) for line in lines[1:]}
        assert tracks == {0, 1}

    def test_text_cap(self):
        code, _, err = run_cli("route", "--n", "128", "--format", "text")
        assert code == EXIT_USAGE
        assert "512" in err

    def test_emit_files_round_trip(self, tmp_path):
        net_path = tmp_path / "row.netlist"
        asg_path = tmp_path / "row.tracks"
        code, _, _ = run_cli(
            "route", "--n", "8", "--mode", "dim-ordered",
            "--emit-netlist", str(net_path), "--emit-assignment", str(asg_path),
            "--format", "json", "--out", str(tmp_path / "row.json"),
        )
        assert code == EXIT_OK
        net = load_netlist(net_path.read_text())
        assert len(net.wires) == 12
        rows = load_assignment(asg_path.read_text())
        assert len(rows) == 12
        assert max(track for *_, track in rows) == 5

    def test_out_file(self, tmp_path):
        target = tmp_path / "density.json"
        code, out, _ = run_cli("density", "--n", "4", "--format", "json", "--out", str(target))
        assert code == EXIT_OK
        assert out == ""
        assert json.loads(target.read_text())["m"] == 2

    @pytest.mark.parametrize("n", [2, 4, 8, 16])
    def test_json_byte_stable(self, n):
        outputs = {run_cli("route", "--n", str(n), "--format", "json")[1].encode() for _ in range(3)}
        assert len(outputs) == 1


class TestCompareCommand:
    def test_frozen_n8(self):
        code, out, _ = run_cli("compare", "--n", "8", "--format", "csv")
        assert code == EXIT_OK
        assert out.splitlines() == [
            "metric,normal,gray",
            "max_density,5,5",
            "tracks_free,5,5",
            "tracks_dim_ordered,6,6",
            "total_wirelength,28,28",
            "max_wirelength,4,7",
        ]

    def test_frozen_n2(self):
        _, out, _ = run_cli("compare", "--n", "2", "--format", "csv")
        assert "max_wirelength,1,1" in out

    def test_frozen_n16(self):
        _, out, _ = run_cli("compare", "--n", "16", "--format", "csv")
        assert "max_density,10,10" in out
        assert "max_wirelength,8,15" in out

    def test_json(self):
        _, out, _ = run_cli("compare", "--n", "8", "--format", "json")
        payload = json.loads(out)
        assert payload["normal"]["tracks_dim_ordered"] == 6
        assert payload["gray"]["max_wirelength"] == 7

    def test_text_table(self):
        code, out, _ = run_cli("compare", "--n", "8")
        assert code == EXIT_OK
        assert "normal" in out.splitlines()[0]

    def test_cap(self):
        code, _, _ = run_cli("compare", "--n", str(2**11))
        assert code == EXIT_USAGE


class TestCheckCommand:
    def test_small_pass(self):
        code, out, _ = run_cli("check", "--max-n", "2")
        assert code == EXIT_OK
        assert "all checks passed" in out

    def test_reports_each_check(self):
        code, out, _ = run_cli("check", "--max-n", "64")
        assert code == EXIT_OK
        lines = out.splitlines()
        for name in ("closed-forms", "maximizers", "router", "gray-equalities"):
            assert any(line.startswith(name) and "PASS" in line for line in lines)
        assert "assertions" in lines[-1]

    def test_rejects_bad_range(self):
        assert run_cli("check", "--max-n", "100")[0] == EXIT_USAGE
        assert run_cli("check", "--max-n", str(2**13))[0] == EXIT_USAGE

    def test_failure_exit_code(self, monkeypatch):
        from cuberow import selfcheck

        def broken(max_n):
            return [selfcheck.CheckOutcome("rigged", False, 1, "injected failure")]

        monkeypatch.setattr(selfcheck, "run_all", broken)
        code, out, _ = run_cli("check", "--max-n", "2")
        assert code == EXIT_CHECK_FAILED
        assert "FAIL" in out and "injected failure" in out


class TestInternalErrorPath:
    def test_verification_failure_exits_3(self, monkeypatch):
        from cuberow import cli
        from cuberow.routing import RouteCertificate

        monkeypatch.setattr(
            cli.routing,
            "verify_assignment",
            lambda intervals, assignment: RouteCertificate(False, "overlap", "rigged"),
        )
        code, _, err = run_cli("route", "--n", "4")
        assert code == EXIT_INTERNAL
        assert "internal error" in err


class TestProcessLevel:
    def test_module_entry_point_matches_in_process(self):
        result = subprocess.run(
            [sys.executable, "-m", "cuberow", "route", "--n", "8", "--format", "json"],
            capture_output=True,
            text=True,
        )
        assert result.returncode == EXIT_OK
        _, in_process, _ = run_cli("route", "--n", "8", "--format", "json")
        assert result.stdout == in_process

    def test_usage_error_exit_code(self):
        result = subprocess.run(
            [sys.executable, "-m", "cuberow", "density", "--n", "8", "--format", "bogus"],
            capture_output=True,
            text=True,
        )
        assert result.returncode == EXIT_USAGE
