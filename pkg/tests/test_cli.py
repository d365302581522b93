import json

import pytest

from trigrid.cli import main
from trigrid.export import import_json
from trigrid.meshmodel import euler_check, validate_mesh

from conftest import DATA

RECT = str(DATA / "rectangle.mg")

SQUARE_MG = """SEGMENT
4
1 2 2 0
1 0.0 0.0
2 1.0 0.0
2 2 3 0
1 1.0 0.0
2 1.0 1.0
3 2 4 0
1 1.0 1.0
2 0.0 1.0
4 2 1 0
1 0.0 1.0
2 0.0 0.0
ENDRC
"""


@pytest.fixture
def square_file(tmp_path):
    p = tmp_path / "square.mg"
    p.write_text(SQUARE_MG, encoding="utf-8")
    return str(p)


def run(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestMeshCommand:
    def test_clean_run_exits_zero(self, capsys, tmp_path):
        out_file = tmp_path / "m.json"
        code, out, err = run(["mesh", "--input", RECT, "--spacing",
                              "uniform:10", "--out", str(out_file)], capsys)
        assert code == 0
        assert err == ""
        m = import_json(out_file.read_text())
        assert validate_mesh(m) == []
        assert euler_check(m, holes=0)
        assert m.nt > 0

    def test_json_on_stdout_by_default(self, capsys):
        code, out, err = run(["mesh", "--input", RECT,
                              "--spacing", "uniform:10"], capsys)
        assert code == 0
        data = json.loads(out)
        assert set(data) == {"nodes", "edges", "triangles"}

    def test_svg_written(self, capsys, tmp_path):
        svg_file = tmp_path / "m.svg"
        code, _, _ = run(["mesh", "--input", RECT, "--spacing", "uniform:10",
                          "--out", str(tmp_path / "m.json"),
                          "--svg", str(svg_file)], capsys)
        assert code == 0
        assert svg_file.read_text().startswith("<svg")

    def test_stats_flag_prints_report_to_stderr(self, capsys, tmp_path):
        code, _, err = run(["mesh", "--input", RECT, "--spacing", "uniform:10",
                            "--out", str(tmp_path / "m.json"), "--stats"],
                           capsys)
        assert code == 0
        assert "triangles:" in err
        assert "ANGLE" in err

    def test_warnings_exit_one(self, capsys, square_file):
        # a coarse advancing-front run has no free nodes to smooth
        code, out, err = run(["mesh", "--input", square_file, "--spacing",
                              "uniform:2", "--method", "afm"], capsys)
        assert code == 1
        assert "warning:" in err
        json.loads(out)  # the mesh is still delivered

    def test_factor_out_of_range_is_usage_error(self, capsys):
        code, _, err = run(["mesh", "--input", RECT, "--spacing", "uniform:10",
                            "--factor", "5"], capsys)
        assert code == 2
        assert "error:" in err
        assert "factor" in err

    def test_missing_file_exits_two(self, capsys):
        code, _, err = run(["mesh", "--input", "/no/such/file.mg",
                            "--spacing", "uniform:10"], capsys)
        assert code == 2
        assert "cannot read" in err

    def test_bad_spacing_exits_two(self, capsys):
        code, _, err = run(["mesh", "--input", RECT,
                            "--spacing", "gauss:1"], capsys)
        assert code == 2
        assert "error:" in err

    def test_malformed_boundary_exits_two(self, capsys, tmp_path):
        bad = tmp_path / "bad.mg"
        bad.write_text("SEGMENT\nnot a number\n", encoding="utf-8")
        code, _, err = run(["mesh", "--input", str(bad),
                            "--spacing", "uniform:1"], capsys)
        assert code == 2
        assert "error:" in err

    def test_method_and_swap_choices(self, capsys, square_file):
        for method in ("delaunay", "afm", "steiner"):
            for swap in ("delaunay", "minmax", "none"):
                code, out, _ = run(["mesh", "--input", square_file,
                                    "--spacing", "uniform:0.5",
                                    "--method", method, "--swap", swap],
                                   capsys)
                assert code in (0, 1)
                json.loads(out)

    def test_no_smooth_flag(self, capsys, square_file):
        code, out, _ = run(["mesh", "--input", square_file, "--spacing",
                            "uniform:0.5", "--no-smooth"], capsys)
        assert code == 0
        json.loads(out)

    def test_afm_version_flag(self, capsys, square_file):
        for version in ("first", "smallest"):
            code, out, _ = run(["mesh", "--input", square_file, "--spacing",
                                "uniform:0.4", "--method", "afm",
                                "--afm-version", version], capsys)
            assert code in (0, 1)
            json.loads(out)

    def test_stdin_input(self, capsys, monkeypatch):
        import io
        monkeypatch.setattr("sys.stdin", io.StringIO(SQUARE_MG))
        code, out, _ = run(["mesh", "--input", "-", "--spacing",
                            "uniform:0.5"], capsys)
        assert code == 0
        json.loads(out)

    def test_deterministic_output(self, capsys, square_file):
        _, out1, _ = run(["mesh", "--input", square_file,
                          "--spacing", "uniform:0.25"], capsys)
        _, out2, _ = run(["mesh", "--input", square_file,
                          "--spacing", "uniform:0.25"], capsys)
        assert out1 == out2


class TestStatsCommand:
    def test_full_report(self, capsys):
        code, out, _ = run(["stats", "--input", RECT,
                            "--spacing", "uniform:10"], capsys)
        assert code == 0
        assert "nodes:" in out
        assert "EDGES_PER_NODE" in out
        assert "ANGLE" in out

    def test_single_kind(self, capsys):
        code, out, _ = run(["stats", "--input", RECT, "--spacing",
                            "uniform:10", "--kind", "5"], capsys)
        assert code == 0
        assert out.startswith("ANGLE")
        assert "EDGES_PER_NODE" not in out

    def test_every_kind_number(self, capsys):
        names = {1: "EDGES_PER_NODE", 2: "TRIANGLES_PER_NODE",
                 3: "TRIANGLE_AREA", 4: "EDGE_LENGTH", 5: "ANGLE"}
        for k, name in names.items():
            code, out, _ = run(["stats", "--input", RECT, "--spacing",
                                "uniform:10", "--kind", str(k)], capsys)
            assert code == 0
            assert out.startswith(name)

    def test_kind_out_of_range_rejected(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["stats", "--input", RECT, "--spacing", "uniform:10",
                  "--kind", "9"])
        assert exc.value.code == 2


class TestUsage:
    def test_missing_required_flags(self):
        with pytest.raises(SystemExit) as exc:
            main(["mesh", "--input", RECT])
        assert exc.value.code == 2

    def test_unknown_command(self):
        with pytest.raises(SystemExit):
            main(["frobnicate"])

    def test_unknown_method(self):
        with pytest.raises(SystemExit):
            main(["mesh", "--input", RECT, "--spacing", "uniform:10",
                  "--method", "magic"])
