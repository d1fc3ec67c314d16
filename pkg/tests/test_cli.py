"""
命令行测试：通过 cli_main 调用，检查 stdout 内容与退出码
"""

import json

import pytest

from core.models import BoundReport
from modules.graph_core import from_graph6, girth
from scripts import hardcore_cli
from scripts.hardcore_cli import cli_main


def run(capsys, *argv):
    code = cli_main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def json_lines(text):
    return [json.loads(line) for line in text.splitlines() if line.strip()]


def test_poly_single_edge(capsys):
    code, out, _ = run(capsys, "poly", "A_")
    assert code == 0
    assert json_lines(out) == [{"graph6": "A_", "n": 2, "coeffs": ["1", "2"], "alpha": 1}]


def test_poly_csv(capsys):
    code, out, _ = run(capsys, "poly", "--csv", "Dhc")
    assert code == 0
    assert out.splitlines() == ["graph6,n,coeffs,alpha", "Dhc,5,1 5 5,2"]


def test_poly_reads_graph6_file(capsys, tmp_path):
    path = tmp_path / "graphs.g6"
    path.write_text(">>graph6<<Bw\nDhc\n", encoding="ascii")
    code, out, _ = run(capsys, "poly", str(path))
    assert code == 0
    assert [row["coeffs"] for row in json_lines(out)] == [["1", "3"], ["1", "5", "5"]]


def test_eval_exact_and_float(capsys):
    code, out, _ = run(capsys, "eval", "Dhc", "--lambda", "1")
    assert code == 0
    row = json_lines(out)[0]
    assert row["occupancy"] == "3/11"
    assert row["exact"] is True
    code, out, _ = run(capsys, "eval", "Dhc", "--lambda", "1", "--float")
    row = json_lines(out)[0]
    assert row["occupancy"] == pytest.approx(3 / 11)


def test_ratio_triangle(capsys):
    code, out, _ = run(capsys, "ratio", "Bw")
    assert code == 0
    row = json_lines(out)[0]
    assert row["ratio"] == "4/3"
    assert row["alpha"] == 1


def test_ratio_profile(capsys):
    code, out, _ = run(capsys, "ratio", "Dhc", "--profile", "1/2,1,2")
    assert code == 0
    rows = json_lines(out)
    assert [row["lambda"] for row in rows] == ["1/2", "1", "2"]
    assert all(row["strictly_decreasing"] for row in rows)


def test_bounds_on_triangle(capsys):
    code, out, err = run(capsys, "bounds", "Bw", "--lambda-grid", "1")
    assert code == 0
    row = json_lines(out)[0]
    assert row["thm13"] is None
    assert row["applicable"]["thm13"] is False
    assert row["clique_ok"] is True
    assert json.loads(err.strip().splitlines()[-1])["graphs_checked"] == 1


def test_bounds_on_atlas(capsys):
    code, out, _ = run(capsys, "bounds", "--atlas", "4", "--lambda-grid", "1/4,1")
    assert code == 0
    assert len(json_lines(out)) == 18 * 2


def test_bounds_violation_exit_code(capsys, monkeypatch):
    def fake_report(g, lam, graph_id=None, poly=None, tolerance=None):
        report = BoundReport(graph_id=graph_id, n=g.n, max_degree=0, lam=lam, triangle_free=True,
                             regular=True, occupancy=0.0, log_p_per_n=0.0)
        report.violations.append("thm13")
        return report

    monkeypatch.setattr("modules.scanner.bound_verifier.build_bound_report", fake_report)
    code, _, err = run(capsys, "bounds", "Bw")
    assert code == 2
    assert "violation" in err


def test_unknown_flag_is_input_error(capsys):
    code, _, err = run(capsys, "poly", "--bogus", "A_")
    assert code == 1
    assert "error" in err


def test_malformed_graph6_is_input_error(capsys):
    code, _, err = run(capsys, "poly", "D h")
    assert code == 1
    assert "outside printable" in err


def test_missing_subcommand(capsys):
    assert run(capsys)[0] == 1


def test_sample_requires_seed(capsys):
    assert run(capsys, "sample", "Dhc")[0] == 1


def test_sample_output(capsys):
    code, out, _ = run(capsys, "sample", "A_", "--seed", "3", "--samples", "2000")
    assert code == 0
    row = json_lines(out)[0]
    assert row["occupancy"] == pytest.approx(1 / 3, abs=0.05)
    assert sum(row["z_histogram"]) == 2000


def test_gen_regular(capsys):
    code, out, _ = run(capsys, "gen-regular", "--n", "4", "--d", "3", "--seed", "1")
    assert code == 0
    assert out.split() == ["C~"]
    code, out, _ = run(capsys, "gen-regular", "--n", "6", "--d", "2", "--seed", "1", "--triangle-free", "--count", "2")
    lines = out.split()
    assert len(lines) == 2
    assert all(girth(from_graph6(line)) == 6 for line in lines)


def test_gen_regular_parity_error(capsys):
    code, _, err = run(capsys, "gen-regular", "--n", "5", "--d", "3", "--seed", "1")
    assert code == 1
    assert "even" in err


def test_scan_inline(capsys):
    code, out, _ = run(capsys, "scan", "--inline", "Dhc", "--inline", "Bw", "--top-k", "1")
    assert code == 0
    rows = json_lines(out)
    assert [row["ratio"] for row in rows] == ["4/3"]


def test_scan_filter_and_bad_filter(capsys):
    code, out, _ = run(capsys, "scan", "--atlas", "5", "--filter", "triangle-free", "--top-k", "3", "--workers", "1")
    assert code == 0
    assert len(json_lines(out)) == 3
    assert run(capsys, "scan", "--inline", "Bw", "--filter", "planar")[0] == 1
    assert run(capsys, "scan", "--inline", "Bw", "--filter", "triangle-free")[0] == 1


def test_circulant_search(capsys):
    code, out, _ = run(capsys, "circulant-search", "--n", "5", "--sizes", "1:1", "--workers", "1")
    assert code == 0
    rows = json_lines(out)
    assert rows[0]["ratio"] == "22/15"
    assert rows[0]["source"] == "C5(1)"


def test_reduce(capsys):
    code, out, _ = run(capsys, "reduce", "Dhc", "--threshold", "2")
    assert code == 0
    row = json_lines(out)[0]
    assert row["n_after"] == 0
    assert run(capsys, "reduce", "Dhc")[0] == 1


def test_tree_and_lambertw(capsys):
    code, out, _ = run(capsys, "tree", "--d", "2", "--lambda", "3/4")
    assert code == 0
    assert json_lines(out)[0]["alpha"] == pytest.approx(0.25)
    code, out, _ = run(capsys, "lambertw", "--z", "0")
    assert json_lines(out)[0]["w"] == 0.0
    assert run(capsys, "lambertw", "--z", "-1")[0] == 1


def test_config_override(capsys, tmp_path, restore_settings):
    path = tmp_path / "override.yaml"
    path.write_text("EXACT_CONFIG:\n  max_vertices: 3\n", encoding="utf-8")
    code, _, err = run(capsys, "poly", "--config", str(path), "Dhc")
    assert code == 1
    assert "cap" in err
    assert run(capsys, "poly", "--config", str(tmp_path / "missing.yaml"), "A_")[0] == 1


def test_help_exits_cleanly(capsys):
    assert run(capsys, "--help")[0] == 0


def test_module_main_entry(monkeypatch):
    monkeypatch.setattr("sys.argv", ["hardcore", "lambertw", "--z", "1"])
    with pytest.raises(SystemExit) as info:
        hardcore_cli.main()
    assert info.value.code == 0
