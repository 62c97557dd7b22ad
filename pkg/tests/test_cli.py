import json
import subprocess
import sys

import pytest

from bridgegap.cli import main
from bridgegap.experiments import CSV_HEADER


def run_cli(*argv):
    return main(list(argv))


def test_gen_writes_requested_bridges(tmp_path, capsys):
    out = tmp_path / "g.el"
    code = run_cli(
        "gen", "--n1", "100", "--p1", "0.1", "--n2", "50", "--p2", "0.2",
        "--bridges", "5", "--seed", "7", "-o", str(out),
    )
    assert code == 0
    captured = capsys.readouterr()
    assert "|B|=5" in captured.out
    assert out.read_text().startswith("# bridgegap-graph v1\n# n1=100 n2=50\n")


def test_gen_rejects_bad_probability(tmp_path, capsys):
    code = run_cli(
        "gen", "--n1", "10", "--p1", "0.1", "--n2", "5", "--p2", "0.2",
        "--bridge-prob", "1.5", "-o", str(tmp_path / "g.el"),
    )
    assert code == 2
    assert "error:" in capsys.readouterr().err


def test_gen_requires_exactly_one_bridge_spec(tmp_path, capsys):
    base = ["gen", "--n1", "10", "--p1", "0.1", "--n2", "5", "--p2", "0.2", "-o", str(tmp_path / "g.el")]
    assert run_cli(*base) == 2
    assert run_cli(*base, "--bridges", "1", "--bridge-prob", "0.1") == 2


def test_gen_deterministic_files(tmp_path, capsys):
    args = [
        "gen", "--n1", "40", "--p1", "0.2", "--n2", "10", "--p2", "0.3",
        "--bridge-prob", "0.05", "--seed", "3",
    ]
    f1, f2 = tmp_path / "a.el", tmp_path / "b.el"
    assert run_cli(*args, "-o", str(f1)) == 0
    assert run_cli(*args, "-o", str(f2)) == 0
    assert f1.read_bytes() == f2.read_bytes()


def test_measure_reports_unreachable(tmp_path, capsys):
    graph = tmp_path / "g.el"
    assert run_cli(
        "gen", "--n1", "6", "--p1", "0.5", "--n2", "3", "--p2", "0.5",
        "--bridges", "0", "--seed", "1", "-o", str(graph),
    ) == 0
    capsys.readouterr()
    assert run_cli("measure", "--graph", str(graph)) == 0
    out = capsys.readouterr().out
    assert "# unreachable_count=6" in out
    assert "0,unreachable" in out


def test_measure_json_round_trips(tmp_path, capsys):
    graph = tmp_path / "g.el"
    run_cli(
        "gen", "--n1", "10", "--p1", "0.4", "--n2", "4", "--p2", "0.5",
        "--bridges", "8", "--seed", "2", "-o", str(graph),
    )
    capsys.readouterr()
    assert run_cli("measure", "--graph", str(graph), "--json") == 0
    payload = json.loads(capsys.readouterr().out)
    assert set(payload) == {"mean_dstar", "unreachable_count", "cumulative_capital"}


def test_measure_entry_paths_complete_case(tmp_path, capsys):
    graph = tmp_path / "g.el"
    run_cli(
        "gen", "--n1", "4", "--p1", "1.0", "--n2", "2", "--p2", "1.0",
        "--bridges", "8", "--seed", "0", "-o", str(graph),
    )
    capsys.readouterr()
    assert run_cli("measure", "--graph", str(graph), "--entry-paths", "0", "--lmax", "3") == 0
    out = capsys.readouterr().out
    assert "2,6" in out  # six paths of length two


def test_measure_unreadable_graph_is_runtime_error(tmp_path, capsys):
    assert run_cli("measure", "--graph", str(tmp_path / "missing.el")) == 1
    bad = tmp_path / "bad.el"
    bad.write_text("not a graph\n")
    assert run_cli("measure", "--graph", str(bad)) == 1


def test_theory_text_and_json(capsys):
    assert run_cli(
        "theory", "--n1", "10000", "--p1", "0.001", "--n2", "1000", "--bridges", "1"
    ) == 0
    out = capsys.readouterr().out
    assert "predicted d*        = 5.000000" in out
    assert run_cli(
        "theory", "--n1", "10000", "--p1", "0.001", "--n2", "1000", "--bridges", "1", "--json"
    ) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["predicted_dstar"] == pytest.approx(5.0)


def test_theory_invalid_regime_is_usage_error(capsys):
    assert run_cli("theory", "--n1", "100", "--p1", "0.001", "--n2", "10", "--bridges", "1") == 2


def test_sweep_from_config(tmp_path, capsys):
    config = {
        "n1": 60, "p1": 0.1, "n2": 20, "p2": 0.2,
        "x_values": [1, 8], "trials": 3, "seed": 5,
        "substrate": "er", "connectivity_policy": "record",
    }
    cfg = tmp_path / "sweep.json"
    cfg.write_text(json.dumps(config))
    out_csv = tmp_path / "out.csv"
    out_svg = tmp_path / "out.svg"
    assert run_cli(
        "sweep", "--config", str(cfg), "-o", str(out_csv), "--plot", str(out_svg), "--threads", "1"
    ) == 0
    text = out_csv.read_text()
    assert text.startswith(CSV_HEADER)
    assert out_svg.read_text().startswith("<svg")


def test_sweep_bad_config_is_usage_error(tmp_path, capsys):
    cfg = tmp_path / "bad.json"
    cfg.write_text(json.dumps({"n1": 10}))
    assert run_cli("sweep", "--config", str(cfg)) == 2
    assert run_cli("sweep", "--config", str(tmp_path / "missing.json")) == 1


def test_compare_outputs(tmp_path, capsys):
    assert run_cli(
        "compare", "--n1", "80", "--p1", "0.08", "--n2", "20", "--p2", "0.25",
        "--x-values", "2", "16", "--trials", "3", "--seed", "1", "--threads", "1",
        "--out-er", str(tmp_path / "er.csv"), "--out-sf", str(tmp_path / "sf.csv"), "--json",
    ) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["x_values"] == [2, 16]
    assert (tmp_path / "er.csv").read_text().startswith(CSV_HEADER)
    assert (tmp_path / "sf.csv").read_text().startswith(CSV_HEADER)


def test_survey_bundled_and_file(tmp_path, capsys):
    assert run_cli("survey", "--bundled") == 0
    out = capsys.readouterr().out
    assert "62.0" in out
    sample = tmp_path / "s.csv"
    sample.write_text("subject_id,own_group,f1,f2,f3,f4\ns1,A,A,A,A,A\n")
    assert run_cli("survey", "--input", str(sample), "--json") == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["percentages"]["4"] == 100.0
    assert run_cli("survey") == 2
    assert run_cli("survey", "--input", str(sample), "--bundled") == 2


def test_cli_subprocess_usage_error_exit_code():
    out = subprocess.run(
        [sys.executable, "-m", "bridgegap", "gen", "--n1", "10"],
        capture_output=True,
        text=True,
    )
    assert out.returncode == 2
