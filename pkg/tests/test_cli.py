"""Command-line interface: subcommands, exit codes, stream discipline."""

import json

import pytest

from meshroute.cli import EXIT_DOMAIN, EXIT_IO, EXIT_OK, EXIT_USAGE, main
from meshroute.topology import (
    LinkObservation,
    NetworkScenario,
    NodeSite,
    save_scenario,
)


def write_line_scenario(path):
    """Three nodes on a wire: the only route 0 -> 2 runs through node 1."""
    nodes = (NodeSite(0, 0.0, 0.0), NodeSite(1, 200.0, 0.0), NodeSite(2, 400.0, 0.0))
    links = (
        LinkObservation(0, 1, 1.2, 30.0, 5.0),
        LinkObservation(1, 0, 0.8, 40.0, 3.0),
        LinkObservation(1, 2, 1.5, 20.0, 2.0),
        LinkObservation(2, 1, 1.0, 25.0, 4.0),
    )
    s = NetworkScenario(seed=0, area_side=400.0, radio_range=250.0, nodes=nodes, links=links)
    save_scenario(s, path)


def write_split_scenario(path):
    nodes = (NodeSite(0, 0.0, 0.0), NodeSite(1, 5000.0, 5000.0))
    s = NetworkScenario(seed=0, area_side=5000.0, radio_range=250.0, nodes=nodes, links=())
    save_scenario(s, path)


def test_gen_writes_scenario(tmp_path, capsys):
    out = tmp_path / "s.json"
    code = main(["gen", "--nodes", "25", "--seed", "42", "--out", str(out)])
    assert code == EXIT_OK
    data = json.loads(out.read_text())
    assert len(data["nodes"]) == 25
    assert len(data["links"]) == 80
    err = capsys.readouterr().err
    assert "25 nodes" in err


def test_gen_is_byte_stable(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["gen", "--nodes", "9", "--seed", "3", "--out", str(a)]) == EXIT_OK
    assert main(["gen", "--nodes", "9", "--seed", "3", "--out", str(b)]) == EXIT_OK
    assert a.read_bytes() == b.read_bytes()


def test_gen_rejects_non_square_grid(tmp_path, capsys):
    code = main(["gen", "--nodes", "26", "--out", str(tmp_path / "s.json")])
    assert code == EXIT_USAGE
    assert "error" in capsys.readouterr().err


def test_gen_unreachable_random_placement(tmp_path):
    code = main(
        [
            "gen", "--nodes", "25", "--placement", "random", "--seed", "0",
            "--range", "10", "--out", str(tmp_path / "s.json"),
        ]
    )
    assert code == EXIT_DOMAIN


@pytest.mark.parametrize("algo", ["bbbc", "bbo"])
def test_solve_line_scenario(tmp_path, capsys, algo):
    scenario = tmp_path / "line.json"
    write_line_scenario(scenario)
    code = main(
        [
            "solve", "--algo", algo, "--scenario", str(scenario),
            "--generations", "3", "--pop", "4", "--seed", "1",
        ]
    )
    assert code == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["best_path"] == [0, 1, 2]
    assert payload["percent_error"] == pytest.approx(0.0, abs=1e-9)
    assert payload["generations"] == 3
    assert payload["algorithm"] == algo


def test_solve_writes_trace(tmp_path):
    scenario = tmp_path / "line.json"
    write_line_scenario(scenario)
    trace = tmp_path / "trace.csv"
    code = main(
        [
            "solve", "--algo", "bbbc", "--scenario", str(scenario),
            "--generations", "4", "--pop", "4", "--trace", str(trace),
        ]
    )
    assert code == EXIT_OK
    lines = trace.read_text().splitlines()
    assert len(lines) == 5


def test_solve_same_source_target(tmp_path):
    scenario = tmp_path / "line.json"
    write_line_scenario(scenario)
    code = main(
        ["solve", "--algo", "bbbc", "--scenario", str(scenario), "--target", "0"]
    )
    assert code == EXIT_USAGE


def test_solve_missing_scenario(tmp_path):
    code = main(
        ["solve", "--algo", "bbbc", "--scenario", str(tmp_path / "absent.json")]
    )
    assert code == EXIT_IO


def test_solve_unknown_algorithm(tmp_path):
    scenario = tmp_path / "line.json"
    write_line_scenario(scenario)
    code = main(["solve", "--algo", "annealing", "--scenario", str(scenario)])
    assert code == EXIT_USAGE


def test_oracle_line_scenario(tmp_path, capsys):
    scenario = tmp_path / "line.json"
    write_line_scenario(scenario)
    code = main(["oracle", "--scenario", str(scenario)])
    assert code == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["nodes"] == [0, 1, 2]
    assert payload["cost"] > 0


def test_oracle_unreachable(tmp_path):
    scenario = tmp_path / "split.json"
    write_split_scenario(scenario)
    assert main(["oracle", "--scenario", str(scenario)]) == EXIT_DOMAIN


def test_bench_tiny_plan(tmp_path, capsys):
    plan = {
        "node_counts": [9],
        "generation_budgets": [3],
        "seeds": [[101, 9001]],
        "population_size": 10,
    }
    plan_path = tmp_path / "plan.json"
    plan_path.write_text(json.dumps(plan))
    out_dir = tmp_path / "bench"
    code = main(["bench", "--plan", str(plan_path), "--out", str(out_dir)])
    assert code == EXIT_OK
    assert (out_dir / "results.csv").exists()
    assert (out_dir / "summary.csv").exists()
    traces = list(out_dir.glob("trace_*.csv"))
    assert len(traces) == 2  # one per algorithm
    captured = capsys.readouterr()
    assert captured.out == ""  # machine output goes to files, logs to stderr


def test_bench_filters_large_cells(tmp_path):
    plan = {
        "node_counts": [9, 121],
        "generation_budgets": [2],
        "seeds": [[101, 9001]],
        "population_size": 8,
    }
    plan_path = tmp_path / "plan.json"
    plan_path.write_text(json.dumps(plan))
    out_dir = tmp_path / "bench"
    assert main(["bench", "--plan", str(plan_path), "--out", str(out_dir)]) == EXIT_OK
    rows = (out_dir / "results.csv").read_text().splitlines()[1:]
    assert rows and all(row.split(",")[1] == "9" for row in rows)


def test_bench_all_cells_large_without_flag(tmp_path):
    plan = {"node_counts": [2500], "generation_budgets": [2], "seeds": [[101, 9001]]}
    plan_path = tmp_path / "plan.json"
    plan_path.write_text(json.dumps(plan))
    code = main(["bench", "--plan", str(plan_path), "--out", str(tmp_path / "b")])
    assert code == EXIT_USAGE


def test_missing_subcommand_is_usage_error(capsys):
    assert main([]) == EXIT_USAGE
    capsys.readouterr()
