"""Tests for config loading, CSV/SVG export, and the command-line interface."""

import json

import numpy as np
import pytest

import gtbezier.cli as cli
from gtbezier import datasets
from gtbezier.config import (
    ConfigError,
    RunConfig,
    config_fit_problem,
    config_node_set,
    config_weights,
    load_config,
    save_config,
)
from gtbezier.export import ErrorTable, format_float, make_error_table, write_error_table_csv
from gtbezier.pia import DivergenceError
from gtbezier.totalpos import NtpSuiteReport


def _circle_config(tmp_path, mode="fit", **overrides):
    prob = datasets.circle_problem()
    cfg = {
        "mode": mode,
        "nodes": prob.nodeset.nodes.tolist(),
        "coefficients": prob.nodeset.coefficients.tolist(),
        "scale": prob.nodeset.scale,
        "weights": prob.weights.tolist(),
        "points": prob.data.tolist(),
        "params": prob.params.tolist(),
        "max_iter": 20,
    }
    cfg.update(overrides)
    path = tmp_path / "config.json"
    path.write_text(json.dumps(cfg))
    return path


def test_config_round_trip(tmp_path):
    path = _circle_config(tmp_path)
    cfg = load_config(path)
    out = tmp_path / "rewritten.json"
    save_config(cfg, out)
    again = load_config(out)
    assert cfg == again
    problem = config_fit_problem(cfg)
    np.testing.assert_allclose(problem.data, datasets.circle_problem().data)


def test_config_defaults(tmp_path):
    path = tmp_path / "minimal.json"
    path.write_text(json.dumps({"nodes": [0, 1, 2]}))
    cfg = load_config(path)
    assert cfg.coefficients is None and cfg.weights is None
    problem_cfg = RunConfig(nodes=[0, 1], points=[[0, 0], [1, 1]], params=[0, 1])
    problem = config_fit_problem(problem_cfg)
    assert np.all(problem.nodeset.coefficients == 1.0)
    assert np.all(problem.weights == 1.0)


@pytest.mark.parametrize(
    "payload,msg",
    [
        ({"nodes": [0, 1], "bogus": 1}, "unknown config fields"),
        ({"nodes": [0, 1], "mode": "dance"}, "mode must be"),
        ({}, "requires a 'nodes'"),
        ({"nodes": [0, 1], "max_iter": 0}, "max_iter"),
        ({"nodes": [0, 1], "tol": -1}, "tol"),
        ({"nodes": [0, 1], "grid": 0}, "grid"),
    ],
)
def test_config_structural_errors(tmp_path, payload, msg):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(payload))
    with pytest.raises(ConfigError, match=msg):
        load_config(path)


def test_config_rejects_invalid_json(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{nope")
    with pytest.raises(ConfigError, match="not valid JSON"):
        load_config(path)


def test_config_negative_weight_is_config_error(tmp_path):
    path = _circle_config(tmp_path, mode="tp-check", weights=[0.5, -2.51, 5.5, 2.51, 0.22])
    cfg = load_config(path)
    ns = config_node_set(cfg)
    with pytest.raises(ConfigError, match="weights"):
        config_weights(cfg, ns)
    # the CLI maps it to exit code 2 before running any trial
    assert cli.main(["tp-check", "--config", str(path), "--out", str(path.parent / "o")]) == 2


def test_format_float_round_trips():
    rng = np.random.default_rng(3)
    for x in rng.normal(size=20) * 10.0 ** rng.integers(-12, 12, size=20):
        assert float(format_float(x)) == x


def test_error_table_validation_and_csv(tmp_path):
    with pytest.raises(ValueError, match="strictly increasing"):
        ErrorTable(("a",), (5, 5), np.array([[1.0, 2.0]]))
    with pytest.raises(ValueError, match="one row per label"):
        ErrorTable(("a",), (1, 2), np.array([[1.0]]))
    table = make_error_table(("a", "b"), [(0.5, 0.25, 0.125), (1.0, 0.5, 0.25)], (1, 3))
    np.testing.assert_array_equal(table.errors, [[0.5, 0.125], [1.0, 0.25]])
    out = tmp_path / "t.csv"
    write_error_table_csv(out, table)
    lines = out.read_text().splitlines()
    assert lines[0] == "curve,1,3"
    assert lines[1].startswith("a,0.5")


def test_basis_eval_rows_sum_to_one(tmp_path):
    path = _circle_config(tmp_path, mode="eval")
    out = tmp_path / "basis_out"
    assert cli.main(["basis-eval", "--config", str(path), "--grid", "3", "--out", str(out)]) == 0
    lines = (out / "basis.csv").read_text().splitlines()
    assert lines[0] == "t,T0,T1,T2,T3,T4"
    assert len(lines) == 4
    for line in lines[1:]:
        vals = [float(v) for v in line.split(",")[1:]]
        assert abs(sum(vals) - 1.0) < 1e-12


def test_basis_eval_grid_of_one_gives_endpoint_row(tmp_path):
    path = _circle_config(tmp_path, mode="eval")
    out = tmp_path / "one"
    assert cli.main(["basis-eval", "--config", str(path), "--grid", "1", "--out", str(out)]) == 0
    row = (out / "basis.csv").read_text().splitlines()[1].split(",")
    assert float(row[0]) == 0.0
    assert [float(v) for v in row[1:]] == [1.0, 0.0, 0.0, 0.0, 0.0]


def test_basis_eval_example_grid(tmp_path):
    path = _circle_config(tmp_path, mode="eval")
    out = tmp_path / "grid101"
    assert cli.main(["basis-eval", "--config", str(path), "--out", str(out)]) == 0
    assert len((out / "basis.csv").read_text().splitlines()) == 102


def test_tp_check_pass_and_report(tmp_path):
    path = _circle_config(tmp_path, mode="tp-check")
    out = tmp_path / "tp"
    code = cli.main(
        ["tp-check", "--config", str(path), "--trials", "20", "--seed", "5", "--out", str(out)]
    )
    assert code == 0
    header, row = (out / "tp_report.csv").read_text().splitlines()
    assert header.startswith("trials,failures,worst_minor")
    assert row.split(",")[0] == "20" and row.split(",")[1] == "0"


def test_tp_check_failure_exit_code(tmp_path, monkeypatch):
    path = _circle_config(tmp_path, mode="tp-check")
    fake = NtpSuiteReport(
        trials=4, failures=1, worst_minor=-0.5,
        worst_witness=((0, 1), (0, 1), -0.5), worst_case="interior",
        failed_trials=((0, "interior"),),
    )
    monkeypatch.setattr(cli, "verify_ntp_suite", lambda *a, **k: fake)
    assert cli.main(["tp-check", "--config", str(path), "--out", str(tmp_path / "f")]) == 1


def test_pia_fit_outputs_and_determinism(tmp_path):
    path = _circle_config(tmp_path)
    out1, out2 = tmp_path / "fit1", tmp_path / "fit2"
    assert cli.main(["pia-fit", "--config", str(path), "--out", str(out1)]) == 0
    assert cli.main(["pia-fit", "--config", str(path), "--out", str(out2)]) == 0
    for name in ("control.csv", "history.csv", "curve.csv", "curve.svg"):
        assert (out1 / name).read_bytes() == (out2 / name).read_bytes()
    history = (out1 / "history.csv").read_text().splitlines()
    assert history[0] == "iteration,error"
    assert len(history) == 21  # 20 iterations

    final = float(history[-1].split(",")[1])
    assert final == pytest.approx(1.8e-3, rel=10.0)


def test_pia_fit_divergence_exit_code(tmp_path, monkeypatch):
    path = _circle_config(tmp_path)

    def boom(*a, **k):
        raise DivergenceError("test")

    monkeypatch.setattr(cli, "pia_run", boom)
    assert cli.main(["pia-fit", "--config", str(path), "--out", str(tmp_path / "d")]) == 4


def test_missing_config_is_io_error(tmp_path):
    assert cli.main(["pia-fit", "--config", str(tmp_path / "nope.json")]) == 3


def test_unwritable_out_is_io_error(tmp_path):
    path = _circle_config(tmp_path)
    blocker = tmp_path / "blocker"
    blocker.write_text("file, not a directory")
    code = cli.main(["pia-fit", "--config", str(path), "--out", str(blocker / "sub")])
    assert code == 3


def test_example_circle_outputs(tmp_path):
    out = tmp_path / "circle"
    assert cli.main(["example", "circle", "--out", str(out)]) == 0
    table = (out / "circle_errors.csv").read_text().splitlines()
    assert table[0] == "curve,1,5,10,20"
    assert [line.split(",")[0] for line in table[1:]] == ["gt", "bezier", "rational"]
    svg = (out / "circle.svg").read_text()
    assert svg.startswith("<?xml")
    assert "viewBox=" in svg
    assert svg.count("<path") == 6  # three curves + three control polygons
    assert "stroke-dasharray" in svg


def test_example_circle_zero_iterations(tmp_path):
    out = tmp_path / "init"
    assert cli.main(["example", "circle", "--iterations", "0", "--out", str(out)]) == 0
    assert not (out / "circle_errors.csv").exists()
    assert (out / "circle_gt_curve.csv").exists()
    # initial control points are the data samples
    rows = (out / "circle_gt_control.csv").read_text().splitlines()[1:]
    got = np.array([[float(v) for v in r.split(",")] for r in rows])
    np.testing.assert_allclose(got, datasets.circle_samples(), atol=1e-15)


def test_example_helix_outputs(tmp_path):
    out = tmp_path / "helix"
    assert cli.main(["example", "helix", "--out", str(out)]) == 0
    table = (out / "helix_errors.csv").read_text().splitlines()
    assert table[0] == "curve,1,10,20,30"
    assert len(table) == 3
    assert not (out / "helix.svg").exists()  # 3D data exports as CSV only
    curve_rows = (out / "helix_gt_curve.csv").read_text().splitlines()
    assert curve_rows[0] == "x,y,z"
    assert len(curve_rows) == cli.POLYLINE_SAMPLES + 1
