import csv
import json

import pytest

from dunklkit.cli import main, parse_preset
from dunklkit.errors import InvalidArgumentError
from dunklkit.report import report_body_bytes


def _read_rows(path):
    with open(path, newline="") as fh:
        return list(csv.reader(fh))


# ----------------------------------------------------------------- presets


def test_parse_preset_line():
    rs = parse_preset("z2:7/3")
    assert rs.dimension == 1
    assert str(rs.gamma) == "7/3"


def test_parse_preset_product():
    rs = parse_preset("z2xz2:1,2")
    assert rs.dimension == 2


@pytest.mark.parametrize("bad", ["z2:nope", "z2:", "z2xz2:1", "z2xz2:1,2,3", "b2:1", "z2:1/0"])
def test_parse_preset_rejects(bad):
    with pytest.raises(InvalidArgumentError):
        parse_preset(bad)


# ----------------------------------------------------------------- run


def test_run_writes_json_report(tmp_path, capsys):
    out = tmp_path / "report.json"
    code = main(["run", "--suite", "normalization", "--preset", "z2:1", "--out", str(out)])
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["suite"] == "normalization"
    assert doc["status"] == "pass"
    assert {"id", "anchor", "residual", "tol", "pass"} <= set(doc["checks"][0])
    assert "elapsed_ms" in doc and "env" in doc
    lines = capsys.readouterr().out.splitlines()
    assert any(line.startswith("[PASS]") for line in lines)


def test_run_writes_csv_report(tmp_path):
    out = tmp_path / "report.csv"
    code = main([
        "run", "--suite", "normalization", "--preset", "z2:2",
        "--out", str(out), "--format", "csv",
    ])
    assert code == 0
    rows = _read_rows(out)
    assert rows[0] == ["id", "anchor", "residual", "tol", "pass"]
    assert len(rows) > 1


def test_run_without_out_writes_nothing(tmp_path, capsys, monkeypatch):
    monkeypatch.chdir(tmp_path)
    code = main(["run", "--suite", "normalization", "--preset", "z2:1"])
    assert code == 0
    assert list(tmp_path.iterdir()) == []


def test_run_tol_override_controlled_failure(capsys):
    code = main(["run", "--suite", "normalization", "--preset", "z2:1", "--tol", "1e-300"])
    assert code == 1
    assert "[FAIL]" in capsys.readouterr().out


def test_run_unsupported_configuration(capsys):
    # the distribution pairings need an integer multiplicity
    code = main(["run", "--suite", "distributions", "--preset", "z2:7/3"])
    assert code == 2
    assert "error:" in capsys.readouterr().err


def test_run_dimension_gate(capsys):
    code = main(["run", "--suite", "inversion", "--preset", "z2xz2:1,2"])
    assert code == 2
    assert "rank-one" in capsys.readouterr().err


def test_run_bad_preset(capsys):
    assert main(["run", "--suite", "kernel", "--preset", "z2:oops"]) == 2


def test_run_unknown_suite_rejected(capsys):
    assert main(["run", "--suite", "bogus", "--preset", "z2:1"]) == 2


def test_missing_subcommand(capsys):
    assert main([]) == 2


def test_run_requires_root_system(capsys):
    assert main(["run", "--suite", "kernel"]) == 2
    assert "root system" in capsys.readouterr().err


# ----------------------------------------------------------------- config files


def test_config_file_supplies_settings(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    out = tmp_path / "r.json"
    cfg.write_text(json.dumps({
        "suite": "normalization", "preset": "z2:1", "out": str(out),
    }))
    assert main(["run", "--config", str(cfg)]) == 0
    assert json.loads(out.read_text())["suite"] == "normalization"


def test_cli_flag_overrides_config(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"suite": "normalization", "preset": "z2:1", "tol": 1e-300}))
    # config tolerance alone would fail; the flag must win
    assert main(["run", "--config", str(cfg), "--tol", "1.0"]) == 0
    assert main(["run", "--config", str(cfg)]) == 1


def test_config_unknown_key_rejected(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"suite": "kernel", "preset": "z2:1", "gridn": 64}))
    assert main(["run", "--config", str(cfg)]) == 2
    assert "unknown config keys" in capsys.readouterr().err


def test_config_inline_root_system(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({
        "suite": "normalization",
        "root_system": {
            "dimension": 1,
            "positive_roots": [["1"]],
            "multiplicities": ["3/2"],
        },
    }))
    assert main(["run", "--config", str(cfg)]) == 0


def test_config_missing_file(capsys):
    assert main(["run", "--config", "/nonexistent/cfg.json"]) == 2


def test_config_invalid_json(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text("{not json")
    assert main(["run", "--config", str(cfg)]) == 2


# ----------------------------------------------------------------- plot


def test_plot_kernel_curve(tmp_path):
    report = tmp_path / "kernel.json"
    curve = tmp_path / "curve.csv"
    assert main(["run", "--suite", "kernel", "--preset", "z2:1", "--out", str(report)]) == 0
    assert main([
        "plot", "--report", str(report), "--quantity", "kernel-curve", "--out", str(curve),
    ]) == 0
    rows = _read_rows(curve)
    assert rows[0] == ["x", "re", "im"]
    assert len(rows) == 1 + 201
    xs = [float(r[0]) for r in rows[1:]]
    assert xs[0] == -5.0 and xs[-1] == 5.0


def test_plot_residual_curve(tmp_path):
    report = tmp_path / "ai.json"
    curve = tmp_path / "residuals.csv"
    assert main(["run", "--suite", "approx-identity", "--preset", "z2:1", "--out", str(report)]) == 0
    assert main([
        "plot", "--report", str(report), "--quantity", "residual-vs-eps", "--out", str(curve),
    ]) == 0
    rows = _read_rows(curve)
    assert len(rows) == 1 + 4
    eps = [float(r[0]) for r in rows[1:]]
    assert eps == sorted(eps, reverse=True)


def test_plot_unknown_quantity_creates_no_file(tmp_path, capsys):
    report = tmp_path / "kernel.json"
    missing = tmp_path / "nope.csv"
    assert main(["run", "--suite", "kernel", "--preset", "z2:1", "--out", str(report)]) == 0
    code = main(["plot", "--report", str(report), "--quantity", "bogus", "--out", str(missing)])
    assert code == 2
    assert not missing.exists()
    assert "available:" in capsys.readouterr().err


def test_plot_report_without_curves(tmp_path, capsys):
    report = tmp_path / "norm.json"
    assert main(["run", "--suite", "normalization", "--preset", "z2:1", "--out", str(report)]) == 0
    assert main(["plot", "--report", str(report), "--quantity", "kernel-curve"]) == 2


def test_plot_to_stdout(tmp_path, capsys):
    report = tmp_path / "kernel.json"
    assert main(["run", "--suite", "kernel", "--preset", "z2:1", "--out", str(report)]) == 0
    capsys.readouterr()
    assert main(["plot", "--report", str(report), "--quantity", "kernel-curve"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "x,re,im"


# ----------------------------------------------------------------- determinism


def test_same_seed_reports_are_byte_identical(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    args = ["run", "--suite", "kernel", "--preset", "z2:1", "--seed", "7"]
    assert main(args + ["--out", str(a)]) == 0
    assert main(args + ["--out", str(b)]) == 0
    body_a = report_body_bytes(json.loads(a.read_text()))
    body_b = report_body_bytes(json.loads(b.read_text()))
    assert body_a == body_b


def test_different_seed_changes_sampled_residuals(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["run", "--suite", "kernel", "--preset", "z2:1", "--seed", "1", "--out", str(a)]) == 0
    assert main(["run", "--suite", "kernel", "--preset", "z2:1", "--seed", "2", "--out", str(b)]) == 0
    assert report_body_bytes(json.loads(a.read_text())) != report_body_bytes(json.loads(b.read_text()))
