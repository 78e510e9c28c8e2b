"""Command-line interface: exit codes, report schema, determinism."""
from __future__ import annotations

import json

import pytest

from qbgg.cli import main


def _run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


def test_pass_exit_zero(capsys):
    code, rep = _run(capsys, ["dims", "verify", "--type", "A3", "--s", "1,3"])
    assert code == 0
    assert rep["status"] == "pass"
    assert rep["schema_version"] == 1
    assert all(c["status"] == "pass" for c in rep["checks"])


def test_usage_errors_exit_two(capsys):
    assert main(["dims", "verify", "--type", "A3", "--s", "9"]) == 2
    capsys.readouterr()
    assert main(["dims", "verify", "--type", "Z9", "--s", ""]) == 2
    capsys.readouterr()
    with pytest.raises(SystemExit) as exc:
        main(["not-a-command"])
    assert exc.value.code == 2


def test_reports_deterministic(capsys):
    def snapshot():
        code, rep = _run(capsys, ["weyl", "graph", "--type", "A2", "--s", "1"])
        assert code == 0
        for c in rep["checks"]:
            c.pop("elapsed_ms")
        return rep
    assert snapshot() == snapshot()


def test_report_round_trips(capsys):
    code, rep = _run(capsys, ["cartan", "info", "--type", "B2", "--s", "2"])
    assert code == 0
    assert json.loads(json.dumps(rep)) == rep


def test_bgg_verify_report_shape(capsys):
    code, rep = _run(capsys, ["bgg", "verify", "--type", "A2", "--s", "1",
                              "--height", "3"])
    assert code == 0
    by_id = {c["check_id"]: c for c in rep["checks"]}
    slices = by_id["bgg.exactness"]["witness"]["slices"]
    assert slices
    for rec in slices:
        assert {"offset", "dims", "ranks", "exact"} <= set(rec)


def test_assist_flag_gives_identical_report(capsys):
    base = ["bgg", "verify", "--type", "A2", "--s", "1", "--height", "3"]
    _, rep1 = _run(capsys, base)
    _, rep2 = _run(capsys, base + ["--assist"])
    for rep in (rep1, rep2):
        for c in rep["checks"]:
            c.pop("elapsed_ms")
        rep["config"].pop("assist", None)
    assert rep1 == rep2


def test_podles_demo(capsys):
    code, rep = _run(capsys, ["podles", "demo"])
    assert code == 0
    assert "coordinate_relations" in rep
    assert any("da" in r for r in rep["coordinate_relations"])


def test_output_file(tmp_path, capsys):
    out = tmp_path / "report.json"
    code = main(["cartan", "info", "--type", "A1", "--s", "",
                 "--output", str(out)])
    assert code == 0
    rep = json.loads(out.read_text())
    assert rep["status"] == "pass"
