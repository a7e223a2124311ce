"""Command-line interface: outputs, determinism, config, exit codes."""

import json
import os
import subprocess
import sys

import pytest

from chromashock.cli import dumps, run


def _capture(capsys, argv):
    code = run(argv)
    out = capsys.readouterr().out
    return code, out


def test_classify_canonical_json(capsys):
    code, out = _capture(capsys, ["classify", "--ul", "1,-3", "--ur", "8,-5.66"])
    assert code == 0
    assert out.strip() == \
        '{"region": 6, "s": 0.3275, "k": 0.00385, "overcompressive": true}'


def test_solve_trivial_json(capsys):
    code, out = _capture(capsys, ["solve", "--ul", "1,-3", "--ur", "1,-3"])
    assert code == 0
    doc = json.loads(out)
    assert doc["region"] == 1
    assert doc["waves"] == []


def test_deterministic_output(capsys):
    argv = ["solve", "--ul", "1,-3", "--ur", "2.5,-3.7"]
    _, first = _capture(capsys, argv)
    _, second = _capture(capsys, argv)
    assert first == second


def test_float_formatting_is_12_significant_digits():
    assert dumps({"x": 1.0 / 3.0}) == '{"x": 0.333333333333}'
    assert dumps({"n": 3, "flag": False, "xs": [1.5, 2.0]}) == \
        '{"n": 3, "flag": false, "xs": [1.5, 2]}'


def test_domain_error_exit_code(capsys):
    code = run(["classify", "--ul", "4,-1", "--ur", "8,-5.66"])
    assert code == 1
    assert "error" in capsys.readouterr().err


def test_missing_states_exit_code(capsys):
    assert run(["classify"]) == 1


def test_gspt_check_roots(capsys):
    code, out = _capture(capsys, ["gspt-check"])
    assert code == 0
    doc = json.loads(out)
    assert doc["roots"][0] == 0
    assert doc["roots"][1] == pytest.approx(2.0 ** (5.0 / 11.0), abs=1e-9)


def test_curves_csv_artifact(tmp_path, capsys):
    code, _ = _capture(capsys, ["curves", "--ul", "1,-3", "--n", "20",
                                "--out", str(tmp_path)])
    assert code == 0
    lines = (tmp_path / "curves.csv").read_text().splitlines()
    assert lines[0] == "v,y,curve_id"
    assert any(line.endswith(",S2") for line in lines[1:])


def test_profile_csv_artifact(tmp_path, capsys):
    code, _ = _capture(capsys, ["profile", "--ul", "1,-3", "--ur", "8,-5.66",
                                "--n", "50", "--out", str(tmp_path)])
    assert code == 0
    lines = (tmp_path / "profile.csv").read_text().splitlines()
    assert lines[0] == "xi,v,y"
    assert len(lines) == 51


def test_config_file_supplies_defaults(tmp_path, capsys, monkeypatch):
    cfg = tmp_path / "config.json"
    cfg.write_text(json.dumps({"ul": "1,-3", "ur": "8,-5.66"}))
    monkeypatch.setenv("CHROMA_CONFIG", str(cfg))
    code, out = _capture(capsys, ["classify"])
    assert code == 0
    assert json.loads(out)["region"] == 6
    # flags override the config file
    code, out = _capture(capsys, ["classify", "--ur", "1,-3"])
    assert code == 0
    assert json.loads(out)["region"] == 1


def test_unknown_config_key_rejected(tmp_path, capsys, monkeypatch):
    cfg = tmp_path / "config.json"
    cfg.write_text(json.dumps({"bogus": 1}))
    monkeypatch.setenv("CHROMA_CONFIG", str(cfg))
    assert run(["gspt-check"]) == 1


def test_installed_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "chromashock.cli", "classify",
         "--ul", "1,-3", "--ur", "8,-5.66"],
        capture_output=True, text=True,
        env={**os.environ, "CHROMA_CONFIG": ""},
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["region"] == 6
