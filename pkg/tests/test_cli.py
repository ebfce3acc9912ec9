"""Command-line interface tests: argument parsing, exit codes, and the
installed console script."""

from __future__ import annotations

import subprocess
import sys

import pytest

from nfisac import cli
from nfisac.errors import NumericalError
from nfisac.validation import CheckResult, ValidationReport


def write_fast_config(tmp_path, extra: str = "") -> str:
    path = tmp_path / "fast.toml"
    path.write_text(
        "[sweep]\nvalues = [80.0, 90.0]\n" + extra, encoding="utf-8"
    )
    return str(path)


def test_run_experiment_success(tmp_path, capsys):
    out = tmp_path / "run"
    code = cli.main(
        ["dl_snr", "--config", write_fast_config(tmp_path), "--out", str(out)]
    )
    assert code == 0
    assert (out / "dl_snr.csv").is_file()
    assert (out / "summary.json").is_file()
    msg = capsys.readouterr().out
    assert "dl_snr" in msg and "summary.json" in msg


def test_model_flag_repeatable(tmp_path):
    out = tmp_path / "models"
    code = cli.main([
        "dl_r", "--out", str(out),
        "--config", str(write_model_sweep_config(tmp_path)),
        "--model", "accurate", "--model", "upw",
    ])
    assert code == 0
    header = (out / "dl_r_cr.csv").read_text().splitlines()[0]
    assert header == "r,CR_cc_accurate,CR_cc_upw"


def write_model_sweep_config(tmp_path):
    path = tmp_path / "radii.toml"
    path.write_text("[sweep]\nvalues = [5.0, 10.0]\n", encoding="utf-8")
    return path


def test_config_error_exit_code_2(tmp_path, capsys):
    bad = tmp_path / "bad.toml"
    bad.write_text("unknown_key = 1\n", encoding="utf-8")
    assert cli.main(["dl_snr", "--config", str(bad)]) == 2
    assert "config error" in capsys.readouterr().err

    assert cli.main(["dl_snr", "--config", str(tmp_path / "missing.toml")]) == 2
    assert "not found" in capsys.readouterr().err

    mangled = tmp_path / "mangled.toml"
    mangled.write_text("sweep = [oops\n", encoding="utf-8")
    assert cli.main(["dl_snr", "--config", str(mangled)]) == 2
    assert "TOML" in capsys.readouterr().err


def test_seed_bounds(tmp_path, capsys):
    cfg = write_fast_config(tmp_path)
    out = str(tmp_path / "x")
    assert cli.main(["dl_snr", "--config", cfg, "--out", out, "--seed", str(2**64)]) == 2
    assert "64-bit" in capsys.readouterr().err
    assert cli.main(["dl_snr", "--config", cfg, "--out", out, "--seed", "-1"]) == 2
    assert cli.main(["dl_snr", "--config", cfg, "--out", out,
                     "--seed", str(2**64 - 1)]) == 0


def test_numerical_error_exit_code_3(tmp_path, monkeypatch, capsys):
    def boom(cfg):
        raise NumericalError("synthetic failure")

    monkeypatch.setattr(cli, "run_experiment", boom)
    code = cli.main(["dl_snr", "--config", write_fast_config(tmp_path),
                     "--out", str(tmp_path / "y")])
    assert code == 3
    assert "numerical failure: synthetic failure" in capsys.readouterr().err


def test_rejects_missing_or_unknown_command(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main([])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["teleport"])
    assert exc.value.code == 2


def test_rejects_unknown_model(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["dl_snr", "--model", "warped"])
    assert exc.value.code == 2


def test_validate_wiring(monkeypatch):
    calls = {}

    def fake_suite(seed, threads, out_dir):
        calls["args"] = (seed, threads, out_dir)
        passed = calls.get("pass", True)
        return ValidationReport(results=[CheckResult("stub", passed, "")])

    import nfisac.validation as validation

    monkeypatch.setattr(validation, "validate_suite", fake_suite)
    assert cli.main(["validate", "--seed", "7", "--threads", "2"]) == 0
    assert calls["args"] == (7, 2, None)
    calls["pass"] = False
    assert cli.main(["validate"]) == 1


def test_console_script_installed(tmp_path):
    cfg = write_fast_config(tmp_path)
    out = tmp_path / "sub"
    proc = subprocess.run(
        ["nf-isac", "dl_snr", "--config", cfg, "--out", str(out)],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0, proc.stderr
    assert (out / "dl_snr.csv").is_file()

    helper = subprocess.run(["nf-isac", "--help"], capture_output=True, text=True)
    assert helper.returncode == 0
    for name in ("dl_snr", "ul_region", "validate"):
        assert name in helper.stdout


def test_module_entry_point(tmp_path):
    cfg = write_fast_config(tmp_path)
    out = tmp_path / "mod"
    proc = subprocess.run(
        [sys.executable, "-m", "nfisac.cli", "dl_snr", "--config", cfg,
         "--out", str(out)],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0, proc.stderr
    assert (out / "summary.json").is_file()
