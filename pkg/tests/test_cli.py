import subprocess
import sys

import pytest

from heisenpair.cli import build_parser, main
from heisenpair.sweep import CSV_HEADER


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_point_subcommand(capsys):
    code, out, _ = run_cli(capsys, "point", "--r", "1.25", "--b", "0", "--kt", "0.2")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == CSV_HEADER
    fields = lines[1].split(",")
    assert abs(float(fields[4]) - 0.68086) < 1e-3
    assert abs(float(fields[5]) - 0.52877) < 1e-3


def test_point_gibbs_convention_flags(capsys):
    code, out, _ = run_cli(capsys, "point", "--r", "1.25", "--b", "0", "--kt", "0.2",
                           "--mode", "gibbs", "--convention", "eq3")
    assert code == 0
    assert len(out.splitlines()) == 2


def test_sweep_subcommand(tmp_path, capsys):
    out_path = tmp_path / "cli.csv"
    code, out, _ = run_cli(
        capsys, "sweep", "--kt", "0.2,0.4", "--b", "0,1", "--r-min", "0",
        "--r-max", "2", "--r-steps", "3", "--out", str(out_path),
    )
    assert code == 0
    assert "12 records" in out
    lines = out_path.read_text().splitlines()
    assert lines[0] == CSV_HEADER
    assert len(lines) == 13


def test_death_radius_subcommand(capsys):
    code, out, _ = run_cli(capsys, "death-radius", "--kt", "0.2", "--b", "0")
    assert code == 0
    value = float(out.splitlines()[0])
    assert 2.90 < value < 2.95
    assert "3.2" in out  # documents the common graphical reading


def test_critical_kt_subcommand(capsys):
    code, out, _ = run_cli(capsys, "critical-kt", "--b", "0")
    assert code == 0
    assert abs(float(out.splitlines()[0]) - 0.6794) < 1e-3


def test_critical_kt_gibbs(capsys):
    code, out, _ = run_cli(capsys, "critical-kt", "--b", "0", "--mode", "gibbs")
    assert code == 0
    assert abs(float(out.splitlines()[0]) - 0.4286) < 1e-3


def test_exit_code_no_entanglement(capsys):
    code, out, err = run_cli(capsys, "death-radius", "--kt", "0.8", "--b", "0")
    assert code == 3
    assert out == ""
    assert "error" in err


def test_exit_code_io_failure(tmp_path, capsys):
    code, _, err = run_cli(
        capsys, "sweep", "--kt", "0.2", "--b", "0", "--r-min", "0", "--r-max", "1",
        "--r-steps", "2", "--out", str(tmp_path / "no-such-dir" / "x.csv"),
    )
    assert code == 4
    assert "error" in err


def test_exit_code_invalid_domain(capsys):
    code, _, err = run_cli(capsys, "point", "--r", "1", "--b", "0", "--kt", "-1")
    assert code == 2
    assert "error" in err


def test_exit_code_invalid_config(capsys, tmp_path):
    code, _, err = run_cli(
        capsys, "sweep", "--kt", "0.2", "--b", "0", "--r-min", "2", "--r-max", "1",
        "--r-steps", "5", "--out", str(tmp_path / "x.csv"),
    )
    assert code == 2


def test_argparse_rejects_unknown_command():
    with pytest.raises(SystemExit) as exc:
        main(["bogus"])
    assert exc.value.code == 2


def test_argparse_rejects_bad_list():
    with pytest.raises(SystemExit) as exc:
        main(["sweep", "--kt", "0.2,zebra", "--b", "0", "--r-min", "0",
              "--r-max", "1", "--r-steps", "2", "--out", "x.csv"])
    assert exc.value.code == 2


def test_list_parsing():
    parser = build_parser()
    args = parser.parse_args(["sweep", "--kt", "0.2,0.4", "--b", "0,0.5,1",
                              "--r-min", "0", "--r-max", "1", "--r-steps", "2",
                              "--out", "x.csv"])
    assert args.kt == [0.2, 0.4]
    assert args.b == [0.0, 0.5, 1.0]


def test_console_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "heisenpair", "point", "--r", "0", "--b", "0", "--kt", "1"],
        capture_output=True, text=True, timeout=60,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0] == CSV_HEADER
