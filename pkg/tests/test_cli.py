import csv
import json
import subprocess
import sys

import pytest

from marcumlc.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_eval_plain(capsys):
    code, out, _ = run(capsys, "eval", "--nu", "1", "--a", "0", "--b", "1")
    assert code == 0
    value, err, method = out.split()
    assert value == "0.60653066"
    assert method == "closed_form"


def test_eval_csv_full_precision(capsys):
    code, out, _ = run(capsys, "eval", "--nu", "1", "--a", "1", "--b", "1", "--format", "csv",
                       "--tol", "1e-12")
    assert code == 0
    value, err, method = out.strip().split(",")
    assert abs(float(value) - 0.7328798037968203) <= 1e-12
    assert len(value.replace(".", "").lstrip("0")) >= 16


@pytest.mark.parametrize("argv,flag", [
    (["eval", "--nu", "1", "--a", "-1", "--b", "0"], "--a"),
    (["eval", "--nu", "0", "--a", "1", "--b", "0"], "--nu"),
    (["eval", "--nu", "1", "--a", "1", "--b", "nan"], "--b"),
    (["eval", "--nu", "1", "--a", "1", "--b", "1", "--tol", "1e-20"], "--tol"),
    (["eval", "--nu", "1", "--a", "1", "--b", "1", "--method", "gamma_closed_form"], "--method"),
    (["nu0", "--tol", "1e-20"], "--tol"),
    (["diag", "--nu", "1", "--t", "0"], "--t"),
    (["scan", "--property", "tp2"], "--t1"),
    (["scan", "--property", "psi-monotone", "--b-lo", "1"], "--b-lo"),
    (["suite", "--workers", "0"], "--workers"),
])
def test_usage_errors_name_the_flag(capsys, argv, flag):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert flag in err
    assert len(err.strip().splitlines()) == 1


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["eval", "--nu", "1"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_nu0(capsys):
    code, out, _ = run(capsys, "nu0", "--format", "csv")
    root, residual, iters = out.strip().split(",")
    assert code == 0
    assert abs(float(root) - 0.78449776) < 5e-8
    assert float(residual) <= 1e-12


def test_nu0_iteration_cap_is_numeric_failure(capsys):
    code, _, err = run(capsys, "nu0", "--max-iter", "2")
    assert code == 3
    assert "numerical failure" in err


def test_diag(capsys):
    code, out, _ = run(capsys, "diag", "--nu", "0.5", "--t", "1", "--a", "2", "--shape")
    assert code == 0
    rows = dict(line.split() for line in out.strip().splitlines())
    assert float(rows["r"]) == pytest.approx(0.76159416, abs=1e-8)
    assert float(rows["h"]) == pytest.approx(0.41997434, abs=1e-8)
    assert rows["rising_logconcave"] == "no"
    assert rows["declining_logconcave"] == "yes"


def test_scan_expected_violation_exits_zero(capsys, tmp_path):
    out_csv = tmp_path / "scan.csv"
    code, out, _ = run(capsys, "scan", "--property", "logconcave-q-b", "--nu", "0.3",
                       "--a", "0", "--out", str(out_csv))
    assert code == 0
    rows = list(csv.DictReader(out_csv.open()))
    assert rows[0]["verdict"] == "expected_violation"
    assert "ALL ASSERTED PROPERTIES HOLD" in out


def test_scan_csv_to_stdout(capsys):
    code, out, err = run(capsys, "scan", "--property", "tp2", "--t1", "1", "--t2", "2")
    assert code == 0
    assert out.startswith("property_id,nu,a,b_lo,b_hi,worst_margin,verdict")
    assert "ALL ASSERTED" in err


def test_scan_custom_b_range(capsys, tmp_path):
    out_csv = tmp_path / "b.csv"
    code, _, _ = run(capsys, "scan", "--property", "logconcave-q-b", "--nu", "1", "2",
                     "--a", "1", "--b-lo", "0", "--b-hi", "6", "--n", "50", "--out", str(out_csv))
    rows = list(csv.DictReader(out_csv.open()))
    assert code == 0
    assert [(float(r["b_lo"]), float(r["b_hi"])) for r in rows] == [(0.0, 6.0)] * 2


def test_scan_small_b(capsys, tmp_path):
    code, _, _ = run(capsys, "scan", "--property", "small-b", "--nu", "0.5", "--b-lo", "1e-3",
                     "--b-hi", "0.2", "--n", "20", "--out", str(tmp_path / "s.csv"))
    assert code == 0


def test_suite_with_json(capsys, tmp_path):
    out_csv, out_json = tmp_path / "suite.csv", tmp_path / "suite.json"
    code, out, _ = run(capsys, "suite", "--default", "--workers", "4", "--out", str(out_csv),
                       "--json", str(out_json))
    assert code == 0
    assert json.loads(out_json.read_text())["passed"] is True
    assert out_csv.read_text().startswith("property_id,")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "marcumlc", "eval", "--nu", "2", "--a", "1",
                           "--b", "0"], capture_output=True, text=True, timeout=120)
    assert proc.returncode == 0
    assert proc.stdout.split()[0] == "1"
