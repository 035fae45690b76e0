import csv
import io
import json
import subprocess
import sys

import pytest

from carlitzkit.cli import main
from carlitzkit.config import ENV_VAR, ConfigError, RunConfig, load_config_file
from carlitzkit.suites import SUITES


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_list_has_required_suites(capsys):
    code, out, _ = run(["list", "--format", "json"], capsys)
    rows = json.loads(out)
    names = [r["name"] for r in rows]
    assert code == 0
    assert "pellarin-identity" in names and "gamma-torsion" in names
    assert len(rows) >= 15
    assert all(r["description"] and r["anchor"] for r in rows)
    assert names == sorted(names)


def test_suites_map_one_to_one_onto_operations():
    ops = [(s.module, s.operation) for s in SUITES.values()]
    assert len(set(ops)) == len(ops)


def test_bogus_suite_is_usage_error(capsys):
    code, _, err = run(["verify", "--suite", "bogus"], capsys)
    assert code == 2 and "bogus" in err


@pytest.mark.parametrize("argv", [
    ["verify", "--q", "6"],
    ["verify", "--u-prec", "0"],
    ["frobnicate"],
    ["verify", "--format", "xml"],
    ["verify", "--config", "/nonexistent/carlitz.ini"],
])
def test_usage_errors(argv, capsys):
    assert run(argv, capsys)[0] == 2


def test_omega_eigen_example(capsys):
    code, out, _ = run(["verify", "--suite", "omega-eigen", "--q", "3", "--u-prec", "60", "--t-prec", "16"], capsys)
    doc = json.loads(out)
    assert code == 0
    assert doc["summary"]["status"] == "pass"
    assert doc["suites"][0]["params"]["q"] == 3


def test_failure_exit_code(capsys):
    code, out, _ = run(["verify", "--suite", "gamma-classical", "--tol", "1e-30"], capsys)
    assert code == 1
    assert json.loads(out)["summary"]["failed"] == 1


def test_exp_coeffs_both_ways(capsys):
    code, out, _ = run(["compute", "exp-coeffs", "--q", "2", "--n", "6"], capsys)
    rows = json.loads(out)["rows"]
    assert code == 0
    assert [r["n"] for r in rows] == list(range(7))
    assert all(r["agree"] and r["d_recursion"] == r["d_closed_form"] and r["l_recursion"] == r["l_closed_form"]
               for r in rows)
    assert rows[1]["d_closed_form"] == "theta^2 + theta"


@pytest.mark.parametrize("target", ["phi-table", "pi-tilde", "omega", "l-series"])
def test_compute_targets(target, capsys):
    code, out, _ = run(["compute", target, "--q", "3", "--u-prec", "10", "--t-prec", "2", "--format", "text"], capsys)
    assert code == 0 and out.startswith(target)


def test_formats_and_out_file(tmp_path, capsys):
    dest = tmp_path / "r.csv"
    code, out, _ = run(["verify", "--suite", "gamma-torsion", "--format", "csv", "--out", str(dest)], capsys)
    assert code == 0 and out == ""
    rows = list(csv.reader(io.StringIO(dest.read_text())))
    assert rows[0] == ["suite", "check", "status", "metric", "precision"]
    assert all(r[0] == "gamma-torsion" and r[2] == "pass" for r in rows[1:])
    code, out, _ = run(["verify", "--suite", "gamma-torsion", "--format", "text", "--timing"], capsys)
    assert out.startswith("[PASS] gamma-torsion") and "s\n" in out.splitlines()[0] + "\n"


def test_config_file_and_flag_precedence(tmp_path, monkeypatch, capsys):
    cfg = tmp_path / "c.ini"
    cfg.write_text("suites = gamma-torsion, omega-eigen\nq = 2\nu_prec = 30\nt_prec = 6\nformat = json\n")
    code, out, _ = run(["verify", "--config", str(cfg), "--q", "3"], capsys)
    doc = json.loads(out)
    assert code == 0
    assert [s["suite"] for s in doc["suites"]] == ["gamma-torsion", "omega-eigen"]
    assert doc["params"]["q"] == 3 and doc["params"]["u_prec"] == 30
    monkeypatch.setenv(ENV_VAR, str(cfg))
    code, out, _ = run(["verify"], capsys)
    assert json.loads(out)["params"]["q"] == 2


def test_config_errors(tmp_path):
    bad = tmp_path / "bad.ini"
    bad.write_text("wibble = 3\n")
    with pytest.raises(ConfigError):
        load_config_file(str(bad))
    bad.write_text("u_prec = lots\n")
    with pytest.raises(ConfigError):
        load_config_file(str(bad))
    with pytest.raises(ConfigError):
        RunConfig(suites=("nope",)).validate(SUITES)


def test_moduli_section(tmp_path, capsys):
    cfg = tmp_path / "m.ini"
    cfg.write_text("[run]\nsuites = omega-eigen\nq = 9\nu_prec = 8\nt_prec = 2\ndeg_max = 1\n[moduli]\n3^2 = 1,0,1\n")
    code, out, _ = run(["verify", "--config", str(cfg)], capsys)
    doc = json.loads(out)
    assert code == 0 and doc["suites"][0]["status"] == "pass"
    assert doc["params"]["moduli"] == {"3^2": [1, 0, 1]}


def test_jobs_does_not_change_report(capsys):
    base = ["verify", "--suite", "gamma-kernels,leibniz,casoratian", "--format", "json"]
    _, one, _ = run(base + ["--jobs", "1"], capsys)
    _, three, _ = run(base + ["--jobs", "3"], capsys)
    assert one == three


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "carlitzkit", "verify", "--suite", "bogus"],
                         capture_output=True, text=True)
    assert res.returncode == 2
