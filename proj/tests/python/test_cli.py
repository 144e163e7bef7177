import json
import os
import pathlib
import subprocess

import jsonschema
import pytest

CLI = os.environ.get("HYPERCOUNT_CLI", "hypercount")
SCHEMA = json.loads(
    (pathlib.Path(__file__).resolve().parents[2] / "schemas" / "report.schema.json").read_text()
)


def run(*args, env=None):
    return subprocess.run([CLI, *args], capture_output=True, text=True, env=env)


def run_json(*args):
    r = run(*args, "--format", "json")
    report = json.loads(r.stdout)
    jsonschema.validate(report, SCHEMA)
    return r.returncode, report


def test_count_with_check_agrees():
    rc, report = run_json("count", "--q", "73", "--family", "A", "--d", "4", "--a", "1", "--b", "1", "--check")
    assert rc == 0
    assert report["match"] is True
    assert report["n_points"] == report["n_oracle"]
    assert report["method"] == "THM_1_1"


def test_count_float_backend_schema():
    rc, report = run_json("count", "--q", "41", "--family", "B", "--d", "5", "--a", "1", "--b", "1",
                          "--check", "--backend", "float")
    assert rc == 0
    assert set(report["hgf_value"]) == {"re", "im"}


def test_not_a_prime_power():
    r = run("count", "--q", "74", "--d", "4")
    assert r.returncode == 1
    assert "74 is not an odd prime power" in r.stderr


def test_congruence_violation():
    r = run("count", "--q", "13", "--family", "A", "--d", "4", "--a", "1", "--b", "1")
    assert r.returncode == 1
    assert "congruence" in r.stderr


def test_table_budget_from_environment():
    env = dict(os.environ, HYPERCOUNT_TABLE_BUDGET="50")
    r = run("count", "--q", "73", "--d", "4", env=env)
    assert r.returncode == 1
    r = run("count", "--q", "73", "--d", "4", "--table-budget", "100", env=env)
    assert r.returncode == 0


def test_sweep_csv_header_and_rows():
    r = run("sweep", "--q-max", "50", "--d", "5")
    assert r.returncode == 0
    lines = r.stdout.strip().splitlines()
    assert lines[0] == "q,d,family,a,b,n_thm,n_oracle,match,elapsed_us"
    assert len(lines) > 1
    assert {line.split(",")[0] for line in lines[1:]} == {"41"}
    assert all(line.endswith(",true,0") for line in lines[1:])


def test_sweep_is_deterministic():
    args = ("sweep", "--q-max", "120", "--d", "3,4", "--samples", "4", "--seed", "7")
    a = run(*args)
    b = run(*args, "--jobs", "2")
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout


def test_sweep_json_schema():
    rc, report = run_json("sweep", "--q-max", "80", "--d", "3,4", "--samples", "3")
    assert rc == 0
    assert report["summary"]["mismatches"] == 0


@pytest.mark.parametrize("q", ["13", "25"])
def test_verify_passes(q):
    rc, report = run_json("verify", "--q", q)
    assert rc == 0
    assert report["passed"]


def test_verify_exact_reports_aux_prime():
    r = run("verify", "--q", "9", "--backend", "exact")
    assert r.returncode == 0
    assert "aux_prime=" in r.stdout.splitlines()[0]
