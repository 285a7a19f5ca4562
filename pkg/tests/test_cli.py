import json
import subprocess
import sys

import pytest

from umbracomb.cli import main
from umbracomb.coeffring import GradedPoly
from umbracomb.parking import TypeAggregate, volume_poly
from umbracomb.symfunc import hstar, pf
from umbracomb.verify import CHECKS, SUITES, plan, run_suite


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out.strip()


def test_pf_text(capsys):
    assert run(capsys, "pf", "--n", "3") == (0, "h3 + 3·h2*h1 + h1^3")


def test_pf_json_round_trip(capsys):
    code, out = run(capsys, "pf", "--n", "4", "--format", "json")
    assert code == 0
    assert GradedPoly.from_json(out) == pf(4)
    code, out = run(capsys, "pf", "--n", "2", "--k", "2", "--format", "json")
    assert json.loads(out) == {"h2": "2", "h1^2": "5"}


def test_count(capsys):
    assert run(capsys, "count", "--object", "chains-nc", "--n", "4") == (0, "16")
    assert run(capsys, "count", "--object", "parking", "--n", "4") == (0, "125")
    assert run(capsys, "count", "--object", "nc-b", "--n", "3", "--format", "json") == (0, "20")
    assert run(capsys, "count", "--object", "nc-k", "--n", "2", "--k", "2") == (0, "3")


def test_volume(capsys):
    assert run(capsys, "volume", "--n", "2", "--type", "b", "--format", "json") == (0, '{"2":"1","1,1":"1"}')
    code, out = run(capsys, "volume", "--n", "4", "--kind", "definition", "--format", "json")
    assert TypeAggregate.from_json(out) == volume_poly(4)


def test_hstar(capsys):
    code, out = run(capsys, "hstar", "--n", "3", "--kind", "lagrange_formula", "--format", "json")
    assert GradedPoly.from_json(out) == hstar(3)


def test_flags(capsys):
    code, out = run(capsys, "flags", "--n", "3", "--format", "json")
    data = json.loads(out)
    assert data["alpha"]["1,2"] == "16"
    assert data["beta"] == {"": "1", "1": "5", "2": "5", "1,2": "5"}


@pytest.mark.parametrize("argv", [
    ["pf", "--n", "0"],
    ["pf", "--n", "x"],
    ["pf"],
    ["count", "--n", "3", "--object", "trees"],
    ["verify", "--suite", "bogus"],
    ["pf", "--n", "2", "--type", "b", "--k", "2"],
    [],
])
def test_usage_errors_exit_2(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_verify_text(capsys):
    code, out = run(capsys, "verify", "--suite", "typeb", "--max-n", "3")
    assert code == 0
    assert out.splitlines()[-1] == "12 checks, 0 failed"
    assert all(line.startswith("PASS") for line in out.splitlines()[:-1])


def test_verify_json_schema(capsys):
    code, out = run(capsys, "verify", "--suite", "counts", "--max-n", "3", "--format", "json")
    data = json.loads(out)
    assert set(data) == {"suite", "max_n", "total", "failed", "checks"}
    assert data["failed"] == 0 and data["total"] == len(data["checks"])
    assert all(set(c) == {"check", "params", "status"} for c in data["checks"])


def test_verify_failure_exit_1(capsys, monkeypatch):
    suite, fn = CHECKS["park_count"]
    monkeypatch.setitem(CHECKS, "park_count", (suite, lambda n: (fn(n)[0], 0)))
    code, out = run(capsys, "verify", "--suite", "counts", "--max-n", "2", "--format", "json")
    assert code == 1
    failed = [c for c in json.loads(out)["checks"] if c["status"] != "pass"]
    assert failed and all("left" in c and "right" in c for c in failed)


def test_plan_clamps():
    params = [p for name, p in plan("counts", 50) if name == "nc_b_count"]
    assert max(p["n"] for p in params) == 4


def test_jobs_preserve_order():
    serial = run_suite("umbral", 3, 1)
    parallel = run_suite("umbral", 3, 3)
    assert [r.to_dict() for r in serial] == [r.to_dict() for r in parallel]


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("bogus", 3, 1)


@pytest.mark.parametrize("suite", SUITES)
def test_each_suite_passes(suite):
    assert all(r.passed for r in run_suite(suite, 3, 1))


def test_report_is_deterministic():
    cmd = [sys.executable, "-m", "umbracomb", "verify", "--suite", "all", "--max-n", "2"]
    first = subprocess.run(cmd, capture_output=True, text=True)
    second = subprocess.run(cmd + ["--jobs", "2"], capture_output=True, text=True)
    assert first.returncode == 0
    assert first.stdout == second.stdout
