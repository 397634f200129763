import csv
import io
import json
import subprocess
import sys

import pytest

from zipshift.cli import main

WORKED_POINT = json.dumps({"left_period": "ab", "left_transient": "b",
                          "right_transient": "103112", "right_period": "2"})


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_shift_worked_example(capsys):
    code, out, _ = run(capsys, "shift", "--point", WORKED_POINT)
    assert code == 0
    assert json.loads(out)["image"] == {"left_period": "ab", "left_transient": "bb",
                                        "right_transient": "0311", "right_period": "2"}


def test_shift_inverse(capsys):
    code, out, _ = run(capsys, "shift", "--inverse", "--point", WORKED_POINT)
    pre = json.loads(out)["preimages"]
    assert code == 0 and len(pre) == 2
    assert sorted(p["right_transient"][0] for p in pre) == ["1", "3"]


def test_malformed_json(capsys):
    code, out, err = run(capsys, "shift", "--point", "{not json")
    assert code == 2 and out == "" and "line 1" in err


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as info:
        main(["periodic", "--k", "x"])
    assert info.value.code == 2


def test_metric(capsys):
    p = json.dumps({"left_period": "a", "right_period": "0"})
    q = json.dumps({"left_period": "a", "right_transient": "01", "right_period": "0"})
    code, out, _ = run(capsys, "metric", "--p", p, "--q", q)
    assert json.loads(out) == {"first_disagreement": 1, "distance": "1/4"}


def test_periodic_csv(capsys):
    code, out, _ = run(capsys, "periodic", "--system", "lambda3", "--k", "4", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and [int(r["count"]) for r in rows] == [3, 9, 27, 81]


def test_separation(capsys):
    code, out, _ = run(capsys, "separation", "--system", "lambda4", "--trials", "50", "--seed", "7")
    assert code == 0
    assert all(w["distance"] == "1/1" for w in json.loads(out)["witnesses"])


def test_shadow_csv(capsys):
    code, out, _ = run(capsys, "shadow", "--lambda-system", "lambda4", "--m", "2", "--length", "30",
                       "--trials", "5", "--seed", "1", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len(rows) == 5
    assert list(rows[0]) == ["trial", "m", "max_error_num", "max_error_den", "pass"]
    assert all(int(r["max_error_num"]) * 16 < int(r["max_error_den"]) for r in rows)


def test_transitive_mixing_sensitivity(capsys):
    assert run(capsys, "transitive", "--system", "example2", "--depth", "1")[0] == 0
    code, out, _ = run(capsys, "mixing", "--system", "example2", "--depth", "0")
    assert code == 0 and json.loads(out)["gap"] == 1
    code, out, _ = run(capsys, "sensitivity", "--point", WORKED_POINT, "--depth", "3")
    assert code == 0 and json.loads(out)["n"] == 4


def test_product(capsys):
    code, out, _ = run(capsys, "product", "--system", "example1", "--system2", "example2", "--trials", "5")
    data = json.loads(out)
    assert code == 0 and len(data["product_tm"]["s"]) == 12


def test_code_doubling(capsys):
    code, out, _ = run(capsys, "code", "--map", "doubling", "--refinement", "quarters", "--depth", "12",
                       "--trials", "20")
    data = json.loads(out)
    assert code == 0
    assert sorted(sorted(v) for v in data["fibers"].values()) == [["0", "2"], ["1", "3"]]
    assert data["generator_diameters"] == [f"1/{2 ** (n + 2)}" for n in range(13)]


def test_code_tripling(capsys):
    code, out, _ = run(capsys, "code", "--map", "tripling", "--depth", "3", "--trials", "10")
    data = json.loads(out)
    assert code == 0 and list(data["fibers"]) == ["a"]


def test_code_custom(tmp_path, capsys):
    path = tmp_path / "tent.json"
    path.write_text(json.dumps({"branches": [
        {"domain": ["0", "1/2"], "slope": "2", "offset": "0"},
        {"domain": ["1/2", "1"], "slope": "-2", "offset": "2"}]}))
    code, out, _ = run(capsys, "code", "--map", "custom", "--map-json", str(path),
                       "--refinement", "quarters", "--depth", "4", "--trials", "20")
    assert code == 0
    assert json.loads(out)["generator_diameters"][-1] == "1/64"


def test_code_not_full_branch(tmp_path, capsys):
    path = tmp_path / "half.json"
    path.write_text(json.dumps({"branches": [{"domain": ["0", "1"], "slope": "1/2", "offset": "0"}]}))
    code, out, err = run(capsys, "code", "--map", "custom", "--map-json", str(path))
    assert code == 2 and out == "" and "NotFullBranch" in err


def test_suite_manifest(tmp_path, capsys):
    target = tmp_path / "manifest.json"
    code, out, _ = run(capsys, "suite", "expansivity", "--lambda", "4", "--trials", "1000",
                       "--seed", "7", "--output", str(target))
    data = json.loads(target.read_text())
    assert code == 0 and out == ""
    assert data["passed"] and data["summary"] == {"checks": 1000, "failed": 0}
    assert all(c["details"]["distance"] == "1/1" for c in data["checks"])
    assert {"tool", "version", "config", "started", "finished"} <= set(data)


def test_suite_shadowing(capsys):
    code, out, _ = run(capsys, "suite", "shadowing", "--m", "3", "--trials", "100", "--seed", "1")
    data = json.loads(out)
    assert code == 0 and len(data["checks"]) == 100


def test_suite_periodic(capsys):
    code, out, _ = run(capsys, "suite", "periodic", "--k", "6")
    counts = [c["details"]["count"] for c in json.loads(out)["checks"]]
    assert code == 0 and counts == [4 ** k for k in range(1, 7)]


def test_suite_is_deterministic(capsys):
    outs = []
    for _ in range(2):
        _, out, _ = run(capsys, "suite", "metric", "--trials", "200", "--seed", "3")
        data = json.loads(out)
        del data["started"], data["finished"]
        outs.append(data)
    assert outs[0] == outs[1]


def test_cap_reported_per_check(monkeypatch, capsys):
    monkeypatch.setenv("ZIPSHIFT_CAP", "100")
    code, out, _ = run(capsys, "suite", "periodic", "--lambda", "3", "--k", "5")
    checks = json.loads(out)["checks"]
    assert code == 1
    assert [c["passed"] for c in checks] == [True, True, True, True, False]
    assert "cap" in checks[-1]["details"]["error"]


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "zipshift", "shift", "--point", WORKED_POINT],
                         capture_output=True, text=True)
    assert res.returncode == 0 and '"left_transient": "bb"' in res.stdout
