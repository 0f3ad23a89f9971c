import csv
import io
import json
import subprocess
import sys

import pytest

import sl3coh.complex as cxmod
from sl3coh.cli import RunConfig, main, run
from sl3coh.lie import algebra_from_json, algebra_to_json, build_sl3
from sl3coh.modules import module_to_json, simple_module
from sl3coh.selftest import run_selftest


def invoke(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_cohomology_trivial_text(capsys):
    code, out, _ = invoke(capsys, "cohomology", "--p", "3", "--module", "trivial")
    assert code == 0
    dims = [int(line.split()[1]) for line in out.splitlines() if line[:1].isdigit()]
    assert dims == [1, 0, 6, 7, 0, 7, 6, 0, 1]


def test_cohomology_json_schema(capsys):
    code, out, _ = invoke(capsys, "cohomology", "--module", "trivial", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["meta"] == {"p": 3, "algebra": "sl3", "module": "trivial", "tool_version": "0.1.0"}
    assert [d["dim"] for d in doc["degrees"]] == [1, 0, 6, 7, 0, 7, 6, 0, 1]
    d3 = doc["degrees"][3]
    assert set(d3) == {"n", "dim", "weights", "decompositions", "verdict"}
    assert d3["decompositions"] == [["L(0,1)^(1)", "L(1,0)^(1)", "k"]]
    assert set(d3["weights"][0]) == {"weight", "dim_C", "dim_Z", "dim_B", "dim_H"}
    assert d3["verdict"] == "match"


def test_json_is_byte_identical(capsys):
    args = ("cohomology", "--module", "adjoint", "--format", "json")
    first = invoke(capsys, *args)[1]
    second = invoke(capsys, *args)[1]
    assert first == second


def test_csv_rows(capsys):
    code, out, _ = invoke(capsys, "cohomology", "--module", "trivial", "--format", "csv", "--degree", "2")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0
    assert sum(int(r["dim_H"]) for r in rows) == 6
    assert all(r["n"] == "2" for r in rows)


def test_ledger_query(capsys):
    code, out, _ = invoke(
        capsys, "ledger", "--p", "3", "--module", "simple:1,1", "--weight", "0,0", "--degree", "4", "--format", "json"
    )
    (row,) = json.loads(out)["degrees"]
    assert row["weights"][0]["dim_C"] == 46
    assert row["weights"][0]["dim_H"] == 6
    assert row["expected"] == {"C": 44, "H": 4, "Z": 24}
    assert row["verdict"] == "mismatch"
    assert code == 1


def test_scan(capsys):
    code, out, _ = invoke(capsys, "scan", "--p", "3", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert len(doc["scan"]) == 9
    assert doc["peculiar"] == [[0, 0], [1, 1]]


def test_les_and_center_quotient(capsys):
    code, out, _ = invoke(capsys, "les", "--format", "json")
    assert code == 0 and json.loads(out)["les"]["feasible"]
    code, out, _ = invoke(capsys, "center-quotient", "--format", "json")
    assert code == 1
    assert [d["verdict"] for d in json.loads(out)["degrees"]][3:] == ["mismatch"] * 5


def test_verify_exit_code(capsys):
    code, out, _ = invoke(capsys, "verify", "--format", "json")
    doc = json.loads(out)
    assert code == 1
    assert doc["counts"]["mismatch"] > 0
    assert doc["findings"]


@pytest.mark.parametrize(
    "argv",
    [
        ("cohomology", "--module", "simple:3,0"),
        ("cohomology", "--module", "bogus"),
        ("cohomology", "--algebra", "gl3"),
        ("cohomology", "--p", "4"),
        ("cohomology", "--p", "5", "--algebra", "sl3-quotient"),
        ("cohomology", "--degree", "9"),
        ("ledger", "--weight", "1,0"),
        ("ledger",),
        ("ledger", "--weight", "x"),
        ("les", "--sequence", "trivial", "adjoint", "trivial"),
        ("cohomology", "--module", "custom:/nonexistent.json"),
        ("nosuchcommand",),
    ],
)
def test_invalid_input_exits_2(capsys, argv):
    code, _, err = invoke(capsys, *argv)
    assert code == 2
    assert err


def test_custom_files(capsys, tmp_path):
    L = build_sl3(3)
    mpath = tmp_path / "m.json"
    mpath.write_text(json.dumps(module_to_json(simple_module(L, 1, 0))))
    code, out, _ = invoke(capsys, "cohomology", "--module", f"custom:{mpath}", "--format", "json")
    assert code == 0
    assert all(d["dim"] == 0 for d in json.loads(out)["degrees"])

    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert invoke(capsys, "cohomology", "--module", f"custom:{bad}")[0] == 2

    doc = algebra_to_json(L)
    doc["brackets"][0][2][0] = 1  # [h1, h2] = h1 breaks Jacobi
    apath = tmp_path / "a.json"
    apath.write_text(json.dumps(doc))
    code, _, err = invoke(capsys, "cohomology", "--algebra", f"custom:{apath}")
    assert code == 2 and "jacobi" in err

    good = tmp_path / "sl3.json"
    good.write_text(json.dumps(algebra_to_json(L)))
    code, out, _ = invoke(capsys, "cohomology", "--algebra", f"custom:{good}", "--format", "json")
    assert code == 0
    assert [d["dim"] for d in json.loads(out)["degrees"]] == [1, 0, 6, 7, 0, 7, 6, 0, 1]


def test_dual_module_spec(capsys):
    code, out, _ = invoke(capsys, "cohomology", "--module", "dual-of:adjoint", "--format", "json")
    assert code == 0
    assert [d["dim"] for d in json.loads(out)["degrees"]] == [0, 6, 6, 8, 23, 15, 0, 1, 1]


def test_output_file(tmp_path):
    path = tmp_path / "out.json"
    code = run(RunConfig("cohomology", format="json", output=str(path)))
    assert code == 0
    assert json.loads(path.read_text())["meta"]["module"] == "trivial"


def test_selftest_passes(capsys):
    code, out, _ = invoke(capsys, "selftest", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["ok"]
    names = [c["name"] for c in doc["checks"]]
    assert any(n.startswith("d^2 = 0") for n in names)
    assert any(n.startswith("duality") for n in names)
    assert any(n.startswith("euler") for n in names)


def test_selftest_catches_sign_fault(monkeypatch):
    real = cxmod.insertion_sign

    def flipped(r, rest):
        s, t = real(r, rest)
        return -s, t

    monkeypatch.setattr(cxmod, "insertion_sign", flipped)
    rep = run_selftest(3)
    assert not rep.ok
    assert any(c.name.startswith("d^2 = 0") and not c.ok for c in rep.checks)


def test_selftest_names_jacobi_triple():
    L = build_sl3(3)
    doc = algebra_to_json(L)
    e1, e2, e3 = L.index("e1"), L.index("e2"), L.index("e3")
    for entry in doc["brackets"]:
        if entry[:2] == [e1, e2]:
            entry[2][e3] = 2
    rep = run_selftest(3, algebra=algebra_from_json(doc))
    assert not rep.ok
    (check,) = [c for c in rep.checks if not c.ok]
    assert "jacobi (" in check.detail
    assert "e1" in check.detail or "e2" in check.detail


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "sl3coh", "cohomology", "--module", "trivial", "--format", "csv"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("n,dim,weight_a")
