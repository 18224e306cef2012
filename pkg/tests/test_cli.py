import json
from fractions import Fraction

import pytest

from gepner.cli import main
from gepner.clifford import fermat_plane_cubic
from gepner.exact import parse_scalar, sqrt_minus3


def write(path, obj):
    path.write_text(json.dumps(obj))
    return str(path)


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def out_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    return code, json.loads(out) if out.strip() else None, err


@pytest.fixture
def cubic(tmp_path):
    return write(tmp_path / "w.json", {"nvars": 3, "text": "x1^3 + x2^3 + x3^3"})


def test_point_then_verify_and_chern(tmp_path, capsys, cubic):
    mf = tmp_path / "p.json"
    assert run(capsys, "mf", "point", "--w", cubic, "--k", 1, "-o", mf)[0] == 0
    code, res, _ = out_json(capsys, "mf", "verify", mf, "--w", cubic)
    assert code == 0 and res == {"ok": True, "failures": []}
    code, res, _ = out_json(capsys, "mf", "zg", mf)
    assert code == 0 and "z_gepner" in res
    code, res, _ = out_json(capsys, "mf", "chern", mf, "--ch0")
    assert res["d"] == 3 and set(res["ch"]) == {"1", "2"}
    assert res["ch0"] == "0"


def test_verify_against_wrong_potential(tmp_path, capsys, cubic):
    mf = tmp_path / "p.json"
    run(capsys, "mf", "point", "--w", cubic, "-o", mf)
    other = write(tmp_path / "v.json", {"nvars": 3, "text": "x1^3 + x2^3 - x3^3"})
    code, res, _ = out_json(capsys, "mf", "verify", mf, "--w", other)
    assert code == 1 and not res["ok"]


def test_chern_rejects_multiple_of_d(tmp_path, capsys, cubic):
    mf = tmp_path / "p.json"
    run(capsys, "mf", "point", "--w", cubic, "-o", mf)
    code, _, err = run(capsys, "mf", "chern", mf, "--j", 3)
    assert code == 2 and "--j" in json.loads(err)["error"]


def test_koszul_xy(tmp_path, capsys):
    w = write(tmp_path / "w.json", {"nvars": 2, "text": "x1*x2"})
    pairs = write(tmp_path / "pairs.json", [[{"nvars": 2, "text": "x1"}, {"nvars": 2, "text": "x2"}]])
    code, res, _ = out_json(capsys, "mf", "koszul", "--w", w, "--pairs", pairs)
    assert code == 0 and res["d"] == 2
    mf = write(tmp_path / "k.json", res)
    code, res, _ = out_json(capsys, "mf", "chern", mf, "--ch0")
    assert res["ch0"] == "1"
    bad = write(tmp_path / "bad.json", [[{"nvars": 2, "text": "x1"}, {"nvars": 2, "text": "x1"}]])
    assert run(capsys, "mf", "koszul", "--w", w, "--pairs", bad)[0] == 2


def test_malformed_json_reports_location(tmp_path, capsys):
    p = tmp_path / "broken.json"
    p.write_text('{"nvars": 3,\n  "text": }')
    code, _, err = run(capsys, "mf", "point", "--w", p)
    assert code == 2
    msg = json.loads(err)["error"]
    assert msg.startswith(f"{p}:2:") and "malformed JSON" in msg


def test_missing_file(tmp_path, capsys):
    code, _, err = run(capsys, "mf", "zg", tmp_path / "nope.json")
    assert code == 2 and "cannot read" in err


def test_bad_usage_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["mf", "frobnicate"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2


def test_lattice_commands(capsys):
    code, res, _ = out_json(capsys, "lattice", "eigen", "--dataset", "v-b012", "--auto", "fb-inverse")
    assert code == 0 and len(res["eigenvectors"]) == 1
    code, res, _ = out_json(capsys, "lattice", "act", "--dataset", "v-b012", "--auto", "fb-inverse", "--power", 3)
    assert res["matrix"] == [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]
    code, res, _ = out_json(capsys, "lattice", "eigen", "--dataset", "cubic-threefold",
                            "--auto", "minus-serre-inverse", "--lambda", "omega2")
    assert code == 0 and len(res["eigenvectors"]) == 1
    assert run(capsys, "lattice", "act", "--dataset", "cubic-surface", "--auto", "tensor")[0] == 2


def test_clifford_check(tmp_path, capsys):
    W = fermat_plane_cubic()
    good = write(tmp_path / "c.json", W.to_json())
    emitted = tmp_path / "mf.json"
    code, res, _ = out_json(capsys, "clifford", "check", "--cubic", good, "--emit-mf", emitted)
    assert code == 0 and res["ok"]
    code, res, _ = out_json(capsys, "mf", "verify", emitted, "--w", good)
    assert res["ok"]
    bad = write(tmp_path / "b.json", {"nvars": 6, "text": "x1^3 + x4^3"})
    code, _, err = run(capsys, "clifford", "check", "--cubic", bad)
    assert code == 2 and "plane" in err


def test_cohom(tmp_path, capsys):
    code, res, _ = out_json(capsys, "cohom", "mkl", "-k", -1, "-l", -5)
    assert code == 0 and res["cohomology"] == {}
    cx = write(tmp_path / "cx.json", {"source": [[0, 0, 1]], "target": [[0, 0, 1]], "shift": 0})
    assert run(capsys, "cohom", "complex", cx)[0] == 0
    bad = write(tmp_path / "bad.json", {"source": [[0, 0]], "target": []})
    assert run(capsys, "cohom", "complex", bad)[0] == 2


def test_mukai_commands(tmp_path, capsys):
    ns = write(tmp_path / "ns.json", {"gram": [[2]]})
    code, res, _ = out_json(capsys, "mukai", "zg", "--v", "2,1/2,5/8", "--ns", ns, "--frame", "frak")
    assert code == 0 and parse_scalar(res["z"]) == Fraction(-1, 4) + sqrt_minus3() / 4
    code, res, _ = out_json(capsys, "mukai", "mu", "--v", "0,0,1", "--ns", ns)
    assert res == {"mu": "inf"}
    code, res, _ = out_json(capsys, "mukai", "integrality", "--v", "2,1,3", "--beta", "1", "--ns", ns)
    assert code == 0 and res["ok"]
    code, _, err = run(capsys, "mukai", "integrality", "--v", "1,0,0", "--ns", ns)
    assert code == 2 and "even" in err
    code, res, _ = out_json(capsys, "mukai", "exclude", "--ns", ns)
    assert res["result"] == "NONE"
    ns2 = write(tmp_path / "ns2.json", [[2, 0], [0, -2]])
    code, res, _ = out_json(capsys, "mukai", "exclude", "--ns", ns2)
    assert res["result"] == "WITNESS"
    bad = write(tmp_path / "ns3.json", [[3]])
    assert run(capsys, "mukai", "exclude", "--ns", bad)[0] == 2


def test_demo_only(capsys):
    code, res, err = out_json(capsys, "demo", "--only", "c07_fourfold", "c12_threefold")
    assert code == 0
    assert res["summary"] == {"total": 2, "passed": 2, "failed": []}
    assert "PASS c07_fourfold" in err


def test_demo_requires_selection(capsys):
    assert run(capsys, "demo")[0] == 2
    assert run(capsys, "demo", "--only", "c99")[0] == 2


def test_demo_all_is_reproducible(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    code_a = run(capsys, "demo", "--all", "-o", a)[0]
    code_b = run(capsys, "demo", "--all", "-o", b)[0]
    assert code_a == code_b
    assert a.read_bytes() == b.read_bytes()
    rep = json.loads(a.read_text())
    assert rep["summary"]["total"] == 13
    failed = [c["name"] for c in rep["checks"] if c["status"] != "pass"]
    # the literal index relation for M_{l,-6-l} does not hold
    assert failed == ["c05_cohomology"]
    assert code_a == 1
