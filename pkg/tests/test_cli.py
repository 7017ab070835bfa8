import csv
import io
import json
import subprocess
import sys

import pytest

from bredon.cli import degree_from_json, main, motivic_result, parse_json, point_result, render_json
from bredon.degrees import KleinDegree, MotivicBidegree


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_point_dim(capsys):
    assert run(capsys, "point-dim", "--degree", "2,0,1,-3") == (0, "2\n")
    code, out = run(capsys, "point-dim", "--degree", "2,0,1,-3", "--json")
    assert json.loads(out) == {"degree": {"a": 2, "p": 0, "b": 1, "q": -3}, "dimension": 2}


def test_negative_leading_value(capsys):
    code, out = run(capsys, "point-dim", "--degree", "-2,1,0,1")
    assert (code, out) == (0, "1\n")


def test_point_basis(capsys):
    assert run(capsys, "point-basis", "--degree", "3,-3,0,0") == (0, "t1/y1\n")
    code, out = run(capsys, "point-basis", "--degree", "3,-1,-1,-1", "--json")
    obj = json.loads(out)
    assert obj["dimension"] == 1 and obj["basis"] is None


def test_mul(capsys):
    assert run(capsys, "mul", "k1", "x1") == (0, "x2*y3 + y2*x3\n")
    code, out = run(capsys, "mul", "t2", "t3", "--json")
    assert json.loads(out)["unknown"] is True
    assert run(capsys, "mul", "k2", "x2", "--sector", "espace") == (0, "x1*y3 + y1*x3\n")


def test_restrict(capsys):
    assert run(capsys, "restrict", "x1", "--to", "C2") == (0, "0\n")
    assert run(capsys, "restrict", "x1", "--to", "Delta") == (0, "x1\n")


def test_space_dim(capsys):
    assert run(capsys, "space-dim", "--space", "B", "--degree", "0,1") == (0, "2\n")
    code, out = run(capsys, "space-dim", "--space", "Etilde", "--degree", "2,0,1,-3", "--json")
    assert json.loads(out)["basis"] == ["x3^-3*S(b)"]
    assert run(capsys, "space-dim", "--space", "Wq", "--q", "3", "--degree", "2,1") == (0, "1\n")
    assert run(capsys, "space-dim", "--space", "BC2", "--degree", "1,1") == (0, "2\n")
    code, _ = run(capsys, "space-dim", "--space", "Wq", "--degree", "2,1")
    assert code == 2


def test_motivic_json(capsys):
    code, out = run(capsys, "motivic", "--degree", "0,0:0,0", "--json")
    obj = json.loads(out)
    assert obj["dimension"] == 1 and obj["region"] == "PointRegion"
    assert obj["realization"] == {"raw": "Iso", "refined": "Iso"}
    code, out = run(capsys, "motivic", "--degree", "3,-3:1,-3", "--json")
    obj = json.loads(out)
    assert obj["region"] == "TildeRegion"
    assert obj["realization"] == {"raw": "Mono", "refined": "MonoNotEpi"}


def test_status_and_borel(capsys):
    code, out = run(capsys, "status", "--degree", "3,-2:1,-2")
    assert out.startswith("Mono (refined Iso")
    assert run(capsys, "borel", "--degree", "-2,2:-1,1") == (0, "1\nk2\n")


def test_bad_degree_is_usage_error(capsys):
    assert main(["point-dim", "--degree", "1,2"]) == 2
    with pytest.raises(SystemExit):
        main(["nonsense"])


def test_scan_weight_line(capsys):
    code, out = run(capsys, "scan", "--target", "motivic", "--a", "-2:6", "--b", "0:4")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 9 * 5
    for r in rows:
        a, b = int(r["a"]), int(r["b"])
        assert int(r["dimension"]) == int(0 <= a <= b)


def test_scan_borel_row(capsys):
    from bredon.series import dim_point
    code, out = run(capsys, "scan", "--target", "borel", "--a", "-6:4", "--p", "1", "--b", "-2", "--q", "3",
                    "--format", "json")
    for r in json.loads(out):
        a, p, b, q = r["a"], r["p"], r["b"], r["q"]
        assert r["dimension"] == dim_point(a - 2 * b, p - q + b, 0, b + q)


def test_scan_empty_window(capsys):
    code, out = run(capsys, "scan", "--a", "1:0")
    assert code == 0
    assert out == "a,p,b,q,dimension,region,raw,refined,basis\n"
    code, out = run(capsys, "scan", "--a", "1:0", "--format", "json")
    assert json.loads(out) == []


def test_scan_threads_env(capsys, monkeypatch):
    monkeypatch.setenv("BREDON_THREADS", "3")
    code, out_threads = run(capsys, "scan", "--a", "-3:3", "--p", "-2:2", "--b", "-2:2", "--q", "0:1")
    monkeypatch.setenv("BREDON_THREADS", "1")
    code, out_serial = run(capsys, "scan", "--a", "-3:3", "--p", "-2:2", "--b", "-2:2", "--q", "0:1")
    assert out_threads == out_serial


def test_region_map(capsys, tmp_path):
    code, out = run(capsys, "region-map")
    lines = out.splitlines()
    header = lines[1].split()
    row_q0 = next(l for l in lines if l.startswith("   0 "))
    cells = dict(zip(header[1:], row_q0.split()[1:]))
    assert cells["-1"] == "."
    row = next(l for l in lines if l.startswith("  -3 "))
    assert dict(zip(header[1:], row.split()[1:]))["1"] == "T"
    target = tmp_path / "map.svg"
    assert main(["region-map", "--format", "svg", "-o", str(target)]) == 0
    assert target.read_text().startswith("<svg")


def test_verify_exit_code(capsys):
    code, out = run(capsys, "verify", "--suite", "2q")
    assert code == 0 and out.startswith("PASS theorem_2q")


def test_json_round_trip():
    for d in (KleinDegree(2, 0, 1, -3), KleinDegree(3, -1, -1, -1)):
        x = point_result(d)
        assert parse_json(render_json(x)) == x
        assert degree_from_json(parse_json(render_json(x))["degree"]) == d
    for d in (MotivicBidegree(3, -3, 1, -3), MotivicBidegree(-2, 2, -1, 1), MotivicBidegree(0, 0, -1, 0)):
        x = motivic_result(d)
        assert parse_json(render_json(x)) == x
        assert degree_from_json(parse_json(render_json(x))["degree"], motivic=True) == d


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "bredon", "point-dim", "--degree", "3,-3,-2,3"],
                         capture_output=True, text=True, check=True)
    assert out.stdout == "1\n"
