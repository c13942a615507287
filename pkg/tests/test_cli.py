import json
import subprocess
import sys
from pathlib import Path

import pytest

from drinfeld_heights.cli import main

ROOT = Path(__file__).resolve().parents[1]
SPECS = ROOT / "specs"
DATA = Path(__file__).parent / "data"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def write_spec(tmp_path, obj, name="spec.json"):
    p = tmp_path / name
    p.write_text(json.dumps(obj))
    return p


def test_heights_rank2(capsys):
    code, out, _ = run(capsys, "heights", SPECS / "rank2_f3.json", "--json")
    assert code == 0
    js = json.loads(out)
    assert js["global"] == "1/2" and js["modular_height"] == 4


def test_heights_carlitz(capsys):
    code, out, _ = run(capsys, "heights", SPECS / "carlitz_f3.json")
    assert code == 0 and out.strip().endswith("global h_Gr = 0")


def test_heights_several(capsys):
    code, out, _ = run(capsys, "--json", "heights", SPECS / "carlitz_f3.json", SPECS / "rank2_f3.json")
    assert code == 0 and out.count('"spec"') == 2


def test_malformed_coefficient(capsys, tmp_path):
    p = write_spec(tmp_path, {"field": {"p": 3}, "phi": ["T", "T +* 1"]})
    code, _, err = run(capsys, "heights", p)
    assert code == 2
    assert "phi[1]" in err and "line 1, column 4" in err


def test_bad_json(capsys, tmp_path):
    p = tmp_path / "broken.json"
    p.write_text('{"field": {"p": 3},\n "phi": [}')
    code, _, err = run(capsys, "heights", p)
    assert code == 2 and "line 2" in err


def test_parallelogram_golden(capsys):
    code, out, _ = run(capsys, "parallelogram", SPECS / "t_torsion_f3.json", "--kernels", "0,1", "--gr", "--json")
    assert code == 0
    assert out == (DATA / "parallelogram_t_torsion_f3.json").read_text()


def test_parallelogram_same_kernel(capsys):
    code, out, _ = run(capsys, "parallelogram", SPECS / "t_torsion_f3.json", "--kernels", "1,1", "--json")
    js = json.loads(out)
    assert code == 0
    assert all(p["slack"] == "0" for p in js["places"]) and js["global_slack"] == "0"


def test_parallelogram_violation_exit(capsys):
    # known counterexample over F_2, see test_heights
    code, out, _ = run(capsys, "parallelogram", SPECS / "t_torsion_f2.json", "--kernels", "0,1")
    assert code == 1 and "verdict: VIOLATION" in out


def test_parallelogram_tag_unstable(capsys):
    code, _, err = run(capsys, "parallelogram", SPECS / "t_torsion_f3.json", "--kernels", "0,2", "--tag-finite")
    assert code == 2 and "NotStableAt" in err


def test_parallelogram_bad_index(capsys):
    code, _, err = run(capsys, "parallelogram", SPECS / "t_torsion_f3.json", "--kernels", "0,7")
    assert code == 2 and "out of range" in err


def test_polygon(capsys, tmp_path):
    csv = tmp_path / "v.csv"
    code, out, _ = run(
        capsys, "polygon", SPECS / "carlitz_f3.json", "--target", "1 + T t", "--place", "T", "--csv", csv, "--json"
    )
    js = json.loads(out)
    assert code == 0
    assert js["breaks"] == ["-1/2"] and js["lambda"] == "-1/2"
    assert csv.read_text().splitlines()[0] == "z,V"


def test_polygon_constant_at_inf(capsys):
    code, out, _ = run(capsys, "polygon", SPECS / "carlitz_f3.json", "--target", "1", "--place", "inf")
    assert code == 0
    assert "line i=0: 0 + 1*z" in out and "breaks: none" in out


def test_polygon_reducible_place(capsys):
    code, _, err = run(capsys, "polygon", SPECS / "carlitz_f3.json", "--place", "T^2")
    assert code == 2


def test_lattice(capsys, tmp_path):
    code, out, _ = run(capsys, "lattice", SPECS / "lattices_f3.json", "--json")
    js = json.loads(out)
    assert code == 0 and js["lhs"] == js["rhs"] == 2
    L = [["1", "T"], ["0", "T^2"]]
    p = write_spec(tmp_path, {"field": {"p": 3}, "lattices": [L, L], "reference": [["T^2", "0"], ["0", "T^2"]]})
    code, out, _ = run(capsys, "lattice", p, "--json")
    js = json.loads(out)
    assert code == 0 and js["lhs"] == js["rhs"]
    code, out, _ = run(capsys, "lattice", p, "--auto-ref", "--json")
    assert code == 0 and json.loads(out)["lhs"] == 4


def test_lattice_rank_mismatch(capsys, tmp_path):
    p = write_spec(tmp_path, {"field": {"p": 3}, "lattices": [[["1"]], [["1", "0"], ["0", "1"]]], "reference": [["T"]]})
    code, _, _ = run(capsys, "lattice", p)
    assert code == 2


def test_byte_identical_subprocess():
    cmd = [sys.executable, "-m", "drinfeld_heights", "parallelogram", str(SPECS / "t_torsion_f3.json"),
           "--kernels", "0,1"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd + ["--seed", "99"], capture_output=True, check=True).stdout
    assert a == b
