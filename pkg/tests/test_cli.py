from __future__ import annotations

import json
import subprocess
import sys

import pytest

from signless.cli import run
from signless.extremal import ExtremalReport
from signless.graph_core import family_graph, format_edge_list
from signless.polynomial import IntPolynomial
from signless.recurrences import closed_form_poly
from signless.spectra import CoefficientVector, coefficients


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_coeffs_json(capsys):
    code, out, _ = call(capsys, "coeffs", "--family", "G3(0,0;0,0;0,3)", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["phi"][:2] == ["1", "12"] and data["phi"][-1] == "4"
    vec = CoefficientVector.from_json(data["phi"])
    assert vec == coefficients(family_graph("G3(0,0;0,0;0,3)"))


def test_coeffs_text_and_edges(capsys, tmp_path):
    path = tmp_path / "paw.txt"
    path.write_text(format_edge_list(family_graph("G3(0,1;0,0;0,0)")))
    code, out, _ = call(capsys, "coeffs", "--edges", str(path))
    assert code == 0 and out.strip().endswith("phi = 1 8 19 16 4")


def test_json_flag_position(capsys):
    a = call(capsys, "--json", "coeffs", "--family", "G4(0,1;0,0;0,0;0,0)")
    b = call(capsys, "coeffs", "--family", "G4(0,1;0,0;0,0;0,0)", "--json")
    assert a == b


@pytest.mark.parametrize("argv", [
    ["coeffs", "--edges", "missing.txt"],
    ["coeffs"],
    ["coeffs", "--family", "G3(0,0)"],
    ["frobnicate"],
    ["transform", "sigma", "--family", "G3(0,1;0,0;0,0)"],
    ["transform", "contract-pendant", "--family", "G3(0,1;0,0;0,0)", "--uv", "0,1"],
    ["closed-form", "G44", "--n", "9", "--m", "4"],
    ["closed-form", "G31", "--n", "8"],
    ["enumerate", "--n", "12"],
])
def test_usage_errors(capsys, argv, tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    code, _, _ = call(capsys, *argv)
    assert code == 2


def test_bad_edge_file(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("3\n0 1\n1 2\n")  # a path, not unicyclic
    assert call(capsys, "coeffs", "--edges", str(path))[0] == 2


def test_tu_check(capsys):
    code, out, _ = call(capsys, "tu-check", "--n", "6")
    assert code == 0 and out.startswith("PASS: 13 graphs")


def test_ie(capsys):
    code, out, _ = call(capsys, "ie", "--family", "G4(0,0;0,0;0,0;0,0)", "--json")
    assert code == 0 and abs(json.loads(out)["ie"] - 4.828427124746) < 1e-9


def test_transform_outputs(capsys):
    code, out, _ = call(capsys, "transform", "collect", "--family", "G4(1,0;0,1;0,0;0,0)", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["comparison"] == "Dominates" and data["equal_at"] == [0, 1, 6, 7]
    assert data["matching_before"] == data["matching_after"]
    code, out, _ = call(capsys, "transform", "redistribute", "--variant", "g3",
                        "--family", "G3(0,1;0,1;1,1)")
    assert code == 0 and "comparison Equal" in out
    code, out, _ = call(capsys, "transform", "cycle-reduce", "--u", "0",
                        "--family", "G6(0,0;0,0;0,0;0,0;0,0;0,0)", "--json")
    assert code == 0 and json.loads(out)["comparison"] == "Dominates"


def test_transform_edge_and_vertex_flags(capsys, tmp_path):
    path = tmp_path / "g.txt"
    path.write_text("6\n0 1\n1 2\n0 2\n0 3\n3 4\n3 5\n")
    code, out, _ = call(capsys, "transform", "contract-path2", "--edges", str(path),
                        "--uv", "3,0", "--uprime", "4", "--json")
    assert code == 0 and json.loads(out)["matching_after"] == 3
    code, out, _ = call(capsys, "transform", "sigma", "--edges", str(path), "--v", "3", "--u", "0")
    assert code == 0 and "comparison Dominates" in out


def test_enumerate(capsys):
    code, out, _ = call(capsys, "enumerate", "--n", "6", "--json")
    data = json.loads(out)
    assert code == 0 and data["count"] == 13
    code, out, _ = call(capsys, "enumerate", "--n", "7", "--parity", "even", "--m", "3")
    assert code == 0 and out.strip().splitlines()[-1].endswith("classes")


def test_closed_form_and_diff(capsys):
    code, out, _ = call(capsys, "closed-form", "G31", "--n", "8", "--m", "3", "--json")
    data = json.loads(out)
    assert code == 0 and data["verdict"] == "PASS"
    assert IntPolynomial.from_json(data["poly"]) == closed_form_poly("G31", 8, 3)
    code, out, _ = call(capsys, "diff-factor", "eq1", "--n", "6", "--m", "3")
    assert code == 0 and "-2x^3 + 7x^2 - 4x" in out


def test_verify_exit_codes(capsys):
    code, out, _ = call(capsys, "verify", "T4_2", "--n", "8")
    assert code == 0 and out.strip().endswith("clauses)")
    code, out, _ = call(capsys, "verify", "R3_8", "--n", "5")
    assert code == 1 and "witness" in out


def test_verify_json_round_trip(capsys):
    code, out, _ = call(capsys, "verify", "T5_1", "--n", "7", "--json")
    rep = ExtremalReport.from_json(out)
    assert code == 0 and rep.passed and rep.dumps() == out.strip()
    code, out, _ = call(capsys, "verify", "T5_1", "--n", "7", "--csv")
    assert out.splitlines()[0].startswith("theorem,n,m")


def test_rank_ie(capsys):
    code, out, _ = call(capsys, "rank-ie", "--n", "6", "--m", "2", "--parity", "even", "--top", "1", "--json")
    data = json.loads(out)
    assert code == 0 and len(data["ranking"]) == 1


def test_output_is_byte_stable(capsys):
    argv = ["enumerate", "--n", "7", "--json"]
    assert call(capsys, *argv) == call(capsys, *argv)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "signless.cli", "coeffs", "--family", "G3(0,0;0,0;0,0)"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "phi = 1 6 9 4" in proc.stdout
