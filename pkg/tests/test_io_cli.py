"""File formats and the command-line interface."""

import json
from fractions import Fraction as F

import pytest

from effectalg.catalog import build_boolean, build_chain
from effectalg.cli import main
from effectalg.io import (frac_to_str, group_from_dict, load_structure,
                          save_structure, simplex_from_dict, str_to_frac,
                          structure_from_dict, structure_to_dict)


def test_rational_strings():
    assert frac_to_str(F(3, 10)) == "3/10"
    assert str_to_frac("3/10") == F(3, 10)
    assert str_to_frac("2") == F(2)
    assert str_to_frac(1) == F(1)
    with pytest.raises(ValueError):
        str_to_frac(0.5)


def test_structure_round_trip(tmp_path):
    E = build_boolean(2)
    path = tmp_path / "b2.json"
    save_structure(E, path)
    again = load_structure(path)
    assert again.sums == E.sums and again.labels == E.labels


def test_catalog_structure_file():
    E = structure_from_dict({"catalog": {"kind": "chain", "n": 3}})
    assert E.n == 4


def test_index_convention_enforced():
    data = structure_to_dict(build_chain(2))
    data["one"] = 0
    with pytest.raises(ValueError):
        structure_from_dict(data)


def test_group_file():
    alg = group_from_dict({"rank": 2, "scalars": "Q", "order": "strict",
                           "unit": ["1", "1"]})
    assert alg.contains(("3/10", "3/10"))


def test_simplex_file():
    sx, g = simplex_from_dict({"vertices": ["a", "b"], "g": [1, 0], "n": 3})
    assert sx.m == 2 and g.declared_n == 3


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_cli_validate(tmp_path, capsys):
    path = tmp_path / "b2.json"
    path.write_text(json.dumps({"catalog": {"kind": "boolean", "k": 2}}))
    code, out = run_cli(capsys, "validate", "--input", str(path))
    assert code == 0
    assert json.loads(out)["valid"]


def test_cli_validate_reports_axiom(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({
        "n": 3, "zero": 0, "one": 2,
        "sums": [[0, 0, 0], [0, 1, 1], [0, 2, 2], [2, 0, 2], [1, 1, 2]]}))
    code, out = run_cli(capsys, "validate", "--input", str(path))
    assert code == 1
    report = json.loads(out)
    assert not report["valid"] and report["axiom"] == "i"


def test_cli_states(tmp_path, capsys):
    path = tmp_path / "c2.json"
    path.write_text(json.dumps({"catalog": {"kind": "chain", "n": 2}}))
    code, out = run_cli(capsys, "states", "--input", str(path))
    assert code == 0
    report = json.loads(out)
    assert report["vertices"] == [["0", "1/2", "1"]]
    assert report["order_determining"]


def test_cli_operators(tmp_path, capsys):
    path = tmp_path / "b2.json"
    path.write_text(json.dumps({"catalog": {"kind": "boolean", "k": 2}}))
    code, out = run_cli(capsys, "operators", "--input", str(path), "--n", "3")
    assert code == 0
    report = json.loads(out)
    assert report["count"] == 4
    pots = [op["classification"]["minimal_potency"] for op in report["operators"]]
    assert sorted(pots) == [2, 2, 2, 3]


def test_cli_duality(tmp_path, capsys):
    path = tmp_path / "swap.json"
    path.write_text(json.dumps({"vertices": ["x", "y"], "g": [1, 0], "n": 3}))
    code, out = run_cli(capsys, "duality", "--input", str(path))
    assert code == 0
    assert json.loads(out)["passed"]


def test_cli_usage_error(tmp_path, capsys):
    code = main(["states", "--input", str(tmp_path / "missing.json")])
    assert code == 2


def test_cli_guard_error(tmp_path, capsys):
    path = tmp_path / "big.json"
    path.write_text(json.dumps({"catalog": {"kind": "boolean", "k": 5}}))
    code = main(["analyze", "--input", str(path), "--guard-elements", "8"])
    assert code == 0  # analyze degrades: ideal enumeration is skipped, not fatal
    out = json.loads(capsys.readouterr().out)
    assert out["ideals"] is None and out["ideal_count"] == -1


def test_cli_deterministic_output(tmp_path, capsys):
    path = tmp_path / "sx.json"
    path.write_text(json.dumps({"vertices": ["a", "b", "c"], "g": [2, 2, 2], "n": 2}))
    _code, out1 = run_cli(capsys, "duality", "--input", str(path), "--seed", "7")
    _code, out2 = run_cli(capsys, "duality", "--input", str(path), "--seed", "7")
    assert out1 == out2


def test_cli_output_file(tmp_path, capsys):
    src = tmp_path / "c3.json"
    src.write_text(json.dumps({"catalog": {"kind": "chain", "n": 3}}))
    dst = tmp_path / "report.json"
    code = main(["--output", str(dst), "analyze", "--input", str(src)])
    assert code == 0
    report = json.loads(dst.read_text())
    assert report["rdp"] and report["lattice_class"] == "both"
