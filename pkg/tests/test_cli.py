import json

import pytest

from p3groups.cli import OUTPUT_DIR_ENV, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_passing_subset(capsys):
    code, out, _ = run(capsys, "verify", "--filter", "table1-*")
    assert code == 0 and "PASS" in out and "table1-incidence" in out


def test_verify_failing_check_exits_1(capsys):
    code, out, _ = run(capsys, "verify", "--filter", "rh-144")
    assert code == 1 and "FAIL" in out and "diff:" in out


def test_verify_section_filter(capsys):
    code, out, _ = run(capsys, "verify", "--filter", "80-*", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["summary"]["fail"] == 0 and data["summary"]["pass"] >= 20
    assert "H-order" not in {c["check_id"] for c in data["checks"]}


def test_verify_json_schema(capsys):
    code, out, _ = run(capsys, "verify", "--filter", "A-word", "--format", "json")
    (item,) = json.loads(out)["checks"]
    assert code == 0
    assert item["check_id"] == "A-word" and item["status"] == "pass"
    assert isinstance(item["evidence"], dict) and item["runtime_ms"] >= 0
    assert item["paper_location"] and item["erratum"]


def test_verify_strict_timeout(capsys):
    assert run(capsys, "verify", "--filter", "S0-smooth", "--steps", "10")[0] == 0
    assert run(capsys, "verify", "--filter", "S0-smooth", "--steps", "10", "--strict")[0] == 1


def test_output_dir_env(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv(OUTPUT_DIR_ENV, str(tmp_path))
    code, _, err = run(capsys, "verify", "--filter", "H-order", "--format", "md", "-o", "report.md")
    assert code == 0 and str(tmp_path) in err
    assert (tmp_path / "report.md").read_text().startswith("# Verification report")


def test_usage_errors(capsys):
    assert run(capsys, "verify", "--filter", "nothing-matches-*")[0] == 2
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys, "orbit", "--group", "G80", "--point", "[1:0:1:0]", "--field", "3")[0] == 2
    assert run(capsys, "orbit", "--group", "G80", "--point", "[0:0:0:0]")[0] == 2
    assert run(capsys, "orbit", "--group", "G80", "--point", "[1:0:1:0]", "--field", "0")[0] == 2
    assert run(capsys, "invariants", "--group", "H", "--degree", "9")[0] == 2
    assert run(capsys, "rh", "--order", "80", "--stabs", "2,x", "--gmax", "10")[0] == 2
    assert run(capsys, "groebner")[0] == 2
    assert run(capsys, "catalog", "export", "--key", "no-such-key")[0] == 2


def test_list_checks(capsys):
    code, out, _ = run(capsys, "list-checks", "--filter", "144-*")
    assert code == 0 and "sigma-36" in out and "table1-incidence" not in out


@pytest.mark.parametrize("group,point,length", [
    ("G80", "[1:0:1:0]", 20), ("G144", "[0:1:0:1]", 12), ("H", "[1:2:3:5]", 16),
])
def test_orbit(capsys, group, point, length):
    code, out, _ = run(capsys, "orbit", "--group", group, "--point", point, "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["length"] == length == len(data["points"])


def test_orbit_larger_field(capsys):
    code, out, _ = run(capsys, "orbit", "--group", "G80", "--point", "[1:0:1:0]", "--field", "40")
    assert code == 0 and "orbit length 20" in out


def test_invariants(capsys):
    code, out, _ = run(capsys, "invariants", "--group", "G144", "--degree", "2", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["invariants"] == [] and data["total_one_dimensional"] == 1
    (row,) = [r for r in data["one_dimensional_multiplicities"] if r["multiplicity"]]
    assert row["basis"] == ["x*z + y*w"]


def test_rh(capsys):
    code, out, _ = run(capsys, "rh", "--order", "80", "--stabs", "2,5", "--gmax", "19", "--gmin", "2", "--format", "json")
    rows = json.loads(out)
    from p3groups.rhenum import RHProblem, solve

    expected = [s.as_dict() for s in solve(RHProblem(80, frozenset({2, 5}), 19, genus_min=2))]
    assert code == 0 and rows == expected and {r["g"] for r in rows} == {5, 13, 17}


def test_groebner(capsys):
    code, out, _ = run(capsys, "groebner", "--poly", "x*z - y^2", "--poly", "y*w - z^2", "--poly", "x*w - y*z",
                       "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["projective_dimension"] == 1 and data["degree"] == 3


def test_groebner_jacobian_and_budget(capsys):
    code, out, _ = run(capsys, "groebner", "--jacobian", "q0")
    assert code == 0 and "projective dimension -1" in out
    assert run(capsys, "groebner", "--jacobian", "q0", "--steps", "3")[0] == 1


def test_catalog_export(capsys, tmp_path):
    code, out, _ = run(capsys, "catalog", "export", "--key", "T", "--format", "json")
    assert code == 0 and json.loads(out)
    target = tmp_path / "all.json"
    assert run(capsys, "catalog", "export", "--format", "json", "-o", str(target))[0] == 0
    assert "Table1" in {e["key"] for e in json.loads(target.read_text())}
