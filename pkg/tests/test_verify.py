import json

import pytest

from p3groups import catalog
from p3groups.verify import list_checks, render, run_all, run_check, to_json
from p3groups.verify.registry import REGISTRY

MINIMUM_SET = """
H-order H-center-commutator Hbar-type fixed-lines-30 fixed-lines-disjoint ST-relations A-word B-word
R-normalizes G80-orders G160-orders G320-orders G144-order inclusions-normality G80-type G160-type G144-type
G80-subgroup-classification H-irreducible-F2 t-sum S6-permutations inv-deg4-H q-eigenbasis p-eigenbasis
no-low-degree-80 unique-quadric-144 five-quartics-80 four-quartics-144 four-sextics-80 table1-incidence
lines-per-quadric-12 quadric-pairs-4-lines triple-points sigma20-orbits sigma16-orbits L10-disjoint
L10-prime-wheel L10-dprime-wheel L10-intersections S0-smooth Si-singular-at-sigma16 table2-incidence
sigma12-only S144-singular Q144-curves sigma-36 section4-orbit-table rh-80 rh-144 line-restriction-8
mckelvey-dim1
""".split()


def test_minimum_set_registered():
    ids = {c.check_id for c in list_checks()}
    assert set(MINIMUM_SET) <= ids
    assert [c.check_id for c in list_checks() if c.stretch] == ["mckelvey-dim1"]


def test_statuses(results):
    failing = sorted(k for k, r in results.items() if r.status == "fail")
    # the genus-8 row of the order-144 table cannot satisfy its own identity; see rh-144 evidence
    assert failing == ["rh-144"]
    skipped = sorted(k for k, r in results.items() if r.status == "skipped")
    assert skipped == ["quartics-irreducible", "sporadic-genera-side-conditions"]
    assert all("out of scope" in results[k].evidence["note"] for k in skipped)


def test_errata_reported_not_failed(results):
    for key in ("A-word", "B-word", "sigma20-list", "sigma20-orbits", "q-eigenbasis", "S0-smooth"):
        assert results[key].status == "pass" and results[key].erratum


def test_rh144_diff(results):
    r = results["rh-144"]
    assert r.erratum and "do not satisfy" in r.erratum
    assert r.evidence["printed_rows_satisfy_identity"] == [False, True, True]
    assert {"g": 13, "a24": 0, "a48": 1, "a72": 3} in r.evidence["diff"]["actual"]


def test_table1_evidence(results):
    rows = results["table1-incidence"].evidence["rows"]
    assert len(rows) == 30 and all(len(v) == 10 for v in rows.values())
    assert rows == catalog.get("Table1")["rows"]


def test_sigma12_is_partial(results):
    ev = results["sigma12-only"].evidence
    assert ev["partial"] is True and ev["unverified"]


def test_filter_by_section():
    ids = {c.check_id for c in list_checks("80-*")}
    assert "table2-incidence" in ids and "H-order" not in ids and "rh-144" not in ids
    assert {c.check_id for c in list_checks("table1-*")} == {"table1-incidence"}


def test_unknown_check():
    with pytest.raises(KeyError):
        run_check("no-such-check")


def test_run_check_is_deterministic():
    a, b = run_check("table2-incidence"), run_check("table2-incidence")
    assert a.as_dict(with_runtime=False) == b.as_dict(with_runtime=False)


def test_reports_byte_identical(results):
    subset = [results[k] for k in ("H-order", "table1-incidence", "rh-144")]
    again = run_all("H-order") + run_all("table1-incidence") + run_all("rh-144")
    assert to_json(subset, with_runtime=False) == to_json(again, with_runtime=False)


def test_parallel_run_matches_serial():
    serial = run_all("G8*", jobs=1)
    parallel = run_all("G8*", jobs=3)
    assert to_json(serial, with_runtime=False) == to_json(parallel, with_runtime=False)


def test_json_schema(results):
    data = json.loads(render(list(results.values()), "json"))
    assert set(data["summary"]) == {"pass", "fail", "skipped", "timeout"}
    for item in data["checks"]:
        assert {"check_id", "paper_location", "status", "evidence", "runtime_ms"} <= set(item)
        assert set(item) <= {"check_id", "paper_location", "status", "evidence", "runtime_ms", "erratum"}
        assert item["status"] in {"pass", "fail", "skipped", "timeout"}
    ids = [c["check_id"] for c in data["checks"]]
    assert ids == sorted(ids)


def test_markdown_mirrors_tables(results):
    md = render(list(results.values()), "md")
    assert "| line | Q1 | Q2 |" in md
    assert "| ell_pp_check5 | - | + | + | - | + | + | - | - | - | - |" in md
    assert "| Sigma16_1 | Sing | + | - | + |" in md
    text = render(list(results.values()), "text")
    assert "FAIL" in text and "rh-144" in text
    with pytest.raises(ValueError):
        render([], "xml")


def test_timeout_status():
    from p3groups.ideals import step_budget

    with step_budget(10):
        r = run_check("S0-smooth")
    assert r.status == "timeout" and r.evidence["reductions"] >= 10


# -- mutation tests: corrupt one catalog entry and the matching check must fail with a diff


def test_corrupted_table1_row_fails():
    rows = dict(catalog.get("Table1")["rows"])
    rows["ell1"] = "-" + rows["ell1"][1:]
    with catalog.override(Table1={"columns": catalog.get("Table1")["columns"], "rows": rows}):
        r = run_check("table1-incidence")
    assert r.status == "fail"
    assert r.evidence["diff"]["rows"]["ell1"]["expected"] == rows["ell1"]
    assert run_check("table1-incidence").status == "pass"


def test_corrupted_rh80_fails():
    spec = dict(catalog.get("rh-80"))
    spec["rows"] = spec["rows"][:2]
    with catalog.override(**{"rh-80": spec}):
        r = run_check("rh-80")
    assert r.status == "fail" and "diff" in r.evidence


def test_corrupted_quartic_fails():
    with catalog.override(q1=catalog.entry("q2").value):
        r = run_check("Si-singular-at-sigma16")
    assert r.status == "fail" and r.evidence["diff"]["failed_claims"]


def test_corrupted_point_list_fails():
    pts = list(catalog.entry("Sigma20p").value)
    pts[1] = pts[0]
    with catalog.override(Sigma20p=pts):
        r = run_check("sigma20-list")
    assert r.status == "fail"
    assert "Sigma20p matches its orbit or carries an erratum" in r.evidence["diff"]["failed_claims"]


def test_corrupted_matrix_fails():
    value = dict(catalog.entry("B").value)
    value["corrections"] = []
    with catalog.override(B=value):
        r = run_check("B-word")
    assert r.status == "fail"


def test_registry_entries_have_locations():
    for c in REGISTRY.values():
        assert c.location and c.section in {"heisenberg", "80", "144"}
