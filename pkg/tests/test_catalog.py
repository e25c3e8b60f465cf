import json

import pytest

from p3groups import catalog
from p3groups.linalg import Mat
from p3groups.poly import HomPoly
from p3groups.projgeom import ProjLine, ProjPoint


def test_every_entry_parses():
    for key in catalog.keys():
        e = catalog.entry(key)
        assert e.kind in catalog.KINDS
        assert e.location
        catalog.get(key)


def test_kinds_of_values():
    assert isinstance(catalog.get("T"), Mat)
    assert isinstance(catalog.get("q1"), HomPoly)
    assert isinstance(catalog.get("Sigma12")[0], ProjPoint)
    assert isinstance(catalog.get("ell"), ProjLine)
    assert len(catalog.get("U4")) == 5


def test_aliases():
    assert catalog.get("S1@80") == catalog.get("q1")
    assert catalog.get("S3@144") == catalog.get("p3")


def test_unknown_key():
    with pytest.raises(catalog.CatalogError):
        catalog.get("no-such-entry")
    with pytest.raises(KeyError):
        catalog.entry("no-such-entry")


def test_words_reproduce_stored_matrices():
    assert catalog.word_check("A-word")
    assert catalog.word_check("B-word")
    assert catalog.evaluate_word("S^4") == -Mat.identity(4)
    assert catalog.evaluate_word("T^5") == -Mat.identity(4)


def test_printed_matrices_differ_in_one_entry():
    for key in ("A", "B"):
        printed, stored = catalog.matrix(key, printed=True), catalog.matrix(key)
        diff = [(i, j) for i in range(4) for j in range(4) if printed[i, j] != stored[i, j]]
        assert len(diff) == 1
        assert catalog.entry(key).erratum


def test_errata_are_recorded():
    flagged = {k for k in catalog.keys() if catalog.entry(k).erratum}
    assert {"A", "B", "q0", "Sigma20", "Sigma20pp"} <= flagged
    assert "Sigma20p" not in flagged


def test_point_list_sizes():
    assert [len(catalog.get(k)) for k in ("Sigma20", "Sigma20p", "Sigma20pp", "Sigma12", "Sigma12p")] == [20, 20, 20, 12, 12]


def test_override_restores_state():
    original = catalog.get("T")
    with catalog.override(T={"prefactor": "1", "rows": [["1", "0", "0", "0"], ["0", "1", "0", "0"],
                                                      ["0", "0", "1", "0"], ["0", "0", "0", "1"]]}):
        assert catalog.get("T") == Mat.identity(4)
        assert catalog.group("G80").order != 320
    assert catalog.get("T") == original
    assert catalog.group("G80").order == 320


def test_bad_override_is_a_catalog_error():
    with catalog.override(q1="x^2 +"):
        with pytest.raises(catalog.CatalogError):
            catalog.get("q1")


def test_export_json_roundtrip():
    data = json.loads(catalog.export(fmt="json"))
    assert {d["key"] for d in data} == set(catalog.keys())
    one = json.loads(catalog.export("A", "json"))
    assert one[0]["kind"] == "matrix" and one[0]["erratum"]
    assert catalog.export("T").startswith("T [matrix]")
