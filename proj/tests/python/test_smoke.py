import json
import os
from fractions import Fraction
from pathlib import Path

import pytest

import echarpoly

DATA = Path(os.environ.get("ECHAR_TEST_DATA", Path(__file__).resolve().parent.parent / "data"))


def load(name):
    return json.loads((DATA / name).read_text())


def test_diagonal_m4():
    rep = echarpoly.echar(load("diag_m4.json"))
    assert rep["psi"] == [1, -6, 13, -12, 4]
    assert rep["a0_matches"] and rep["leading_matches"]


def test_routes_agree_on_deficit_tensor():
    doc = echarpoly.document(3, 2, {(1, 1, 1): 2, (1, 1, 2): 2, (1, 2, 2): 1, (2, 1, 1): 1, (2, 1, 2): 1, (2, 2, 2): 3})
    for route in ("auto", "sylvester", "det", "macaulay"):
        assert echarpoly.echar(doc, route)["psi"] == [625, 0, -50]
    rep = echarpoly.eigen(doc)
    assert rep["counts"] == {"normalized": 1, "deficit": 2}


def test_document_accepts_fractions():
    doc = echarpoly.document(2, 2, {(1, 1): Fraction(1, 2), (2, 2): 3, (1, 2): 0})
    assert doc["entries"] == {"1,1": "1/2", "2,2": "3"}
    # det(A - l I) = (1/2 - l)(3 - l)
    assert echarpoly.echar(doc)["psi"] == [Fraction(3, 2), Fraction(-7, 2), 1]


def test_irregular_witness():
    regular, witness = echarpoly.is_regular(load("irregular_m3.json"))
    assert not regular
    assert witness == [(1, 0), (0, 1)]
    assert echarpoly.is_regular(load("diag_m3.json")) == (True, None)


def test_verify_and_fuzz():
    assert all(c["status"] != "fail" for c in echarpoly.verify(load("random_m3.json")))
    ok, results = echarpoly.fuzz(5, 42, order=4)
    assert ok and len(results) == 5
    assert echarpoly.fuzz(5, 42, order=4) == (ok, results)


def test_sylvester_resultant():
    assert echarpoly.sylvester_resultant([1, 0, 0], [0, 0, 1]) == 1
    # (x1 - 2 x2) and (x1 - 3 x2): Res = -3 + 2 = -1
    assert echarpoly.sylvester_resultant([1, -2], [1, -3]) == -1


def test_errors():
    with pytest.raises(echarpoly.ParseError):
        echarpoly.echar(load("bad_index.json"))
    with pytest.raises(echarpoly.ParseError):
        echarpoly.echar("{not json")
    with pytest.raises(echarpoly.UnsupportedError):
        echarpoly.eigen(load("diag_m3_n3.json"))
    with pytest.raises(echarpoly.Error):
        echarpoly.echar(load("diag_m4.json"), "fastest")
