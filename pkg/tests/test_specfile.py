import json
from pathlib import Path

import pytest

from poishom.polycore import parse_poly
from poishom.specfile import SpecDocument, SpecFileError, document_from_structure

DOCS = Path(__file__).resolve().parent.parent / "docs"


def test_load_shipped_documents():
    for name in ("potential-x2z.json", "log-canonical-3.json", "weighted-line.json"):
        doc = SpecDocument.load(DOCS / name)
        S = doc.to_structure()
        assert S.homogeneity_degree is not None


def test_bare_names_get_unit_weights():
    doc = SpecDocument.from_dict({"vars": ["a", "b"], "bracket": {}})
    assert doc.vars.weights == (1, 1)
    assert doc.label is None


def test_weighted_vars():
    doc = SpecDocument.from_dict(
        {"vars": [{"name": "x", "weight": 1}, {"name": "y", "weight": 3}],
         "bracket": {}}
    )
    assert doc.vars.weights == (1, 3)


def test_bracket_keys_normalize_order():
    doc = SpecDocument.from_dict(
        {"vars": ["x", "y"], "bracket": {"y,x": "x"}}
    )
    S = doc.to_structure()
    assert S.entry(0, 1) == parse_poly("-x", S.vars)


def test_matrix_expansion():
    doc = SpecDocument.from_dict(
        {"vars": ["x", "y"], "matrix": [[0, "1/2"], ["-1/2", 0]]}
    )
    S = doc.to_structure()
    assert S.entry(0, 1) == parse_poly("1/2*x*y", S.vars)


@pytest.mark.parametrize(
    "data",
    [
        {},
        {"vars": []},
        {"vars": "xy"},
        {"vars": ["x"], "bogus": 1},
        {"vars": ["x", "x"], "bracket": {}},
        {"vars": [{"name": "x", "weight": 0}], "bracket": {}},
        {"vars": [{"name": "x", "weight": "two"}], "bracket": {}},
        {"vars": ["x", "y"], "bracket": {"x": "1"}},
        {"vars": ["x", "y"], "bracket": {"x,x": "1"}},
        {"vars": ["x", "y"], "bracket": {"x,z": "1"}},
        {"vars": ["x", "y"], "bracket": {"x,y": "1", "y,x": "2"}},
        {"vars": ["x", "y"], "bracket": {"x,y": "q + 1"}},
        {"vars": ["x", "y"], "bracket": {"x,y": 5}},
        {"vars": ["x", "y"], "bracket": {}, "matrix": [[0, 0], [0, 0]]},
        {"vars": ["x", "y"], "matrix": [[0, 1]]},
        {"vars": ["x", "y"], "matrix": [[0, 1], [1, 0]]},
        {"vars": ["x", "y"], "matrix": [[1, 0], [0, 1]]},
        {"vars": ["x", "y"], "matrix": [[0, "x"], ["-x", 0]]},
        {"vars": ["x", "y"], "matrix": [[0, True], [False, 0]]},
        {"vars": ["x", "y"], "label": 7, "bracket": {}},
    ],
)
def test_malformed_documents(data):
    with pytest.raises(SpecFileError):
        SpecDocument.from_dict(data)


def test_invalid_json_text():
    with pytest.raises(SpecFileError):
        SpecDocument.from_json("{not json")


def test_round_trip(tmp_path):
    doc = SpecDocument.load(DOCS / "weighted-line.json")
    path = tmp_path / "copy.json"
    doc.save(path)
    again = SpecDocument.load(path)
    assert again == doc
    assert json.loads(doc.to_json())["label"] == "weighted-line"


def test_matrix_document_round_trips_as_bracket():
    doc = SpecDocument.load(DOCS / "log-canonical-3.json")
    data = doc.to_dict()
    assert "matrix" not in data
    again = SpecDocument.from_dict(data)
    assert again.to_structure() == doc.to_structure()


def test_document_from_structure(so3):
    doc = document_from_structure(so3, label="roundtrip")
    assert doc.label == "roundtrip"
    assert doc.to_structure() == so3
