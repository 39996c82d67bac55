import pytest

from programs import INT_AND_MIXED, NUMBERS_AND_ATOM, load
from typed_sld.engine import build_tree, to_dot, to_json, tree_from_json
from typed_sld.engine.export import NODE_SHAPES, load_schema, validate
from typed_sld.errors import SchemaError
from typed_sld.syntax import parse_query


@pytest.fixture
def mixed_tree():
    return build_tree(load(INT_AND_MIXED), parse_query("r(X)."))


def test_json_matches_schema(mixed_tree):
    document = to_json(mixed_tree)
    validate(document, "tree.schema.json")
    assert document["id"] == "n0"
    assert document["query"] == "r(X)"
    (edge,) = document["children"]
    assert edge["clause"] == "c5"
    assert edge["step"] == "progress"
    assert edge["mgu"] == {"X": "X_1"}
    assert edge["input_clause"] == "r(X_1) :- p(X_1), q(X_1)."


def test_json_records_terminals():
    document = to_json(build_tree(load(NUMBERS_AND_ATOM), parse_query("p(b).")))
    assert [child["step"] for child in document["children"]] == ["wrong", "wrong", "false"]
    assert [child["node"]["terminal"] for child in document["children"]] == ["wrong", "wrong", "false"]
    assert document["children"][0]["node"]["query"] is None
    assert document["children"][2]["node"]["false_marker"] is True


def test_tree_survives_json(mixed_tree):
    assert tree_from_json(to_json(mixed_tree)) == mixed_tree


def test_invalid_document_is_rejected():
    with pytest.raises(SchemaError, match="tree.schema.json"):
        tree_from_json({"id": "n0"})


def test_schemas_ship_with_the_package():
    assert load_schema("tree.schema.json")["title"] == "TSLD-tree"
    assert "properties" in load_schema("report.schema.json")


def test_dot(mixed_tree):
    dot = to_dot(mixed_tree)
    assert dot.startswith("digraph tsld {")
    assert "n0 -> n1 [label=c5]" in dot
    assert f"shape={NODE_SHAPES[None]}" in dot
    assert "shape=doublecircle" in dot
    assert "shape=octagon" in dot
    assert to_dot(mixed_tree, "generic").startswith("digraph generic {")
