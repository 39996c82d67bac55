"""DOT and JSON renderings of TSLD-trees."""

import json
from collections.abc import Iterator
from functools import cache
from importlib import resources
from typing import Any

import graphviz
from jsonschema import Draft202012Validator

from ..errors import SchemaError
from ..syntax.parser import parse_program, parse_query, parse_term
from ..syntax.substitution import Substitution
from ..syntax.terms import Clause, Query
from .resolution import FalseProgress, Progress, ResolutionStep, WrongHalt
from .tree import Edge, Terminal, TsldTree

NODE_SHAPES: dict[Terminal | None, str] = {
    None: "box",
    Terminal.SUCCESS: "doublecircle",
    Terminal.WRONG: "octagon",
    Terminal.FALSE: "plaintext",
    Terminal.DEPTH: "diamond",
}

_STEP_KINDS: dict[type, str] = {Progress: "progress", FalseProgress: "false", WrongHalt: "wrong"}


@cache
def load_schema(name: str) -> dict[str, Any]:
    """Loads one of the JSON schemas shipped in ``typed_sld/schemas``."""
    text = resources.files("typed_sld").joinpath("schemas", name).read_text(encoding="utf-8")
    return json.loads(text)


def validate(document: Any, schema_name: str) -> None:
    validator = Draft202012Validator(load_schema(schema_name))
    error = next(iter(sorted(validator.iter_errors(document), key=str)), None)
    if error is not None:
        where = "/".join(map(str, error.absolute_path)) or "<root>"
        raise SchemaError(f"{schema_name}: {where}: {error.message}")


def _numbered(tree: TsldTree) -> Iterator[tuple[str, TsldTree, str | None, Edge | None]]:
    """Pre-order walk assigning stable ids ``n0``, ``n1``, …"""
    stack: list[tuple[TsldTree, str | None, Edge | None]] = [(tree, None, None)]
    counter = 0
    while stack:
        node, parent, edge = stack.pop()
        node_id = f"n{counter}"
        counter += 1
        yield node_id, node, parent, edge
        stack.extend((out.child, node_id, out) for out in reversed(node.edges))


def to_dot(tree: TsldTree, name: str = "tsld") -> str:
    graph = graphviz.Digraph(name, graph_attr={"rankdir": "TB"}, node_attr={"fontname": "Helvetica"})
    for node_id, node, parent, edge in _numbered(tree):
        graph.node(node_id, node.label, shape=NODE_SHAPES[node.terminal])
        if parent is not None and edge is not None:
            graph.edge(parent, node_id, label=edge.clause_id)
    return graph.source


def _atoms_text(query: Query) -> str:
    return ",".join(map(str, query.atoms))


def _substitution_json(subst: Substitution) -> dict[str, str]:
    return {name: str(term) for name, term in subst.items()}


def to_json(tree: TsldTree) -> dict[str, Any]:
    """Encodes the tree as a document matching ``tree.schema.json``."""
    counter = 0

    def encode(node: TsldTree) -> dict[str, Any]:
        nonlocal counter
        node_id = f"n{counter}"
        counter += 1
        return {
            "id": node_id,
            "label": node.label,
            "query": None if node.query is None else _atoms_text(node.query),
            "false_marker": node.query is not None and node.query.false_marker,
            "terminal": None if node.terminal is None else node.terminal.value,
            "selected": node.selected,
            "depth": node.depth,
            "answer": _substitution_json(node.answer),
            "children": [
                {
                    "clause": edge.clause_id,
                    "step": _STEP_KINDS[type(edge.step)],
                    "mgu": _substitution_json(edge.step.mgu)
                    if isinstance(edge.step, Progress)
                    else None,
                    "input_clause": str(edge.step.input_clause),
                    "node": encode(edge.child),
                }
                for edge in node.edges
            ],
        }

    return encode(tree)


def _decode_substitution(document: dict[str, str]) -> Substitution:
    return Substitution({name: parse_term(text) for name, text in document.items()})


def _decode_query(text: str | None, false_marker: bool) -> Query | None:
    if text is None:
        return None
    atoms = parse_query(f"{text}.").atoms if text else ()
    return Query(atoms, false_marker)


def _decode_clause(clause_id: str, text: str) -> Clause:
    (clause,) = parse_program(text).clauses
    return Clause(clause_id, clause.head, clause.body)


def tree_from_json(document: dict[str, Any]) -> TsldTree:
    """Rebuilds a tree from :func:`to_json` output after validating it."""
    validate(document, "tree.schema.json")

    def decode(node: dict[str, Any]) -> TsldTree:
        edges = []
        for child in node["children"]:
            child_tree = decode(child["node"])
            clause = _decode_clause(child["clause"], child["input_clause"])
            selected = node["selected"]
            step: ResolutionStep
            match child["step"]:
                case "progress":
                    assert child_tree.query is not None
                    step = Progress(
                        child_tree.query,
                        child["clause"],
                        _decode_substitution(child["mgu"]),
                        selected,
                        clause,
                    )
                case "false":
                    assert child_tree.query is not None
                    step = FalseProgress(child_tree.query, child["clause"], selected, clause)
                case _:
                    step = WrongHalt(child["clause"], selected, clause)
            edges.append(Edge(step, child_tree))
        terminal = node["terminal"]
        return TsldTree(
            _decode_query(node["query"], node["false_marker"]),
            None if terminal is None else Terminal(terminal),
            node["selected"],
            tuple(edges),
            _decode_substitution(node["answer"]),
            node["depth"],
        )

    return decode(document)
