import pytest

from programs import FAMILY, NATURALS, load
from typed_sld.errors import NotGroundError
from typed_sld.syntax import (
    BaseType,
    Compound,
    Const,
    GroundBase,
    GroundTree,
    Program,
    Query,
    format_program,
    ground_type_of,
    is_ground,
    parse_query,
    parse_term,
    term_depth,
    term_size,
    variables,
)


def test_ground_type_of():
    assert ground_type_of(parse_term("1")) == GroundBase(BaseType.INT)
    assert ground_type_of(parse_term("f(a,2.5)")) == GroundTree(
        "f", (GroundBase(BaseType.ATOM), GroundBase(BaseType.FLOAT))
    )
    assert str(ground_type_of(parse_term('g("x")'))) == "g(string)"
    with pytest.raises(NotGroundError, match="X"):
        ground_type_of(parse_term("f(X)"))


def test_measures():
    term = parse_term("f(X,g(Y,X))")
    assert list(variables(term)) == ["X", "Y", "X"]
    assert term_size(term) == 5
    assert term_depth(term) == 2
    assert term_depth(parse_term("X")) == 0
    assert not is_ground(term)
    assert is_ground(parse_term("f(1)"))


def test_compound_needs_arguments():
    with pytest.raises(ValueError):
        Compound("f", ())
    with pytest.raises(ValueError):
        GroundTree("f", ())


def test_query_states():
    assert Query().is_empty
    assert str(Query()) == "□"
    assert Query((), True).is_false
    assert str(Query((), True)) == "false"
    query = parse_query("p(X), q(X, Y).")
    assert query.variables() == ("X", "Y")
    assert len(query) == 2


def test_program_views():
    program = load(FAMILY)
    assert program.head_keys() == (("father", 2), ("grandfather", 2))
    assert program.pred_keys() == (("father", 2), ("grandfather", 2))
    assert Const("john", BaseType.ATOM) in program.constants()
    assert program.variable_names() == frozenset({"X", "Y", "Z"})
    assert load(NATURALS).functors() == (("s", 1),)


def test_program_rejects_duplicate_ids():
    clause = load("p(1).").clause("c1")
    with pytest.raises(ValueError, match="duplicate clause id c1"):
        Program((clause, clause))


def test_unknown_clause_id():
    with pytest.raises(KeyError, match="no clause c9"):
        load(FAMILY).clause("c9")


def test_format_program_with_ids():
    assert format_program(load("p(1).\nq :- p(2).")) == "p(1).\nq :- p(2)."
    assert format_program(load("p(1)."), with_ids=True) == "% c1\np(1)."
