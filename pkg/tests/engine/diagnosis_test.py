import pytest

from programs import (
    ATOM_CALL_OF_INT,
    FAMILY,
    FLOAT_CALL,
    MISMATCHED_CALL,
    NUMBERS_AND_ATOM,
    WELL_TYPED_CHAIN,
    load,
)
from typed_sld.engine import (
    TreeClassification,
    Verdict,
    diagnose_program,
    diagnose_query,
    generic_query,
    solve,
)
from typed_sld.syntax import parse_query, parse_term


def test_generic_query_follows_head_order():
    assert str(generic_query(load(FAMILY))) == "father(X1,X2),grandfather(X3,X4)"
    reordered = generic_query(load(FAMILY), [("grandfather", 2), ("father", 2)])
    assert str(reordered) == "grandfather(X1,X2),father(X3,X4)"


def test_generic_query_avoids_program_variables():
    assert str(generic_query(load("p(X1) :- q(X1).\nq(1)."))) == "p(X2),q(X3)"


def test_blames_every_clause_of_an_erroneous_only_branch():
    diagnosis = diagnose_program(load(MISMATCHED_CALL))
    assert diagnosis.verdict is Verdict.TYPE_ERROR_IN_PROGRAM
    assert diagnosis.blamed == frozenset({"c1", "c2"})
    assert [str(d) for d in diagnosis.evidence] == ["p(X1,X2),q(X3) ⟹ q(X3) ⟹ p(1,a) ⟹ wrong"]


def test_blames_only_the_ill_typed_clause():
    diagnosis = diagnose_program(load(ATOM_CALL_OF_INT))
    assert diagnosis.verdict is Verdict.TYPE_ERROR_IN_PROGRAM
    assert diagnosis.blamed == frozenset({"c3"})
    assert diagnosis.classification is TreeClassification.SUCCESSFUL


def test_float_call_is_blamed():
    assert "c3" in diagnose_program(load(FLOAT_CALL)).blamed


@pytest.mark.parametrize("text", [WELL_TYPED_CHAIN, NUMBERS_AND_ATOM, FAMILY])
def test_no_type_error(text):
    diagnosis = diagnose_program(load(text))
    assert diagnosis.verdict is Verdict.NO_TYPE_ERROR
    assert diagnosis.blamed == frozenset()
    assert diagnosis.evidence == ()


def test_depth_bounded_program_is_unknown():
    diagnosis = diagnose_program(load("p(X) :- p(X)."), depth_bound=5)
    assert diagnosis.verdict is Verdict.UNKNOWN_DEPTH_BOUNDED


def test_type_error_in_query():
    diagnosis = diagnose_query(load(WELL_TYPED_CHAIN), parse_query("q(1.1)."))
    assert diagnosis.verdict is Verdict.TYPE_ERROR_IN_QUERY
    assert diagnosis.classification is TreeClassification.FINITELY_ERRONEOUS
    assert len(diagnosis.evidence) == 2


def test_failing_query_has_no_type_error():
    diagnosis = diagnose_query(load(WELL_TYPED_CHAIN), parse_query("q(b)."))
    assert diagnosis.verdict is Verdict.NO_TYPE_ERROR
    assert diagnosis.classification is TreeClassification.FINITELY_FAILED


def test_program_error_takes_precedence():
    diagnosis = diagnose_query(load(ATOM_CALL_OF_INT), parse_query("q(a)."))
    assert diagnosis.verdict is Verdict.TYPE_ERROR_IN_PROGRAM
    assert diagnosis.blamed == frozenset({"c3"})


def test_solve():
    solution = solve(load(NUMBERS_AND_ATOM), parse_query("p(X)."))
    assert [str(answer["X"]) for answer in solution.answers] == ["0", "1", "a"]
    assert solution.classification is TreeClassification.SUCCESSFUL
    assert solution.diagnosis.verdict is Verdict.NO_TYPE_ERROR
    assert len(solve(load(NUMBERS_AND_ATOM), parse_query("p(X)."), max_answers=2).answers) == 2


def test_solve_family():
    solution = solve(load(FAMILY), parse_query("grandfather(X,Y)."))
    assert [dict(answer) for answer in solution.answers] == [
        {"X": parse_term("phil"), "Y": parse_term("mary")}
    ]


def test_blame_does_not_depend_on_generic_query_order():
    diagnosis = diagnose_program(load(ATOM_CALL_OF_INT), order=[("q", 1), ("p", 1)])
    assert str(diagnosis.query) == "q(X1),p(X2)"
    assert diagnosis.verdict is Verdict.TYPE_ERROR_IN_PROGRAM
    assert diagnosis.blamed == frozenset({"c3"})
    assert [str(d) for d in diagnosis.evidence] == ["q(X1),p(X2) ⟹ p(a),p(X2) ⟹ wrong"]
