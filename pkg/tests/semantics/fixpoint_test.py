import pytest

from programs import FLOAT_CALL, NATURALS, WELL_TYPED_CHAIN, load
from typed_sld.errors import PreconditionError
from typed_sld.semantics import AtomSet, Bounds, match_term, tp_fixpoint, tp_step
from typed_sld.syntax import Program, parse_query, parse_term


def atoms(text: str) -> frozenset:
    return frozenset(parse_query(text).atoms)


def test_fixpoint_of_facts():
    result = tp_fixpoint(load(FLOAT_CALL))
    assert result.atoms == atoms("p(1), p(a).")
    assert result.iterations == 2
    assert not result.truncated


def test_fixpoint_through_a_rule():
    result = tp_fixpoint(load(WELL_TYPED_CHAIN))
    assert result.atoms == atoms("p(1), q(1), q(a).")
    assert result.iterations == 3
    assert str(result) == "{p(1), q(1), q(a)}"


def test_empty_program():
    result = tp_fixpoint(Program(()))
    assert len(result) == 0
    assert result.iterations == 1


def test_single_step():
    program = load(WELL_TYPED_CHAIN)
    first = tp_step(program, AtomSet())
    assert first.atoms == atoms("p(1), q(a).")
    assert tp_step(program, first).atoms == atoms("p(1), q(1), q(a).")


def test_free_head_variables_range_over_the_pool():
    result = tp_fixpoint(load("p(X).\n"))
    assert len(result) == 13
    assert parse_query("p(1.5).").atoms[0] in result


def test_deep_heads_are_dropped():
    result = tp_fixpoint(load(NATURALS), bounds=Bounds(tree_depth=2))
    assert result.atoms == atoms("nat(zero), nat(s(zero)), nat(s(s(zero))).")
    assert result.truncated


def test_iteration_bound():
    assert tp_fixpoint(load(WELL_TYPED_CHAIN), 1).truncated
    with pytest.raises(PreconditionError):
        tp_fixpoint(load(WELL_TYPED_CHAIN), 0)


def test_atom_sets_hold_ground_atoms_only():
    with pytest.raises(ValueError, match="not ground"):
        AtomSet(atoms("p(X)."))


@pytest.mark.parametrize(
    "pattern, ground, expected",
    [
        ("f(X,X)", "f(1,1)", {"X": "1"}),
        ("f(X,X)", "f(1,2)", None),
        ("f(X,a)", "f(b,a)", {"X": "b"}),
        ("g(X)", "f(1)", None),
        ("1", "1.0", None),
    ],
)
def test_match_term(pattern, ground, expected):
    found = match_term(parse_term(pattern), parse_term(ground), {})
    if expected is None:
        assert found is None
    else:
        assert found == {name: parse_term(term) for name, term in expected.items()}
