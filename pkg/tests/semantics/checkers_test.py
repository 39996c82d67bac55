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
from typed_sld.errors import PreconditionError
from typed_sld.kleene import WRONG
from typed_sld.semantics import (
    BaseDomain,
    Bounds,
    IntVal,
    Pools,
    Relation,
    TypingVerdict,
    candidate_contexts,
    check_lemma_blamed_clause,
    derived_interpretation,
    entails,
    enumerate_models,
    is_ill_typed_program,
    is_ill_typed_query,
    top_interpretation,
    tp_fixpoint,
    widened_interpretation,
)
from typed_sld.syntax import Query, parse_query


def test_derived_interpretation():
    interp = derived_interpretation(tp_fixpoint(load(WELL_TYPED_CHAIN)))
    assert interp.relation(("q", 1)).signature == frozenset(
        {(BaseDomain.INT,), (BaseDomain.ATOM,)}
    )
    assert interp.relation(("p", 1)).truth_set == frozenset({(IntVal(1),)})


def test_top_interpretation_keeps_signatures():
    program = load(WELL_TYPED_CHAIN)
    pools = Pools.for_atoms(program.atoms())
    derived = derived_interpretation(tp_fixpoint(program))
    top = top_interpretation(derived, pools)
    assert top.relation(("p", 1)).signature == derived.relation(("p", 1)).signature
    assert len(top.relation(("p", 1)).truth_set) == 5


def test_candidate_contexts():
    program = load(WELL_TYPED_CHAIN)
    interp = derived_interpretation(tp_fixpoint(program))
    contexts, truncated = candidate_contexts(
        program.clause("c3").body + (program.clause("c3").head,), interp, Pools.for_atoms([])
    )
    assert contexts == [{"X": BaseDomain.INT}]
    assert not truncated


def test_undefined_predicates_are_widened():
    program = load("p(1).\np(X) :- s(X).\n")
    pools = Pools.for_atoms(program.atoms(), Bounds(tree_depth=1))
    atoms = tp_fixpoint(program, pools=pools)
    groups = [(c.head, *c.body) for c in program.clauses]
    widened, _ = widened_interpretation(atoms, groups, pools, defined=frozenset(program.head_keys()))
    assert ("s", 1) in widened.keys()
    assert widened.relation(("s", 1)) == Relation(frozenset({(BaseDomain.INT,)}))
    assert widened.relation(("p", 1)).signature == frozenset({(BaseDomain.INT,)})


@pytest.mark.parametrize("text", [FLOAT_CALL, MISMATCHED_CALL, ATOM_CALL_OF_INT])
def test_ill_typed_programs(text):
    report = is_ill_typed_program(load(text))
    assert report.verdict is TypingVerdict.ILL_TYPED
    assert report.violation is not None
    assert report.violation.value is WRONG


@pytest.mark.parametrize("text", [WELL_TYPED_CHAIN, NUMBERS_AND_ATOM, FAMILY])
def test_well_typed_programs(text):
    report = is_ill_typed_program(load(text))
    assert report.verdict is TypingVerdict.WELL_TYPED
    assert report.violation is None


def test_well_typed_report_lists_contexts():
    report = is_ill_typed_program(load(FAMILY))
    assert report.contexts["c3"] == dict.fromkeys("XYZ", BaseDomain.ATOM)
    assert "c3 in {X: Atom, Y: Atom, Z: Atom}" in str(report)
    document = report.to_json()
    assert document["verdict"] == "well-typed"
    assert document["interpretation"]["father/2"]["signature"] == [["Atom", "Atom"]]


def test_ill_typed_report_json():
    document = is_ill_typed_program(load(FLOAT_CALL)).to_json()
    assert document["verdict"] == "ill-typed"
    assert document["fixpoint"] == ["p(1)", "p(a)"]
    assert document["violation"]["subject"] == "c3"
    assert document["violation"]["value"] == "wrong"


@pytest.mark.parametrize(
    "query, reading, expected",
    [
        ("q(1.1).", "model", TypingVerdict.ILL_TYPED),
        ("q(1).", "model", TypingVerdict.WELL_TYPED),
        ("q(2).", "model", TypingVerdict.ILL_TYPED),
        ("q(2).", "wrong-free", TypingVerdict.WELL_TYPED),
        ("q(1.1).", "wrong-free", TypingVerdict.ILL_TYPED),
    ],
)
def test_query_verdicts(query, reading, expected):
    report = is_ill_typed_query(load(WELL_TYPED_CHAIN), parse_query(query), reading=reading)
    assert report.verdict is expected


def test_empty_query_is_well_typed():
    assert is_ill_typed_query(load(WELL_TYPED_CHAIN), Query()).verdict is TypingVerdict.WELL_TYPED


def test_tight_bounds_give_unknown():
    report = is_ill_typed_program(load(WELL_TYPED_CHAIN), Bounds(iterations=1))
    assert report.verdict is TypingVerdict.UNKNOWN
    assert report.truncated


@pytest.mark.parametrize("text, clause_id", [(MISMATCHED_CALL, "c2"), (ATOM_CALL_OF_INT, "c3")])
def test_blamed_clause_lemma(text, clause_id):
    assert check_lemma_blamed_clause(load(text), clause_id)


def test_lemma_readings_differ():
    program = load(ATOM_CALL_OF_INT)
    assert check_lemma_blamed_clause(program, "c3", reading="differs")
    assert not check_lemma_blamed_clause(program, "c3", reading="equals")


def test_lemma_needs_a_blamed_clause():
    with pytest.raises(PreconditionError, match="c1 is not a blamed clause"):
        check_lemma_blamed_clause(load(ATOM_CALL_OF_INT), "c1")


def test_models_and_entailment():
    program = load(WELL_TYPED_CHAIN)
    pools = Pools.for_atoms(program.atoms())
    found = enumerate_models(program, pools)
    assert len(found) == 2
    assert entails(found, parse_query("q(1).").atoms[0], pools)
    assert not entails(found, parse_query("q(2).").atoms[0], pools)
    assert not entails(found, parse_query("q(1.5).").atoms[0], pools)
