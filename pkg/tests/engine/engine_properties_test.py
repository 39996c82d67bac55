from hypothesis import given, settings

from strategies import INT_CONSTANTS, flat_programs, flat_queries
from typed_sld.engine import (
    FalseProgress,
    Progress,
    Success,
    Terminal,
    TreeClassification,
    blamed_clauses,
    branches,
    build_tree,
    classify,
    generic_query,
    iter_answers,
    rightmost,
    tree_answers,
)
from typed_sld.syntax import PredAtom, Query, Substitution, apply, is_variant
from typed_sld.unify import mm_unify_atoms

DEPTH = 6


def _instance(answer: Substitution, query: Query) -> PredAtom:
    return PredAtom("answer", tuple(arg for atom in apply(answer, query).atoms for arg in atom.args))


@settings(deadline=None)
@given(flat_programs(), flat_queries())
def test_lazy_answers_match_the_tree(program, query):
    tree = build_tree(program, query, DEPTH)
    answers = list(iter_answers(program, query, DEPTH))
    assert answers == list(tree_answers(tree, query.variables()))
    assert (classify(tree) is TreeClassification.SUCCESSFUL) == bool(answers)


@settings(deadline=None)
@given(flat_programs(), flat_queries())
def test_typed_and_untyped_trees_share_answers(program, query):
    typed = list(tree_answers(build_tree(program, query, DEPTH), query.variables()))
    untyped_tree = build_tree(program, query, DEPTH, unifier=mm_unify_atoms)
    untyped = list(tree_answers(untyped_tree, query.variables()))
    assert len(typed) == len(untyped)
    for left, right in zip(typed, untyped, strict=True):
        assert is_variant(_instance(left, query), _instance(right, query))
    assert all(leaf.terminal is not Terminal.WRONG for leaf in untyped_tree.leaves())


@settings(deadline=None)
@given(flat_programs(constants=INT_CONSTANTS), flat_queries(constants=INT_CONSTANTS))
def test_single_typed_programs_never_go_wrong(program, query):
    tree = build_tree(program, query, DEPTH)
    assert all(leaf.terminal is not Terminal.WRONG for leaf in tree.leaves())
    assert blamed_clauses(tree) == frozenset()


def _same_answers(left: list[Substitution], right: list[Substitution], query: Query) -> bool:
    """Equal as multisets of query instances, up to renaming."""
    pending = [_instance(answer, query) for answer in right]
    for answer in left:
        instance = _instance(answer, query)
        partner = next((i for i, other in enumerate(pending) if is_variant(instance, other)), None)
        if partner is None:
            return False
        pending.pop(partner)
    return not pending


@settings(deadline=None)
@given(flat_programs(), flat_queries())
def test_answers_do_not_depend_on_the_selection_rule(program, query):
    names = query.variables()
    first = list(tree_answers(build_tree(program, query, DEPTH), names))
    last = list(tree_answers(build_tree(program, query, DEPTH, selection=rightmost), names))
    assert _same_answers(first, last, query)


@settings(deadline=None)
@given(flat_programs(), flat_queries())
def test_false_steps_never_lead_to_success(program, query):
    for derivation in branches(build_tree(program, query, DEPTH)):
        if any(isinstance(step.result, FalseProgress) for step in derivation.steps):
            assert not isinstance(derivation.outcome, Success)


@settings(deadline=None)
@given(flat_programs())
def test_generic_query_steps_rename_clauses_apart(program):
    query = generic_query(program)
    assert not set(query.variables()) & set(program.variable_names())
    for edge in build_tree(program, query, 1).edges:
        if isinstance(edge.step, Progress):
            renamed = edge.step.input_clause
            assert not set(renamed.variables()) & set(query.variables())
            assert is_variant(renamed, program.clause(edge.clause_id))
