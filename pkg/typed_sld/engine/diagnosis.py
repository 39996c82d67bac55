"""Generic queries, type-error diagnosis and the top-level solver."""

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from enum import StrEnum
from itertools import count, islice

from ..syntax.substitution import Substitution
from ..syntax.terms import PredAtom, PredKey, Program, Query, Var
from .resolution import Derivation
from .tree import (
    Terminal,
    TreeClassification,
    TsldTree,
    blamed_clauses,
    branches,
    build_tree,
    classify,
    tree_answers,
)

logger = logging.getLogger(__name__)


class Verdict(StrEnum):
    TYPE_ERROR_IN_PROGRAM = "type error in program"
    TYPE_ERROR_IN_QUERY = "type error in query"
    NO_TYPE_ERROR = "no type error"
    UNKNOWN_DEPTH_BOUNDED = "unknown (depth bound reached)"


@dataclass(frozen=True)
class Diagnosis:
    verdict: Verdict
    blamed: frozenset[str]
    evidence: tuple[Derivation, ...]
    query: Query
    tree: TsldTree
    classification: TreeClassification


@dataclass(frozen=True)
class Solution:
    query: Query
    answers: tuple[Substitution, ...]
    classification: TreeClassification
    diagnosis: Diagnosis
    tree: TsldTree


def generic_query(program: Program, order: Sequence[PredKey] | None = None) -> Query:
    """One atom of distinct fresh variables per head predicate.

    Atoms follow the first occurrence of each head in the program unless an
    explicit ``order`` of predicate keys is given.
    """
    keys = program.head_keys() if order is None else tuple(order)
    taken = program.variable_names()
    names = (f"X{n}" for n in count(1))
    fresh = (name for name in names if name not in taken)
    atoms = tuple(
        PredAtom(pred, tuple(Var(next(fresh)) for _ in range(arity)))
        for pred, arity in keys
    )
    return Query(atoms)


def _uses_any(derivation: Derivation, clause_ids: frozenset[str]) -> bool:
    return any(clause_id in clause_ids for clause_id in derivation.clause_ids)


def diagnose_program(
    program: Program, depth_bound: int = 64, *, order: Sequence[PredKey] | None = None
) -> Diagnosis:
    """Looks for blamed clauses in the TSLD-tree of the generic query.

    Blame is only established on a tree the depth bound did not cut: a cut
    branch may hide the derivation that clears a clause, so such a tree gives
    an unknown verdict and no blamed clauses.
    """
    query = generic_query(program, order)
    tree = build_tree(program, query, depth_bound)
    classification = classify(tree)
    cut = any(leaf.terminal is Terminal.DEPTH for leaf in tree.leaves())
    blamed = frozenset() if cut else blamed_clauses(tree)
    if cut:
        verdict, evidence = Verdict.UNKNOWN_DEPTH_BOUNDED, ()
    elif blamed:
        verdict = Verdict.TYPE_ERROR_IN_PROGRAM
        evidence = tuple(d for d in branches(tree) if _uses_any(d, blamed))
    else:
        verdict, evidence = Verdict.NO_TYPE_ERROR, ()
    logger.debug("program diagnosis: %s, blamed %s", verdict, sorted(blamed))
    return Diagnosis(verdict, blamed, evidence, query, tree, classification)


def _diagnose_query_tree(
    program: Program, query: Query, tree: TsldTree, depth_bound: int
) -> Diagnosis:
    program_diagnosis = diagnose_program(program, depth_bound)
    classification = classify(tree)
    if program_diagnosis.verdict is Verdict.TYPE_ERROR_IN_PROGRAM:
        return Diagnosis(
            Verdict.TYPE_ERROR_IN_PROGRAM,
            program_diagnosis.blamed,
            program_diagnosis.evidence,
            query,
            tree,
            classification,
        )
    verdict, evidence = Verdict.NO_TYPE_ERROR, ()
    if classification is TreeClassification.FINITELY_ERRONEOUS:
        if program_diagnosis.verdict is Verdict.UNKNOWN_DEPTH_BOUNDED:
            verdict = Verdict.UNKNOWN_DEPTH_BOUNDED
        else:
            verdict, evidence = Verdict.TYPE_ERROR_IN_QUERY, tuple(branches(tree))
    elif classification is TreeClassification.DEPTH_BOUNDED:
        verdict = Verdict.UNKNOWN_DEPTH_BOUNDED
    return Diagnosis(verdict, frozenset(), evidence, query, tree, classification)


def diagnose_query(program: Program, query: Query, depth_bound: int = 64) -> Diagnosis:
    """A query has a type error when the program has none and its tree is finitely erroneous.

    If the program itself has a type error, that is what gets reported.
    """
    return _diagnose_query_tree(program, query, build_tree(program, query, depth_bound), depth_bound)


def solve(
    program: Program, query: Query, depth_bound: int = 64, max_answers: int = 10
) -> Solution:
    tree = build_tree(program, query, depth_bound)
    answers = tuple(islice(tree_answers(tree, query.variables()), max_answers))
    diagnosis = _diagnose_query_tree(program, query, tree, depth_bound)
    return Solution(query, answers, diagnosis.classification, diagnosis, tree)
