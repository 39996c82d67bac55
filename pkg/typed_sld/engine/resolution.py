"""TSLD-derivation steps, derivations and resultants."""

import logging
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass
from typing import TypeAlias

from ..errors import EmptyQueryError, NotApplicableError, PreconditionError
from ..syntax.substitution import EMPTY, Substitution, apply, compose, rename_apart
from ..syntax.terms import Clause, PredAtom, Program, Query
from ..unify import Fail, Mgu, UnificationOutcome, UnifTrace, typed_unify_atoms

logger = logging.getLogger(__name__)

Unifier: TypeAlias = Callable[[PredAtom, PredAtom], tuple[UnificationOutcome, UnifTrace]]
SelectionRule: TypeAlias = Callable[[Query], int]


def leftmost(query: Query) -> int:
    """Prolog's selection rule. The false marker is not an atom and is never selected."""
    if not query.atoms:
        raise EmptyQueryError(f"no atom to select in {query}")
    return 0


def rightmost(query: Query) -> int:
    if not query.atoms:
        raise EmptyQueryError(f"no atom to select in {query}")
    return len(query.atoms) - 1


select_atom = leftmost


@dataclass(frozen=True)
class Progress:
    resolvent: Query
    clause_id: str
    mgu: Substitution
    selected: int
    input_clause: Clause


@dataclass(frozen=True)
class FalseProgress:
    resolvent: Query
    clause_id: str
    selected: int
    input_clause: Clause


@dataclass(frozen=True)
class WrongHalt:
    clause_id: str
    selected: int
    input_clause: Clause


@dataclass(frozen=True)
class NoApplicableClause:
    selected: int


StepResult: TypeAlias = Progress | FalseProgress | WrongHalt | NoApplicableClause
ResolutionStep: TypeAlias = Progress | FalseProgress | WrongHalt


def applicable_clauses(program: Program, atom: PredAtom) -> tuple[str, ...]:
    """Ids of clauses whose head has the atom's predicate and arity, in program order."""
    return tuple(
        clause.id for clause in program.clauses if clause.head.key == atom.key
    )


def tsld_step(
    program: Program,
    query: Query,
    clause_id: str,
    *,
    avoid: Iterable[str] = (),
    selection: SelectionRule = leftmost,
    unifier: Unifier = typed_unify_atoms,
) -> ResolutionStep:
    """Resolves the selected atom of ``query`` with clause ``clause_id``.

    The clause is renamed apart from the query and from ``avoid``. A ``false``
    unification drops the selected atom and sets the false marker without
    inserting the clause body; a ``wrong`` unification halts.
    """
    index = selection(query)
    atom = query.atoms[index]
    try:
        clause = program.clause(clause_id)
    except KeyError:
        raise NotApplicableError(f"no clause {clause_id} in program") from None
    if clause.head.key != atom.key:
        raise NotApplicableError(f"clause {clause_id} does not apply to {atom}")

    renamed = rename_apart(clause, {*avoid, *query.variables()})
    outcome, _ = unifier(atom, renamed.head)
    before, after = query.atoms[:index], query.atoms[index + 1 :]
    match outcome:
        case Mgu(theta):
            resolvent = apply(theta, Query((*before, *renamed.body, *after), query.false_marker))
            return Progress(resolvent, clause_id, theta, index, renamed)
        case Fail():
            return FalseProgress(Query((*before, *after), True), clause_id, index, renamed)
    return WrongHalt(clause_id, index, renamed)


@dataclass(frozen=True)
class DerivationStep:
    query: Query
    result: StepResult

    def __str__(self) -> str:
        match self.result:
            case Progress(resolvent, clause_id) | FalseProgress(resolvent, clause_id):
                return f"{self.query} ⟹_{clause_id} {resolvent}"
            case WrongHalt(clause_id):
                return f"{self.query} ⟹_{clause_id} wrong"
        return f"{self.query} ⟹ false"


@dataclass(frozen=True)
class Success:
    answer: Substitution


@dataclass(frozen=True)
class Failed:
    pass


@dataclass(frozen=True)
class Erroneous:
    pass


@dataclass(frozen=True)
class DepthExceeded:
    pass


DerivationOutcome: TypeAlias = Success | Failed | Erroneous | DepthExceeded


@dataclass(frozen=True)
class Derivation:
    query: Query
    steps: tuple[DerivationStep, ...]
    outcome: DerivationOutcome

    @property
    def clause_ids(self) -> tuple[str, ...]:
        return tuple(
            step.result.clause_id
            for step in self.steps
            if not isinstance(step.result, NoApplicableClause)
        )

    def __str__(self) -> str:
        if not self.steps:
            return str(self.query)
        parts = [str(self.query)]
        for step in self.steps:
            match step.result:
                case Progress(resolvent) | FalseProgress(resolvent):
                    parts.append(str(resolvent))
                case WrongHalt():
                    parts.append("wrong")
                case NoApplicableClause():
                    parts.append("false")
        return " ⟹ ".join(parts)


def derive(
    program: Program,
    query: Query,
    clause_choice: Sequence[str],
    depth_bound: int = 64,
    *,
    selection: SelectionRule = leftmost,
    unifier: Unifier = typed_unify_atoms,
) -> Derivation:
    """Follows one branch of the TSLD-tree, choosing clauses in the given order."""
    choices = iter(clause_choice)
    names = query.variables()
    used = set(names)
    answer = EMPTY
    current = query
    steps: list[DerivationStep] = []
    outcome: DerivationOutcome
    while True:
        if current.is_empty:
            outcome = Success(answer)
            break
        if current.is_false:
            outcome = Failed()
            break
        if len(steps) >= depth_bound:
            outcome = DepthExceeded()
            break
        index = selection(current)
        if not applicable_clauses(program, current.atoms[index]):
            steps.append(DerivationStep(current, NoApplicableClause(index)))
            outcome = Failed()
            break
        clause_id = next(choices, None)
        if clause_id is None:
            raise NotApplicableError(f"clause choices ran out at {current}")
        result = tsld_step(
            program, current, clause_id, avoid=used, selection=selection, unifier=unifier
        )
        steps.append(DerivationStep(current, result))
        match result:
            case Progress(resolvent, _, theta, _, renamed):
                used.update(renamed.variables())
                answer = compose(theta, answer).restrict(names)
                current = resolvent
            case FalseProgress(resolvent):
                current = resolvent
            case WrongHalt():
                outcome = Erroneous()
                break

    leftover = list(choices)
    if leftover:
        raise NotApplicableError(
            f"derivation ended after {len(steps)} steps with unused choices {leftover}"
        )
    logger.debug("derivation of %s ended as %s", query, type(outcome).__name__)
    return Derivation(query, tuple(steps), outcome)


@dataclass(frozen=True)
class Resultant:
    head: Query
    body: Query

    def __str__(self) -> str:
        return f"{self.head} ← {self.body}"


def resultants(derivation: Derivation, *, cumulative: bool = False) -> tuple[Resultant, ...]:
    """One resultant ``θ(Q1) ← Q2`` per step.

    With ``cumulative`` the i-th resultant relates the derivation's first query
    to the i-th resolvent, ``θi…θ1(Q0) ← Qi``.
    """
    found = []
    accumulated = EMPTY
    for step in derivation.steps:
        if not isinstance(step.result, Progress):
            raise PreconditionError(
                f"resultants need unifying steps, found {type(step.result).__name__} at {step.query}"
            )
        theta = step.result.mgu
        if cumulative:
            accumulated = compose(theta, accumulated)
            head = apply(accumulated, derivation.query)
        else:
            head = apply(theta, step.query)
        found.append(Resultant(head, step.result.resolvent))
    return tuple(found)
