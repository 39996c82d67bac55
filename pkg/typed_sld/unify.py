"""Typed unification and the classical reference unifier.

Typed unification rewrites a pair ``(S, F)`` of an equation list and a flag
with eleven rules until none applies or a rule halts with ``wrong``. The
strategy is fixed: the leftmost equation that admits a rule is rewritten with
the lowest-numbered rule it admits.
"""

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from typing import TypeAlias

from .kleene import TruthValue
from .syntax.substitution import EMPTY, Substitution, apply, compose
from .syntax.terms import BaseType, Compound, Const, PredAtom, Term, Var, occurs

logger = logging.getLogger(__name__)

Equation: TypeAlias = tuple[Term, Term]


def _format_equations(equations: Iterable[Equation]) -> str:
    return "{" + ", ".join(f"{left}={right}" for left, right in equations) + "}"


@dataclass(frozen=True)
class EquationSystem:
    equations: tuple[Equation, ...]
    flag: bool = True

    def __str__(self) -> str:
        return f"({_format_equations(self.equations)}, {str(self.flag).lower()})"


@dataclass(frozen=True)
class TraceStep:
    rule: int
    equation: Equation
    result: EquationSystem | None
    """The rewritten system, or ``None`` when the rule halts with wrong."""


@dataclass(frozen=True)
class UnifTrace:
    initial: EquationSystem
    steps: tuple[TraceStep, ...] = ()

    @property
    def rules(self) -> tuple[int, ...]:
        return tuple(step.rule for step in self.steps)

    @property
    def final(self) -> EquationSystem | None:
        if not self.steps:
            return self.initial
        return self.steps[-1].result


@dataclass(frozen=True)
class Mgu:
    substitution: Substitution

    @property
    def truth(self) -> TruthValue:
        return TruthValue.TRUE

    def __str__(self) -> str:
        return str(self.substitution)


@dataclass(frozen=True)
class Fail:
    @property
    def truth(self) -> TruthValue:
        return TruthValue.FALSE

    def __str__(self) -> str:
        return "false"


@dataclass(frozen=True)
class Wrong:
    @property
    def truth(self) -> TruthValue:
        return TruthValue.WRONG

    def __str__(self) -> str:
        return "wrong"


FAIL = Fail()
WRONG = Wrong()

UnificationOutcome: TypeAlias = Mgu | Fail | Wrong


def _bind_all(name: str, term: Term, equations: Iterable[Equation]) -> list[Equation]:
    binding = Substitution({name: term})
    return [(apply(binding, left), apply(binding, right)) for left, right in equations]


def _rewrite(
    equations: Sequence[Equation], index: int, flag: bool
) -> tuple[int, EquationSystem | None] | None:
    """Applies the lowest-numbered rule admitted by ``equations[index]``, if any."""
    left, right = equations[index]
    before, after = list(equations[:index]), list(equations[index + 1 :])

    def system(middle: list[Equation], new_flag: bool = flag) -> EquationSystem:
        return EquationSystem(tuple(before + middle + after), new_flag)

    match left, right:
        case Compound(f, xs), Compound(g, ys):
            if f == g and len(xs) == len(ys):
                return 1, system(list(zip(xs, ys, strict=True)))
            return 2, None
        case Const(), Const():
            if left == right:
                return 3, system([])
            if left.ty is right.ty:
                return 4, system([], False)
            return 5, None
        case Const(), Compound():
            return 6, None
        case Compound(), Const():
            return 7, None
        case Var(a), Var(b) if a == b:
            return 8, system([])
        case _, Var() if not isinstance(left, Var):
            return 9, system([(right, left)])
        case Var(name), _:
            if occurs(name, right):
                return 11, system([], False)
            if any(occurs(name, t) for eq in (*before, *after) for t in eq):
                before = _bind_all(name, right, before)
                after = _bind_all(name, right, after)
                return 10, system([(left, right)])
    return None


def _next_step(current: EquationSystem) -> TraceStep | None:
    for index, equation in enumerate(current.equations):
        rewritten = _rewrite(current.equations, index, current.flag)
        if rewritten is not None:
            rule, result = rewritten
            return TraceStep(rule, equation, result)
    return None


def solve_equations(
    equations: Iterable[Equation],
) -> tuple[UnificationOutcome, UnifTrace]:
    """Runs the typed unification rules on an equation list with the flag set."""
    current = EquationSystem(tuple(equations))
    initial = current
    steps: list[TraceStep] = []
    while (step := _next_step(current)) is not None:
        steps.append(step)
        if step.result is None:
            logger.debug("typed unification halts with wrong at rule %d", step.rule)
            return WRONG, UnifTrace(initial, tuple(steps))
        current = step.result

    trace = UnifTrace(initial, tuple(steps))
    if not current.flag:
        return FAIL, trace
    solved = Substitution(
        (left.name, right) for left, right in current.equations if isinstance(left, Var)
    )
    return Mgu(solved), trace


def typed_unify(t1: Term, t2: Term) -> tuple[UnificationOutcome, UnifTrace]:
    return solve_equations([(t1, t2)])


def typed_unify_atoms(a: PredAtom, b: PredAtom) -> tuple[UnificationOutcome, UnifTrace]:
    """Unifies argument tuples of two atoms; atoms of different predicates give ``False``."""
    if a.key != b.key:
        return FAIL, UnifTrace(EquationSystem(()))
    return solve_equations(zip(a.args, b.args, strict=True))


def format_trace(outcome: UnificationOutcome, trace: UnifTrace) -> str:
    """Renders a run as ``(S, F) →_k (S', F') … → outcome``, one step per line."""
    lines = []
    system = trace.initial
    for step in trace.steps:
        lines.append(f"{system} →_{step.rule}")
        if step.result is None:
            break
        system = step.result
    else:
        lines.append(f"{system} →")
    lines.append(str(outcome))
    return "\n".join(lines)


def _mm_solve(pending: list[Equation]) -> Mgu | Fail:
    subst = EMPTY
    while pending:
        left, right = pending.pop()
        left, right = apply(subst, left), apply(subst, right)
        if left == right:
            continue
        match left, right:
            case Var(name), _:
                if occurs(name, right):
                    return FAIL
                subst = compose(Substitution({name: right}), subst)
            case _, Var(name):
                if occurs(name, left):
                    return FAIL
                subst = compose(Substitution({name: left}), subst)
            case Compound(f, xs), Compound(g, ys) if f == g and len(xs) == len(ys):
                pending.extend(zip(xs, ys, strict=True))
            case _:
                return FAIL
    return Mgu(subst)


def mm_unify(t1: Term, t2: Term) -> Mgu | Fail:
    """Classical untyped unification with occurs check."""
    return _mm_solve([(t1, t2)])


def mm_unify_atoms(a: PredAtom, b: PredAtom) -> tuple[UnificationOutcome, UnifTrace]:
    """Untyped counterpart of :func:`typed_unify_atoms`, for the reference SLD engine."""
    if a.key != b.key:
        return FAIL, UnifTrace(EquationSystem(()))
    pairs = list(zip(a.args, b.args, strict=True))
    return _mm_solve(pairs), UnifTrace(EquationSystem(tuple(pairs)))


def _type_skeleton(term: Term) -> Term:
    match term:
        case Const(_, ty):
            return Const(ty.value, BaseType.ATOM)
        case Compound(functor, args):
            return Compound(functor, tuple(_type_skeleton(arg) for arg in args))
    return term


def same_type_possible(t1: Term, t2: Term) -> bool:
    """Whether some substitution gives ``t1`` and ``t2`` the same ground type.

    Constants become their base type and variables stand for unknown types,
    shared across both terms, so the question is a unification of type
    skeletons.
    """
    return isinstance(mm_unify(_type_skeleton(t1), _type_skeleton(t2)), Mgu)
