"""Interpretations and the three-valued meaning of atoms, queries and clauses."""

import logging
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass, field
from itertools import islice, product
from math import prod
from typing import TypeAlias

from ..engine.resolution import Resultant
from ..errors import PreconditionError
from ..kleene import FALSE, TRUE, WRONG, TruthValue, fold_and, implies
from ..syntax.terms import Clause, PredAtom, PredKey, Program, Query
from .domains import (
    Context,
    SemDomain,
    SemValue,
    State,
    domain_of,
    eval_term,
    format_mapping,
)
from .pools import Bounds, Pools

logger = logging.getLogger(__name__)

DomainTuple: TypeAlias = tuple[SemDomain, ...]
ValueTuple: TypeAlias = tuple[SemValue, ...]
Expression: TypeAlias = PredAtom | Query | Clause | Resultant | Program


@dataclass(frozen=True)
class Relation:
    """The meaning of one predicate: the domain tuples it accepts and the value tuples it holds for."""

    signature: frozenset[DomainTuple]
    truth_set: frozenset[ValueTuple] = frozenset()

    def __post_init__(self):
        for values in self.truth_set:
            if tuple(map(domain_of, values)) not in self.signature:
                raise ValueError(f"truth tuple {values} lies outside the signature")

    def __str__(self) -> str:
        signature = " ∪ ".join(
            sorted(" × ".join(map(str, domains)) or "()" for domains in self.signature)
        )
        truths = ", ".join(
            sorted("(" + ",".join(map(str, values)) + ")" for values in self.truth_set)
        )
        return f"{signature or '∅'} → Bool, true on {{{truths}}}"


@dataclass(frozen=True)
class Interpretation:
    relations: Mapping[PredKey, Relation] = field(default_factory=dict)

    def __hash__(self) -> int:
        return hash(frozenset(self.relations.items()))

    def relation(self, key: PredKey) -> Relation:
        """The relation for ``key``; a predicate without one has an empty signature."""
        return self.relations.get(key, Relation(frozenset()))

    def keys(self) -> frozenset[PredKey]:
        return frozenset(self.relations)

    def values(self) -> Iterator[SemValue]:
        """Every semantic value occurring in a truth set."""
        for relation in self.relations.values():
            for values in relation.truth_set:
                yield from values

    def __str__(self) -> str:
        return "\n".join(
            f"{pred}/{arity} :: {self.relations[(pred, arity)]}"
            for pred, arity in sorted(self.relations)
        )


def eval_atom(atom: PredAtom, interp: Interpretation, state: State) -> TruthValue:
    values = tuple(eval_term(arg, state) for arg in atom.args)
    relation = interp.relation(atom.key)
    if tuple(map(domain_of, values)) not in relation.signature:
        return WRONG
    return TruthValue.from_bool(values in relation.truth_set)


def eval_query(query: Query, interp: Interpretation, state: State) -> TruthValue:
    """Weak Kleene conjunction of the atoms; a false marker adds a false conjunct."""
    values = [eval_atom(atom, interp, state) for atom in query.atoms]
    if query.false_marker:
        values.append(FALSE)
    return fold_and(values)


def eval_clause(clause: Clause, interp: Interpretation, state: State) -> TruthValue:
    body = eval_query(Query(clause.body), interp, state)
    return implies(body, eval_atom(clause.head, interp, state))


def evaluate(expr: Expression, interp: Interpretation, state: State) -> TruthValue:
    match expr:
        case PredAtom():
            return eval_atom(expr, interp, state)
        case Query():
            return eval_query(expr, interp, state)
        case Clause():
            return eval_clause(expr, interp, state)
        case Resultant(head, body):
            return implies(eval_query(body, interp, state), eval_query(head, interp, state))
        case Program(clauses):
            return fold_and(eval_clause(clause, interp, state) for clause in clauses)
    raise TypeError(f"cannot evaluate {expr!r}")


def expression_atoms(expr: Expression) -> tuple[PredAtom, ...]:
    match expr:
        case PredAtom():
            return (expr,)
        case Query(atoms):
            return atoms
        case Clause(_, head, body):
            return (head, *body)
        case Resultant(head, body):
            return (*head.atoms, *body.atoms)
        case Program():
            return tuple(expr.atoms())
    raise TypeError(f"not an expression: {expr!r}")


def expression_variables(expr: Expression) -> tuple[str, ...]:
    return tuple(dict.fromkeys(name for atom in expression_atoms(expr) for name in atom.variables()))


def iter_states(
    names: Iterable[str], context: Context, pools: Pools
) -> tuple[int, Iterator[dict[str, SemValue]]]:
    """How many states over ``names`` comply with ``context``, and a lazy stream of them."""
    names = tuple(names)
    missing = [name for name in names if name not in context]
    if missing:
        raise PreconditionError(f"context gives no domain for {', '.join(missing)}")
    choices = [pools.values_of(context[name]) for name in names]
    total = prod(len(values) for values in choices)
    return total, (dict(zip(names, values, strict=True)) for values in product(*choices))


@dataclass(frozen=True)
class ModelCheck:
    holds: bool
    counterexample: State | None = None
    value: TruthValue | None = None
    truncated: bool = False

    def __bool__(self) -> bool:
        return self.holds

    def __str__(self) -> str:
        if self.holds:
            return "model" + (" (truncated)" if self.truncated else "")
        assert self.counterexample is not None
        return f"not a model: {format_mapping(self.counterexample)} gives {self.value}"


def check_model(
    interp: Interpretation,
    expr: Expression,
    context: Context,
    bounds: Bounds = Bounds(),
    pools: Pools | None = None,
) -> ModelCheck:
    """Checks that every pooled state complying with ``context`` makes ``expr`` true."""
    if pools is None:
        pools = Pools.for_atoms(expression_atoms(expr), bounds, interp.values())
    total, states = iter_states(expression_variables(expr), context, pools)
    truncated = total > bounds.max_states
    if truncated:
        logger.warning("model check capped at %d of %d states", bounds.max_states, total)
    for state in islice(states, bounds.max_states):
        value = evaluate(expr, interp, state)
        if value is not TRUE:
            return ModelCheck(False, state, value, truncated)
    return ModelCheck(True, truncated=truncated)


def models(
    interp: Interpretation,
    expr: Expression,
    context: Context,
    bounds: Bounds = Bounds(),
    pools: Pools | None = None,
) -> bool:
    return check_model(interp, expr, context, bounds, pools).holds
