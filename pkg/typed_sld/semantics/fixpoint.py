"""The immediate consequence operator T_P over a bounded ground term pool."""

import logging
from collections import defaultdict
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from itertools import islice, product
from math import prod

from ..errors import PreconditionError
from ..syntax.substitution import Substitution, apply
from ..syntax.terms import Clause, Compound, PredAtom, PredKey, Program, Term, Var, term_depth
from .pools import Bounds, Pools

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AtomSet:
    atoms: frozenset[PredAtom] = frozenset()
    truncated: bool = False
    iterations: int = 0

    def __post_init__(self):
        for atom in self.atoms:
            if atom.variables():
                raise ValueError(f"{atom} is not ground")

    def __contains__(self, atom: object) -> bool:
        return atom in self.atoms

    def __iter__(self) -> Iterator[PredAtom]:
        return iter(sorted(self.atoms, key=str))

    def __len__(self) -> int:
        return len(self.atoms)

    def by_key(self) -> dict[PredKey, list[PredAtom]]:
        grouped: dict[PredKey, list[PredAtom]] = defaultdict(list)
        for atom in self:
            grouped[atom.key].append(atom)
        return grouped

    def __str__(self) -> str:
        return "{" + ", ".join(map(str, self)) + "}"


def match_term(pattern: Term, ground: Term, bindings: dict[str, Term]) -> dict[str, Term] | None:
    """One-way matching of ``pattern`` onto a ground term, extending ``bindings``."""
    match pattern:
        case Var(name):
            if name in bindings:
                return bindings if bindings[name] == ground else None
            return {**bindings, name: ground}
        case Compound(functor, args):
            if not isinstance(ground, Compound) or (ground.functor, ground.arity) != (
                functor,
                len(args),
            ):
                return None
            for sub_pattern, sub_ground in zip(args, ground.args, strict=True):
                extended = match_term(sub_pattern, sub_ground, bindings)
                if extended is None:
                    return None
                bindings = extended
            return bindings
    return bindings if pattern == ground else None


def match_atom(
    pattern: PredAtom, ground: PredAtom, bindings: dict[str, Term]
) -> dict[str, Term] | None:
    if pattern.key != ground.key:
        return None
    for sub_pattern, sub_ground in zip(pattern.args, ground.args, strict=True):
        extended = match_term(sub_pattern, sub_ground, bindings)
        if extended is None:
            return None
        bindings = extended
    return bindings


def body_matches(
    body: Iterable[PredAtom], grouped: dict[PredKey, list[PredAtom]]
) -> list[dict[str, Term]]:
    """Every binding of the body's variables under which all body atoms are in ``grouped``."""
    found: list[dict[str, Term]] = [{}]
    for atom in body:
        found = [
            extended
            for bindings in found
            for candidate in grouped.get(atom.key, ())
            if (extended := match_atom(atom, candidate, bindings)) is not None
        ]
        if not found:
            break
    return found


def _clause_consequences(
    clause: Clause, grouped: dict[PredKey, list[PredAtom]], pools: Pools, bounds: Bounds
) -> tuple[set[PredAtom], bool]:
    heads: set[PredAtom] = set()
    truncated = False
    terms, pool_truncated = pools.ground_terms
    for bindings in body_matches(clause.body, grouped):
        free = [name for name in clause.head.variables() if name not in bindings]
        if free and pool_truncated:
            truncated = True
        total = prod(len(terms) for _ in free)
        if total > bounds.max_terms:
            truncated = True
        for values in islice(product(terms, repeat=len(free)), bounds.max_terms):
            head = apply(Substitution({**bindings, **dict(zip(free, values, strict=True))}), clause.head)
            if any(term_depth(arg) > bounds.tree_depth for arg in head.args):
                truncated = True
                continue
            heads.add(head)
    return heads, truncated


def tp_step(
    program: Program,
    atoms: AtomSet,
    *,
    bounds: Bounds = Bounds(),
    pools: Pools | None = None,
) -> AtomSet:
    """Ground heads of every clause whose body holds in ``atoms``.

    Head variables left free by the body range over the pooled ground terms;
    heads nested deeper than the pool's tree depth are dropped and mark the
    result truncated.
    """
    if pools is None:
        pools = Pools.for_atoms(program.atoms(), bounds)
    grouped = atoms.by_key()
    result: set[PredAtom] = set()
    truncated = False
    for clause in program.clauses:
        heads, clause_truncated = _clause_consequences(clause, grouped, pools, bounds)
        result |= heads
        truncated |= clause_truncated
    return AtomSet(frozenset(result), truncated, atoms.iterations + 1)


def tp_fixpoint(
    program: Program,
    iter_bound: int | None = None,
    *,
    bounds: Bounds = Bounds(),
    pools: Pools | None = None,
) -> AtomSet:
    """Iterates :func:`tp_step` from the empty set until nothing changes or the bound is hit."""
    iter_bound = bounds.iterations if iter_bound is None else iter_bound
    if iter_bound < 1:
        raise PreconditionError("the iteration bound must be at least 1")
    if pools is None:
        pools = Pools.for_atoms(program.atoms(), bounds)
    current = AtomSet()
    truncated = False
    for _ in range(iter_bound):
        following = tp_step(program, current, bounds=bounds, pools=pools)
        truncated |= following.truncated
        logger.debug("T_P iteration %d: %d atoms", following.iterations, len(following))
        if following.atoms == current.atoms:
            return AtomSet(following.atoms, truncated, following.iterations)
        current = following
    logger.warning("T_P stopped after %d iterations without reaching a fixpoint", iter_bound)
    return AtomSet(current.atoms, True, current.iterations)
