"""Substitutions: application, composition and renaming apart."""

from collections.abc import Iterable, Iterator, Mapping
from typing import overload

from .terms import (
    BaseType,
    Clause,
    Compound,
    Const,
    PredAtom,
    Query,
    Term,
    Var,
    variables,
)


class Substitution(Mapping[str, Term]):
    """An immutable finite map from variable names to terms.

    Identity bindings ``X ↦ X`` are dropped on construction.
    """

    __slots__ = ("_bindings",)

    def __init__(self, bindings: Mapping[str, Term] | Iterable[tuple[str, Term]] = ()):
        items = bindings.items() if isinstance(bindings, Mapping) else bindings
        self._bindings: dict[str, Term] = {
            name: term for name, term in items if term != Var(name)
        }

    def __getitem__(self, name: str) -> Term:
        return self._bindings[name]

    def __iter__(self) -> Iterator[str]:
        return iter(self._bindings)

    def __len__(self) -> int:
        return len(self._bindings)

    def __hash__(self) -> int:
        return hash(frozenset(self._bindings.items()))

    def __repr__(self) -> str:
        return f"Substitution({self._bindings!r})"

    def __str__(self) -> str:
        return "{" + ", ".join(f"{name}↦{term}" for name, term in self.items()) + "}"

    def range_variables(self) -> frozenset[str]:
        return frozenset(name for term in self.values() for name in variables(term))

    def restrict(self, names: Iterable[str]) -> "Substitution":
        keep = set(names)
        return Substitution((name, term) for name, term in self.items() if name in keep)

    def is_idempotent(self) -> bool:
        return not (set(self) & self.range_variables())

    def is_renaming(self) -> bool:
        """True when every binding maps to a variable and no two share one."""
        targets = list(self.values())
        return all(isinstance(term, Var) for term in targets) and len(
            set(targets)
        ) == len(targets)


EMPTY = Substitution()


@overload
def apply(subst: Substitution, target: Var | Const | Compound) -> Term: ...
@overload
def apply(subst: Substitution, target: PredAtom) -> PredAtom: ...
@overload
def apply(subst: Substitution, target: Query) -> Query: ...
@overload
def apply(subst: Substitution, target: Clause) -> Clause: ...
def apply(subst, target):
    """Simultaneously replaces bound variables; extends pointwise to atoms, queries and clauses."""
    match target:
        case Var(name):
            return subst.get(name, target)
        case Const():
            return target
        case Compound(functor, args):
            return Compound(functor, tuple(apply(subst, arg) for arg in args))
        case PredAtom(pred, args):
            return PredAtom(pred, tuple(apply(subst, arg) for arg in args))
        case Query(atoms, marker):
            return Query(tuple(apply(subst, atom) for atom in atoms), marker)
        case Clause(clause_id, head, body):
            return Clause(
                clause_id, apply(subst, head), tuple(apply(subst, atom) for atom in body)
            )
    raise TypeError(f"cannot apply a substitution to {target!r}")


def compose(eta: Substitution, theta: Substitution) -> Substitution:
    """Returns ``eta ∘ theta``, the substitution applying ``theta`` first."""
    bindings: dict[str, Term] = {}
    for name, term in theta.items():
        image = apply(eta, term)
        if image != Var(name):
            bindings[name] = image
    for name, term in eta.items():
        if name not in theta:
            bindings[name] = term
    return Substitution(bindings)


def fresh_name(name: str, taken: set[str] | frozenset[str]) -> str:
    counter = 1
    while f"{name}_{counter}" in taken:
        counter += 1
    return f"{name}_{counter}"


def rename_apart(clause: Clause, avoid: Iterable[str]) -> Clause:
    """Renames every clause variable to ``name_k`` with the smallest fresh ``k``."""
    names = clause.variables()
    if not names:
        return clause
    taken = set(avoid) | set(names)
    renaming: dict[str, Term] = {}
    for name in names:
        fresh = fresh_name(name, taken)
        taken.add(fresh)
        renaming[name] = Var(fresh)
    return apply(Substitution(renaming), clause)


def _variant_map(left: Term, right: Term, mapping: dict[str, str]) -> bool:
    match left, right:
        case Var(a), Var(b):
            return mapping.setdefault(a, b) == b
        case Const(), Const():
            return left == right
        case Compound(f, xs), Compound(g, ys):
            return (
                f == g
                and len(xs) == len(ys)
                and all(_variant_map(x, y, mapping) for x, y in zip(xs, ys, strict=True))
            )
    return False


def is_variant(left: Term | PredAtom | Clause, right: Term | PredAtom | Clause) -> bool:
    """Alpha-equivalence: equal up to a bijective renaming of variables."""

    def as_terms(item) -> list[Term]:
        match item:
            case PredAtom(pred, args):
                return [Compound(pred, args) if args else Const(pred, BaseType.ATOM)]
            case Clause(_, head, body):
                return [*as_terms(head), *(t for atom in body for t in as_terms(atom))]
        return [item]

    xs, ys = as_terms(left), as_terms(right)
    if len(xs) != len(ys):
        return False
    forward: dict[str, str] = {}
    if not all(_variant_map(x, y, forward) for x, y in zip(xs, ys, strict=True)):
        return False
    return len(set(forward.values())) == len(forward)
