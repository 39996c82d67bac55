"""Finite pools of values, ground terms and domains used to bound enumeration."""

import logging
from collections.abc import Iterable
from dataclasses import dataclass, fields
from functools import cached_property
from itertools import product

from ..errors import ConfigError
from ..syntax.terms import BaseType, Compound, Const, PredAtom, Term
from .domains import (
    TERM_DOMAINS,
    SemDomain,
    SemValue,
    TreeDomain,
    TreeVal,
    constant_value,
    domain_of,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True, kw_only=True)
class Bounds:
    """Limits that make the semantic checks finite.

    ``tree_depth`` caps the nesting of pooled terms, values and domains;
    ``iterations`` caps T_P; ``depth_bound`` is handed to engine runs. The
    ``max_*`` caps truncate enumeration, and any truncation turns a verdict
    into ``unknown``.
    """

    tree_depth: int = 2
    iterations: int = 16
    depth_bound: int = 64
    max_domains: int = 256
    max_terms: int = 2000
    max_states: int = 20_000
    max_contexts: int = 4096

    def __post_init__(self):
        for field in fields(self):
            if getattr(self, field.name) < 1:
                raise ConfigError(f"{field.name} must be at least 1")


CANONICAL_CONSTANTS: tuple[Const, ...] = (
    *(Const(str(n), BaseType.INT) for n in range(-2, 3)),
    *(Const(lexeme, BaseType.FLOAT) for lexeme in ("-1.0", "0.0", "1.5")),
    *(Const(name, BaseType.ATOM) for name in ("a", "b", "c")),
    *(Const(text, BaseType.STRING) for text in ("s", "t")),
)


def _constants_in(term: Term) -> Iterable[Const]:
    match term:
        case Const():
            yield term
        case Compound(_, args):
            for arg in args:
                yield from _constants_in(arg)


def _functors_in(term: Term) -> Iterable[tuple[str, int]]:
    if isinstance(term, Compound):
        yield term.functor, term.arity
        for arg in term.args:
            yield from _functors_in(arg)


def _base_values(values: Iterable[SemValue]) -> Iterable[SemValue]:
    for value in values:
        if isinstance(value, TreeVal):
            yield from _base_values(value.children)
        else:
            yield value


@dataclass(frozen=True)
class Pools:
    """Constants and functors from which terms, values and domains are drawn."""

    constants: tuple[Const, ...]
    functors: tuple[tuple[str, int], ...]
    extra_values: tuple[SemValue, ...] = ()
    bounds: Bounds = Bounds()

    @classmethod
    def for_atoms(
        cls,
        atoms: Iterable[PredAtom],
        bounds: Bounds = Bounds(),
        extra_values: Iterable[SemValue] = (),
    ) -> "Pools":
        """Canonical constants plus every constant and functor occurring in ``atoms``."""
        atoms = list(atoms)
        terms = [arg for atom in atoms for arg in atom.args]
        constants = dict.fromkeys(CANONICAL_CONSTANTS)
        constants.update(dict.fromkeys(c for t in terms for c in _constants_in(t)))
        functors = dict.fromkeys(f for t in terms for f in _functors_in(t))
        return cls(
            tuple(constants),
            tuple(functors),
            tuple(dict.fromkeys(_base_values(extra_values))),
            bounds,
        )

    @cached_property
    def base_values(self) -> dict[SemDomain, tuple[SemValue, ...]]:
        grouped: dict[SemDomain, dict[SemValue, None]] = {d: {} for d in TERM_DOMAINS}
        for value in (*(constant_value(c) for c in self.constants), *self.extra_values):
            grouped[domain_of(value)][value] = None
        return {domain: tuple(values) for domain, values in grouped.items()}

    def values_of(self, domain: SemDomain) -> tuple[SemValue, ...]:
        """Every pooled value of ``domain``; tree domains take the product of their children."""
        if isinstance(domain, TreeDomain):
            return tuple(
                TreeVal(domain.functor, children)
                for children in product(*(self.values_of(child) for child in domain.children))
            )
        return self.base_values.get(domain, ())

    @cached_property
    def ground_terms(self) -> tuple[tuple[Term, ...], bool]:
        """Pooled ground terms up to ``tree_depth``, and whether ``max_terms`` cut them short."""
        terms: list[Term] = list(self.constants)
        limit = self.bounds.max_terms
        level: set[Term] = set(terms)
        for _ in range(self.bounds.tree_depth):
            if not self.functors:
                break
            new_level = []
            for functor, arity in self.functors:
                for args in product(terms, repeat=arity):
                    if not any(arg in level for arg in args):
                        continue
                    if len(terms) + len(new_level) >= limit:
                        logger.debug("ground term pool capped at %d terms", limit)
                        return tuple(terms + new_level), True
                    new_level.append(Compound(functor, args))
            terms.extend(new_level)
            level = set(new_level)
        return tuple(terms), False

    @cached_property
    def domains(self) -> tuple[tuple[SemDomain, ...], bool]:
        """Base term domains and tree domains over the pooled functors up to ``tree_depth``."""
        found: list[SemDomain] = list(TERM_DOMAINS)
        limit = self.bounds.max_domains
        level: set[SemDomain] = set(found)
        for _ in range(self.bounds.tree_depth):
            if not self.functors:
                break
            new_level: list[SemDomain] = []
            for functor, arity in self.functors:
                for children in product(found, repeat=arity):
                    if not any(child in level for child in children):
                        continue
                    if len(found) + len(new_level) >= limit:
                        logger.debug("domain pool capped at %d domains", limit)
                        return tuple(found + new_level), True
                    new_level.append(TreeDomain(functor, children))
            found.extend(new_level)
            level = set(new_level)
        return tuple(found), False


__all__ = ["CANONICAL_CONSTANTS", "Bounds", "Pools"]
