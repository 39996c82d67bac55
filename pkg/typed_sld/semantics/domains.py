"""Semantic domains and values, states and contexts."""

from collections.abc import Mapping
from dataclasses import dataclass
from enum import StrEnum
from typing import TypeAlias

from ..errors import UnboundVariableError
from ..syntax.terms import BaseType, Compound, Const, Term, Var


class BaseDomain(StrEnum):
    INT = "Int"
    FLOAT = "Float"
    ATOM = "Atom"
    STRING = "String"
    BOOL = "Bool"
    W = "W"


TERM_DOMAINS = (BaseDomain.INT, BaseDomain.FLOAT, BaseDomain.ATOM, BaseDomain.STRING)

DOMAIN_OF_TYPE: dict[BaseType, BaseDomain] = {
    BaseType.INT: BaseDomain.INT,
    BaseType.FLOAT: BaseDomain.FLOAT,
    BaseType.ATOM: BaseDomain.ATOM,
    BaseType.STRING: BaseDomain.STRING,
}


@dataclass(frozen=True)
class TreeDomain:
    functor: str
    children: tuple["SemDomain", ...]

    def __post_init__(self):
        if not self.children:
            raise ValueError("a tree domain needs at least one child")

    def __str__(self) -> str:
        return f"{self.functor}({','.join(map(str, self.children))})"


SemDomain: TypeAlias = BaseDomain | TreeDomain


@dataclass(frozen=True)
class IntVal:
    value: int

    def __str__(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class FloatVal:
    value: float

    def __str__(self) -> str:
        return repr(self.value)


@dataclass(frozen=True)
class AtomVal:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class StringVal:
    text: str

    def __str__(self) -> str:
        return str(Const(self.text, BaseType.STRING))


@dataclass(frozen=True)
class TreeVal:
    functor: str
    children: tuple["SemValue", ...]

    def __str__(self) -> str:
        return f"{self.functor}({','.join(map(str, self.children))})"


SemValue: TypeAlias = IntVal | FloatVal | AtomVal | StringVal | TreeVal
State: TypeAlias = Mapping[str, SemValue]
Context: TypeAlias = Mapping[str, SemDomain]


def domain_of(value: SemValue) -> SemDomain:
    match value:
        case IntVal():
            return BaseDomain.INT
        case FloatVal():
            return BaseDomain.FLOAT
        case AtomVal():
            return BaseDomain.ATOM
        case StringVal():
            return BaseDomain.STRING
        case TreeVal(functor, children):
            return TreeDomain(functor, tuple(domain_of(child) for child in children))
    raise TypeError(f"not a semantic value: {value!r}")


def constant_value(const: Const) -> SemValue:
    """The canonical semantic value of a typed constant."""
    match const.ty:
        case BaseType.INT:
            return IntVal(int(const.lexeme))
        case BaseType.FLOAT:
            return FloatVal(float(const.lexeme))
        case BaseType.ATOM:
            return AtomVal(const.lexeme)
    return StringVal(const.lexeme)


def eval_term(term: Term, state: State) -> SemValue:
    """Evaluates a term; functors build trees."""
    match term:
        case Var(name):
            try:
                return state[name]
            except KeyError:
                raise UnboundVariableError(f"state has no value for {name}") from None
        case Const():
            return constant_value(term)
        case Compound(functor, args):
            return TreeVal(functor, tuple(eval_term(arg, state) for arg in args))
    raise TypeError(f"not a term: {term!r}")


def term_domain(term: Term, context: Context) -> SemDomain:
    """The domain every value of ``term`` takes in states complying with ``context``."""
    match term:
        case Var(name):
            try:
                return context[name]
            except KeyError:
                raise UnboundVariableError(f"context has no domain for {name}") from None
        case Const(_, ty):
            return DOMAIN_OF_TYPE[ty]
        case Compound(functor, args):
            return TreeDomain(functor, tuple(term_domain(arg, context) for arg in args))
    raise TypeError(f"not a term: {term!r}")


def complies(state: State, context: Context) -> bool:
    return all(
        name in context and domain_of(value) == context[name]
        for name, value in state.items()
    )


def format_mapping(mapping: Mapping[str, SemValue] | Mapping[str, SemDomain]) -> str:
    return "{" + ", ".join(f"{name}: {item}" for name, item in mapping.items()) + "}"
