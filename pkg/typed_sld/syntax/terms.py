"""Types, terms, atoms, clauses, queries and programs.

Every syntactic object is an immutable dataclass whose ``str()`` is valid
source text for the parser (queries and programs print without the trailing
period of a query, clauses print with it).
"""

from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from enum import StrEnum
from typing import TypeAlias

from ..errors import NotGroundError

# inverse of the parser's string escapes
_STRING_ESCAPES = str.maketrans({"\\": "\\\\", '"': '\\"', "\n": "\\n", "\t": "\\t"})


class BaseType(StrEnum):
    INT = "int"
    FLOAT = "float"
    ATOM = "atom"
    STRING = "string"


@dataclass(frozen=True)
class GroundBase:
    base: BaseType

    def __str__(self) -> str:
        return str(self.base)


@dataclass(frozen=True)
class GroundTree:
    functor: str
    children: tuple["GroundType", ...]

    def __post_init__(self):
        if not self.children:
            raise ValueError("a tree type needs at least one child")

    def __str__(self) -> str:
        return f"{self.functor}({','.join(map(str, self.children))})"


GroundType: TypeAlias = GroundBase | GroundTree


@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Const:
    lexeme: str
    ty: BaseType

    def __str__(self) -> str:
        if self.ty is BaseType.STRING:
            escaped = self.lexeme.translate(_STRING_ESCAPES)
            return f'"{escaped}"'
        return self.lexeme


@dataclass(frozen=True)
class Compound:
    functor: str
    args: tuple["Term", ...]

    def __post_init__(self):
        if not self.args:
            raise ValueError(
                f"compound term {self.functor} needs at least one argument"
            )

    @property
    def arity(self) -> int:
        return len(self.args)

    def __str__(self) -> str:
        return f"{self.functor}({','.join(map(str, self.args))})"


Term: TypeAlias = Var | Const | Compound
PredKey: TypeAlias = tuple[str, int]


def variables(term: Term) -> Iterator[str]:
    """Yields variable names in left-to-right order of occurrence, with repeats."""
    match term:
        case Var(name):
            yield name
        case Compound(_, args):
            for arg in args:
                yield from variables(arg)


def occurs(name: str, term: Term) -> bool:
    return any(found == name for found in variables(term))


def is_ground(term: Term) -> bool:
    return next(variables(term), None) is None


def term_size(term: Term) -> int:
    """Number of symbol occurrences in the term."""
    if isinstance(term, Compound):
        return 1 + sum(term_size(arg) for arg in term.args)
    return 1


def term_depth(term: Term) -> int:
    """Nesting depth; variables and constants have depth zero."""
    if isinstance(term, Compound):
        return 1 + max(term_depth(arg) for arg in term.args)
    return 0


def ground_type_of(term: Term) -> GroundType:
    match term:
        case Const(_, ty):
            return GroundBase(ty)
        case Compound(functor, args):
            return GroundTree(functor, tuple(ground_type_of(arg) for arg in args))
        case Var(name):
            raise NotGroundError(f"term contains variable {name}")
    raise TypeError(f"not a term: {term!r}")


def _unique(names: Iterable[str]) -> tuple[str, ...]:
    return tuple(dict.fromkeys(names))


@dataclass(frozen=True)
class PredAtom:
    pred: str
    args: tuple[Term, ...] = ()

    @property
    def key(self) -> PredKey:
        return (self.pred, len(self.args))

    @property
    def arity(self) -> int:
        return len(self.args)

    def variables(self) -> tuple[str, ...]:
        return _unique(name for arg in self.args for name in variables(arg))

    def __str__(self) -> str:
        if not self.args:
            return self.pred
        return f"{self.pred}({','.join(map(str, self.args))})"


@dataclass(frozen=True)
class Clause:
    id: str
    head: PredAtom
    body: tuple[PredAtom, ...] = ()

    @property
    def is_fact(self) -> bool:
        return not self.body

    def variables(self) -> tuple[str, ...]:
        return _unique(
            name for atom in (self.head, *self.body) for name in atom.variables()
        )

    def __str__(self) -> str:
        if not self.body:
            return f"{self.head}."
        return f"{self.head} :- {', '.join(map(str, self.body))}."


@dataclass(frozen=True)
class Query:
    """A conjunction of atoms plus the marker recording an earlier ``false``.

    No atoms and no marker is the empty query; no atoms with the marker set is
    the terminal ``false``.
    """

    atoms: tuple[PredAtom, ...] = ()
    false_marker: bool = False

    @property
    def is_empty(self) -> bool:
        return not self.atoms and not self.false_marker

    @property
    def is_false(self) -> bool:
        return not self.atoms and self.false_marker

    def variables(self) -> tuple[str, ...]:
        return _unique(name for atom in self.atoms for name in atom.variables())

    def __len__(self) -> int:
        return len(self.atoms)

    def __str__(self) -> str:
        if self.is_empty:
            return "□"
        parts = (["false"] if self.false_marker else []) + [
            str(atom) for atom in self.atoms
        ]
        return ",".join(parts)


@dataclass(frozen=True)
class Program:
    clauses: tuple[Clause, ...] = ()
    _by_id: dict[str, Clause] = field(
        init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self):
        by_id: dict[str, Clause] = {}
        for clause in self.clauses:
            if clause.id in by_id:
                raise ValueError(f"duplicate clause id {clause.id}")
            by_id[clause.id] = clause
        object.__setattr__(self, "_by_id", by_id)

    def clause(self, clause_id: str) -> Clause:
        try:
            return self._by_id[clause_id]
        except KeyError:
            raise KeyError(f"no clause {clause_id} in program") from None

    def head_keys(self) -> tuple[PredKey, ...]:
        """Head predicates in order of first occurrence."""
        return tuple(dict.fromkeys(clause.head.key for clause in self.clauses))

    def pred_keys(self) -> tuple[PredKey, ...]:
        """All predicates, heads first, then body-only predicates."""
        body_keys = (atom.key for clause in self.clauses for atom in clause.body)
        return tuple(dict.fromkeys((*self.head_keys(), *body_keys)))

    def atoms(self) -> Iterator[PredAtom]:
        for clause in self.clauses:
            yield clause.head
            yield from clause.body

    def functors(self) -> tuple[tuple[str, int], ...]:
        """Compound functors used anywhere in the program, as (name, arity)."""
        found: dict[tuple[str, int], None] = {}

        def walk(term: Term):
            if isinstance(term, Compound):
                found[(term.functor, term.arity)] = None
                for arg in term.args:
                    walk(arg)

        for atom in self.atoms():
            for arg in atom.args:
                walk(arg)
        return tuple(found)

    def constants(self) -> tuple[Const, ...]:
        found: dict[Const, None] = {}

        def walk(term: Term):
            match term:
                case Const():
                    found[term] = None
                case Compound(_, args):
                    for arg in args:
                        walk(arg)

        for atom in self.atoms():
            for arg in atom.args:
                walk(arg)
        return tuple(found)

    def variable_names(self) -> frozenset[str]:
        return frozenset(name for clause in self.clauses for name in clause.variables())

    def __len__(self) -> int:
        return len(self.clauses)

    def __str__(self) -> str:
        return "\n".join(map(str, self.clauses))


def format_program(program: Program, *, with_ids: bool = False) -> str:
    """Pretty-prints a program, optionally prefixing each clause with its id."""
    if not with_ids:
        return str(program)
    return "\n".join(f"% {clause.id}\n{clause}" for clause in program.clauses)
