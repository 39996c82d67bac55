from .parser import parse_program, parse_query, parse_term
from .substitution import (
    EMPTY,
    Substitution,
    apply,
    compose,
    is_variant,
    rename_apart,
)
from .terms import (
    BaseType,
    Clause,
    Compound,
    Const,
    GroundBase,
    GroundTree,
    GroundType,
    PredAtom,
    PredKey,
    Program,
    Query,
    Term,
    Var,
    format_program,
    ground_type_of,
    is_ground,
    term_depth,
    term_size,
    variables,
)

__all__ = [
    "EMPTY",
    "BaseType",
    "Clause",
    "Compound",
    "Const",
    "GroundBase",
    "GroundTree",
    "GroundType",
    "PredAtom",
    "PredKey",
    "Program",
    "Query",
    "Substitution",
    "Term",
    "Var",
    "apply",
    "compose",
    "format_program",
    "ground_type_of",
    "is_ground",
    "is_variant",
    "parse_program",
    "parse_query",
    "parse_term",
    "rename_apart",
    "term_depth",
    "term_size",
    "variables",
]
