"""Weak Kleene three-valued logic.

The third value, ``WRONG``, marks a run-time type error. It absorbs every
connective: any formula with a ``WRONG`` operand evaluates to ``WRONG``.
"""

from collections.abc import Iterable
from enum import StrEnum
from functools import reduce


class TruthValue(StrEnum):
    TRUE = "true"
    FALSE = "false"
    WRONG = "wrong"

    @classmethod
    def from_bool(cls, value: bool) -> "TruthValue":
        return cls.TRUE if value else cls.FALSE

    def __and__(self, other: "TruthValue") -> "TruthValue":  # type: ignore[override]
        return conj(self, other)

    def __or__(self, other: "TruthValue") -> "TruthValue":  # type: ignore[override]
        return disj(self, other)

    def __invert__(self) -> "TruthValue":
        return neg(self)


TRUE = TruthValue.TRUE
FALSE = TruthValue.FALSE
WRONG = TruthValue.WRONG


def conj(a: TruthValue, b: TruthValue) -> TruthValue:
    """Weak Kleene conjunction."""
    if WRONG in (a, b):
        return WRONG
    return TRUE if a is TRUE and b is TRUE else FALSE


def disj(a: TruthValue, b: TruthValue) -> TruthValue:
    """Weak Kleene disjunction."""
    if WRONG in (a, b):
        return WRONG
    return TRUE if TRUE in (a, b) else FALSE


def neg(a: TruthValue) -> TruthValue:
    if a is WRONG:
        return WRONG
    return FALSE if a is TRUE else TRUE


def implies(p: TruthValue, q: TruthValue) -> TruthValue:
    """Material implication, ``¬p ∨ q``."""
    return disj(neg(p), q)


def fold_and(values: Iterable[TruthValue]) -> TruthValue:
    """Conjunction of a sequence; the empty conjunction is ``TRUE``."""
    return reduce(conj, values, TRUE)


def fold_or(values: Iterable[TruthValue]) -> TruthValue:
    """Disjunction of a sequence; the empty disjunction is ``FALSE``."""
    return reduce(disj, values, FALSE)
