"""Typed SLD-resolution: a logic-programming engine that tells type errors from failure."""

from .errors import TsldError
from .kleene import FALSE, TRUE, WRONG, TruthValue

__all__ = ["FALSE", "TRUE", "WRONG", "TruthValue", "TsldError"]
