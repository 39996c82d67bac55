"""Exceptions raised by the typed-sld engine."""


class TsldError(Exception):
    """Raised when an engine operation cannot proceed."""

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


class ParseError(TsldError):
    """Raised on malformed program or query text."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(message)
        self.line = line
        self.column = column

    def __str__(self) -> str:
        return f"line {self.line}, column {self.column}: {self.message}"


class NotGroundError(TsldError):
    """Raised when a ground term is required but a variable was found."""


class UnboundVariableError(TsldError):
    """Raised when a state has no value for a variable being evaluated."""


class EmptyQueryError(TsldError):
    """Raised when an atom is selected from an empty query."""


class NotApplicableError(TsldError):
    """Raised when a clause does not apply to the selected atom."""


class PreconditionError(TsldError):
    """Raised when a checker is called outside its precondition."""


class ConfigError(TsldError):
    """Raised for invalid run configuration."""


class SchemaError(TsldError):
    """Raised when a JSON document does not match its schema."""


class UsageError(TsldError):
    """Raised when a command is invoked without what it needs."""
