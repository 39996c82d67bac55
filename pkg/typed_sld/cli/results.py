from dataclasses import dataclass


@dataclass(kw_only=True, frozen=True)
class CommandResult:
    """What a command prints and the status it exits with."""

    output: str | None = None
    error: str | None = None
    exit_code: int = 0


class CommandFailure(CommandResult):
    """A CommandResult for a command that could not run to completion."""


EX_USAGE = 64
EX_DATAERR = 65
