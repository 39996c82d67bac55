import os
from dataclasses import dataclass
from pathlib import Path
from typing import Literal

from ..errors import ConfigError
from ..semantics.pools import Bounds

OutputFormat = Literal["text", "json", "dot"]

DEFAULT_DEPTH = 64
DEPTH_ENV = "TSLD_DEPTH"


def default_depth() -> int:
    """The depth bound from ``TSLD_DEPTH``, or 64 when it is unset."""
    raw = os.getenv(DEPTH_ENV)
    if not raw:
        return DEFAULT_DEPTH
    try:
        depth = int(raw)
    except ValueError:
        raise ConfigError(f"{DEPTH_ENV} must be an integer, got {raw!r}") from None
    if depth < 1:
        raise ConfigError(f"{DEPTH_ENV} must be at least 1, got {depth}")
    return depth


@dataclass(frozen=True, kw_only=True)
class RunConfig:
    program_path: Path | None = None
    depth_bound: int = DEFAULT_DEPTH
    max_answers: int = 10
    value_pool_bound: int = 2
    output_format: OutputFormat = "text"
    semantic: bool = False
    verbose: bool = False

    def __post_init__(self):
        for name in ("depth_bound", "max_answers", "value_pool_bound"):
            if getattr(self, name) < 1:
                raise ConfigError(f"{name.replace('_', '-')} must be at least 1")

    def bounds(self) -> Bounds:
        """Semantic enumeration bounds matching this run."""
        return Bounds(tree_depth=self.value_pool_bound, depth_bound=self.depth_bound)
