from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Literal

from .errors import InvalidParameter


@dataclass(frozen=True)
class Caps:
    max_hom_elements: int = 50_000
    max_poset_size: int = 100_000


@dataclass(frozen=True)
class RunConfig:
    seed: int | None = None
    budget_ms: int | None = None
    caps: Caps = field(default_factory=Caps)
    output_dir: Path = Path("out")
    format: Literal["json", "csv", "dimacs"] = "json"
    threads: int = 1

    def __post_init__(self):
        if self.budget_ms is not None and self.budget_ms <= 0:
            raise InvalidParameter("budget_ms must be positive")
        if self.caps.max_hom_elements <= 0 or self.caps.max_poset_size <= 0:
            raise InvalidParameter("caps must be positive")
        if self.seed is not None and not 0 <= self.seed < 2**64:
            raise InvalidParameter("seed must be a 64-bit unsigned integer")
        if self.threads < 1:
            raise InvalidParameter("threads must be >= 1")
        if self.format not in ("json", "csv", "dimacs"):
            raise InvalidParameter(f"unknown format {self.format!r}")

    def require_seed(self) -> int:
        if self.seed is None:
            raise InvalidParameter("--seed is required for randomized subcommands")
        return self.seed
