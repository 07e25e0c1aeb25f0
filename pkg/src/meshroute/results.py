"""Shared result records for optimizer runs."""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from .oracle import percent_error
from .pathcodec import Path


@dataclass(frozen=True)
class TracePoint:
    """Convergence sample at one generation (1-based)."""

    generation: int
    best_cost_so_far: float
    generation_best_cost: float


@dataclass(frozen=True)
class RunResult:
    algorithm: str
    n_nodes: int
    best_path: Path
    best_cost: float
    wall_time_ms: float
    trace: tuple[TracePoint, ...]
    params: dict = field(default_factory=dict)
    scenario_seed: int | None = None
    oracle_cost: float | None = None
    percent_error: float | None = None

    def with_oracle(self, oracle_cost: float) -> "RunResult":
        return replace(
            self,
            oracle_cost=oracle_cost,
            percent_error=percent_error(self.best_cost, oracle_cost),
        )
