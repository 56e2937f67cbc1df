from __future__ import annotations
import os
from dataclasses import dataclass, field

__all__ = ["BUDGET_ENV_VAR", "WORKERS_ENV_VAR", "DEFAULT_NODE_BUDGET", "SolverConfig", "BatteryConfig"]

BUDGET_ENV_VAR = "MBD_NODE_BUDGET"
WORKERS_ENV_VAR = "MBD_WORKERS"
DEFAULT_NODE_BUDGET = 10**8


def _env_int(name: str, default: int) -> int:
    """Positive integer from ``$name`` (underscores allowed) or ``default``."""
    raw = os.environ.get(name)
    if raw is None or not raw.strip():
        return default
    try:
        value = int(raw.replace("_", ""))
    except ValueError as e:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from e
    if value < 1:
        raise ValueError(f"{name} must be positive, got {value}")
    return value


def default_node_budget() -> int:
    """Node budget from ``$MBD_NODE_BUDGET`` or the built-in default."""
    return _env_int(BUDGET_ENV_VAR, DEFAULT_NODE_BUDGET)


@dataclass
class SolverConfig:
    """Knobs of the exact solver.

    ``prune_irrelevant`` restricts moves to vertices that still lie in a live
    closed neighbourhood and collapses interchangeable vertices; it never
    changes a game value. ``root_symmetry`` additionally removes root moves
    equivalent under a graph automorphism. ``workers > 1`` evaluates the root
    children in a process pool.
    """
    node_budget: int = field(default_factory=default_node_budget)
    early_dominator_stop: bool = True
    prune_irrelevant: bool = True
    root_symmetry: bool = False
    workers: int = 1

    def __post_init__(self):
        if self.node_budget < 1:
            raise ValueError("node_budget must be >= 1")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")

    @classmethod
    def from_env(cls, **overrides) -> "SolverConfig":
        """Budget and root workers from ``$MBD_NODE_BUDGET`` / ``$MBD_WORKERS``; keyword overrides win."""
        values = {
            "node_budget": default_node_budget(),
            "workers": _env_int(WORKERS_ENV_VAR, 1),
        }
        values.update(overrides)
        return cls(**values)


@dataclass
class BatteryConfig:
    """Configuration of one ``verify-paper`` run."""
    suite: str = "quick"
    workers: int = 1
    include_timing: bool = True
    only: tuple[str, ...] = ()

    def __post_init__(self):
        if self.suite not in ("quick", "full"):
            raise ValueError(f"Unknown suite '{self.suite}'. Available: full, quick")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")
        self.only = tuple(self.only)
