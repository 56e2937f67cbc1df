"""Exception hierarchy shared by the library and the command line.

Every error the package raises on purpose derives from :class:`MBDError` so
callers (and ``scripts/mbd.py``) can map failures to distinct exit codes.
Most classes also derive from ``ValueError`` because they describe bad input.
"""
from __future__ import annotations

__all__ = [
    "MBDError",
    "GraphFormatError",
    "GraphSizeError",
    "TranscriptFormatError",
    "IllegalMoveError",
    "TerminalStateError",
    "StrategyNotApplicable",
    "BudgetExceeded",
    "InvariantPreconditionError",
]


class MBDError(Exception):
    """Base class of all package errors."""


class GraphFormatError(MBDError, ValueError):
    """Malformed graph text. ``position`` is a character offset or line number."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        self.reason = message
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)

    def __reduce__(self):
        return (GraphFormatError, (self.reason, self.position))


class TranscriptFormatError(MBDError, ValueError):
    """Malformed match transcript text. ``line`` is 1-based."""

    def __init__(self, message: str, line: int):
        self.line = line
        self.reason = message
        super().__init__(f"{message} (at line {line})")

    def __reduce__(self):
        return (TranscriptFormatError, (self.reason, self.line))


class GraphSizeError(MBDError, ValueError):
    """Vertex out of range, bad family parameters or width limit exceeded."""


class IllegalMoveError(MBDError, ValueError):
    """A move overlaps claimed vertices or has the wrong cardinality."""


class TerminalStateError(MBDError, ValueError):
    """Move generation requested on a finished game."""


class StrategyNotApplicable(MBDError, ValueError):
    """Strategy preconditions do not hold for the graph and game config."""


class BudgetExceeded(MBDError, RuntimeError):
    """The exact solver visited more states than its node budget allows."""

    def __init__(self, budget: int, visited: int):
        self.budget = budget
        self.visited = visited
        super().__init__(f"undecided: resource (visited {visited} states, budget {budget})")

    def __reduce__(self):
        return (BudgetExceeded, (self.budget, self.visited))


class InvariantPreconditionError(MBDError, ValueError):
    """An invariant was requested outside its domain (e.g. δ(G) < ℓ)."""
