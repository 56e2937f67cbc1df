from __future__ import annotations
import logging
import math
from dataclasses import dataclass, field

import pandas as pd

from .errors import BudgetExceeded
from .game import GameConfig, Outcome, Role
from .graphs import Graph
from .invariants import GraphInvariants
from .io import GraphCodec
from .solver import ExactSolver

__all__ = [
    "INF", "KINDS", "ThresholdValue", "Thresholds",
    "ThresholdCell", "TableCheck", "ThresholdTable", "TABLE_SCHEMA", "format_value",
]

logger = logging.getLogger(__name__)

INF = math.inf
ThresholdValue = int | float
TABLE_SCHEMA = "mbd.threshold-table/1"

# kind -> (whose bias is searched, starter)
KINDS: dict[str, tuple[Role, Role]] = {
    "a": (Role.DOMINATOR, Role.DOMINATOR),
    "a'": (Role.DOMINATOR, Role.STALLER),
    "b": (Role.STALLER, Role.DOMINATOR),
    "b'": (Role.STALLER, Role.STALLER),
}


def format_value(value: ThresholdValue | None) -> int | str:
    if value is None:
        return "undecided"
    if value == INF:
        return "inf"
    return int(value)


class Thresholds:
    """Bias thresholds by linear scan over the exact solver.

    Every scan stops at a bias where the winner is forced by a one-move or
    dominating-set argument, so the forced value is returned without probing.
    :meth:`bound_checks` confirms those stopping points with the solver.
    """

    def __init__(self, solver: ExactSolver | None = None):
        self.solver = solver or ExactSolver()

    def winner(self, G: Graph, a: int, b: int, starter: Role) -> Outcome:
        outcome = self.solver.solve(G, GameConfig(a, b, starter))
        logger.debug("solve W%s(G,%d,%d) = %s", "" if starter is Role.DOMINATOR else "'",
                     a, b, outcome.value)
        return outcome

    def dominator_threshold(self, G: Graph, ell: int, starter: Role) -> ThresholdValue:
        """min{a : Dominator wins with biases (a, ell)}, or INF.

        The D-game scan is capped by γ(G) (a dominating set in one move). In
        the S-game Staller wins outright once ell > δ(G); otherwise ell·Δ(G)
        suffices (answer every Staller vertex with all its neighbours).
        """
        if ell < 1:
            raise ValueError(f"Staller bias must be >= 1, got {ell}")
        starter = Role(starter)
        if starter is Role.STALLER:
            if ell >= G.min_degree() + 1:
                return INF
            cap = ell * G.max_degree()
        else:
            cap = GraphInvariants.domination_number(G)
        for a in range(1, cap):
            if self.winner(G, a, ell, starter) is Outcome.DOMINATOR_WIN:
                return a
        return cap

    def staller_threshold(self, G: Graph, a: int, starter: Role) -> ThresholdValue:
        """min{b : Staller wins with biases (a, b)}, or INF.

        S-game scans stop at δ(G)+1 (claim a minimum-degree neighbourhood).
        In the D-game Dominator wins for every b once a >= γ(G); below that
        Δ(G)+1 suffices for Staller.
        """
        if a < 1:
            raise ValueError(f"Dominator bias must be >= 1, got {a}")
        starter = Role(starter)
        if starter is Role.STALLER:
            cap = G.min_degree() + 1
        else:
            if a >= GraphInvariants.domination_number(G):
                return INF
            cap = G.max_degree() + 1
        for b in range(1, cap):
            if self.winner(G, a, b, starter) is Outcome.STALLER_WIN:
                return b
        return cap

    def threshold(self, G: Graph, kind: str, index: int) -> ThresholdValue:
        if kind not in KINDS:
            raise ValueError(f"Unknown threshold kind '{kind}'. Available: {', '.join(KINDS)}")
        searched, starter = KINDS[kind]
        if searched is Role.DOMINATOR:
            return self.dominator_threshold(G, index, starter)
        return self.staller_threshold(G, index, starter)

    def bound_checks(self, G: Graph, max_index: int) -> list["TableCheck"]:
        """Solver checks at the biases where the scans stop early."""
        D, S = Role.DOMINATOR, Role.STALLER
        delta, Delta = G.min_degree(), G.max_degree()
        gamma = GraphInvariants.domination_number(G)
        checks: list[TableCheck] = []

        def confirm(name: str, a: int, b: int, starter: Role, expected: Outcome) -> None:
            try:
                outcome = self.winner(G, a, b, starter)
            except BudgetExceeded as e:
                logger.warning("bound %s undecided: %s", name, e)
                checks.append(TableCheck(name, None, "undecided cell"))
                return
            checks.append(TableCheck(name, outcome is expected, f"winner {outcome.value}"))

        for a in sorted({1, gamma, G.n}):
            confirm(f"W'(G,{a},delta+1) = S", a, delta + 1, S, Outcome.STALLER_WIN)
        for b in range(1, Delta + 2):
            confirm(f"W(G,gamma,{b}) = D", gamma, b, D, Outcome.DOMINATOR_WIN)
        for a in range(1, gamma):
            confirm(f"W(G,{a},Delta+1) = S", a, Delta + 1, D, Outcome.STALLER_WIN)
        for i in range(1, min(max_index, delta) + 1):
            confirm(f"W'(G,{i}*Delta,{i}) = D", i * Delta, i, S, Outcome.DOMINATOR_WIN)
        return checks

    def table(self, G: Graph, max_index: int) -> "ThresholdTable":
        """All four thresholds for indices 1..max_index plus consistency checks.

        Cells whose solves exhaust the node budget are recorded as undecided;
        checks that depend on them are reported as skipped.
        """
        if max_index < 1:
            raise ValueError(f"max_index must be >= 1, got {max_index}")
        cells = []
        for kind in KINDS:
            for i in range(1, max_index + 1):
                try:
                    cells.append(ThresholdCell(kind, i, self.threshold(G, kind, i)))
                except BudgetExceeded as e:
                    logger.warning("threshold %s_%d undecided: %s", kind, i, e)
                    cells.append(ThresholdCell(kind, i, None, "undecided"))
        table = ThresholdTable(GraphCodec.write_graph6(G), max_index, cells)
        table.checks = _table_checks(G, table) + self.bound_checks(G, max_index)
        return table


@dataclass
class ThresholdCell:
    kind: str
    index: int
    value: ThresholdValue | None
    status: str = "exact"

    def to_json(self) -> dict:
        return {"kind": self.kind, "index": self.index, "value": format_value(self.value)}


@dataclass
class TableCheck:
    """``passed`` is None when an undecided cell prevented the check."""
    name: str
    passed: bool | None
    detail: str = ""

    def to_json(self) -> dict:
        status = "skipped" if self.passed is None else ("pass" if self.passed else "fail")
        return {"name": self.name, "status": status, "detail": self.detail}


@dataclass
class ThresholdTable:
    graph6: str
    max_index: int
    cells: list[ThresholdCell] = field(default_factory=list)
    checks: list[TableCheck] = field(default_factory=list)

    def get(self, kind: str, index: int) -> ThresholdValue | None:
        for c in self.cells:
            if c.kind == kind and c.index == index:
                return c.value
        raise KeyError(f"no cell {kind}_{index}")

    @property
    def consistent(self) -> bool:
        return all(c.passed is not False for c in self.checks)

    def to_json(self) -> dict:
        return {
            "schema": TABLE_SCHEMA,
            "graph": self.graph6,
            "max_index": self.max_index,
            "cells": [c.to_json() for c in self.cells],
            "checks": [c.to_json() for c in self.checks],
        }

    def to_frame(self) -> pd.DataFrame:
        rows = [(c.kind, c.index, format_value(c.value), c.status) for c in self.cells]
        df = pd.DataFrame(rows, columns=["kind", "index", "value", "status"])
        return df.pivot(index="index", columns="kind", values="value")[list(KINDS)]


def _table_checks(G: Graph, t: ThresholdTable) -> list[TableCheck]:
    m = t.max_index
    checks: list[TableCheck] = []

    def add(name: str, left, right, holds) -> None:
        if left is None or right is None:
            checks.append(TableCheck(name, None, "undecided cell"))
        else:
            checks.append(TableCheck(name, bool(holds(left, right)),
                                     f"{format_value(left)} vs {format_value(right)}"))

    for i in range(1, m + 1):
        add(f"b_{i} >= b'_{i}", t.get("b", i), t.get("b'", i), lambda x, y: x >= y)
        add(f"a'_{i} >= a_{i}", t.get("a'", i), t.get("a", i), lambda x, y: x >= y)
    for kind in KINDS:
        for i in range(1, m):
            add(f"{kind}_{i + 1} >= {kind}_{i}", t.get(kind, i + 1), t.get(kind, i), lambda x, y: x >= y)
    # a_j <= i  <=>  W(G,i,j) = D  <=>  b_i >= j+1, and likewise for the S-game
    for dom_kind, sta_kind in (("a", "b"), ("a'", "b'")):
        for i in range(1, m + 1):
            for j in range(1, m + 1):
                add(f"{dom_kind}_{j} <= {i} iff {sta_kind}_{i} >= {j + 1}",
                    t.get(dom_kind, j), t.get(sta_kind, i),
                    lambda x, y, i=i, j=j: (x <= i) == (y >= j + 1))

    delta, Delta = G.min_degree(), G.max_degree()
    gamma = GraphInvariants.domination_number(G)
    for i in range(1, m + 1):
        add(f"b'_{i} <= delta+1", t.get("b'", i), delta + 1, lambda x, y: x <= y)
        if i < gamma:
            add(f"b_{i} <= Delta+1", t.get("b", i), Delta + 1, lambda x, y: x <= y)
        add(f"a_{i} <= gamma", t.get("a", i), gamma, lambda x, y: x <= y)
        if i <= delta:
            add(f"a'_{i} <= {i}*Delta", t.get("a'", i), i * Delta, lambda x, y: x <= y)
    return checks
