"""Regression battery reproducing the threshold results on concrete graphs.

Each check is a stage function taking a :class:`CheckContext`; it records
one result per instance, or one aggregated result per sweep over a corpus.
A budget exhaustion is reported as ``skipped-budget`` and never as a pass.
"""
from __future__ import annotations
import json
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable

import pandas as pd

from .census import GraphCensus
from .config import BatteryConfig, SolverConfig
from .domination import LocalDomination
from .errors import BudgetExceeded
from .game import GameConfig, GameRules, GameState, Outcome, Role, explore_outcomes, play_match
from .generators import GraphFamilies
from .graphs import Graph
from .invariants import GraphInvariants
from .io import GraphCodec
from .solver import ExactSolver, ReferenceSolver
from .stars import StarPartitioner
from .strategies import (
    BestResponse, DominatorDominatingSet, DominatorNeighborResponder, FanDominator, GridStaller12,
    GridStaller22, LargeOrderStaller, LocalDominationDominator, PairingDominator, RandomStrategy,
    SdrLineGraphDominator, StallerMinDegree, StarPartitionDominator, Strategy, ThreatStaller, TreeStaller,
)
from .thresholds import INF, Thresholds

__all__ = [
    "PASS", "FAIL", "SKIPPED_BUDGET", "NOT_APPLICABLE", "REPORT_SCHEMA",
    "CheckResult", "CheckSpec", "CheckContext", "CHECKS", "BatteryReport", "Battery", "run_check",
]

logger = logging.getLogger(__name__)

PASS = "pass"
FAIL = "fail"
SKIPPED_BUDGET = "skipped-budget"
NOT_APPLICABLE = "not-applicable"
REPORT_SCHEMA = "mbd.battery-report/1"

D, S = Role.DOMINATOR, Role.STALLER


@dataclass
class CheckResult:
    claim_id: str
    statement: str
    instance: str
    expected: Any
    observed: Any
    status: str
    wall_time: float = 0.0

    def to_json(self, include_timing: bool = True) -> dict:
        out = {
            "claim": self.claim_id,
            "statement": self.statement,
            "instance": self.instance,
            "expected": self.expected,
            "observed": self.observed,
            "status": self.status,
        }
        if include_timing:
            out["wall_time"] = round(self.wall_time, 3)
        return out


@dataclass(frozen=True)
class CheckSpec:
    """One claim: identifier, plain statement, suites it runs in and its node budget."""
    claim_id: str
    statement: str
    run: Callable[["CheckContext"], None]
    suites: tuple[str, ...] = ("quick", "full")
    node_budget: int = 10**7


def _show(value: Any) -> Any:
    if isinstance(value, Outcome):
        return value.value
    if isinstance(value, float) and value == INF:
        return "inf"
    if isinstance(value, (set, frozenset)):
        return sorted(_show(v) for v in value)
    return value


class CheckContext:
    """Solver access and result recording for one running check."""

    def __init__(self, spec: CheckSpec, full: bool):
        self.spec = spec
        self.full = full
        self.solver = ExactSolver(SolverConfig(node_budget=spec.node_budget))
        self.thresholds = Thresholds(self.solver)
        self.results: list[CheckResult] = []

    # -- helpers used by the stage functions ---------------------------
    def winner(self, G: Graph, a: int, b: int, starter: Role) -> Outcome:
        return self.solver.solve(G, GameConfig(a, b, starter))

    def threshold(self, G: Graph, kind: str, index: int):
        return self.thresholds.threshold(G, kind, index)

    def match(self, G: Graph, config: GameConfig, dominator: Strategy, staller: Strategy) -> Outcome:
        return play_match(G, config, dominator, staller)[1]

    def best(self, role: Role) -> BestResponse:
        return BestResponse(role, self.solver)

    # -- recording -------------------------------------------------------
    def _add(self, instance: str, expected, observed, status: str, started: float) -> None:
        self.results.append(CheckResult(self.spec.claim_id, self.spec.statement, instance,
                                        _show(expected), _show(observed), status,
                                        time.perf_counter() - started))

    def expect(self, instance: str, expected, compute: Callable, *args) -> None:
        started = time.perf_counter()
        try:
            observed = compute(*args)
        except BudgetExceeded as e:
            logger.warning("%s %s: %s", self.spec.claim_id, instance, e)
            self._add(instance, expected, "undecided", SKIPPED_BUDGET, started)
            return
        self._add(instance, expected, observed, PASS if _show(observed) == _show(expected) else FAIL, started)

    def sweep(self, instance: str, items: Iterable, holds: Callable[[Any], bool],
              label: Callable[[Any], str] = lambda G: GraphCodec.write_graph6(G)) -> None:
        """Aggregate ``holds`` over a corpus into one result with the violation count."""
        started = time.perf_counter()
        total, undecided, violations = 0, 0, []
        for item in items:
            total += 1
            try:
                if not holds(item):
                    violations.append(label(item))
            except BudgetExceeded:
                undecided += 1
        if violations:
            observed, status = f"{len(violations)} violations (first: {violations[0]})", FAIL
        elif undecided:
            observed, status = f"{undecided} of {total} undecided", SKIPPED_BUDGET
        else:
            observed, status = "0 violations", PASS
        self._add(f"{instance} [{total} instances]", "0 violations", observed, status, started)

    def not_applicable(self, instance: str, expected, note: str) -> None:
        self.results.append(CheckResult(self.spec.claim_id, self.spec.statement, instance,
                                        _show(expected), note, NOT_APPLICABLE))


# ---------------------------------------------------------------------------
# Stage functions
# ---------------------------------------------------------------------------

def check_paths(ctx: CheckContext) -> None:
    for n in range(1, (10 if ctx.full else 8) + 1):
        P = GraphFamilies.path(n)
        ctx.expect(f"W(P_{n},1,1)", "D", ctx.winner, P, 1, 1, D)
        ctx.expect(f"b_1(P_{n})", INF if n <= 3 else 2, ctx.threshold, P, "b", 1)
        ctx.expect(f"b'_1(P_{n})", 1 if n % 2 else 2, ctx.threshold, P, "b'", 1)
        if n >= 2:
            ctx.expect(f"a'_1(P_{n})", 2 if n % 2 else 1, ctx.threshold, P, "a'", 1)
        ctx.expect(f"a'_2(P_{n})", INF, ctx.threshold, P, "a'", 2)


def check_small_grids(ctx: CheckContext) -> None:
    C4 = GraphFamilies.grid(2, 2)
    ctx.expect("b_1(P_2xP_2)", 3, ctx.threshold, C4, "b", 1)
    ctx.expect("b'_1(P_2xP_2)", 2, ctx.threshold, C4, "b'", 1)
    for m, n in ((3, 2), (4, 2), (3, 3)):
        G = GraphFamilies.grid(m, n)
        for kind, value in (("b", 2), ("b'", 2), ("a", 1), ("a'", 1)):
            ctx.expect(f"{kind}_1(P_{m}xP_{n})", value, ctx.threshold, G, kind, 1)


def check_grid_bias_two(ctx: CheckContext) -> None:
    shapes = ((5, 2), (5, 3)) if ctx.full else ((5, 2),)
    for m, n in shapes:
        G = GraphFamilies.grid(m, n)
        ctx.expect(f"W'(P_{m}xP_{n},2,2)", "S", ctx.winner, G, 2, 2, S)
        ctx.expect(f"b'_2(P_{m}xP_{n})", 2, ctx.threshold, G, "b'", 2)
        # Staller winning at a = 2 (hence at a = 1) pins a'_2 >= 3
        ctx.expect(f"a'_2(P_{m}xP_{n}) >= 3", True,
                   lambda G=G: all(ctx.winner(G, a, 2, S) is Outcome.STALLER_WIN for a in (1, 2)))


def check_local_values(ctx: CheckContext) -> None:
    for n in range(5, 10):
        ctx.expect(f"local_1(C_{n})", 2, LocalDomination.local_domination_number, GraphFamilies.cycle(n), 1)
    ctx.expect("local_2(C_10)", 4, LocalDomination.local_domination_number, GraphFamilies.cycle(10), 2)
    ctx.expect("local_1(two-hub)", 2, LocalDomination.local_domination_number, GraphFamilies.two_hub_graph(), 1)


def check_local_bound(ctx: CheckContext) -> None:
    corpus = GraphCensus.connected_graphs(7 if ctx.full else 5)
    for ell in (1, 2):
        graphs = [G for G in corpus if G.min_degree() >= ell]
        ctx.sweep(f"W'(G,local_{ell}(G),{ell}) = D, connected, δ >= {ell}", graphs,
                  lambda G, ell=ell: ctx.winner(G, LocalDomination.local_domination_number(G, ell), ell, S)
                  is Outcome.DOMINATOR_WIN)


def check_claw_free(ctx: CheckContext) -> None:
    corpus = [G for G in GraphCensus.connected_graphs(7 if ctx.full else 5)
              if G.min_degree() >= 1 and LocalDomination.is_induced_star_free(G, 3)]
    ctx.sweep("W'(G,2,1) = D, connected claw-free", corpus,
              lambda G: ctx.winner(G, 2, 1, S) is Outcome.DOMINATOR_WIN)
    witnesses = [("P_5", GraphFamilies.path(5)), ("P_7", GraphFamilies.path(7)),
                 ("P+_5", GraphFamilies.chorded_odd_path(2)), ("P+_7", GraphFamilies.chorded_odd_path(3))]
    for name, G in witnesses:
        ctx.expect(f"a'_1({name})", 2, ctx.threshold, G, "a'", 1)


def check_line_graphs(ctx: CheckContext) -> None:
    hosts = [H for H in GraphCensus.connected_graphs(6 if ctx.full else 5) if H.n >= 3 and H.min_degree() >= 2]

    def holds(H: Graph) -> bool:
        L, _ = GraphFamilies.line_graph(H)
        if ctx.winner(L, 1, 1, D) is not Outcome.DOMINATOR_WIN:
            return False
        if ctx.winner(L, 1, 1, S) is not Outcome.DOMINATOR_WIN:
            return False
        return ctx.match(L, GameConfig(1, 1, S), SdrLineGraphDominator(H, 1), ctx.best(S)) is Outcome.DOMINATOR_WIN

    ctx.sweep("a_1(L(H)) = a'_1(L(H)) = 1 and sdr:1 beats best, δ(H) >= 2", hosts, holds)
    if ctx.full:
        K5 = GraphFamilies.complete(5)
        L, _ = GraphFamilies.line_graph(K5)
        ctx.expect("sdr:2 vs best on L(K_5), (2,2) S-game", "D",
                   ctx.match, L, GameConfig(2, 2, S), SdrLineGraphDominator(K5, 2), ctx.best(S))


def check_star_width(ctx: CheckContext) -> None:
    for n in range(2, 9):
        ctx.expect(f"sigma(K_{n})", 1 if n % 2 == 0 else 2,
                   StarPartitioner.star_partition_width, GraphFamilies.complete(n))
    for r in range(1, 6):
        ctx.expect(f"sigma(K_1,{r})", r, StarPartitioner.star_partition_width, GraphFamilies.star(r))
    for m in range(1, 4):
        K = GraphFamilies.complete_bipartite(2, 2 * m)
        ctx.expect(f"sigma(K_2,{2 * m})", m, StarPartitioner.star_partition_width, K)
        ctx.expect(f"a'_1(K_2,{2 * m})", 1, ctx.threshold, K, "a'", 1)


def check_factor_criterion(ctx: CheckContext) -> None:
    corpus = GraphCensus.all_graphs(7 if ctx.full else 5)
    for k in (2, 3):
        ctx.sweep(f"k-star partition exists iff i(G-X) <= {k}|X| for all X", corpus,
                  lambda G, k=k: StarPartitioner.has_k_star_partition(G, k)[0]
                  == StarPartitioner.factor_criterion_holds(G, k))


def _trees(top: int) -> list[Graph]:
    return [T for n in range(2, top + 1) for T in GraphCensus.trees(n)]


def check_lemma(ctx: CheckContext) -> None:
    ctx.sweep("lexicographically optimal partitions of trees satisfy the structure lemma",
              _trees(9 if ctx.full else 7),
              lambda T: StarPartitioner.check_lex_optimal_lemma(
                  T, StarPartitioner.lex_optimal_star_partition(T)).passed)


def check_sigma_formula(ctx: CheckContext) -> None:
    corpus = GraphCensus.connected_graphs(7 if ctx.full else 6)
    ctx.sweep("sigma(G) = max ceil(i(G-S)/|S|) without a 2-star partition", corpus,
              lambda G: StarPartitioner.sigma_formula_check(G).holds is not False)


def check_tree_threshold(ctx: CheckContext) -> None:
    ctx.sweep("a'_1(T) = sigma(T)", _trees(9 if ctx.full else 7),
              lambda T: ctx.threshold(T, "a'", 1) == StarPartitioner.star_partition_width(T))


def check_tree_strategy(ctx: CheckContext) -> None:
    def holds(T: Graph) -> bool:
        sigma = int(StarPartitioner.star_partition_width(T))
        config = GameConfig(sigma - 1, 1, S)
        return ctx.match(T, config, ctx.best(D), TreeStaller()) is Outcome.STALLER_WIN

    trees = [T for T in _trees(9 if ctx.full else 7) if StarPartitioner.star_partition_width(T) >= 2]
    ctx.sweep("tree Staller beats best Dominator in the (sigma-1,1) S-game", trees, holds)


def check_large_order(ctx: CheckContext) -> None:
    cases = [("C_10", GraphFamilies.cycle(10), S)]
    if ctx.full:
        cases += [("C_12", GraphFamilies.cycle(12), S), ("P_15", GraphFamilies.path(15), D)]
    for name, G, starter in cases:
        config = GameConfig(1, 2, starter)
        ctx.expect(f"large:2 vs best on {name}, (1,2) {starter.value}-game", "S",
                   ctx.match, G, config, ctx.best(D), LargeOrderStaller(2))
        game = "W" if starter is D else "W'"
        ctx.expect(f"{game}({name},1,2)", "S", ctx.winner, G, 1, 2, starter)


def check_trivial_bounds(ctx: CheckContext) -> None:
    def holds(G: Graph) -> bool:
        table = ctx.thresholds.table(G, 2)
        if any(c.value is None for c in table.cells) or any(c.passed is None for c in table.checks):
            raise BudgetExceeded(ctx.spec.node_budget, ctx.solver.last_visited)
        if not table.consistent:
            return False
        # below gamma every D-game with Staller bias Delta+1 is solved and lost
        return ctx.threshold(G, "a", G.max_degree() + 1) == GraphInvariants.domination_number(G)

    ctx.sweep("threshold tables obey the cross, duality, monotonicity and trivial bounds",
              GraphCensus.connected_graphs(7 if ctx.full else 5), holds)


def check_sharpness(ctx: CheckContext) -> None:
    G = GraphFamilies.clique_chain(2, 3)
    ctx.expect("b'_2(G_2,3) = δ+1", 3, ctx.threshold, G, "b'", 2)
    ctx.expect("a_3(G_2,3) = γ", 2, ctx.threshold, G, "a", 3)


def check_fan(ctx: CheckContext) -> None:
    ctx.not_applicable("W(F_a,n, a, n+1) = D for a >= n >= 5", "D",
                       "exhaustive search is out of scale; see the simulation entries")
    a = n = 5
    F = GraphFamilies.cycle_clique_product(a, n)
    config = GameConfig(a, n + 1, D)
    opponents = [ThreatStaller()] + [RandomStrategy(S, seed) for seed in range(5 if ctx.full else 2)]
    for opp in opponents:
        ctx.expect(f"fan:{a}:{n} vs {opp.name} on F_{a},{n}", "D", ctx.match, F, config, FanDominator(a, n), opp)


def _full_splits(G: Graph) -> bool:
    for dom in range(G.full + 1):
        state = GameState(dom, G.full ^ dom, D)
        if GameRules.staller_has_won(G, state) == GameRules.dominator_has_won(G, state):
            return False
    return True


def check_terminal_equivalence(ctx: CheckContext) -> None:
    corpus = GraphCensus.all_graphs(7 if ctx.full else 5)
    ctx.sweep("on a full board exactly one player has won", corpus, _full_splits)
    if ctx.full:
        ctx.sweep("on a full board exactly one player has won, n = 8",
                  GraphCensus.one_vertex_extensions(7), _full_splits)


def check_reference(ctx: CheckContext) -> None:
    top, bias = (6, 3) if ctx.full else (4, 2)
    reference = ReferenceSolver(node_budget=ctx.spec.node_budget)

    def holds(G: Graph) -> bool:
        for a in range(1, bias + 1):
            for b in range(1, bias + 1):
                for starter in (D, S):
                    game = GameConfig(a, b, starter)
                    if ctx.solver.solve(G, game) is not reference.solve(G, game):
                        return False
        return True

    ctx.sweep("exact solver agrees with the memo-free reference", GraphCensus.all_graphs(top), holds)


def check_monotonicity(ctx: CheckContext) -> None:
    def holds(G: Graph) -> bool:
        W = {(a, b, s): ctx.winner(G, a, b, s) for a in range(1, 4) for b in range(1, 4) for s in (D, S)}
        for (a, b, s), w in W.items():
            if w is Outcome.STALLER_WIN and (a, b + 1, s) in W and W[a, b + 1, s] is not w:
                return False
            if w is Outcome.DOMINATOR_WIN and (a + 1, b, s) in W and W[a + 1, b, s] is not w:
                return False
        return all(not (W[a, b, D] is Outcome.STALLER_WIN and W[a, b, S] is Outcome.DOMINATOR_WIN)
                   for a in range(1, 4) for b in range(1, 4))

    ctx.sweep("more bias never hurts and moving first never hurts",
              GraphCensus.connected_graphs(6 if ctx.full else 5), holds)


def check_pairing(ctx: CheckContext) -> None:
    for name, G in (("P_6", GraphFamilies.path(6)), ("C_6", GraphFamilies.cycle(6))):
        for starter in (D, S):
            ctx.expect(f"pairing vs best on {name}, (1,1) {starter.value}-game", "D",
                       ctx.match, G, GameConfig(1, 1, starter), PairingDominator(), ctx.best(S))
    for starter in (D, S):
        ctx.expect(f"pairing vs every Staller on P_4, {starter.value}-game", {Outcome.DOMINATOR_WIN},
                   explore_outcomes, GraphFamilies.path(4), GameConfig(1, 1, starter), PairingDominator())


def check_local_strategy(ctx: CheckContext) -> None:
    def holds(G: Graph) -> bool:
        a = LocalDomination.local_domination_number(G, 1)
        return ctx.match(G, GameConfig(a, 1, S), LocalDominationDominator(1), ctx.best(S)) is Outcome.DOMINATOR_WIN

    corpus = [G for G in GraphCensus.connected_graphs(6 if ctx.full else 5) if G.min_degree() >= 1]
    ctx.sweep("local:1 with bias local_1(G) beats best Staller", corpus, holds)
    if ctx.full:
        ctx.expect("local:2 vs best on C_10, (4,2) S-game", "D", ctx.match, GraphFamilies.cycle(10),
                   GameConfig(4, 2, S), LocalDominationDominator(2), ctx.best(S))


def check_grid_strategies(ctx: CheckContext) -> None:
    shapes = ((5, 2), (5, 3)) if ctx.full else ((5, 2),)
    for m, n in shapes:
        ctx.expect(f"grid22 vs best on P_{m}xP_{n}", "S", ctx.match, GraphFamilies.grid(m, n),
                   GameConfig(2, 2, S), ctx.best(D), GridStaller22(m, n))
    for m, n in ((3, 2), (3, 3), (4, 2)):
        ctx.expect(f"grid12 vs best on P_{m}xP_{n}", "S", ctx.match, GraphFamilies.grid(m, n),
                   GameConfig(1, 2, D), ctx.best(D), GridStaller12(m, n))


def check_simple_strategies(ctx: CheckContext) -> None:
    C6, P5 = GraphFamilies.cycle(6), GraphFamilies.path(5)
    ctx.expect("mindeg vs best on C_6, (1,3) S-game", "S", ctx.match, C6, GameConfig(1, 3, S),
               ctx.best(D), StallerMinDegree())
    ctx.expect("domset vs best on P_5, (2,1) D-game", "D", ctx.match, P5, GameConfig(2, 1, D),
               DominatorDominatingSet(), ctx.best(S))
    ctx.expect("neighbor vs best on C_6, (2,1) S-game", "D", ctx.match, C6, GameConfig(2, 1, S),
               DominatorNeighborResponder(), ctx.best(S))


def check_threat_staller(ctx: CheckContext) -> None:
    # Dominator's first n-1 vertices miss some copy of K_k, which Staller then claims whole
    for n, k in ((2, 3), (2, 4), (3, 3)) + (((3, 4), (4, 3)) if ctx.full else ()):
        ctx.expect(f"grab vs best on G_{n},{k}, ({n - 1},{k}) D-game", "S", ctx.match,
                   GraphFamilies.clique_chain(n, k), GameConfig(n - 1, k, D), ctx.best(D), ThreatStaller())


def check_star_strategy(ctx: CheckContext) -> None:
    def holds(T: Graph) -> bool:
        sigma = int(StarPartitioner.star_partition_width(T))
        return ctx.match(T, GameConfig(sigma, 1, S), StarPartitionDominator(), ctx.best(S)) is Outcome.DOMINATOR_WIN

    ctx.sweep("star Dominator with bias sigma(T) beats best Staller", _trees(7 if ctx.full else 6), holds)


def check_exhaustive_strategies(ctx: CheckContext) -> None:
    top = 6 if ctx.full else 5
    trees = _trees(top)

    def tree_staller(T: Graph) -> bool:
        sigma = int(StarPartitioner.star_partition_width(T))
        if sigma < 2:
            return True
        return explore_outcomes(T, GameConfig(sigma - 1, 1, S), TreeStaller()) == {Outcome.STALLER_WIN}

    def star_dominator(T: Graph) -> bool:
        sigma = int(StarPartitioner.star_partition_width(T))
        return explore_outcomes(T, GameConfig(sigma, 1, S), StarPartitionDominator()) == {Outcome.DOMINATOR_WIN}

    def local_dominator(G: Graph) -> bool:
        a = LocalDomination.local_domination_number(G, 1)
        return explore_outcomes(G, GameConfig(a, 1, S), LocalDominationDominator(1)) == {Outcome.DOMINATOR_WIN}

    ctx.sweep("tree Staller wins against every Dominator", trees, tree_staller)
    ctx.sweep("star Dominator wins against every Staller", trees, star_dominator)
    ctx.sweep("local:1 wins against every Staller",
              [G for G in GraphCensus.connected_graphs(top) if G.min_degree() >= 1], local_dominator)


def check_best_response(ctx: CheckContext) -> None:
    def holds(G: Graph) -> bool:
        for a in (1, 2):
            for b in (1, 2):
                for starter in (D, S):
                    game = GameConfig(a, b, starter)
                    if ctx.match(G, game, ctx.best(D), ctx.best(S)) is not ctx.solver.solve(G, game):
                        return False
        return True

    ctx.sweep("best vs best reproduces the solved winner", GraphCensus.connected_graphs(7 if ctx.full else 4), holds)


CHECKS: tuple[CheckSpec, ...] = (
    CheckSpec("paths", "thresholds of paths: W(P_n,1,1)=D, b_1, b'_1, a'_1 and a'_2", check_paths),
    CheckSpec("grids.small", "Staller and Dominator thresholds of small grids", check_small_grids),
    CheckSpec("grids.bias2", "Staller wins the (2,2) S-game on P_5 x P_n", check_grid_bias_two,
              node_budget=10**8),
    CheckSpec("local.values", "local domination numbers of cycles and the two-hub graph", check_local_values),
    CheckSpec("local.bound", "a'_l(G) <= local_l(G)", check_local_bound),
    CheckSpec("local.clawfree", "a'_1(G) <= 2 for claw-free graphs, attained by odd paths", check_claw_free),
    CheckSpec("line.graphs", "a_1 = a'_1 = 1 on line graphs of graphs with minimum degree >= 2",
              check_line_graphs, node_budget=10**8),
    CheckSpec("stars.width", "star partition width of complete, star and K_2,2m graphs", check_star_width),
    CheckSpec("stars.criterion", "k-star partitions match the isolated-vertex criterion for k = 2, 3",
              check_factor_criterion),
    CheckSpec("stars.lemma", "structure of lexicographically optimal star partitions in trees", check_lemma),
    CheckSpec("stars.formula", "closed formula for the star partition width", check_sigma_formula),
    CheckSpec("trees.threshold", "a'_1(T) equals the star partition width of T", check_tree_threshold),
    CheckSpec("trees.strategy", "the tree Staller strategy wins", check_tree_strategy),
    CheckSpec("large.order", "Staller wins (k-1,k) games on graphs of large order", check_large_order,
              node_budget=10**8),
    CheckSpec("bounds.tables", "threshold tables are consistent on the connected census", check_trivial_bounds),
    CheckSpec("bounds.sharp", "the trivial bounds are attained", check_sharpness),
    CheckSpec("bounds.fan", "Dominator wins the (a,n+1) D-game on C_a+1 x K_n", check_fan),
    CheckSpec("props.terminal", "terminal positions have exactly one winner", check_terminal_equivalence),
    CheckSpec("props.reference", "the exact solver agrees with plain minimax", check_reference,
              node_budget=10**6),
    CheckSpec("props.monotone", "outcomes are monotone in the biases and the starter", check_monotonicity),
    CheckSpec("strategies.pairing", "pairing Dominator wins the (1,1) games on P_6 and C_6", check_pairing),
    CheckSpec("strategies.local", "local domination Dominator wins with bias local_l(G)", check_local_strategy),
    CheckSpec("strategies.grids", "scripted grid Staller strategies win", check_grid_strategies,
              node_budget=10**8),
    CheckSpec("strategies.simple", "one-move strategies behind the trivial bounds win", check_simple_strategies),
    CheckSpec("strategies.threat", "threat Staller wins the (n-1,k) D-game on n joined copies of K_k",
              check_threat_staller),
    CheckSpec("strategies.star", "star partition Dominator wins with bias sigma(T)", check_star_strategy),
    CheckSpec("strategies.exhaustive", "scripted strategies win against every opponent",
              check_exhaustive_strategies),
    CheckSpec("strategies.best", "optimal play reproduces the solver", check_best_response),
)


def _spec(claim_id: str) -> CheckSpec:
    for spec in CHECKS:
        if spec.claim_id == claim_id:
            return spec
    raise ValueError(f"Unknown check '{claim_id}'. Available: {', '.join(s.claim_id for s in CHECKS)}")


def run_check(claim_id: str, suite: str = "quick") -> list[CheckResult]:
    """Run one check; an unexpected error becomes a single failed result."""
    spec = _spec(claim_id)
    ctx = CheckContext(spec, full=suite == "full")
    started = time.perf_counter()
    try:
        spec.run(ctx)
    except Exception as e:  # noqa: BLE001
        logger.exception("check %s crashed", claim_id)
        ctx.results.append(CheckResult(spec.claim_id, spec.statement, "", "no error", f"error: {e}",
                                       FAIL, time.perf_counter() - started))
    return ctx.results


def _run_check_job(args: tuple[str, str]) -> list[CheckResult]:
    return run_check(*args)


@dataclass
class BatteryReport:
    suite: str
    results: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.status != FAIL for r in self.results)

    def summary(self) -> dict[str, int]:
        counts = {PASS: 0, FAIL: 0, SKIPPED_BUDGET: 0, NOT_APPLICABLE: 0}
        for r in self.results:
            counts[r.status] += 1
        return counts

    def to_json(self, include_timing: bool = True) -> dict:
        return {
            "schema": REPORT_SCHEMA,
            "suite": self.suite,
            "summary": self.summary(),
            "checks": [r.to_json(include_timing) for r in self.results],
        }

    def dumps(self, include_timing: bool = True) -> str:
        return json.dumps(self.to_json(include_timing), indent=2, sort_keys=True, default=str)

    def to_frame(self) -> pd.DataFrame:
        cols = ["claim", "instance", "expected", "observed", "status", "wall_time"]
        rows = [(r.claim_id, r.instance, str(r.expected), str(r.observed), r.status, r.wall_time)
                for r in self.results]
        return pd.DataFrame(rows, columns=cols)

    def to_csv(self, path) -> None:
        self.to_frame().to_csv(path, index=False)


class Battery:
    """Selects checks for a suite and runs them, optionally in a process pool."""

    def __init__(self, config: BatteryConfig | None = None):
        self.config = config or BatteryConfig()

    def specs(self) -> list[CheckSpec]:
        only = self.config.only
        return [s for s in CHECKS
                if self.config.suite in s.suites
                and (not only or any(s.claim_id.startswith(p) for p in only))]

    def run(self, progress: Callable[[int, int, str, list[CheckResult]], None] | None = None) -> BatteryReport:
        specs = self.specs()
        suite = self.config.suite
        jobs = [(s.claim_id, suite) for s in specs]
        report = BatteryReport(suite)
        logger.info("running %d checks (%s suite, %d workers)", len(jobs), suite, self.config.workers)
        if self.config.workers > 1 and len(jobs) > 1:
            with ProcessPoolExecutor(max_workers=self.config.workers) as pool:
                batches = pool.map(_run_check_job, jobs)
                for i, (job, results) in enumerate(zip(jobs, batches), 1):
                    report.results.extend(results)
                    if progress:
                        progress(i, len(jobs), job[0], results)
        else:
            for i, job in enumerate(jobs, 1):
                results = _run_check_job(job)
                report.results.extend(results)
                if progress:
                    progress(i, len(jobs), job[0], results)
        logger.info("battery finished: %s", report.summary())
        return report
