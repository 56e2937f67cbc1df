"""Exact solver for the biased Maker-Breaker domination game.

The search runs on a reduced position: the closed neighbourhoods that
Dominator has not yet touched, each cut down to its unplayed vertices
("live sets"). Staller wins once a live set is empty; Dominator wins once no
live set remains. A live set that contains another is redundant and dropped,
so positions reached from different claim histories share a memo entry.
"""
from __future__ import annotations
import logging
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations, islice
from typing import Iterator

import networkx as nx

from .config import SolverConfig
from .errors import BudgetExceeded
from .game import GameConfig, GameRules, GameState, Outcome, Role
from .graphs import Graph, VertexSet, members, popcount, to_mask

__all__ = ["ExactSolver", "ReferenceSolver"]

logger = logging.getLogger(__name__)

_AUTOMORPHISM_LIMIT = 20_000

Edges = tuple[VertexSet, ...]


def _minimal(sets) -> Edges:
    """Drop duplicates and supersets; order by (size, value)."""
    kept: list[VertexSet] = []
    for e in sorted(set(sets), key=lambda s: (s.bit_count(), s)):
        if not any(f & e == f for f in kept):
            kept.append(e)
    return tuple(kept)


class _Search:
    """One memoised AND/OR search over a fixed graph and bias pair."""

    def __init__(self, G: Graph, a: int, b: int, cfg: SolverConfig, memo: dict):
        self.G = G
        self.a = a
        self.b = b
        self.cfg = cfg
        self.memo = memo
        self.visited = 0

    # -- position reduction -------------------------------------------
    def reduce(self, dom: VertexSet, sta: VertexSet) -> tuple[Edges, VertexSet]:
        unplayed = self.G.full & ~(dom | sta)
        return _minimal(c & unplayed for c in self.G.closed if c & dom == 0), unplayed

    # -- move generation ----------------------------------------------
    def moves(self, edges: Edges, unplayed: VertexSet, k: int) -> list[VertexSet]:
        """Candidate moves of ``k`` vertices, most threatening first.

        With pruning, vertices outside every live set are only used to fill a
        move, and vertices lying in exactly the same live sets are treated as
        interchangeable. Owning an extra vertex never hurts either side in a
        Maker-Breaker game, so neither restriction changes the game value.
        """
        weight = {}
        for e in edges:
            w = 1 << (64 - e.bit_count())
            for v in members(e):
                weight[v] = weight.get(v, 0) + w

        if not self.cfg.prune_irrelevant:
            out = [to_mask(c) for c in combinations(members(unplayed), k)]
        else:
            relevant = 0
            for e in edges:
                relevant |= e
            rel_count = relevant.bit_count()
            if k >= rel_count:
                spare = members(unplayed & ~relevant)[: k - rel_count]
                return [relevant | to_mask(spare)]
            classes: dict[int, list[int]] = {}
            for v in members(relevant):
                sig = 0
                for i, e in enumerate(edges):
                    if e >> v & 1:
                        sig |= 1 << i
                classes.setdefault(sig, []).append(v)
            groups = sorted(classes.values())
            prefixes = [[to_mask(g[:c]) for c in range(len(g) + 1)] for g in groups]
            room = [0] * (len(groups) + 1)
            for i in range(len(groups) - 1, -1, -1):
                room[i] = room[i + 1] + len(groups[i])

            out = []

            def fill(i: int, need: int, acc: VertexSet) -> None:
                if need == 0:
                    out.append(acc)
                    return
                if room[i] < need:
                    return
                for c in range(min(need, len(groups[i])), -1, -1):
                    fill(i + 1, need - c, acc | prefixes[i][c])

            fill(0, k, 0)

        out.sort(key=lambda mv: -sum(weight.get(v, 0) for v in members(mv)))
        return out

    def children(self, edges: Edges, unplayed: VertexSet, mover: Role) -> Iterator[tuple[Edges, VertexSet]]:
        k = min(self.a if mover is Role.DOMINATOR else self.b, unplayed.bit_count())
        if mover is Role.STALLER:
            for mv in self.moves(edges, unplayed, k):
                yield _minimal(e & ~mv for e in edges), unplayed & ~mv
            return
        threat = min(self.b, unplayed.bit_count() - k)
        urgent = [e for e in edges if e.bit_count() <= threat]
        for mv in self.moves(edges, unplayed, k):
            # an unanswered threat loses on the spot
            if any(e & mv == 0 for e in urgent):
                continue
            yield tuple(e for e in edges if e & mv == 0), unplayed & ~mv

    # -- evaluation ----------------------------------------------------
    def settled(self, edges: Edges, unplayed: VertexSet, mover: Role) -> bool | None:
        """Value of positions decided without search; True means Dominator wins."""
        if edges and edges[0] == 0:
            return False
        if not edges:
            if self.cfg.early_dominator_stop or unplayed == 0:
                return True
            return None
        left = unplayed.bit_count()
        if mover is Role.STALLER:
            if edges[0].bit_count() <= min(self.b, left):
                return False
        elif self.cfg.early_dominator_stop and len(edges) <= min(self.a, left):
            return True
        return None

    def dominator_wins(self, edges: Edges, unplayed: VertexSet, mover: Role) -> bool:
        self.visited += 1
        if self.visited > self.cfg.node_budget:
            raise BudgetExceeded(self.cfg.node_budget, self.visited)
        quick = self.settled(edges, unplayed, mover)
        if quick is not None:
            return quick
        key = (mover, (unplayed & ~self._union(edges)).bit_count(), edges)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        nxt = mover.other
        if mover is Role.STALLER:
            result = all(self.dominator_wins(e, u, nxt) for e, u in self.children(edges, unplayed, mover))
        else:
            result = any(self.dominator_wins(e, u, nxt) for e, u in self.children(edges, unplayed, mover))
        self.memo[key] = result
        return result

    @staticmethod
    def _union(edges: Edges) -> VertexSet:
        out = 0
        for e in edges:
            out |= e
        return out


def _child_value(args) -> tuple[bool, int]:
    G, a, b, cfg, edges, unplayed, mover = args
    search = _Search(G, a, b, cfg, {})
    return search.dominator_wins(edges, unplayed, mover), search.visited


class ExactSolver:
    """Decides W(G, a, b) and W'(G, a, b) by memoised minimax.

    Memo tables are kept per (graph, a, b) for the lifetime of the solver, so
    repeated queries on one graph (threshold scans, best-response play) reuse
    earlier work.
    """

    def __init__(self, config: SolverConfig | None = None):
        self.config = config or SolverConfig()
        self._tables: dict[tuple, dict] = {}
        self.last_visited = 0
        self.total_visited = 0

    def _memo(self, G: Graph, game: GameConfig) -> dict:
        key = (G, game.a, game.b, self.config.early_dominator_stop)
        return self._tables.setdefault(key, {})

    def clear(self) -> None:
        self._tables.clear()

    def solve(self, G: Graph, game: GameConfig) -> Outcome:
        """Winner of the game described by ``game`` under optimal play.

        Raises
        ------
        BudgetExceeded
            When more than ``config.node_budget`` states are visited.
        """
        return self.solve_state(G, game, game.initial_state())

    def solve_state(self, G: Graph, game: GameConfig, state: GameState) -> Outcome:
        """Value of an arbitrary reachable position."""
        search = _Search(G, game.a, game.b, self.config, self._memo(G, game))
        edges, unplayed = search.reduce(state.dom, state.sta)
        try:
            if state.played == 0 and (self.config.root_symmetry or self.config.workers > 1):
                d_wins = self._solve_root(search, edges, unplayed, state.to_move)
            else:
                d_wins = search.dominator_wins(edges, unplayed, state.to_move)
        finally:
            self.last_visited = search.visited
            self.total_visited += search.visited
        logger.debug("solved n=%d %s: %s after %d states (memo %d)", G.n, game.label(),
                     "D" if d_wins else "S", search.visited, len(search.memo))
        return Outcome.DOMINATOR_WIN if d_wins else Outcome.STALLER_WIN

    def _solve_root(self, search: _Search, edges: Edges, unplayed: VertexSet, mover: Role) -> bool:
        quick = search.settled(edges, unplayed, mover)
        if quick is not None:
            return quick
        kids = list(search.children(edges, unplayed, mover))
        if self.config.root_symmetry:
            kids = self._distinct_up_to_symmetry(search.G, unplayed, kids)
        if self.config.workers > 1 and len(kids) > 1:
            jobs = [(search.G, search.a, search.b, self.config, e, u, mover.other) for e, u in kids]
            with ProcessPoolExecutor(max_workers=self.config.workers) as pool:
                results = list(pool.map(_child_value, jobs))
            search.visited += sum(v for _, v in results)
            values = [r for r, _ in results]
        else:
            values = [search.dominator_wins(e, u, mover.other) for e, u in kids]
        return all(values) if mover is Role.STALLER else any(values)

    @staticmethod
    def _distinct_up_to_symmetry(G: Graph, unplayed: VertexSet, kids: list) -> list:
        """Keep one root move per automorphism orbit."""
        g = G.to_networkx()
        matcher = nx.algorithms.isomorphism.GraphMatcher(g, g)
        autos = list(islice(matcher.isomorphisms_iter(), _AUTOMORPHISM_LIMIT))
        seen: set[tuple[int, ...]] = set()
        out = []
        for e, u in kids:
            move = members(unplayed & ~u)
            canon = min(tuple(sorted(phi[v] for v in move)) for phi in autos)
            if canon not in seen:
                seen.add(canon)
                out.append((e, u))
        logger.debug("root symmetry: %d of %d moves kept (%d automorphisms)", len(out), len(kids), len(autos))
        return out


class ReferenceSolver:
    """Memo-free minimax straight over :class:`GameRules`; the solver's oracle."""

    def __init__(self, node_budget: int | None = None):
        self.node_budget = node_budget
        self.visited = 0

    def solve(self, G: Graph, game: GameConfig) -> Outcome:
        self.visited = 0
        return self.solve_state(G, game, game.initial_state())

    def solve_state(self, G: Graph, game: GameConfig, state: GameState) -> Outcome:
        self.visited += 1
        if self.node_budget is not None and self.visited > self.node_budget:
            raise BudgetExceeded(self.node_budget, self.visited)
        outcome = GameRules.is_terminal(G, state)
        if outcome is not None:
            return outcome
        mine = Outcome.for_role(state.to_move)
        for move in GameRules.legal_moves(G, state, game):
            if self.solve_state(G, game, GameRules.apply_move(state, move)) is mine:
                return mine
        return Outcome.for_role(state.to_move.other)
