"""Executable strategies for both players.

Every strategy returns a legal move for the side to move. Scripted strategies
follow a fixed plan but check the board first: a Staller strategy claims any
closed neighbourhood it can finish in one move, a Dominator strategy finishes
domination whenever its bias allows. Arbitrary choices resolve to the
lexicographically first option, so play is deterministic given the history.
"""
from __future__ import annotations
import logging
from abc import ABC, abstractmethod
from typing import Callable, Iterable

import numpy as np

from .errors import StrategyNotApplicable
from .game import GameConfig, GameRules, GameState, Outcome, Role
from .generators import FamilyPresets, GraphFamilies
from .graphs import Graph, VertexSet, members, popcount, to_mask
from .invariants import GraphInvariants
from .io import GraphCodec
from .domination import HallMatcher, LocalDomination
from .solver import ExactSolver
from .stars import StarPartitioner

__all__ = [
    "Strategy", "BestResponse", "PairingDominator", "LocalDominationDominator",
    "SdrLineGraphDominator", "LargeOrderStaller", "GridStaller22", "GridStaller12",
    "TreeStaller", "StallerMinDegree", "DominatorDominatingSet", "DominatorNeighborResponder",
    "StarPartitionDominator", "FanDominator", "ThreatStaller", "RandomStrategy",
    "StrategyRegistry",
]

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Shared move helpers
# ---------------------------------------------------------------------------

def _finalize(G: Graph, config: GameConfig, state: GameState, chosen: Iterable[int]) -> tuple[int, ...]:
    """Turn a preference list into a legal move.

    Played vertices and repeats are dropped, the list is cut to the move size
    and padded with the lexicographically first unplayed vertices.
    """
    k = GameRules.move_size(G, state, config)
    free = state.unplayed(G)
    picked: list[int] = []
    taken = 0
    for v in chosen:
        if len(picked) == k:
            break
        if free >> v & 1 and not taken >> v & 1:
            picked.append(v)
            taken |= 1 << v
    for v in members(free & ~taken):
        if len(picked) == k:
            break
        picked.append(v)
    return tuple(sorted(picked))


def _staller_finisher(G: Graph, state: GameState, b: int) -> tuple[int, ...] | None:
    """Unplayed rest of the lowest N[v] Staller can complete in one move."""
    for v in range(G.n):
        c = G.closed[v]
        if c & state.dom == 0:
            rest = c & ~state.sta
            if popcount(rest) <= b:
                return members(rest)
    return None


def _staller_threats(G: Graph, state: GameState) -> list[int]:
    """Unplayed vertices of live closed neighbourhoods, closest to completion first."""
    free = state.unplayed(G)
    live = [(popcount(G.closed[v] & free), v) for v in range(G.n) if G.closed[v] & state.dom == 0]
    out: list[int] = []
    for _, v in sorted(live):
        out.extend(members(G.closed[v] & free))
    return out


def _dominator_finisher(G: Graph, state: GameState, a: int) -> tuple[int, ...] | None:
    """Unplayed vertices completing domination in one move, if ``a`` suffice."""
    target = G.full & ~G.dominated_by(state.dom)
    return GraphInvariants.min_dominating_set(G, target=target, candidates=state.unplayed(G), limit=a)


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise StrategyNotApplicable(message)


def _require_role(config: GameConfig, a: int | None = None, b: int | None = None,
                  starter: Role | None = None, who: str = "") -> None:
    if a is not None:
        _require(config.a == a, f"{who} needs Dominator bias {a}, got {config.a}")
    if b is not None:
        _require(config.b == b, f"{who} needs Staller bias {b}, got {config.b}")
    if starter is not None:
        _require(config.starter is starter, f"{who} needs the {starter.value}-game")


# ---------------------------------------------------------------------------
# Base class
# ---------------------------------------------------------------------------

class Strategy(ABC):
    """One player's decision rule for a single match.

    Subclasses set ``role`` and ``name``, may override :meth:`check_applicable`
    and keep per-match memory that :meth:`reset` clears.
    """
    role: Role = Role.DOMINATOR
    name: str = "strategy"

    def __init__(self):
        self._seen = 0

    def check_applicable(self, G: Graph, config: GameConfig) -> None:
        """Raise :class:`StrategyNotApplicable` when the preconditions fail."""

    def reset(self) -> None:
        self._seen = 0

    @abstractmethod
    def choose(self, G: Graph, config: GameConfig, state: GameState) -> tuple[int, ...]:
        ...

    def _opponent_move(self, state: GameState) -> VertexSet:
        """Vertices the opponent claimed since this strategy last looked."""
        theirs = state.owned(self.role.other)
        fresh = theirs & ~self._seen
        self._seen = theirs
        return fresh

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.name!r})"


class BestResponse(Strategy):
    """Lexicographically first winning move according to the exact solver."""

    def __init__(self, role: Role, solver: ExactSolver | None = None):
        super().__init__()
        self.role = Role(role)
        self.name = "best"
        self.solver = solver or ExactSolver()

    def choose(self, G, config, state):
        mine = Outcome.for_role(self.role)
        moves = GameRules.legal_moves(G, state, config)
        for move in moves:
            nxt = GameRules.apply_move(state, move)
            outcome = GameRules.is_terminal(G, nxt)
            if outcome is None:
                outcome = self.solver.solve_state(G, config, nxt)
            if outcome is mine:
                return move
        return moves[0]


# ---------------------------------------------------------------------------
# Dominator strategies
# ---------------------------------------------------------------------------

class PairingDominator(Strategy):
    """Answer each Staller vertex with its partner in a perfect matching."""
    role = Role.DOMINATOR

    def __init__(self, matching: Iterable[tuple[int, int]] | None = None):
        super().__init__()
        self.name = "pairing"
        self._given = tuple(matching) if matching is not None else None
        self.partner: dict[int, int] = {}

    def check_applicable(self, G, config):
        _require_role(config, a=1, b=1, who="pairing")
        M = self._given if self._given is not None else GraphInvariants.maximum_matching(G)
        partner = {}
        for u, v in M:
            _require(G.is_adjacent(u, v), f"pair ({u},{v}) is not an edge")
            partner[u], partner[v] = v, u
        _require(len(partner) == G.n and 2 * len(M) == G.n, "pairing needs a perfect matching")
        self.partner = partner

    def choose(self, G, config, state):
        fresh = self._opponent_move(state)
        wanted = [self.partner[x] for x in members(fresh) if x in self.partner]
        return _finalize(G, config, state, wanted)


class LocalDominationDominator(Strategy):
    """After every Staller move S, dominate N(S) and the degree-ℓ members of S.

    The dominating set R is taken from V - S. Members of R that Dominator
    already owns are skipped; a member y that Staller owns is replaced by an
    unplayed vertex of N(y) - S unless N[y] already meets Dominator's set.
    """
    role = Role.DOMINATOR

    def __init__(self, ell: int = 1):
        super().__init__()
        if ell < 1:
            raise ValueError(f"ℓ must be >= 1, got {ell}")
        self.ell = ell
        self.name = f"local:{ell}"

    def check_applicable(self, G, config):
        _require(G.min_degree() >= self.ell, f"local domination needs δ(G) >= {self.ell}")
        _require_role(config, b=self.ell, who=self.name)
        need = LocalDomination.local_domination_number(G, self.ell)
        _require(config.a >= need, f"{self.name} needs Dominator bias >= {need}, got {config.a}")

    def choose(self, G, config, state):
        S = self._opponent_move(state)
        if S == 0:
            return _finalize(G, config, state, ())
        target = LocalDomination.target_of(G, S, self.ell)
        R = GraphInvariants.min_dominating_set(G, target=target, candidates=G.full & ~S)
        wanted: list[int] = []
        for x in R or ():
            if state.dom >> x & 1:
                continue
            if not state.sta >> x & 1:
                wanted.append(x)
            elif G.set_neighborhood(S) >> x & 1 and G.closed[x] & state.dom == 0:
                subs = members(G.nbr[x] & ~S & state.unplayed(G) & ~to_mask(wanted))
                if subs:
                    wanted.append(subs[0])
        return _finalize(G, config, state, wanted)


class SdrLineGraphDominator(Strategy):
    """(k, k) S-game on L(H) with a fixed system of t representatives per vertex clique.

    Each clique Q_u of L(H) (the edges at u) owns t representatives. When
    Staller takes a representative of Q_u, Dominator answers inside Q_u; any
    other Staller vertex is answered by one of its neighbours.
    """
    role = Role.DOMINATOR

    def __init__(self, H: Graph, t: int = 1, k: int | None = None):
        super().__init__()
        self.H = H
        self.t = t
        self.k = k
        self.name = f"sdr:{t}:{GraphCodec.write_graph6(H)}"
        self.cliques: list[VertexSet] = []
        self.owner: dict[int, int] = {}

    def check_applicable(self, G, config):
        k = config.a if self.k is None else self.k
        _require(self.H.min_degree() >= 2 * self.t, f"sdr needs δ(H) >= {2 * self.t}")
        _require(1 <= k <= 2 * self.t - 1, f"sdr needs k <= {2 * self.t - 1}, got {k}")
        _require_role(config, a=k, b=k, starter=Role.STALLER, who="sdr")
        L, _ = GraphFamilies.line_graph(self.H)
        _require(L == G, "sdr expects the line graph of H")
        family = HallMatcher.clique_family(self.H)
        result = HallMatcher.sdr_t_exists(family, self.t)
        if not result.exists:
            raise RuntimeError(f"clique family has no system of {self.t} representatives: "
                               f"violator {result.violator}")
        self.cliques = [to_mask(s) for s in family.sets]
        self.owner = {r: j for j, reps in enumerate(result.witness) for r in reps}

    def choose(self, G, config, state):
        fresh = self._opponent_move(state)
        free = state.unplayed(G)
        wanted: list[int] = []
        for x in members(fresh):
            avail = free & ~to_mask(wanted)
            pick = ()
            j = self.owner.get(x)
            if j is not None:
                pick = members(self.cliques[j] & avail)
            if not pick:
                pick = members(G.nbr[x] & avail)
            if pick:
                wanted.append(pick[0])
        return _finalize(G, config, state, wanted)


class DominatorDominatingSet(Strategy):
    """Claim a minimum dominating set in the first move of the D-game."""
    role = Role.DOMINATOR

    def __init__(self):
        super().__init__()
        self.name = "domset"

    def check_applicable(self, G, config):
        _require(config.starter is Role.DOMINATOR, "domset needs the D-game")
        gamma = GraphInvariants.domination_number(G)
        _require(config.a >= gamma, f"domset needs Dominator bias >= γ(G) = {gamma}")

    def choose(self, G, config, state):
        done = _dominator_finisher(G, state, config.a)
        if done is not None:
            return _finalize(G, config, state, done)
        return _finalize(G, config, state, GraphInvariants.min_dominating_set(G) or ())


class DominatorNeighborResponder(Strategy):
    """Claim every unplayed neighbour of Staller's last move (bias a = bΔ)."""
    role = Role.DOMINATOR

    def __init__(self):
        super().__init__()
        self.name = "neighbor"

    def check_applicable(self, G, config):
        _require(config.starter is Role.STALLER, "neighbor needs the S-game")
        _require(config.b <= G.min_degree(), f"neighbor needs b <= δ(G) = {G.min_degree()}")
        _require(config.a >= config.b * G.max_degree(),
                 f"neighbor needs Dominator bias >= bΔ = {config.b * G.max_degree()}")

    def choose(self, G, config, state):
        fresh = self._opponent_move(state)
        done = _dominator_finisher(G, state, config.a)
        if done is not None:
            return _finalize(G, config, state, done)
        return _finalize(G, config, state, members(G.set_neighborhood(fresh)))


class StarPartitionDominator(Strategy):
    """Take the rest of every star Staller enters; bias σ(G) against 1."""
    role = Role.DOMINATOR

    def __init__(self):
        super().__init__()
        self.name = "star"
        self.block_of: dict[int, VertexSet] = {}

    def check_applicable(self, G, config):
        _require_role(config, b=1, who="star")
        found, P = StarPartitioner.has_k_star_partition(G, config.a)
        _require(found, f"star needs a {config.a}-star partition")
        self.block_of = {v: s.mask for s in P.stars for v in members(s.mask)}

    def choose(self, G, config, state):
        fresh = self._opponent_move(state)
        wanted: list[int] = []
        for x in members(fresh):
            wanted.extend(members(self.block_of[x] & state.unplayed(G)))
        return _finalize(G, config, state, wanted)


class FanDominator(Strategy):
    """D-game with biases (a, n+1) on C_{a+1} □ K_n.

    The opening takes one vertex from each of the first a layers, leaving
    only part of the last layer undominated; later moves give every
    undominated vertex an unplayed neighbour.
    """
    role = Role.DOMINATOR

    def __init__(self, a: int, n: int):
        super().__init__()
        self.a = a
        self.n = n
        self.name = f"fan:{a}:{n}"

    def check_applicable(self, G, config):
        _require_role(config, a=self.a, b=self.n + 1, starter=Role.DOMINATOR, who=self.name)
        _require(G == GraphFamilies.cycle_clique_product(self.a, self.n),
                 f"{self.name} expects C_{self.a + 1} □ K_{self.n}")

    def choose(self, G, config, state):
        done = _dominator_finisher(G, state, config.a)
        if done is not None:
            return _finalize(G, config, state, done)
        free = state.unplayed(G)
        if state.dom == 0:
            opening = [members(free & to_mask(range(g * self.n, (g + 1) * self.n)))[0]
                       for g in range(self.a)]
            return _finalize(G, config, state, opening)
        wanted: list[int] = []
        for u in members(G.full & ~G.dominated_by(state.dom)):
            if G.closed[u] & to_mask(wanted):
                continue
            pick = members(G.closed[u] & free & ~to_mask(wanted))
            if pick:
                wanted.append(pick[0])
        return _finalize(G, config, state, wanted)


# ---------------------------------------------------------------------------
# Staller strategies
# ---------------------------------------------------------------------------

class ThreatStaller(Strategy):
    """Finish a closed neighbourhood when possible, else push the closest one."""
    role = Role.STALLER

    def __init__(self):
        super().__init__()
        self.name = "grab"

    def choose(self, G, config, state):
        win = _staller_finisher(G, state, config.b)
        if win is not None:
            return _finalize(G, config, state, win)
        return _finalize(G, config, state, _staller_threats(G, state))


class StallerMinDegree(Strategy):
    """Claim N[v] of a minimum-degree vertex in one move (b >= δ+1)."""
    role = Role.STALLER

    def __init__(self):
        super().__init__()
        self.name = "mindeg"

    def check_applicable(self, G, config):
        _require(config.starter is Role.STALLER, "mindeg needs the S-game")
        _require(config.b >= G.min_degree() + 1, f"mindeg needs Staller bias >= δ+1 = {G.min_degree() + 1}")

    def choose(self, G, config, state):
        win = _staller_finisher(G, state, config.b)
        if win is not None:
            return _finalize(G, config, state, win)
        delta = G.min_degree()
        for v in range(G.n):
            if G.degree(v) == delta and G.closed[v] & state.dom == 0:
                return _finalize(G, config, state, members(G.closed[v]))
        return _finalize(G, config, state, _staller_threats(G, state))


class LargeOrderStaller(Strategy):
    """(k-1, k) games on graphs of large order.

    A pool of vertices with pairwise disjoint closed neighbourhoods is
    chosen greedily in vertex order at Staller's first move. With
    P = Δ - k + 1, Part 1 claims k pool vertices per move for k^(P-1) moves;
    Part i >= 2 keeps the first k^(P-i+1) neighbourhoods Dominator has not
    touched and adds one vertex to k of them per move for k^(P-i) moves.
    Afterwards some untouched N[x] holds P Staller vertices and at most k
    unplayed ones.
    """
    role = Role.STALLER

    def __init__(self, k: int = 2):
        super().__init__()
        if k < 2:
            raise ValueError(f"k must be >= 2, got {k}")
        self.k = k
        self.name = f"large:{k}"
        self.reset()

    def reset(self):
        super().reset()
        self._pool: list[int] | None = None
        self._moves = 0
        self._part = 0
        self._targets: list[int] = []
        self._served: list[int] = []

    @staticmethod
    def required_order(k: int, Delta: int, starter: Role) -> int:
        """Smallest order the strategy is guaranteed to win on."""
        if Delta < k:
            return 1 if starter is Role.STALLER else (k - 1) * (Delta + 1) + 1
        P = Delta - k + 1
        if starter is Role.STALLER:
            return k ** P * (Delta ** 2 + 1)
        return (k ** P + 1) * (Delta ** 2 + 1)

    def check_applicable(self, G, config):
        _require_role(config, a=self.k - 1, b=self.k, who=self.name)
        need = self.required_order(self.k, G.max_degree(), config.starter)
        _require(G.n >= need, f"{self.name} needs n(G) >= {need} here, got {G.n}")

    def _build_pool(self, G: Graph, state: GameState) -> list[int]:
        pool, blocked = [], 0
        for v in range(G.n):
            c = G.closed[v]
            if c & state.dom == 0 and c & blocked == 0:
                pool.append(v)
                blocked |= c
        logger.debug("%s: pool of %d vertices", self.name, len(pool))
        return pool

    def _untouched(self, G: Graph, state: GameState, v: int) -> bool:
        return G.closed[v] & state.dom == 0

    def choose(self, G, config, state):
        win = _staller_finisher(G, state, config.b)
        if win is not None:
            return _finalize(G, config, state, win)
        if self._pool is None:
            self._pool = self._build_pool(G, state)
        P = G.max_degree() - self.k + 1
        wanted: list[int] = []
        if P >= 1:
            self._advance(G, state, P)
            if self._part == 1:
                wanted = [v for v in self._pool
                          if not state.played >> v & 1 and self._untouched(G, state, v)]
            elif self._part <= P:
                free = state.unplayed(G)
                for s in self._targets:
                    if len(wanted) == self.k:
                        break
                    if s in self._served or not self._untouched(G, state, s):
                        continue
                    pick = members(G.closed[s] & free & ~to_mask(wanted))
                    if pick:
                        wanted.append(pick[0])
                        self._served.append(s)
        self._moves += 1
        return _finalize(G, config, state, wanted + _staller_threats(G, state))

    def _advance(self, G: Graph, state: GameState, P: int) -> None:
        """Move to the part containing Staller's next move, refreshing targets."""
        boundary = 0
        part = 0
        for i in range(1, P + 1):
            boundary += self.k ** (P - 1) if i == 1 else self.k ** (P - i)
            if self._moves < boundary:
                part = i
                break
        else:
            part = P + 1
        if part == self._part:
            return
        if part >= 2 and part <= P:
            if self._part == 1:
                survivors = [v for v in self._pool if state.sta >> v & 1]
            else:
                survivors = list(self._served)
            live = [s for s in survivors if self._untouched(G, state, s)]
            self._targets = live[: self.k ** (P - part + 1)]
            self._served = []
            logger.debug("%s: part %d with %d targets", self.name, part, len(self._targets))
        self._part = part


def _cell(i: int, j: int, n: int) -> int:
    """Vertex of (i, j) in P_m □ P_n, both coordinates 1-based."""
    return (i - 1) * n + (j - 1)


class GridStaller22(Strategy):
    """(2, 2) S-game on P_m □ P_n with m = 4k + 1.

    Move i claims (4i-2, 1) and (4i, 1); each move opens two threats that
    Dominator must answer, and the last one finishes N[(4k+1, 1)].
    """
    role = Role.STALLER

    def __init__(self, m: int, n: int):
        super().__init__()
        self.m = m
        self.n = n
        self.name = f"grid22:{m}:{n}"
        self._moves = 0

    def reset(self):
        super().reset()
        self._moves = 0

    def check_applicable(self, G, config):
        _require(self.m % 4 == 1 and self.m >= 5 and self.n >= 2,
                 f"{self.name} needs m = 4k+1 >= 5 and n >= 2")
        _require_role(config, a=2, b=2, starter=Role.STALLER, who=self.name)
        _require(G == GraphFamilies.grid(self.m, self.n), f"{self.name} expects P_{self.m} □ P_{self.n}")

    def choose(self, G, config, state):
        self._moves += 1
        win = _staller_finisher(G, state, config.b)
        if win is not None:
            return _finalize(G, config, state, win)
        i = self._moves
        scripted = []
        if 4 * i <= self.m:
            scripted = [_cell(4 * i - 2, 1, self.n), _cell(4 * i, 1, self.n)]
        return _finalize(G, config, state, scripted + _staller_threats(G, state))


class GridStaller12(Strategy):
    """(1, 2) D-game on P_m □ P_n, m >= 3, n >= 2.

    The first reply depends on Dominator's opening vertex v: on P_3 □ P_2 it
    takes an end layer or one side; elsewhere it takes a corner and its
    neighbour along the second axis, choosing a corner none of whose closed
    neighbourhood v dominates.
    """
    role = Role.STALLER

    def __init__(self, m: int, n: int):
        super().__init__()
        self.m = m
        self.n = n
        self.name = f"grid12:{m}:{n}"

    def check_applicable(self, G, config):
        _require(self.m >= 3 and self.n >= 2, f"{self.name} needs m >= 3 and n >= 2")
        _require_role(config, a=1, b=2, starter=Role.DOMINATOR, who=self.name)
        _require(G == GraphFamilies.grid(self.m, self.n), f"{self.name} expects P_{self.m} □ P_{self.n}")

    def opening(self, v: int) -> list[int]:
        m, n = self.m, self.n
        i, j = divmod(v, n)
        i, j = i + 1, j + 1
        if m == 3 and n == 2:
            if i != 2:
                return [_cell(4 - i, 1, n), _cell(4 - i, 2, n)]
            return [_cell(1, 3 - j, n), _cell(2, 3 - j, n)]
        near = {(i, j), (i - 1, j), (i + 1, j), (i, j - 1), (i, j + 1)}
        corners = (((1, 1), (2, 1), (1, 2)), ((1, n), (2, n), (1, n - 1)),
                   ((m, 1), (m - 1, 1), (m, 2)), ((m, n), (m - 1, n), (m, n - 1)))
        for corner, across, along in corners:
            if not near & {corner, across, along}:
                return [_cell(*corner, n), _cell(*along, n)]
        return [_cell(1, 1, n), _cell(1, 2, n)]

    def choose(self, G, config, state):
        win = _staller_finisher(G, state, config.b)
        if win is not None:
            return _finalize(G, config, state, win)
        if state.sta == 0 and popcount(state.dom) == 1:
            return _finalize(G, config, state, self.opening(members(state.dom)[0]))
        return _finalize(G, config, state, _staller_threats(G, state))


class TreeStaller(Strategy):
    """(σ-1, 1) S-game on a tree T with σ = σ(T) >= 2.

    On the current subtree Staller takes a lexicographically optimal star
    partition with independent leaves, starts at a star with σ leaves and
    follows arcs of the star digraph until none is left; she claims the
    centre of the last star. Dominator must answer with all its leaves, so
    that star has exactly σ - 1 of them. The game then continues on the
    component of the subtree minus that star which holds the starting star.
    """
    role = Role.STALLER

    def __init__(self):
        super().__init__()
        self.name = "tree"
        self.reset()

    def reset(self):
        super().reset()
        self._scope: VertexSet | None = None
        self._anchor = -1
        self._last_star = 0

    def check_applicable(self, G, config):
        _require(G.is_tree(), "tree needs a tree")
        sigma = StarPartitioner.star_partition_width(G)
        _require(sigma != float("inf") and sigma >= 2, f"tree needs σ(T) >= 2, got {sigma}")
        _require_role(config, a=int(sigma) - 1, b=1, starter=Role.STALLER, who="tree")

    def plan(self, G: Graph, scope: VertexSet) -> tuple[int, VertexSet, int]:
        """(centre to claim, its star, centre of the starting star) in G's labels."""
        sub, labels = G.induced_subgraph(scope)
        P = StarPartitioner.lex_optimal_star_partition(sub)
        P = StarPartitioner.independent_leaf_designation(sub, P)
        digraph = StarPartitioner.star_digraph(sub, P)
        start = next(i for i, s in enumerate(P.stars) if len(s.leaves) == P.width)
        path, cur = [start], start
        while True:
            nxt = [j for j in digraph.successors(cur) if j not in path]
            if not nxt:
                break
            cur = min(nxt)
            path.append(cur)
        end = P.stars[cur]
        star = to_mask(labels[v] for v in (end.center, *end.leaves))
        logger.debug("tree: path of %d stars, claiming centre %d", len(path), labels[end.center])
        return labels[end.center], star, labels[P.stars[start].center]

    def choose(self, G, config, state):
        win = _staller_finisher(G, state, config.b)
        if win is not None:
            return _finalize(G, config, state, win)
        if self._scope is None:
            scope = G.full
        else:
            comps = [c for c in G.components(self._scope & ~self._last_star) if c >> self._anchor & 1]
            scope = comps[0] if comps else 0
        if popcount(scope) < 2 or G.induced_subgraph(scope)[0].min_degree() == 0:
            return _finalize(G, config, state, _staller_threats(G, state))
        center, star, anchor = self.plan(G, scope)
        self._scope, self._last_star, self._anchor = scope, star, anchor
        return _finalize(G, config, state, [center] + _staller_threats(G, state))


class RandomStrategy(Strategy):
    """Uniformly random legal moves from a seeded generator."""

    def __init__(self, role: Role, seed: int = 0):
        super().__init__()
        self.role = Role(role)
        self.seed = seed
        self.name = f"random:{seed}"
        self.rng = np.random.default_rng(seed)

    def reset(self):
        super().reset()
        self.rng = np.random.default_rng(self.seed)

    def choose(self, G, config, state):
        free = np.array(members(state.unplayed(G)))
        k = GameRules.move_size(G, state, config)
        return tuple(sorted(int(v) for v in self.rng.choice(free, size=k, replace=False)))


# ---------------------------------------------------------------------------
# Registry
# ---------------------------------------------------------------------------

def _int_args(name: str, args: list[str], count: int, defaults: tuple[int, ...] = ()) -> list[int]:
    if len(args) > count:
        raise ValueError(f"strategy '{name}' takes at most {count} parameters, got {len(args)}")
    try:
        values = [int(x) for x in args]
    except ValueError as e:
        raise ValueError(f"strategy '{name}' expects integer parameters, got {args}") from e
    values += list(defaults[len(values):])
    if len(values) < count:
        raise ValueError(f"strategy '{name}' needs {count} parameters, got {len(args)}")
    return values


def _sdr(args: list[str], solver) -> Strategy:
    if len(args) < 2:
        raise ValueError("strategy 'sdr' needs 'sdr:<t>:<graph H>'")
    t = _int_args("sdr", args[:1], 1)[0]
    text = ":".join(args[1:])
    H = FamilyPresets.parse(text) if FamilyPresets.is_family_spec(text) else GraphCodec.parse_graph6(text)
    return SdrLineGraphDominator(H, t)


class StrategyRegistry:
    """Build strategies from ``name[:param[:param...]]`` strings."""

    _DOMINATOR: dict[str, Callable[[list[str], ExactSolver | None], Strategy]] = {
        "best": lambda args, solver: BestResponse(Role.DOMINATOR, solver),
        "pairing": lambda args, solver: PairingDominator(),
        "local": lambda args, solver: LocalDominationDominator(*_int_args("local", args, 1, (1,))),
        "sdr": _sdr,
        "domset": lambda args, solver: DominatorDominatingSet(),
        "neighbor": lambda args, solver: DominatorNeighborResponder(),
        "star": lambda args, solver: StarPartitionDominator(),
        "fan": lambda args, solver: FanDominator(*_int_args("fan", args, 2)),
        "random": lambda args, solver: RandomStrategy(Role.DOMINATOR, *_int_args("random", args, 1, (0,))),
    }
    _STALLER: dict[str, Callable[[list[str], ExactSolver | None], Strategy]] = {
        "best": lambda args, solver: BestResponse(Role.STALLER, solver),
        "large": lambda args, solver: LargeOrderStaller(*_int_args("large", args, 1, (2,))),
        "grid22": lambda args, solver: GridStaller22(*_int_args("grid22", args, 2)),
        "grid12": lambda args, solver: GridStaller12(*_int_args("grid12", args, 2)),
        "tree": lambda args, solver: TreeStaller(),
        "mindeg": lambda args, solver: StallerMinDegree(),
        "grab": lambda args, solver: ThreatStaller(),
        "random": lambda args, solver: RandomStrategy(Role.STALLER, *_int_args("random", args, 1, (0,))),
    }

    @staticmethod
    def names(role: Role) -> list[str]:
        table = StrategyRegistry._DOMINATOR if Role(role) is Role.DOMINATOR else StrategyRegistry._STALLER
        return sorted(table)

    @staticmethod
    def build(spec: str, role: Role, solver: ExactSolver | None = None) -> Strategy:
        """e.g. ``build("local:2", Role.DOMINATOR)`` or ``build("grid12:3:2", Role.STALLER)``."""
        role = Role(role)
        name, *args = spec.strip().split(":")
        table = StrategyRegistry._DOMINATOR if role is Role.DOMINATOR else StrategyRegistry._STALLER
        if name not in table:
            raise ValueError(f"Unknown {role.name.lower()} strategy '{name}'. "
                             f"Available: {', '.join(sorted(table))}")
        return table[name](args, solver)
