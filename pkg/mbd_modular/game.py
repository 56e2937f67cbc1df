"""Rules of the (a, b)-biased Maker-Breaker domination game and match play.

Dominator claims ``a`` unplayed vertices per move, Staller claims ``b``; a
player facing fewer unplayed vertices than their bias claims all of them.
Staller wins as soon as she owns a whole closed neighbourhood N[v];
Dominator wins as soon as his vertices dominate the graph.
"""
from __future__ import annotations
import copy
import json
import logging
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import TYPE_CHECKING, Iterable

from .errors import IllegalMoveError, StrategyNotApplicable, TerminalStateError, TranscriptFormatError
from .graphs import Graph, VertexSet, members, popcount, to_mask

if TYPE_CHECKING:
    from .strategies import Strategy

__all__ = [
    "Role", "Outcome", "GameConfig", "GameState", "GameRules",
    "MatchTranscript", "play_match", "explore_outcomes", "TRANSCRIPT_SCHEMA",
]

logger = logging.getLogger(__name__)

TRANSCRIPT_SCHEMA = "mbd.transcript/1"


class Role(str, Enum):
    DOMINATOR = "D"
    STALLER = "S"

    @property
    def other(self) -> "Role":
        return Role.STALLER if self is Role.DOMINATOR else Role.DOMINATOR

    @classmethod
    def parse(cls, text: str) -> "Role":
        key = text.strip().upper()
        if key in ("D", "DOMINATOR"):
            return cls.DOMINATOR
        if key in ("S", "STALLER"):
            return cls.STALLER
        raise ValueError(f"Unknown role '{text}'. Available: D, S")


class Outcome(str, Enum):
    DOMINATOR_WIN = "D"
    STALLER_WIN = "S"

    @property
    def winner(self) -> Role:
        return Role(self.value)

    @classmethod
    def for_role(cls, role: Role) -> "Outcome":
        return cls(role.value)


@dataclass(frozen=True)
class GameConfig:
    """Biases and starting player. ``starter=DOMINATOR`` is the D-game."""
    a: int
    b: int
    starter: Role = Role.DOMINATOR

    def __post_init__(self):
        if self.a < 1 or self.b < 1:
            raise ValueError(f"biases must be >= 1, got a={self.a}, b={self.b}")
        object.__setattr__(self, "starter", Role(self.starter))

    def bias(self, role: Role) -> int:
        return self.a if role is Role.DOMINATOR else self.b

    def initial_state(self) -> "GameState":
        return GameState(0, 0, self.starter)

    def label(self) -> str:
        return f"({self.a},{self.b}) {self.starter.value}-game"


@dataclass(frozen=True)
class GameState:
    """Claimed vertex sets of both players and the side to move."""
    dom: VertexSet = 0
    sta: VertexSet = 0
    to_move: Role = Role.DOMINATOR

    def __post_init__(self):
        if self.dom & self.sta:
            raise IllegalMoveError(f"claimed sets overlap on {list(members(self.dom & self.sta))}")

    @property
    def played(self) -> VertexSet:
        return self.dom | self.sta

    def unplayed(self, G: Graph) -> VertexSet:
        return G.full & ~(self.dom | self.sta)

    def owned(self, role: Role) -> VertexSet:
        return self.dom if role is Role.DOMINATOR else self.sta


class GameRules:
    """Move generation, transitions and win detection."""

    @staticmethod
    def staller_has_won(G: Graph, state: GameState) -> bool:
        sta = state.sta
        return any(c & sta == c for c in G.closed)

    @staticmethod
    def dominator_has_won(G: Graph, state: GameState) -> bool:
        return G.dominates(state.dom)

    @staticmethod
    def is_terminal(G: Graph, state: GameState) -> Outcome | None:
        if GameRules.staller_has_won(G, state):
            return Outcome.STALLER_WIN
        if GameRules.dominator_has_won(G, state):
            return Outcome.DOMINATOR_WIN
        if state.unplayed(G) == 0:
            # unreachable: on a full board Dominator meets every N[v] Staller does not own
            return Outcome.DOMINATOR_WIN
        return None

    @staticmethod
    def move_size(G: Graph, state: GameState, config: GameConfig) -> int:
        return min(config.bias(state.to_move), popcount(state.unplayed(G)))

    @staticmethod
    def legal_moves(G: Graph, state: GameState, config: GameConfig) -> list[tuple[int, ...]]:
        """All moves of the side to move, in lexicographic order."""
        if GameRules.is_terminal(G, state) is not None:
            raise TerminalStateError("no legal moves: the game is over")
        free = members(state.unplayed(G))
        return list(combinations(free, min(config.bias(state.to_move), len(free))))

    @staticmethod
    def check_move(G: Graph, state: GameState, config: GameConfig, move: Iterable[int]) -> VertexSet:
        """Validate ``move`` and return it as a vertex set."""
        move = tuple(move)
        mask = to_mask(move)
        if len(move) != popcount(mask):
            raise IllegalMoveError(f"move {move} repeats a vertex")
        if any(not 0 <= v < G.n for v in move):
            raise IllegalMoveError(f"move {move} has a vertex outside 0..{G.n - 1}")
        if mask & state.played:
            raise IllegalMoveError(f"move {move} claims played vertices {list(members(mask & state.played))}")
        need = GameRules.move_size(G, state, config)
        if len(move) != need:
            raise IllegalMoveError(f"move {move} has {len(move)} vertices, {need} required")
        return mask

    @staticmethod
    def apply_move(state: GameState, move: Iterable[int]) -> GameState:
        """Claim ``move`` for the side to move and pass the turn.

        Only disjointness is checked here; cardinality needs the config and is
        checked by :meth:`check_move`.
        """
        move = tuple(move)
        mask = to_mask(move)
        if len(move) != popcount(mask) or mask & state.played:
            raise IllegalMoveError(f"move {move} overlaps claimed vertices")
        if state.to_move is Role.DOMINATOR:
            return GameState(state.dom | mask, state.sta, Role.STALLER)
        return GameState(state.dom, state.sta | mask, Role.DOMINATOR)

    @staticmethod
    def play(G: Graph, state: GameState, config: GameConfig, move: Iterable[int]) -> GameState:
        """Checked transition: :meth:`check_move` then :meth:`apply_move`."""
        GameRules.check_move(G, state, config, move)
        return GameRules.apply_move(state, move)


@dataclass
class MatchTranscript:
    """Moves of one match in order, plus the final outcome."""
    config: GameConfig
    moves: list[tuple[Role, tuple[int, ...]]] = field(default_factory=list)
    outcome: Outcome | None = None
    dominator: str = ""
    staller: str = ""

    def to_text(self) -> str:
        lines = [f"{role.value} {{{','.join(map(str, move))}}}" for role, move in self.moves]
        if self.outcome is not None:
            lines.append(f"RESULT {self.outcome.value}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "schema": TRANSCRIPT_SCHEMA,
            "a": self.config.a,
            "b": self.config.b,
            "starter": self.config.starter.value,
            "dominator": self.dominator,
            "staller": self.staller,
            "moves": [{"player": role.value, "vertices": list(move)} for role, move in self.moves],
            "result": None if self.outcome is None else self.outcome.value,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)

    @staticmethod
    def parse_text(text: str, config: GameConfig) -> "MatchTranscript":
        """Inverse of :meth:`to_text`; malformed lines raise ``TranscriptFormatError``."""
        t = MatchTranscript(config)
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line:
                continue
            if t.outcome is not None:
                raise TranscriptFormatError(f"text after the RESULT line: {line!r}", lineno)
            parts = line.split()
            if parts[0] == "RESULT":
                if len(parts) != 2 or parts[1] not in ("D", "S"):
                    raise TranscriptFormatError(f"expected 'RESULT D' or 'RESULT S', got {line!r}", lineno)
                t.outcome = Outcome(parts[1])
                continue
            role, _, body = line.partition(" ")
            body = body.strip()
            if role not in ("D", "S") or not (body.startswith("{") and body.endswith("}")):
                raise TranscriptFormatError(f"expected 'D {{u,v}}' or 'S {{u,v}}', got {line!r}", lineno)
            try:
                move = tuple(int(v) for v in body[1:-1].split(",") if v.strip())
            except ValueError as e:
                raise TranscriptFormatError(f"non-integer vertex in {line!r}", lineno) from e
            if not move or any(v < 0 for v in move) or len(set(move)) != len(move):
                raise TranscriptFormatError(f"move must list distinct vertices >= 0, got {line!r}", lineno)
            t.moves.append((Role.parse(role), move))
        return t


def play_match(
    G: Graph,
    config: GameConfig,
    dominator: "Strategy",
    staller: "Strategy",
) -> tuple[MatchTranscript, Outcome]:
    """Play one match between two strategies.

    Raises
    ------
    StrategyNotApplicable
        When a strategy's preconditions fail on (G, config).
    IllegalMoveError
        When a strategy proposes an illegal move; the message names it.
    """
    if dominator.role is not Role.DOMINATOR or staller.role is not Role.STALLER:
        raise StrategyNotApplicable("strategies must be passed as (dominator, staller)")
    for strat in (dominator, staller):
        strat.check_applicable(G, config)
        strat.reset()
    transcript = MatchTranscript(config, dominator=dominator.name, staller=staller.name)
    state = config.initial_state()
    outcome = GameRules.is_terminal(G, state)
    while outcome is None:
        strat = dominator if state.to_move is Role.DOMINATOR else staller
        move = tuple(sorted(strat.choose(G, config, state)))
        try:
            GameRules.check_move(G, state, config, move)
        except IllegalMoveError as e:
            raise IllegalMoveError(f"strategy '{strat.name}' proposed an illegal move: {e}") from e
        transcript.moves.append((state.to_move, move))
        state = GameRules.apply_move(state, move)
        outcome = GameRules.is_terminal(G, state)
    transcript.outcome = outcome
    logger.debug("match %s vs %s on n=%d %s -> %s in %d moves",
                 dominator.name, staller.name, G.n, config.label(), outcome.value, len(transcript.moves))
    return transcript, outcome


def explore_outcomes(G: Graph, config: GameConfig, strategy: "Strategy") -> set[Outcome]:
    """Outcomes reachable when ``strategy`` meets every possible opponent.

    The opponent branches over all legal moves; the strategy is deep-copied at
    each branch so its memory follows one line of play. Exponential: meant for
    graphs with a handful of vertices.
    """
    strategy.check_applicable(G, config)
    strategy.reset()
    found: set[Outcome] = set()

    def walk(state: GameState, strat: "Strategy") -> None:
        outcome = GameRules.is_terminal(G, state)
        if outcome is not None:
            found.add(outcome)
            return
        if state.to_move is strat.role:
            move = strat.choose(G, config, state)
            try:
                nxt = GameRules.play(G, state, config, tuple(sorted(move)))
            except IllegalMoveError as e:
                raise IllegalMoveError(f"strategy '{strat.name}' proposed an illegal move: {e}") from e
            walk(nxt, strat)
            return
        for move in GameRules.legal_moves(G, state, config):
            walk(GameRules.apply_move(state, move), copy.deepcopy(strat))

    walk(config.initial_state(), strategy)
    return found
