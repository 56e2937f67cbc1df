#!/usr/bin/env python3
"""
Command line for the biased Maker-Breaker domination game.

Subcommands: generate, solve, threshold, invariant, match and verify-paper.
Graph arguments accept a file path (.json, .g6 or edge list), a family spec
such as ``grid:3,2`` or an inline graph6 string.
"""
from __future__ import annotations
import argparse
import json
import logging
import sys
from pathlib import Path

from mbd_modular.battery import Battery, CheckResult
from mbd_modular.config import BatteryConfig, SolverConfig
from mbd_modular.domination import LocalDomination
from mbd_modular.errors import (
    BudgetExceeded,
    GraphFormatError,
    GraphSizeError,
    IllegalMoveError,
    InvariantPreconditionError,
    StrategyNotApplicable,
    TerminalStateError,
)
from mbd_modular.game import GameConfig, Role, play_match
from mbd_modular.generators import FamilyPresets
from mbd_modular.graphs import Graph
from mbd_modular.invariants import GraphInvariants
from mbd_modular.io import GraphCodec
from mbd_modular.solver import ExactSolver
from mbd_modular.stars import StarPartitioner
from mbd_modular.strategies import StrategyRegistry
from mbd_modular.thresholds import KINDS, Thresholds, format_value

logger = logging.getLogger("mbd")

EXIT_OK = 0
EXIT_BATTERY_FAILED = 1
EXIT_BAD_INPUT = 2
EXIT_NOT_APPLICABLE = 3
EXIT_BUDGET = 4
EXIT_ILLEGAL_MOVE = 5

INVARIANT_NAMES = ("gamma", "nu", "tau", "alpha", "ltilde:<l>", "sigma", "lexstar")


def _solver(a: argparse.Namespace) -> ExactSolver:
    overrides = {}
    if a.workers is not None:
        overrides["workers"] = a.workers
    if a.budget is not None:
        overrides["node_budget"] = a.budget
    return ExactSolver(SolverConfig.from_env(**overrides))


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).expanduser().write_text(text, encoding="utf-8")
        print(f"Wrote {out}", file=sys.stderr)
    else:
        print(text, end="" if text.endswith("\n") else "\n")


def cmd_generate(a: argparse.Namespace) -> int:
    if a.params or ":" not in a.family:
        G = FamilyPresets.build(a.family, a.params)
    else:
        G = FamilyPresets.parse(a.family)
    if a.format == "graph6":
        text = GraphCodec.write_graph6(G) + "\n"
    elif a.format == "edges":
        text = GraphCodec.write_edge_list(G)
    else:
        text = json.dumps(GraphCodec.to_json(G), indent=2, sort_keys=True) + "\n"
    _emit(text, a.out)
    return EXIT_OK


def cmd_solve(a: argparse.Namespace) -> int:
    G = GraphCodec.load_graph(a.graph)
    game = GameConfig(a.a, a.b, Role.parse(a.starter))
    solver = _solver(a)
    outcome = solver.solve(G, game)
    logger.info("solved %s on n=%d after %d states", game.label(), G.n, solver.last_visited)
    if a.json:
        print(json.dumps({
            "graph": GraphCodec.write_graph6(G),
            "a": game.a,
            "b": game.b,
            "starter": game.starter.value,
            "winner": outcome.value,
        }, sort_keys=True))
    else:
        print(outcome.value)
    return EXIT_OK


def cmd_threshold(a: argparse.Namespace) -> int:
    G = GraphCodec.load_graph(a.graph)
    thresholds = Thresholds(_solver(a))
    if a.table is not None:
        table = thresholds.table(G, a.table)
        if a.csv:
            _emit(table.to_frame().to_csv(), a.out)
        else:
            _emit(json.dumps(table.to_json(), indent=2, sort_keys=True) + "\n", a.out)
        return EXIT_OK
    if a.kind is None or a.index is None:
        raise ValueError("threshold needs --kind and --index, or --table")
    print(format_value(thresholds.threshold(G, a.kind, a.index)))
    return EXIT_OK


def compute_invariant(G: Graph, name: str):
    """Value of a named invariant; ``lexstar`` yields the partition as JSON data."""
    head, _, param = name.partition(":")
    if head == "gamma":
        return GraphInvariants.domination_number(G)
    if head == "nu":
        return GraphInvariants.matching_number(G)
    if head == "tau":
        return GraphInvariants.vertex_cover_number(G)
    if head == "alpha":
        return GraphInvariants.independence_number(G)
    if head == "ltilde":
        if not param.strip().isdigit():
            raise ValueError(f"ltilde needs a positive index, e.g. ltilde:2 (got '{name}')")
        return LocalDomination.local_domination_number(G, int(param))
    if head == "sigma":
        return format_value(StarPartitioner.star_partition_width(G))
    if head == "lexstar":
        return StarPartitioner.lex_optimal_star_partition(G).to_json()
    raise ValueError(f"Unknown invariant '{name}'. Available: {', '.join(INVARIANT_NAMES)}")


def cmd_invariant(a: argparse.Namespace) -> int:
    G = GraphCodec.load_graph(a.graph)
    value = compute_invariant(G, a.name)
    if isinstance(value, (list, dict)):
        print(json.dumps(value, sort_keys=True))
    else:
        print(value)
    return EXIT_OK


def cmd_match(a: argparse.Namespace) -> int:
    G = GraphCodec.load_graph(a.graph)
    game = GameConfig(a.a, a.b, Role.parse(a.starter))
    solver = _solver(a)
    dominator = StrategyRegistry.build(a.dstrat, Role.DOMINATOR, solver=solver)
    staller = StrategyRegistry.build(a.sstrat, Role.STALLER, solver=solver)
    transcript, outcome = play_match(G, game, dominator, staller)
    if a.transcript:
        Path(a.transcript).expanduser().write_text(transcript.to_text(), encoding="utf-8")
        print(f"Wrote {a.transcript}", file=sys.stderr)
    if a.json:
        print(transcript.dumps())
    else:
        print(transcript.to_text(), end="")
    return EXIT_OK


def _progress(i: int, total: int, claim_id: str, results: list[CheckResult]) -> None:
    statuses = sorted({r.status for r in results}) or ["empty"]
    print(f"[{i}/{total}] {claim_id} ... {','.join(statuses)}", file=sys.stderr)


def cmd_verify(a: argparse.Namespace) -> int:
    cfg = BatteryConfig(suite=a.suite, workers=a.workers, include_timing=not a.no_timing,
                        only=tuple(a.only or ()))
    battery = Battery(cfg)
    if not battery.specs():
        raise ValueError(f"No checks selected (suite {a.suite}, only {list(cfg.only)})")
    report = battery.run(progress=_progress)
    text = report.dumps(include_timing=cfg.include_timing) + "\n"
    if a.json:
        Path(a.json).expanduser().write_text(text, encoding="utf-8")
        print(f"Wrote report to: {a.json}", file=sys.stderr)
    else:
        print(text, end="")
    if a.csv:
        report.to_csv(a.csv)
    summary = report.summary()
    print(", ".join(f"{k}={v}" for k, v in summary.items()), file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_BATTERY_FAILED


def _add_game_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--a", type=int, required=True, help="Dominator bias.")
    p.add_argument("--b", type=int, required=True, help="Staller bias.")
    p.add_argument("--starter", type=str, default="D", help="Who moves first, D or S (default: %(default)s).")


def _add_solver_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--budget", type=int, default=None,
                   help="Solver node budget (default: $MBD_NODE_BUDGET or 10^8).")
    p.add_argument("--workers", type=int, default=None,
                   help="Processes for the root of each search (default: $MBD_WORKERS or 1).")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(description="Exact solving, thresholds and strategies for the "
                                            "biased Maker-Breaker domination game.")
    p.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="Write a graph from a named family.")
    g.add_argument("family", type=str,
                   help=f"Family name or spec like grid:3,2. Available: {', '.join(sorted(FamilyPresets.list()))}")
    g.add_argument("params", type=int, nargs="*", help="Family parameters.")
    g.add_argument("--format", choices=("graph6", "edges", "json"), default="graph6",
                   help="Output format (default: %(default)s).")
    g.add_argument("--out", type=str, default=None, help="Write to a file instead of stdout.")
    g.set_defaults(func=cmd_generate)

    s = sub.add_parser("solve", help="Decide the winner of one game.")
    s.add_argument("graph", type=str, help="Graph file, family spec or graph6 string.")
    _add_game_args(s)
    _add_solver_args(s)
    s.add_argument("--json", action="store_true", help="Print a JSON object instead of the winner letter.")
    s.set_defaults(func=cmd_solve)

    t = sub.add_parser("threshold", help="Compute one threshold or a full table.")
    t.add_argument("graph", type=str, help="Graph file, family spec or graph6 string.")
    t.add_argument("--kind", choices=tuple(KINDS), default=None, help="Threshold kind.")
    t.add_argument("--index", type=int, default=None, help="Fixed bias of the other player.")
    t.add_argument("--table", type=int, default=None, metavar="MAX_INDEX",
                   help="Compute all four thresholds for indices 1..MAX_INDEX.")
    t.add_argument("--csv", action="store_true", help="Write the table as CSV instead of JSON.")
    t.add_argument("--out", type=str, default=None, help="Write the table to a file.")
    _add_solver_args(t)
    t.set_defaults(func=cmd_threshold)

    i = sub.add_parser("invariant", help="Compute a graph invariant.")
    i.add_argument("graph", type=str, help="Graph file, family spec or graph6 string.")
    i.add_argument("--name", type=str, required=True, help=f"One of: {', '.join(INVARIANT_NAMES)}.")
    i.set_defaults(func=cmd_invariant)

    m = sub.add_parser("match", help="Play two named strategies against each other.")
    m.add_argument("graph", type=str, help="Graph file, family spec or graph6 string.")
    _add_game_args(m)
    m.add_argument("--dstrat", type=str, default="best",
                   help=f"Dominator strategy. Available: {', '.join(StrategyRegistry.names(Role.DOMINATOR))}")
    m.add_argument("--sstrat", type=str, default="best",
                   help=f"Staller strategy. Available: {', '.join(StrategyRegistry.names(Role.STALLER))}")
    m.add_argument("--transcript", type=str, default=None, help="Also write the transcript to this file.")
    m.add_argument("--json", action="store_true", help="Print the transcript as JSON.")
    _add_solver_args(m)
    m.set_defaults(func=cmd_match)

    v = sub.add_parser("verify-paper", help="Run the regression battery of known results.")
    v.add_argument("--suite", choices=("quick", "full"), default="quick", help="Suite tier (default: %(default)s).")
    v.add_argument("--json", type=str, default=None, help="Write the JSON report here instead of stdout.")
    v.add_argument("--csv", type=str, default=None, help="Also write the report as CSV.")
    v.add_argument("--workers", type=int, default=1, help="Parallel check processes (default: %(default)s).")
    v.add_argument("--only", action="append", default=None, help="Claim id prefix to run (can repeat).")
    v.add_argument("--no-timing", action="store_true", help="Omit wall times for byte-identical reports.")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    a = build_parser().parse_args(argv)
    level = (logging.WARNING, logging.INFO, logging.DEBUG)[min(a.verbose, 2)]
    logging.basicConfig(level=level, format="%(asctime)s %(levelname)s %(name)s: %(message)s",
                        stream=sys.stderr)
    try:
        return a.func(a)
    except StrategyNotApplicable as e:
        print(f"Strategy not applicable: {e}", file=sys.stderr)
        return EXIT_NOT_APPLICABLE
    except BudgetExceeded as e:
        print(str(e), file=sys.stderr)
        return EXIT_BUDGET
    except (IllegalMoveError, TerminalStateError) as e:
        print(f"Illegal move: {e}", file=sys.stderr)
        return EXIT_ILLEGAL_MOVE
    except (GraphFormatError, GraphSizeError, InvariantPreconditionError, ValueError) as e:
        print(str(e), file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
