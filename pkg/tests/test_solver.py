import pytest

from mbd_modular.census import GraphCensus
from mbd_modular.config import BUDGET_ENV_VAR, DEFAULT_NODE_BUDGET, WORKERS_ENV_VAR, SolverConfig
from mbd_modular.errors import BudgetExceeded
from mbd_modular.game import GameConfig, GameState, Outcome, Role
from mbd_modular.generators import GraphFamilies
from mbd_modular.graphs import to_mask
from mbd_modular.solver import ExactSolver, ReferenceSolver

D, S = Role.DOMINATOR, Role.STALLER


@pytest.fixture
def solver():
    return ExactSolver(SolverConfig(node_budget=10**7))


# ---------------------------------------------------------------------------
# Known values
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("graph, a, b, starter, expected", [
    (GraphFamilies.path(6), 1, 1, D, Outcome.DOMINATOR_WIN),
    (GraphFamilies.path(3), 1, 1, S, Outcome.STALLER_WIN),
    (GraphFamilies.path(5), 1, 1, S, Outcome.STALLER_WIN),
    (GraphFamilies.path(4), 1, 1, S, Outcome.DOMINATOR_WIN),
    (GraphFamilies.grid(2, 2), 1, 2, D, Outcome.DOMINATOR_WIN),
    (GraphFamilies.grid(2, 2), 1, 3, D, Outcome.STALLER_WIN),
    (GraphFamilies.path(1), 1, 1, D, Outcome.DOMINATOR_WIN),
    (GraphFamilies.path(1), 1, 1, S, Outcome.STALLER_WIN),
])
def test_known_game_values(solver, graph, a, b, starter, expected):
    assert solver.solve(graph, GameConfig(a, b, starter)) is expected


def test_paths_dominator_start_always_dominator(solver):
    for n in range(1, 11):
        assert solver.solve(GraphFamilies.path(n), GameConfig(1, 1, D)) is Outcome.DOMINATOR_WIN


def test_solve_state_from_midgame(solver):
    P5 = GraphFamilies.path(5)
    # Staller to move holding 0: claiming 1 wins at once
    state = GameState(dom=to_mask([3]), sta=to_mask([0]), to_move=S)
    assert solver.solve_state(P5, GameConfig(1, 1, S), state) is Outcome.STALLER_WIN


# ---------------------------------------------------------------------------
# Agreement with the plain minimax
# ---------------------------------------------------------------------------

class TestReferenceAgreement:
    def test_small_census(self, solver):
        ref = ReferenceSolver()
        for G in GraphCensus.all_graphs(5):
            for a, b in ((1, 1), (1, 2), (2, 1)):
                for starter in (D, S):
                    cfg = GameConfig(a, b, starter)
                    assert solver.solve(G, cfg) is ref.solve(G, cfg), (G.edges, cfg.label())

    def test_pruning_switches_do_not_change_values(self):
        plain = ExactSolver(SolverConfig(node_budget=10**7, prune_irrelevant=False, early_dominator_stop=False))
        fast = ExactSolver(SolverConfig(node_budget=10**7, root_symmetry=True))
        for G in GraphCensus.connected_graphs(5):
            for starter in (D, S):
                cfg = GameConfig(1, 2, starter)
                assert plain.solve(G, cfg) is fast.solve(G, cfg)

    def test_worker_pool_at_root(self):
        pooled = ExactSolver(SolverConfig(node_budget=10**7, workers=2))
        serial = ExactSolver(SolverConfig(node_budget=10**7))
        for G in (GraphFamilies.path(5), GraphFamilies.cycle(6)):
            cfg = GameConfig(1, 1, S)
            assert pooled.solve(G, cfg) is serial.solve(G, cfg)


# ---------------------------------------------------------------------------
# Budget and configuration
# ---------------------------------------------------------------------------

class TestBudget:
    def test_budget_exhaustion_raises(self):
        tiny = ExactSolver(SolverConfig(node_budget=1))
        with pytest.raises(BudgetExceeded) as exc:
            tiny.solve(GraphFamilies.path(6), GameConfig(1, 1, D))
        assert exc.value.budget == 1
        assert "undecided: resource" in str(exc.value)

    def test_reference_budget(self):
        with pytest.raises(BudgetExceeded):
            ReferenceSolver(node_budget=3).solve(GraphFamilies.path(6), GameConfig(1, 1, D))

    def test_budget_from_environment(self, monkeypatch):
        monkeypatch.setenv(BUDGET_ENV_VAR, "1_000")
        assert SolverConfig().node_budget == 1000
        monkeypatch.setenv(BUDGET_ENV_VAR, "lots")
        with pytest.raises(ValueError):
            SolverConfig()
        monkeypatch.delenv(BUDGET_ENV_VAR)
        assert SolverConfig.from_env(workers=2).node_budget == DEFAULT_NODE_BUDGET

    def test_from_env_reads_budget_and_workers(self, monkeypatch):
        monkeypatch.setenv(BUDGET_ENV_VAR, "5000")
        monkeypatch.setenv(WORKERS_ENV_VAR, "3")
        cfg = SolverConfig.from_env()
        assert (cfg.node_budget, cfg.workers) == (5000, 3)
        assert SolverConfig.from_env(workers=1, node_budget=7).workers == 1
        assert SolverConfig.from_env(node_budget=7).node_budget == 7
        monkeypatch.setenv(WORKERS_ENV_VAR, "0")
        with pytest.raises(ValueError, match=WORKERS_ENV_VAR):
            SolverConfig.from_env()
        monkeypatch.delenv(WORKERS_ENV_VAR)
        assert SolverConfig.from_env().workers == 1

    def test_invalid_config(self):
        with pytest.raises(ValueError):
            SolverConfig(node_budget=0)
        with pytest.raises(ValueError):
            SolverConfig(workers=0)

    def test_visit_counters(self, solver):
        solver.solve(GraphFamilies.cycle(6), GameConfig(1, 1, S))
        assert solver.last_visited >= 1
        assert solver.total_visited >= solver.last_visited
        solver.clear()


def test_solver_benchmark(benchmark):
    G = GraphFamilies.grid(3, 3)
    cfg = GameConfig(1, 1, S)

    def run():
        return ExactSolver(SolverConfig(node_budget=10**7)).solve(G, cfg)

    assert benchmark(run) in (Outcome.DOMINATOR_WIN, Outcome.STALLER_WIN)
