import pytest

from mbd_modular.config import SolverConfig
from mbd_modular.errors import IllegalMoveError, StrategyNotApplicable
from mbd_modular.game import GameConfig, GameRules, Outcome, Role, explore_outcomes, play_match
from mbd_modular.generators import GraphFamilies
from mbd_modular.solver import ExactSolver
from mbd_modular.strategies import (
    BestResponse,
    DominatorDominatingSet,
    DominatorNeighborResponder,
    FanDominator,
    GridStaller12,
    GridStaller22,
    LargeOrderStaller,
    LocalDominationDominator,
    PairingDominator,
    RandomStrategy,
    SdrLineGraphDominator,
    StallerMinDegree,
    StarPartitionDominator,
    Strategy,
    StrategyRegistry,
    ThreatStaller,
    TreeStaller,
)

D, S = Role.DOMINATOR, Role.STALLER


@pytest.fixture
def solver():
    return ExactSolver(SolverConfig(node_budget=10**7))


class _Stubborn(Strategy):
    role = Role.STALLER
    name = "stubborn"

    def choose(self, G, config, state):
        return (0,)


# ---------------------------------------------------------------------------
# play_match
# ---------------------------------------------------------------------------

class TestPlayMatch:
    def test_pairing_beats_best_on_p4(self, solver):
        G = GraphFamilies.path(4)
        transcript, outcome = play_match(G, GameConfig(1, 1, D), PairingDominator(), BestResponse(S, solver))
        assert outcome is Outcome.DOMINATOR_WIN
        assert transcript.outcome is outcome
        assert transcript.moves[0][0] is D

    def test_tree_staller_beats_best_on_claw(self, solver):
        G = GraphFamilies.star(3)
        _, outcome = play_match(G, GameConfig(2, 1, S), BestResponse(D, solver), TreeStaller())
        assert outcome is Outcome.STALLER_WIN

    def test_single_vertex_is_one_move(self):
        G = GraphFamilies.path(1)
        transcript, outcome = play_match(G, GameConfig(1, 1, D), DominatorDominatingSet(), ThreatStaller())
        assert outcome is Outcome.DOMINATOR_WIN
        assert transcript.moves == [(D, (0,))]

    def test_best_response_reproduces_solver(self, solver):
        for G, cfg in ((GraphFamilies.path(5), GameConfig(1, 1, S)),
                       (GraphFamilies.path(6), GameConfig(1, 1, D)),
                       (GraphFamilies.grid(2, 2), GameConfig(1, 3, D))):
            _, outcome = play_match(G, cfg, BestResponse(D, solver), BestResponse(S, solver))
            assert outcome is solver.solve(G, cfg)

    def test_inapplicable_strategy(self):
        with pytest.raises(StrategyNotApplicable, match="perfect matching"):
            play_match(GraphFamilies.path(5), GameConfig(1, 1, D), PairingDominator(), ThreatStaller())

    def test_roles_must_match(self):
        with pytest.raises(StrategyNotApplicable):
            play_match(GraphFamilies.path(4), GameConfig(1, 1, D), ThreatStaller(), PairingDominator())

    def test_illegal_move_names_strategy(self):
        with pytest.raises(IllegalMoveError, match="stubborn"):
            play_match(GraphFamilies.path(4), GameConfig(1, 1, D), PairingDominator(), _Stubborn())

    def test_random_play_is_reproducible(self):
        G = GraphFamilies.cycle(7)
        cfg = GameConfig(1, 1, S)
        first, _ = play_match(G, cfg, RandomStrategy(D, seed=3), RandomStrategy(S, seed=4))
        second, _ = play_match(G, cfg, RandomStrategy(D, seed=3), RandomStrategy(S, seed=4))
        assert first.moves == second.moves


# ---------------------------------------------------------------------------
# Dominator strategies against every opponent
# ---------------------------------------------------------------------------

class TestDominatorStrategies:
    @pytest.mark.parametrize("n", [4, 6])
    @pytest.mark.parametrize("starter", [D, S])
    def test_pairing(self, n, starter):
        G = GraphFamilies.path(n)
        assert explore_outcomes(G, GameConfig(1, 1, starter), PairingDominator()) == {Outcome.DOMINATOR_WIN}
        C = GraphFamilies.cycle(n + 2)
        assert explore_outcomes(C, GameConfig(1, 1, starter), PairingDominator()) == {Outcome.DOMINATOR_WIN}

    def test_pairing_with_given_matching(self):
        G = GraphFamilies.path(4)
        strat = PairingDominator([(0, 1), (2, 3)])
        assert explore_outcomes(G, GameConfig(1, 1, S), strat) == {Outcome.DOMINATOR_WIN}
        with pytest.raises(StrategyNotApplicable, match="not an edge"):
            PairingDominator([(0, 2), (1, 3)]).check_applicable(G, GameConfig(1, 1, S))

    @pytest.mark.parametrize("starter", [D, S])
    def test_local_domination(self, starter):
        G = GraphFamilies.cycle(5)
        assert explore_outcomes(G, GameConfig(2, 1, starter), LocalDominationDominator(1)) == {Outcome.DOMINATOR_WIN}

    def test_local_domination_needs_bias(self):
        with pytest.raises(StrategyNotApplicable):
            LocalDominationDominator(1).check_applicable(GraphFamilies.cycle(5), GameConfig(1, 1, S))
        with pytest.raises(ValueError):
            LocalDominationDominator(0)

    def test_sdr_on_octahedron(self):
        H = GraphFamilies.complete(4)
        L, _ = GraphFamilies.line_graph(H)
        strat = SdrLineGraphDominator(H, 1)
        assert explore_outcomes(L, GameConfig(1, 1, S), strat) == {Outcome.DOMINATOR_WIN}

    def test_sdr_rejects_low_degree_source(self):
        H = GraphFamilies.path(4)
        L, _ = GraphFamilies.line_graph(H)
        with pytest.raises(StrategyNotApplicable):
            SdrLineGraphDominator(H, 1).check_applicable(L, GameConfig(1, 1, S))

    def test_dominating_set_opening(self):
        G = GraphFamilies.cycle(6)
        assert explore_outcomes(G, GameConfig(2, 3, D), DominatorDominatingSet()) == {Outcome.DOMINATOR_WIN}
        with pytest.raises(StrategyNotApplicable):
            DominatorDominatingSet().check_applicable(G, GameConfig(1, 1, D))

    def test_neighbor_responder(self):
        G = GraphFamilies.cycle(6)
        assert explore_outcomes(G, GameConfig(2, 1, S), DominatorNeighborResponder()) == {Outcome.DOMINATOR_WIN}
        with pytest.raises(StrategyNotApplicable):
            DominatorNeighborResponder().check_applicable(G, GameConfig(1, 1, S))

    @pytest.mark.parametrize("starter", [D, S])
    def test_star_partition(self, starter):
        G = GraphFamilies.path(5)
        assert explore_outcomes(G, GameConfig(2, 1, starter), StarPartitionDominator()) == {Outcome.DOMINATOR_WIN}
        with pytest.raises(StrategyNotApplicable):
            StarPartitionDominator().check_applicable(G, GameConfig(1, 1, S))

    def test_fan_plays_legal_moves(self):
        G = GraphFamilies.cycle_clique_product(2, 3)
        cfg = GameConfig(2, 4, D)
        for seed in range(3):
            transcript, outcome = play_match(G, cfg, FanDominator(2, 3), RandomStrategy(S, seed))
            assert transcript.moves[0] == (D, (0, 3))
            assert outcome in (Outcome.DOMINATOR_WIN, Outcome.STALLER_WIN)
        with pytest.raises(StrategyNotApplicable):
            FanDominator(2, 3).check_applicable(GraphFamilies.cycle(6), cfg)


# ---------------------------------------------------------------------------
# Staller strategies
# ---------------------------------------------------------------------------

class TestStallerStrategies:
    def test_tree_staller_on_path_five(self):
        G = GraphFamilies.path(5)
        assert explore_outcomes(G, GameConfig(1, 1, S), TreeStaller()) == {Outcome.STALLER_WIN}

    def test_tree_staller_plan_on_path_five(self):
        center, star, anchor = TreeStaller().plan(GraphFamilies.path(5), GraphFamilies.path(5).full)
        assert center == 1
        assert star == 0b00011
        assert anchor == 3

    def test_tree_staller_preconditions(self):
        with pytest.raises(StrategyNotApplicable, match="tree"):
            TreeStaller().check_applicable(GraphFamilies.cycle(5), GameConfig(1, 1, S))
        with pytest.raises(StrategyNotApplicable):
            TreeStaller().check_applicable(GraphFamilies.path(4), GameConfig(1, 1, S))

    def test_min_degree_grab(self):
        G = GraphFamilies.path(4)
        transcript, outcome = play_match(G, GameConfig(1, 2, S), BestResponse(D), StallerMinDegree())
        assert outcome is Outcome.STALLER_WIN
        assert transcript.moves == [(S, (0, 1))]

    def test_grid12_on_ladder(self):
        G = GraphFamilies.grid(3, 2)
        assert explore_outcomes(G, GameConfig(1, 2, D), GridStaller12(3, 2)) == {Outcome.STALLER_WIN}

    def test_grid12_corner_choice(self):
        strat = GridStaller12(4, 3)
        # Dominator opened at (1, 1): the reply avoids that corner
        assert strat.opening(0) == [9, 10]

    def test_grid22(self):
        G = GraphFamilies.grid(5, 2)
        assert explore_outcomes(G, GameConfig(2, 2, S), GridStaller22(5, 2)) == {Outcome.STALLER_WIN}
        with pytest.raises(StrategyNotApplicable):
            GridStaller22(4, 2).check_applicable(GraphFamilies.grid(4, 2), GameConfig(2, 2, S))

    def test_large_order_on_cycle_ten(self):
        G = GraphFamilies.cycle(10)
        cfg = GameConfig(1, 2, S)
        for seed in range(5):
            _, outcome = play_match(G, cfg, RandomStrategy(D, seed), LargeOrderStaller(2))
            assert outcome is Outcome.STALLER_WIN

    def test_large_order_required_order(self):
        assert LargeOrderStaller.required_order(2, 2, S) == 10
        assert LargeOrderStaller.required_order(2, 2, D) == 15
        with pytest.raises(StrategyNotApplicable):
            LargeOrderStaller(2).check_applicable(GraphFamilies.cycle(9), GameConfig(1, 2, S))

    @pytest.mark.parametrize("n, k", [(2, 3), (3, 3), (2, 4)])
    def test_threat_staller_on_clique_chains(self, solver, n, k):
        G = GraphFamilies.clique_chain(n, k)
        cfg = GameConfig(n - 1, k, D)
        assert explore_outcomes(G, cfg, ThreatStaller()) == {Outcome.STALLER_WIN}
        _, outcome = play_match(G, cfg, BestResponse(D, solver), ThreatStaller())
        assert outcome is Outcome.STALLER_WIN

    def test_threat_staller_finishes_when_it_can(self):
        G = GraphFamilies.path(3)
        state = GameRules.apply_move(GameRules.apply_move(GameConfig(1, 1, S).initial_state(), (0,)), (2,))
        assert ThreatStaller().choose(G, GameConfig(1, 1, S), state) == (1,)


# ---------------------------------------------------------------------------
# Registry
# ---------------------------------------------------------------------------

class TestRegistry:
    def test_names(self):
        assert "pairing" in StrategyRegistry.names(D)
        assert "tree" in StrategyRegistry.names(S)
        assert "tree" not in StrategyRegistry.names(D)

    def test_build_with_parameters(self):
        assert StrategyRegistry.build("local:2", D).ell == 2
        assert StrategyRegistry.build("local", D).ell == 1
        g = StrategyRegistry.build("grid12:3:2", S)
        assert (g.m, g.n) == (3, 2)
        assert StrategyRegistry.build("large", S).k == 2
        assert StrategyRegistry.build("random:7", S).seed == 7
        sdr = StrategyRegistry.build("sdr:1:complete:4", D)
        assert sdr.H == GraphFamilies.complete(4)

    def test_best_shares_solver(self, solver):
        assert StrategyRegistry.build("best", S, solver=solver).solver is solver

    def test_errors(self):
        with pytest.raises(ValueError, match="Available"):
            StrategyRegistry.build("nope", D)
        with pytest.raises(ValueError, match="integer"):
            StrategyRegistry.build("local:x", D)
        with pytest.raises(ValueError, match="needs 2"):
            StrategyRegistry.build("grid22:5", S)
        with pytest.raises(ValueError):
            StrategyRegistry.build("sdr:1", D)
