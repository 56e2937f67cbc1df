import math

import pytest

from mbd_modular.census import GraphCensus
from mbd_modular.errors import InvariantPreconditionError
from mbd_modular.generators import GraphFamilies
from mbd_modular.graphs import Graph
from mbd_modular.invariants import GraphInvariants
from mbd_modular.stars import StarPartition, StarPartitioner


@pytest.fixture
def three_stars():
    G = GraphFamilies.three_star_graph()
    P = StarPartition.of([(0, (1, 2)), (3, (4, 5, 6)), (7, (8, 9, 10))])
    return G, P


# ---------------------------------------------------------------------------
# Partition existence and width
# ---------------------------------------------------------------------------

class TestWidth:
    def test_perfect_matching_is_one_star_partition(self):
        ok, P = StarPartitioner.has_k_star_partition(GraphFamilies.complete(4), 1)
        assert ok
        assert len(P) == 2 and P.width == 1
        P.validate(GraphFamilies.complete(4))

    def test_multi_star_partitions_sort_by_center(self):
        P = StarPartition.of([(2, (3,)), (0, (1,))])
        assert P.encoding() == ((0, (1,)), (2, (3,)))
        assert P.stars[0] < P.stars[1]
        ok, Q = StarPartitioner.has_k_star_partition(GraphFamilies.complete(4), 2)
        assert ok and len(Q) == 2
        assert StarPartitioner.star_partition_width(GraphFamilies.complete(4)) == 1

    def test_claw_has_no_two_star_partition(self):
        assert StarPartitioner.has_k_star_partition(GraphFamilies.star(3), 2) == (False, None)

    @pytest.mark.parametrize("n", range(2, 9))
    def test_complete_graphs_by_parity(self, n):
        expected = 1 if n % 2 == 0 else 2
        assert StarPartitioner.star_partition_width(GraphFamilies.complete(n)) == expected

    @pytest.mark.parametrize("r", range(1, 6))
    def test_stars(self, r):
        assert StarPartitioner.star_partition_width(GraphFamilies.star(r)) == r

    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_complete_bipartite_two_sides(self, m):
        assert StarPartitioner.star_partition_width(GraphFamilies.complete_bipartite(2, 2 * m)) == m

    def test_infinite_without_partition(self):
        assert StarPartitioner.star_partition_width(GraphFamilies.path(1)) == math.inf
        assert StarPartitioner.star_partition_width(Graph(3, ((0, 1),))) == math.inf

    def test_width_at_most_max_degree(self):
        for G in GraphCensus.connected_graphs(6):
            if G.n >= 2:
                assert StarPartitioner.star_partition_width(G) <= G.max_degree()

    def test_rejects_bad_k(self):
        with pytest.raises(ValueError):
            StarPartitioner.has_k_star_partition(GraphFamilies.path(2), 0)


class TestFactorCriterion:
    @pytest.mark.parametrize("k", [2, 3])
    def test_agrees_with_search(self, k):
        for G in GraphCensus.all_graphs(6):
            if G.n < 2 or G.min_degree() == 0:
                continue
            found = StarPartitioner.has_k_star_partition(G, k)[0]
            assert found == StarPartitioner.factor_criterion_holds(G, k), G.edges

    def test_triangle_breaks_the_one_star_case(self):
        K3 = GraphFamilies.complete(3)
        assert StarPartitioner.factor_criterion_holds(K3, 1)
        assert not StarPartitioner.has_k_star_partition(K3, 1)[0]


# ---------------------------------------------------------------------------
# Enumeration and lexicographic optimum
# ---------------------------------------------------------------------------

class TestEnumeration:
    def test_counts(self):
        assert len(list(StarPartitioner.enumerate_partitions(GraphFamilies.complete(3)))) == 3
        assert len(list(StarPartitioner.enumerate_partitions(GraphFamilies.path(4)))) == 1
        assert list(StarPartitioner.enumerate_partitions(Graph(3, ((0, 1),)))) == []

    def test_every_partition_is_valid_and_distinct(self):
        G = GraphFamilies.cycle(6)
        parts = list(StarPartitioner.enumerate_partitions(G))
        for P in parts:
            P.validate(G)
        assert len({P.encoding() for P in parts}) == len(parts)

    def test_max_leaves(self):
        G = GraphFamilies.star(3)
        assert list(StarPartitioner.enumerate_partitions(G, max_leaves=2)) == []
        assert len(list(StarPartitioner.enumerate_partitions(G))) == 1


class TestLexOptimal:
    def test_path_five(self):
        P = StarPartitioner.lex_optimal_star_partition(GraphFamilies.path(5))
        assert P.encoding() == ((0, (1,)), (3, (2, 4)))
        assert P.profile() == (1, 1)
        assert P.width == 2

    def test_profile_minimal_over_enumeration(self):
        for T in GraphCensus.trees(7):
            best = StarPartitioner.lex_optimal_star_partition(T)
            top = T.max_degree()
            assert all(best.profile(top) <= P.profile(top) for P in StarPartitioner.enumerate_partitions(T))
            assert best.width == StarPartitioner.star_partition_width(T)

    def test_isolated_vertex_rejected(self):
        with pytest.raises(InvariantPreconditionError):
            StarPartitioner.lex_optimal_star_partition(Graph(3, ((0, 1),)))

    def test_lemma_on_all_small_trees(self):
        for n in range(2, 9):
            for T in GraphCensus.trees(n):
                report = StarPartitioner.check_lex_optimal_lemma(T, StarPartitioner.lex_optimal_star_partition(T))
                assert report.passed, (T.edges, report.counterexamples)
                assert set(report.results) == {"leaf-leaf", "leaf-center", "sigma-paths"}


# ---------------------------------------------------------------------------
# Constructions and digraph
# ---------------------------------------------------------------------------

class TestConstructions:
    def test_partition_from_matching(self):
        for G in (GraphFamilies.path(5), GraphFamilies.star(4), GraphFamilies.cycle(7), GraphFamilies.grid(3, 3)):
            P = StarPartitioner.star_partition_from_matching(G)
            P.validate(G)
            assert len(P) == GraphInvariants.matching_number(G)

    def test_star_digraph(self, three_stars):
        G, P = three_stars
        D = StarPartitioner.star_digraph(G, P)
        assert D.size == 3
        assert D.arcs == ((2, 1),)
        assert D.successors(2) == [1]
        assert D.to_networkx().number_of_edges() == 1

    def test_validate_rejects_non_partitions(self):
        G = GraphFamilies.path(4)
        with pytest.raises(InvariantPreconditionError, match="not adjacent"):
            StarPartition.of([(0, (2,)), (1, (3,))]).validate(G)
        with pytest.raises(InvariantPreconditionError, match="not covered"):
            StarPartition.of([(0, (1,))]).validate(G)
        with pytest.raises(InvariantPreconditionError, match="overlaps"):
            StarPartition.of([(1, (0, 2)), (2, (3,))]).validate(G)

    def test_independent_leaf_designation(self):
        G = GraphFamilies.path(4)
        P = StarPartition.of([(0, (1,)), (3, (2,))])
        assert StarPartitioner.leaf_leaf_edges(G, P) == 1
        Q = StarPartitioner.independent_leaf_designation(G, P)
        assert StarPartitioner.leaf_leaf_edges(G, Q) == 0
        assert Q.profile() == P.profile()

    def test_to_json(self):
        P = StarPartition.of([(3, (2, 4)), (0, (1,))])
        assert P.to_json() == [{"center": 0, "leaves": [1]}, {"center": 3, "leaves": [2, 4]}]


class TestSigmaFormula:
    @pytest.mark.parametrize("r", [3, 4, 5])
    def test_stars(self, r):
        report = StarPartitioner.sigma_formula_check(GraphFamilies.star(r))
        assert report.applicable and report.holds
        assert report.sigma == report.formula == r

    def test_not_applicable(self):
        assert StarPartitioner.sigma_formula_check(GraphFamilies.path(4)).holds is None
        assert not StarPartitioner.sigma_formula_check(Graph(2)).applicable

    def test_census(self):
        for G in GraphCensus.connected_graphs(6):
            report = StarPartitioner.sigma_formula_check(G)
            if report.applicable:
                assert report.holds, G.edges


def test_lex_optimal_benchmark(benchmark):
    T = GraphCensus.trees(9)[-1]
    P = benchmark(StarPartitioner.lex_optimal_star_partition, T)
    P.validate(T)
