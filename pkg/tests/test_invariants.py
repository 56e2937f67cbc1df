import networkx as nx
import pytest

from mbd_modular.census import GraphCensus
from mbd_modular.errors import GraphSizeError
from mbd_modular.generators import GraphFamilies
from mbd_modular.graphs import Graph, to_mask
from mbd_modular.invariants import GraphInvariants


@pytest.fixture
def petersen():
    return Graph.from_networkx(nx.petersen_graph())


# ---------------------------------------------------------------------------
# Classical invariants
# ---------------------------------------------------------------------------

class TestDomination:
    def test_small_values(self, petersen):
        assert GraphInvariants.domination_number(GraphFamilies.path(5)) == 2
        assert GraphInvariants.domination_number(GraphFamilies.cycle(6)) == 2
        assert GraphInvariants.domination_number(GraphFamilies.star(4)) == 1
        assert GraphInvariants.domination_number(GraphFamilies.grid(3, 3)) == 3
        assert GraphInvariants.domination_number(petersen) == 3

    def test_min_dominating_set_dominates(self):
        G = GraphFamilies.path(7)
        D = GraphInvariants.min_dominating_set(G)
        assert len(D) == 3
        assert G.dominates(to_mask(D))
        assert list(D) == sorted(D)

    def test_limit_and_restrictions(self):
        P5 = GraphFamilies.path(5)
        assert GraphInvariants.min_dominating_set(P5, limit=1) is None
        # only the ends dominate {0, 4}
        assert GraphInvariants.min_dominating_set(P5, target=to_mask([0, 4]),
                                                  candidates=to_mask([0, 4])) == (0, 4)
        # 2 is not dominated by any candidate
        assert GraphInvariants.min_dominating_set(P5, target=to_mask([2]),
                                                  candidates=to_mask([0, 4])) is None
        assert GraphInvariants.min_dominating_set(P5, target=0) == ()

    def test_agrees_with_brute_force_on_small_census(self):
        from itertools import combinations
        for G in GraphCensus.all_graphs(5):
            brute = next(k for k in range(1, G.n + 1)
                         if any(G.dominates(to_mask(c)) for c in combinations(range(G.n), k)))
            assert GraphInvariants.domination_number(G) == brute


class TestMatchingAndIndependence:
    def test_matching(self):
        assert GraphInvariants.matching_number(GraphFamilies.path(5)) == 2
        assert GraphInvariants.matching_number(GraphFamilies.cycle(6)) == 3
        M = GraphInvariants.maximum_matching(GraphFamilies.path(4))
        assert M == ((0, 1), (2, 3))

    def test_independence_and_cover(self, petersen):
        C5 = GraphFamilies.cycle(5)
        assert GraphInvariants.independence_number(C5) == 2
        assert GraphInvariants.vertex_cover_number(C5) == 3
        assert GraphInvariants.independence_number(GraphFamilies.star(4)) == 4
        assert GraphInvariants.vertex_cover_number(GraphFamilies.star(4)) == 1
        assert GraphInvariants.independence_number(petersen) == 4
        assert petersen.is_independent(to_mask(GraphInvariants.maximum_independent_set(petersen)))

    def test_isolated_after_removal(self):
        K13 = GraphFamilies.star(3)
        assert GraphInvariants.isolated_after_removal(K13, to_mask([0])) == 3
        assert GraphInvariants.isolated_after_removal(K13, 0) == 0

    def test_degrees(self):
        G = GraphFamilies.grid(3, 3)
        assert GraphInvariants.min_degree(G) == 2
        assert GraphInvariants.max_degree(G) == 4


# ---------------------------------------------------------------------------
# Census
# ---------------------------------------------------------------------------

class TestCensus:
    @pytest.mark.parametrize("n, count", [(1, 1), (2, 1), (4, 2), (5, 3), (6, 6), (7, 11), (8, 23), (9, 47)])
    def test_tree_counts(self, n, count):
        trees = GraphCensus.trees(n)
        assert len(trees) == count
        assert all(T.is_tree() and T.n == n for T in trees)

    def test_tree_enumeration_is_deterministic(self):
        first = [T.edges for T in GraphCensus.trees(7)]
        assert first == [T.edges for T in GraphCensus.trees(7)]

    def test_canonical_form_identifies_isomorphic_trees(self):
        a = Graph(4, ((0, 1), (1, 2), (2, 3)))
        b = Graph(4, ((2, 0), (0, 3), (3, 1)))
        assert GraphCensus.tree_canonical_form(a) == GraphCensus.tree_canonical_form(b)
        assert GraphCensus.tree_canonical_form(a) != GraphCensus.tree_canonical_form(GraphFamilies.star(3))

    def test_tree_range(self):
        with pytest.raises(GraphSizeError):
            GraphCensus.trees(11)

    def test_atlas_counts(self):
        assert len(GraphCensus.all_graphs(3)) == 7
        assert len(GraphCensus.connected_graphs(4)) == 10
        assert len(GraphCensus.connected_graphs(5)) == 31
        with pytest.raises(GraphSizeError):
            GraphCensus.all_graphs(8)

    def test_one_vertex_extensions_cover_the_next_order(self):
        extended = list(GraphCensus.one_vertex_extensions(4))
        assert len(extended) == 11 * 16
        assert all(G.n == 5 for G in extended)
        pool = [G.to_networkx() for G in extended]
        for H in GraphCensus.all_graphs(5):
            if H.n == 5:
                h = H.to_networkx()
                assert any(nx.is_isomorphic(h, g) for g in pool), H.edges

    def test_random_graphs_are_seeded(self):
        a = GraphCensus.random_graphs(8, 3, seed=7)
        b = GraphCensus.random_graphs(8, 3, seed=7)
        assert a == b
        assert all(G.n == 8 for G in a)
