from itertools import combinations, product

import numpy as np
import pytest

from mbd_modular.census import GraphCensus
from mbd_modular.domination import HallMatcher, LocalDomination, SdrResult, SetFamily
from mbd_modular.errors import GraphSizeError, InvariantPreconditionError
from mbd_modular.generators import GraphFamilies
from mbd_modular.graphs import Graph, to_mask


# ---------------------------------------------------------------------------
# Local domination
# ---------------------------------------------------------------------------

class TestLocalDomination:
    @pytest.mark.parametrize("n", [5, 6, 7, 8, 9])
    def test_cycles_ell_one(self, n):
        assert LocalDomination.local_domination_number(GraphFamilies.cycle(n), 1) == 2

    def test_cycle_ten_ell_two(self):
        assert LocalDomination.local_domination_number(GraphFamilies.cycle(10), 2) == 4

    def test_two_hub_graph(self):
        G = GraphFamilies.two_hub_graph()
        assert LocalDomination.local_domination_number(G, 1) == 2
        for x in (1, 2, 3, 4):
            assert len(LocalDomination.local_domination_of_set(G, to_mask([x]), 1)) == 1
        worst = [v for v in range(G.n) if len(LocalDomination.local_domination_of_set(G, 1 << v, 1)) == 2]
        assert worst == [0, 5, 6]

    def test_target_includes_low_degree_members(self):
        P3 = GraphFamilies.path(3)
        assert LocalDomination.target_of(P3, to_mask([0]), 1) == to_mask([0, 1])
        assert LocalDomination.target_of(P3, to_mask([1]), 1) == to_mask([0, 2])

    def test_requires_min_degree(self):
        with pytest.raises(InvariantPreconditionError):
            LocalDomination.local_domination_number(GraphFamilies.path(1), 1)
        with pytest.raises(InvariantPreconditionError):
            LocalDomination.local_domination_number(GraphFamilies.path(4), 2)
        with pytest.raises(InvariantPreconditionError):
            LocalDomination.local_domination_number(GraphFamilies.cycle(4), 0)

    def test_simplified_formula_agrees(self):
        for G in GraphCensus.connected_graphs(6):
            if G.n < 2:
                continue
            assert (LocalDomination.local_domination_number(G, 1)
                    == LocalDomination.local_domination_number_simplified(G))


class TestInducedStars:
    def test_claw(self):
        assert LocalDomination.induced_star(GraphFamilies.star(3), 3) == (0, (1, 2, 3))
        assert not LocalDomination.is_induced_star_free(GraphFamilies.star(3), 3)
        assert LocalDomination.is_induced_star_free(GraphFamilies.cycle(6), 3)
        assert LocalDomination.is_induced_star_free(GraphFamilies.chorded_odd_path(3), 3)

    def test_line_graphs_are_claw_free(self):
        for H in GraphCensus.connected_graphs(6):
            if H.m >= 1:
                L, _ = GraphFamilies.line_graph(H)
                assert LocalDomination.is_induced_star_free(L, 3)

    def test_rejects_small_k(self):
        with pytest.raises(ValueError):
            LocalDomination.induced_star(GraphFamilies.path(3), 1)


# ---------------------------------------------------------------------------
# Distinct representatives
# ---------------------------------------------------------------------------

def _brute_force_sdr(family: SetFamily, t: int) -> bool:
    def place(i: int, used: frozenset) -> bool:
        if i == len(family):
            return True
        return any(place(i + 1, used | set(reps))
                   for reps in combinations(sorted(family.sets[i] - used), t))
    return place(0, frozenset())


class TestHallMatcher:
    def test_triangle_family(self):
        fam = SetFamily.of([{1, 2}, {2, 3}, {1, 3}])
        res = HallMatcher.sdr_t_exists(fam, 1)
        assert res.exists
        assert res.verify(fam)

    def test_violator_certificate(self):
        fam = SetFamily.of([{1}, {1}])
        res = HallMatcher.sdr_t_exists(fam, 1)
        assert not res.exists
        assert res.violator == (0, 1)
        assert res.verify(fam)

    def test_two_representatives(self):
        fam = SetFamily.of([{1, 2, 3}, {3, 4, 5}])
        assert HallMatcher.sdr_t_exists(fam, 2).exists
        assert not HallMatcher.sdr_t_exists(fam, 3).exists

    def test_rejects_bad_t(self):
        with pytest.raises(ValueError):
            HallMatcher.sdr_t_exists(SetFamily.of([{1}]), 0)

    def test_matches_brute_force_on_random_families(self):
        rng = np.random.default_rng(2024)
        for _ in range(150):
            size = int(rng.integers(1, 7))
            sets = [set(rng.choice(10, size=int(rng.integers(0, 5)), replace=False).tolist())
                    for _ in range(size)]
            fam = SetFamily.of(sets)
            for t in (1, 2):
                res = HallMatcher.sdr_t_exists(fam, t)
                assert res.exists == _brute_force_sdr(fam, t)
                assert res.verify(fam)

    def test_verify_rejects_bad_witness(self):
        fam = SetFamily.of([{1, 2}, {2, 3}])
        assert not SdrResult(True, 1, witness=((2,), (2,))).verify(fam)
        assert not SdrResult(False, 1, violator=(0, 1)).verify(fam)


class TestCliqueFamily:
    def test_triangle(self):
        fam = HallMatcher.clique_family(GraphFamilies.cycle(3))
        assert fam.sets == (frozenset({0, 1}), frozenset({0, 2}), frozenset({1, 2}))
        assert fam.labels == (0, 1, 2)

    def test_claw(self):
        fam = HallMatcher.clique_family(GraphFamilies.star(3))
        assert fam.sets[0] == frozenset({0, 1, 2})
        assert sorted(len(s) for s in fam.sets) == [1, 1, 1, 3]

    def test_isolated_vertices_omitted(self):
        fam = HallMatcher.clique_family(Graph(4, ((0, 1),)))
        assert fam.labels == (0, 1)
        with pytest.raises(GraphSizeError):
            HallMatcher.clique_family(Graph(3))

    def test_min_degree_gives_representatives(self):
        for H in GraphCensus.connected_graphs(7):
            for t in (1, 2):
                if H.n >= 2 and H.min_degree() >= 2 * t:
                    fam = HallMatcher.clique_family(H)
                    assert HallMatcher.sdr_t_exists(fam, t).exists
