from __future__ import annotations
from functools import lru_cache

import networkx as nx

from .graphs import Graph, VertexSet, members, popcount

__all__ = ["GraphInvariants"]


class GraphInvariants:
    """Exact classical invariants by exhaustive search with pruning."""

    @staticmethod
    def min_degree(G: Graph) -> int:
        return G.min_degree()

    @staticmethod
    def max_degree(G: Graph) -> int:
        return G.max_degree()

    @staticmethod
    def min_dominating_set(
        G: Graph,
        target: VertexSet | None = None,
        candidates: VertexSet | None = None,
        limit: int | None = None,
    ) -> tuple[int, ...] | None:
        """Smallest subset of ``candidates`` dominating every vertex of ``target``.

        Parameters
        ----------
        G : Graph
        target : VertexSet, optional
            Vertices that must be dominated (default: all of V).
        candidates : VertexSet, optional
            Vertices allowed in the dominating set (default: all of V).
        limit : int, optional
            Give up (return None) when more than ``limit`` vertices are needed.

        Returns
        -------
        tuple[int, ...] | None
            Sorted vertices of a minimum dominating set, or None when no set
            within ``limit`` exists.

        Notes
        -----
        Iterative deepening on the size; each level branches on the lowest
        undominated target vertex over the candidates in its closed
        neighbourhood, so the first solution found is minimum and deterministic.
        """
        target = G.full if target is None else target
        cands = G.full if candidates is None else candidates
        if target == 0:
            return ()
        if G.dominated_by(cands) & target != target:
            return None
        reach = max(popcount(G.closed[c] & target) for c in members(cands))

        def search(rest: VertexSet, k: int) -> tuple[int, ...] | None:
            if rest == 0:
                return ()
            if k == 0 or popcount(rest) > k * reach:
                return None
            u = (rest & -rest).bit_length() - 1
            for c in members(G.closed[u] & cands):
                found = search(rest & ~G.closed[c], k - 1)
                if found is not None:
                    return (c,) + found
            return None

        top = popcount(cands) if limit is None else min(limit, popcount(cands))
        for k in range(1, top + 1):
            found = search(target, k)
            if found is not None:
                return tuple(sorted(found))
        return None

    @staticmethod
    def domination_number(G: Graph) -> int:
        return len(GraphInvariants.min_dominating_set(G))

    @staticmethod
    def maximum_matching(G: Graph) -> tuple[tuple[int, int], ...]:
        M = nx.max_weight_matching(G.to_networkx(), maxcardinality=True)
        return tuple(sorted((min(u, v), max(u, v)) for u, v in M))

    @staticmethod
    def matching_number(G: Graph) -> int:
        return len(GraphInvariants.maximum_matching(G))

    @staticmethod
    def maximum_independent_set(G: Graph) -> tuple[int, ...]:
        nbr = G.nbr

        @lru_cache(maxsize=None)
        def best(cand: VertexSet) -> VertexSet:
            if cand == 0:
                return 0
            # vertices without neighbours in cand always belong to some optimum
            free = 0
            for v in members(cand):
                if nbr[v] & cand == 0:
                    free |= 1 << v
            if free:
                return free | best(cand & ~free)
            v = max(members(cand), key=lambda u: popcount(nbr[u] & cand))
            with_v = (1 << v) | best(cand & ~G.closed[v])
            without_v = best(cand & ~(1 << v))
            return with_v if popcount(with_v) >= popcount(without_v) else without_v

        return members(best(G.full))

    @staticmethod
    def independence_number(G: Graph) -> int:
        return len(GraphInvariants.maximum_independent_set(G))

    @staticmethod
    def vertex_cover_number(G: Graph) -> int:
        """τ(G) = n − α(G): complements of independent sets are vertex covers."""
        return G.n - GraphInvariants.independence_number(G)

    @staticmethod
    def isolated_after_removal(G: Graph, removed: VertexSet) -> int:
        """i(G − X): isolated vertices left after deleting X."""
        keep = G.full & ~removed
        return sum(1 for v in members(keep) if G.nbr[v] & keep == 0)
