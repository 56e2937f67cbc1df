"""Graph corpora: non-isomorphic trees, the small-graph atlas, random samples."""
from __future__ import annotations
from functools import lru_cache
from typing import Iterator

import networkx as nx

from .errors import GraphSizeError
from .generators import GraphFamilies
from .graphs import Graph, members

__all__ = ["GraphCensus"]

ATLAS_MAX_N = 7


@lru_cache(maxsize=1)
def _atlas() -> tuple[Graph, ...]:
    return tuple(Graph.from_networkx(g) for g in nx.graph_atlas_g() if g.number_of_nodes() >= 1)


class GraphCensus:

    @staticmethod
    def tree_canonical_form(T: Graph) -> str:
        """Centre-rooted nested-parenthesis encoding; equal iff isomorphic."""
        g = T.to_networkx()

        def encode(v: int, parent: int) -> str:
            return "(" + "".join(sorted(encode(c, v) for c in g[v] if c != parent)) + ")"

        return min(encode(c, -1) for c in nx.center(g))

    @staticmethod
    def trees(n: int) -> list[Graph]:
        """All trees on n vertices up to isomorphism, ordered by canonical form."""
        if not 1 <= n <= 10:
            raise GraphSizeError(f"tree enumeration supports 1 <= n <= 10, got {n}")
        if n <= 2:
            return [GraphFamilies.path(n)]
        by_form: dict[str, Graph] = {}
        for t in nx.nonisomorphic_trees(n):
            T = Graph.from_networkx(t)
            by_form.setdefault(GraphCensus.tree_canonical_form(T), T)
        return [by_form[k] for k in sorted(by_form)]

    @staticmethod
    def all_graphs(max_n: int, connected: bool = False) -> list[Graph]:
        """Every graph with 1 <= n <= max_n up to isomorphism (max_n <= 7)."""
        if not 1 <= max_n <= ATLAS_MAX_N:
            raise GraphSizeError(f"the atlas covers 1 <= n <= {ATLAS_MAX_N}, got {max_n}")
        out = [G for G in _atlas() if G.n <= max_n]
        if connected:
            out = [G for G in out if G.is_connected()]
        return out

    @staticmethod
    def connected_graphs(max_n: int) -> list[Graph]:
        return GraphCensus.all_graphs(max_n, connected=True)

    @staticmethod
    def random_graphs(n: int, count: int, seed: int = 0, p: float = 0.5) -> list[Graph]:
        """``count`` seeded G(n, p) samples, for sizes beyond the atlas."""
        return [Graph.from_networkx(nx.gnp_random_graph(n, p, seed=seed + i)) for i in range(count)]

    @staticmethod
    def one_vertex_extensions(base_n: int = ATLAS_MAX_N) -> Iterator[Graph]:
        """Every graph on base_n + 1 vertices up to isomorphism, with repeats.

        Each base_n-vertex atlas graph is joined to a new vertex in every
        possible way; deleting any vertex of a graph on base_n + 1 vertices
        leaves one of those bases.
        """
        new = base_n
        for G in GraphCensus.all_graphs(base_n):
            if G.n != base_n:
                continue
            for S in range(1 << base_n):
                yield Graph(base_n + 1, G.edges + tuple((v, new) for v in members(S)))
