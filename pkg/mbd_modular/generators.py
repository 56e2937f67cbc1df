from __future__ import annotations
import logging
from dataclasses import dataclass
from typing import Callable, Dict, Iterable

import networkx as nx
import numpy as np

from .errors import GraphSizeError
from .graphs import WIDTH_LIMIT, Graph

__all__ = ["GraphFamilies", "Family", "FamilyPresets"]

logger = logging.getLogger(__name__)


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise GraphSizeError(message)


class GraphFamilies:
    """Canonical constructions of every graph family used by the games.

    Path and cycle vertices follow traversal order; the star centre is 0.
    """

    @staticmethod
    def path(n: int) -> Graph:
        _require(n >= 1, f"path needs n >= 1, got {n}")
        return Graph(n, tuple((i, i + 1) for i in range(n - 1)))

    @staticmethod
    def cycle(n: int) -> Graph:
        _require(n >= 3, f"cycle needs n >= 3, got {n}")
        return Graph(n, tuple((i, i + 1) for i in range(n - 1)) + ((0, n - 1),))

    @staticmethod
    def complete(n: int) -> Graph:
        _require(n >= 1, f"complete graph needs n >= 1, got {n}")
        return Graph(n, tuple((u, v) for u in range(n) for v in range(u + 1, n)))

    @staticmethod
    def star(r: int) -> Graph:
        """K_{1,r} with centre 0."""
        _require(r >= 1, f"star needs r >= 1, got {r}")
        return Graph(r + 1, tuple((0, i) for i in range(1, r + 1)))

    @staticmethod
    def complete_bipartite(p: int, q: int) -> Graph:
        """K_{p,q}; the first side is 0..p-1."""
        _require(p >= 1 and q >= 1, f"complete bipartite needs p, q >= 1, got {p}, {q}")
        return Graph(p + q, tuple((u, p + v) for u in range(p) for v in range(q)))

    @staticmethod
    def cartesian_product(G: Graph, F: Graph) -> Graph:
        """G □ F with vertex (x, y) mapped to ``x * F.n + y``.

        The adjacency matrix is ``A_G ⊗ I + I ⊗ A_F``.
        """
        _require(G.n * F.n <= WIDTH_LIMIT,
                 f"product has {G.n * F.n} vertices, width limit is {WIDTH_LIMIT}")
        A = (np.kron(G.adjacency_matrix(), np.eye(F.n, dtype=np.int8))
             + np.kron(np.eye(G.n, dtype=np.int8), F.adjacency_matrix()))
        return Graph.from_adjacency(A)

    @staticmethod
    def grid(m: int, n: int) -> Graph:
        """P_m □ P_n; the 1-based cell (i, j) is vertex ``(i-1)*n + (j-1)``."""
        return GraphFamilies.cartesian_product(GraphFamilies.path(m), GraphFamilies.path(n))

    @staticmethod
    def line_graph(H: Graph) -> tuple[Graph, tuple[tuple[int, int], ...]]:
        """L(H) and its edge map: vertex i of L(H) is ``H.edges[i]``.

        ``H.edges`` is sorted, so vertex ids follow the lexicographic edge order.
        """
        _require(H.m >= 1, "line graph needs at least one edge")
        index = {e: i for i, e in enumerate(H.edges)}
        L = nx.line_graph(H.to_networkx())
        pairs = [(index[tuple(sorted(e1))], index[tuple(sorted(e2))]) for e1, e2 in L.edges]
        return Graph.from_edges(H.m, pairs), H.edges

    @staticmethod
    def clique_chain(n: int, k: int) -> Graph:
        """n copies of K_k joined in a path.

        Copy i occupies ``i*k .. i*k+k-1``; its right port ``i*k+1`` is joined
        to the left port ``(i+1)*k`` of the next copy.
        """
        _require(n >= 2 and k >= 3, f"clique chain needs n >= 2 and k >= 3, got {n}, {k}")
        _require(n * k <= WIDTH_LIMIT, f"clique chain has {n * k} vertices, width limit is {WIDTH_LIMIT}")
        edges = []
        for i in range(n):
            base = i * k
            edges.extend((base + u, base + v) for u in range(k) for v in range(u + 1, k))
            if i + 1 < n:
                edges.append((base + 1, (i + 1) * k))
        return Graph(n * k, tuple(edges))

    @staticmethod
    def cycle_clique_product(a: int, n: int) -> Graph:
        """C_{a+1} □ K_n. Sharp bound instances need a >= n >= 5."""
        _require(a >= 2 and n >= 1, f"cycle-clique product needs a >= 2 and n >= 1, got {a}, {n}")
        if not (a >= n >= 5):
            logger.warning("cycle-clique product with a=%d, n=%d is outside a >= n >= 5", a, n)
        return GraphFamilies.cartesian_product(GraphFamilies.cycle(a + 1), GraphFamilies.complete(n))

    @staticmethod
    def chorded_odd_path(k: int) -> Graph:
        """Path on 2k+1 vertices plus the chords (2i-1, 2i+1), 1 <= i <= k-1."""
        _require(k >= 1, f"chorded path needs k >= 1, got {k}")
        edges = [(i, i + 1) for i in range(2 * k)]
        edges.extend((2 * i - 1, 2 * i + 1) for i in range(1, k))
        return Graph(2 * k + 1, tuple(edges))

    @staticmethod
    def two_hub_graph() -> Graph:
        """Seven vertices: hub 0 joined to 1..4, hub 5 to 1, 2 and hub 6 to 3, 4; 5-6 adjacent.

        Its 1-local domination number is 2, attained only at vertices 0, 5, 6.
        """
        edges = ((5, 6), (5, 1), (5, 2), (6, 3), (6, 4), (0, 1), (0, 2), (0, 3), (0, 4))
        return Graph.from_edges(7, edges)

    @staticmethod
    def three_star_graph() -> Graph:
        """Three stars centred at 0, 3 and 7 with a centre-centre edge 0-3 and
        a leaf (8) of the third star adjacent to the centre of the second."""
        edges = ((0, 1), (0, 2), (0, 3),
                 (3, 4), (3, 5), (3, 6), (3, 8),
                 (7, 8), (7, 9), (7, 10))
        return Graph(11, edges)


@dataclass(frozen=True)
class Family:
    """A named, parameterised graph family."""
    name: str
    build: Callable[..., Graph]
    arity: int
    help: str = ""


class FamilyPresets:
    """Registry of graph families addressable as ``name:p1,p2`` strings.

    ``line:<spec>`` builds the line graph of any other spec.
    """
    _PRESETS: Dict[str, Family] = {
        "path": Family("path", GraphFamilies.path, 1, "P_n"),
        "cycle": Family("cycle", GraphFamilies.cycle, 1, "C_n"),
        "complete": Family("complete", GraphFamilies.complete, 1, "K_n"),
        "star": Family("star", GraphFamilies.star, 1, "K_{1,r}"),
        "complete-bipartite": Family("complete-bipartite", GraphFamilies.complete_bipartite, 2, "K_{p,q}"),
        "grid": Family("grid", GraphFamilies.grid, 2, "P_m x P_n"),
        "clique-chain": Family("clique-chain", GraphFamilies.clique_chain, 2, "n copies of K_k in a path"),
        "cycle-clique": Family("cycle-clique", GraphFamilies.cycle_clique_product, 2, "C_{a+1} x K_n"),
        "chorded-path": Family("chorded-path", GraphFamilies.chorded_odd_path, 1, "P_{2k+1} plus chords"),
        "two-hub": Family("two-hub", GraphFamilies.two_hub_graph, 0, "7-vertex local domination example"),
        "three-star": Family("three-star", GraphFamilies.three_star_graph, 0, "11-vertex star digraph example"),
    }

    @staticmethod
    def get(name: str) -> Family:
        key = name.lower()
        if key not in FamilyPresets._PRESETS:
            avail = ", ".join(sorted(FamilyPresets._PRESETS))
            raise ValueError(f"Unknown family '{name}'. Available: {avail}")
        return FamilyPresets._PRESETS[key]

    @staticmethod
    def list() -> Iterable[str]:
        return FamilyPresets._PRESETS.keys()

    @staticmethod
    def register(family: Family, overwrite: bool = False) -> None:
        key = family.name.lower()
        if not overwrite and key in FamilyPresets._PRESETS:
            raise ValueError(f"Family '{family.name}' already registered. Use overwrite=True to replace.")
        FamilyPresets._PRESETS[key] = family

    @staticmethod
    def build(name: str, params: Iterable[int] = ()) -> Graph:
        family = FamilyPresets.get(name)
        params = [int(p) for p in params]
        if len(params) != family.arity:
            raise ValueError(f"Family '{family.name}' takes {family.arity} parameter(s), got {len(params)}")
        return family.build(*params)

    @staticmethod
    def parse(spec: str) -> Graph:
        """Build a graph from ``name``, ``name:p`` or ``name:p,q``."""
        head, _, rest = spec.partition(":")
        if head.lower() == "line":
            return GraphFamilies.line_graph(FamilyPresets.parse(rest))[0]
        params = [p for p in rest.split(",") if p.strip()] if rest else []
        try:
            values = [int(p) for p in params]
        except ValueError as e:
            raise ValueError(f"Bad parameters in family spec '{spec}'") from e
        return FamilyPresets.build(head, values)

    @staticmethod
    def is_family_spec(text: str) -> bool:
        head = text.partition(":")[0].lower()
        return head == "line" or head in FamilyPresets._PRESETS
