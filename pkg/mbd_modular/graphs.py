"""Immutable simple graphs whose vertex sets are bit vectors.

A vertex set is a plain ``int``: bit ``v`` is set iff vertex ``v`` belongs to
the set. Set algebra is then ``|``, ``&``, ``& ~`` and ``(a & b) == a`` for the
subset test. Graphs are limited to ``WIDTH_LIMIT`` vertices so every set fits
a 64-bit word.
"""
from __future__ import annotations
from dataclasses import dataclass, field
from typing import Iterable

import networkx as nx
import numpy as np

from .errors import GraphSizeError

__all__ = ["WIDTH_LIMIT", "VertexSet", "to_mask", "members", "popcount", "Graph"]

WIDTH_LIMIT = 64

VertexSet = int


def to_mask(vertices: Iterable[int]) -> VertexSet:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: VertexSet) -> tuple[int, ...]:
    """Vertices of ``mask`` in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def popcount(mask: VertexSet) -> int:
    return mask.bit_count()


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``edges`` is stored as a sorted tuple of ``(u, v)`` pairs with ``u < v``.
    ``nbr[v]`` and ``closed[v]`` are the open and closed neighbourhoods of
    ``v`` as vertex sets; they are derived and excluded from equality.
    """
    n: int
    edges: tuple[tuple[int, int], ...] = ()
    nbr: tuple[VertexSet, ...] = field(init=False, repr=False, compare=False)
    closed: tuple[VertexSet, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = self.n
        if n < 1:
            raise GraphSizeError(f"graph needs at least one vertex, got n={n}")
        if n > WIDTH_LIMIT:
            raise GraphSizeError(f"graph has {n} vertices, width limit is {WIDTH_LIMIT}")
        seen: set[tuple[int, int]] = set()
        nbr = [0] * n
        for u, v in self.edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphSizeError(f"edge {u}-{v} has an endpoint outside 0..{n - 1}")
            if u == v:
                raise GraphSizeError(f"loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise GraphSizeError(f"parallel edge {e[0]}-{e[1]}")
            seen.add(e)
            nbr[u] |= 1 << v
            nbr[v] |= 1 << u
        object.__setattr__(self, "edges", tuple(sorted(seen)))
        object.__setattr__(self, "nbr", tuple(nbr))
        object.__setattr__(self, "closed", tuple(m | (1 << v) for v, m in enumerate(nbr)))

    # ------------------------------------------------------------------
    # construction
    # ------------------------------------------------------------------
    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph, silently merging duplicate edges."""
        norm = {(min(u, v), max(u, v)) for u, v in edges}
        return cls(n, tuple(sorted(norm)))

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> "Graph":
        """Relabel ``g`` onto ``0..n-1`` following ``sorted(g.nodes)``."""
        nodes = sorted(g.nodes)
        index = {u: i for i, u in enumerate(nodes)}
        return cls.from_edges(len(nodes), ((index[u], index[v]) for u, v in g.edges))

    @classmethod
    def from_adjacency(cls, A: np.ndarray) -> "Graph":
        A = np.asarray(A)
        if A.ndim != 2 or A.shape[0] != A.shape[1]:
            raise GraphSizeError(f"adjacency matrix must be square, got shape {A.shape}")
        iu, ju = np.nonzero(np.triu(A, k=1))
        return cls.from_edges(A.shape[0], zip(iu.tolist(), ju.tolist()))

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g

    # ------------------------------------------------------------------
    # queries
    # ------------------------------------------------------------------
    @property
    def full(self) -> VertexSet:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return len(self.edges)

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise GraphSizeError(f"vertex {v} out of range 0..{self.n - 1}")

    def closed_neighborhood(self, v: int) -> VertexSet:
        """N[v] = N(v) ∪ {v}."""
        self._check_vertex(v)
        return self.closed[v]

    def open_neighborhood(self, v: int) -> VertexSet:
        self._check_vertex(v)
        return self.nbr[v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return members(self.nbr[v])

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.nbr[v].bit_count()

    def is_adjacent(self, u: int, v: int) -> bool:
        return bool(self.nbr[u] >> v & 1)

    def set_neighborhood(self, mask: VertexSet) -> VertexSet:
        """N(S): union of the open neighbourhoods of the vertices of S."""
        out = 0
        for v in members(mask):
            out |= self.nbr[v]
        return out

    def dominated_by(self, mask: VertexSet) -> VertexSet:
        """Vertices dominated by S, i.e. the union of N[s] for s in S."""
        out = 0
        for v in members(mask):
            out |= self.closed[v]
        return out

    def dominates(self, mask: VertexSet, target: VertexSet | None = None) -> bool:
        target = self.full if target is None else target
        return self.dominated_by(mask) & target == target

    def is_independent(self, mask: VertexSet) -> bool:
        return all(self.nbr[v] & mask == 0 for v in members(mask))

    def adjacency_matrix(self) -> np.ndarray:
        A = np.zeros((self.n, self.n), dtype=np.int8)
        if self.edges:
            e = np.asarray(self.edges)
            A[e[:, 0], e[:, 1]] = 1
            A[e[:, 1], e[:, 0]] = 1
        return A

    def degrees(self) -> np.ndarray:
        return self.adjacency_matrix().sum(axis=1, dtype=np.int64)

    def min_degree(self) -> int:
        return int(self.degrees().min())

    def max_degree(self) -> int:
        return int(self.degrees().max())

    def components(self, within: VertexSet | None = None) -> list[VertexSet]:
        """Connected components of the subgraph induced by ``within``.

        Iterative DFS; components are returned ordered by their smallest vertex.
        """
        remaining = self.full if within is None else within
        comps: list[VertexSet] = []
        while remaining:
            start = remaining & -remaining
            comp = start
            stack = [start.bit_length() - 1]
            remaining ^= start
            while stack:
                u = stack.pop()
                fresh = self.nbr[u] & remaining
                if fresh:
                    remaining &= ~fresh
                    comp |= fresh
                    stack.extend(members(fresh))
            comps.append(comp)
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def is_tree(self) -> bool:
        return self.m == self.n - 1 and self.is_connected()

    def induced_subgraph(self, mask: VertexSet) -> tuple["Graph", tuple[int, ...]]:
        """Subgraph induced by ``mask``, relabelled in increasing vertex order.

        Returns the subgraph and ``labels`` where ``labels[i]`` is the original
        id of new vertex ``i``.
        """
        labels = members(mask)
        index = {v: i for i, v in enumerate(labels)}
        sub = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        return Graph(len(labels), tuple(sub)), labels
