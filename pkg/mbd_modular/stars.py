"""Star partitions, star partition width σ(G) and the star digraph.

A k-star partition splits V(G) into blocks of at least two vertices, each
spanned by a star (a centre plus at most k leaves adjacent to it). Such a
partition exists iff G has a spanning subgraph with all degrees in [1, k].
"""
from __future__ import annotations
import logging
import math
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Iterator

import networkx as nx

from .errors import InvariantPreconditionError
from .graphs import Graph, VertexSet, members, popcount, to_mask
from .invariants import GraphInvariants

__all__ = [
    "Star", "StarPartition", "StarDigraph", "LemmaReport", "SigmaFormulaReport", "StarPartitioner",
]

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class Star:
    center: int
    leaves: tuple[int, ...]

    @property
    def size(self) -> int:
        return 1 + len(self.leaves)

    @property
    def mask(self) -> VertexSet:
        return to_mask(self.leaves) | (1 << self.center)

    def to_json(self) -> dict:
        return {"center": self.center, "leaves": list(self.leaves)}


@dataclass(frozen=True)
class StarPartition:
    """Stars ordered by centre; leaves sorted."""
    stars: tuple[Star, ...]

    @classmethod
    def of(cls, blocks) -> "StarPartition":
        """Build from ``(center, leaves)`` pairs in any order."""
        return cls(tuple(sorted(Star(c, tuple(sorted(ls))) for c, ls in blocks)))

    def __len__(self) -> int:
        return len(self.stars)

    @property
    def width(self) -> int:
        return max(len(s.leaves) for s in self.stars)

    def profile(self, top: int | None = None) -> tuple[int, ...]:
        """(s_top, ..., s_1) where s_i counts stars with i leaves; top defaults to the width."""
        top = self.width if top is None else top
        counts = [0] * (top + 1)
        for s in self.stars:
            counts[len(s.leaves)] += 1
        return tuple(counts[top:0:-1])

    def encoding(self) -> tuple[tuple[int, tuple[int, ...]], ...]:
        return tuple((s.center, s.leaves) for s in self.stars)

    def star_index(self) -> dict[int, int]:
        """vertex -> index of the star containing it."""
        return {v: i for i, s in enumerate(self.stars) for v in (s.center, *s.leaves)}

    def leaf_mask(self) -> VertexSet:
        return to_mask(v for s in self.stars for v in s.leaves)

    def validate(self, G: Graph) -> None:
        covered = 0
        for s in self.stars:
            if not s.leaves:
                raise InvariantPreconditionError(f"star at {s.center} has no leaves")
            if covered & s.mask:
                raise InvariantPreconditionError(f"star at {s.center} overlaps another block")
            covered |= s.mask
            for leaf in s.leaves:
                if not G.is_adjacent(s.center, leaf):
                    raise InvariantPreconditionError(f"leaf {leaf} is not adjacent to centre {s.center}")
        if covered != G.full:
            raise InvariantPreconditionError(f"vertices {list(members(G.full & ~covered))} are not covered")

    def to_json(self) -> list[dict]:
        return [s.to_json() for s in self.stars]


@dataclass(frozen=True)
class StarDigraph:
    """Arc i -> j when a leaf of star i is adjacent to the centre of star j."""
    size: int
    arcs: tuple[tuple[int, int], ...]

    def to_networkx(self) -> nx.DiGraph:
        d = nx.DiGraph()
        d.add_nodes_from(range(self.size))
        d.add_edges_from(self.arcs)
        return d

    def successors(self, i: int) -> list[int]:
        return [j for a, j in self.arcs if a == i]


@dataclass
class LemmaReport:
    """Outcome per property; ``counterexamples`` holds the first witness of each failure."""
    results: dict[str, bool] = field(default_factory=dict)
    counterexamples: dict[str, tuple] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.results.values())


@dataclass
class SigmaFormulaReport:
    applicable: bool
    sigma: float | None = None
    formula: int | None = None
    reason: str = ""

    @property
    def holds(self) -> bool | None:
        return None if not self.applicable else self.sigma == self.formula


class StarPartitioner:
    """Search, construction and verification of star partitions."""

    @staticmethod
    def has_k_star_partition(G: Graph, k: int) -> tuple[bool, StarPartition | None]:
        """Decide whether a k-star partition exists; return one if so.

        Backtracking over assignments: the unassigned vertex with the fewest
        options is placed first, either as a leaf of an adjacent centre with
        spare capacity or together with an unassigned neighbour as a new star
        (in either orientation).
        """
        if k < 1:
            raise ValueError(f"k must be >= 1, got {k}")
        n = G.n
        if n < 2 or G.min_degree() == 0:
            return False, None
        nbr = G.nbr
        leaves: dict[int, list[int]] = {}
        state = {"free": G.full, "centers": 0}

        def options(v: int) -> int:
            room = sum(1 for c in members(nbr[v] & state["centers"]) if len(leaves[c]) < k)
            return room + popcount(nbr[v] & state["free"])

        def attach(c: int, leaf: int) -> None:
            leaves.setdefault(c, []).append(leaf)
            state["centers"] |= 1 << c
            state["free"] &= ~((1 << c) | (1 << leaf))

        def search() -> bool:
            free = state["free"]
            if free == 0:
                return True
            v, best = -1, None
            for u in members(free):
                o = options(u)
                if o == 0:
                    return False
                if best is None or o < best:
                    v, best = u, o
            snapshot = (state["free"], state["centers"])
            for c in members(nbr[v] & state["centers"]):
                if len(leaves[c]) < k:
                    leaves[c].append(v)
                    state["free"] &= ~(1 << v)
                    if search():
                        return True
                    leaves[c].pop()
                    state["free"], state["centers"] = snapshot
            for u in members(nbr[v] & free):
                pairs = ((v, u),) if k == 1 else ((v, u), (u, v))
                for c, leaf in pairs:
                    attach(c, leaf)
                    if search():
                        return True
                    del leaves[c]
                    state["free"], state["centers"] = snapshot
            return False

        if not search():
            return False, None
        return True, StarPartition.of(leaves.items())

    @staticmethod
    def star_partition_width(G: Graph) -> float:
        """σ(G); infinite when G has an isolated vertex or fewer than two vertices."""
        if G.n < 2 or G.min_degree() == 0:
            return math.inf
        for k in range(1, G.max_degree() + 1):
            if StarPartitioner.has_k_star_partition(G, k)[0]:
                return k
        raise AssertionError("a graph without isolated vertices has a Δ-star partition")

    @staticmethod
    def enumerate_partitions(G: Graph, max_leaves: int | None = None) -> Iterator[StarPartition]:
        """Every star partition (with designated centres) exactly once.

        The block of the smallest unassigned vertex is chosen whole; a two-vertex
        block always takes its smaller vertex as centre.
        """
        cap = G.max_degree() if max_leaves is None else max_leaves
        nbr = G.nbr

        def rec(free: VertexSet, acc: list) -> Iterator[list]:
            if free == 0:
                yield list(acc)
                return
            v = (free & -free).bit_length() - 1
            rest = free & ~(1 << v)
            cand = members(nbr[v] & rest)
            for r in range(1, min(len(cand), cap) + 1):
                for L in combinations(cand, r):
                    acc.append((v, L))
                    yield from rec(rest & ~to_mask(L), acc)
                    acc.pop()
            for c in cand:
                others = members(nbr[c] & rest & ~(1 << c))
                for r in range(1, min(len(others), cap - 1) + 1):
                    for L in combinations(others, r):
                        acc.append((c, (v,) + L))
                        yield from rec(rest & ~(1 << c) & ~to_mask(L), acc)
                        acc.pop()

        if G.n < 2 or G.min_degree() == 0:
            return
        for blocks in rec(G.full, []):
            yield StarPartition.of(blocks)

    @staticmethod
    def lex_optimal_star_partition(G: Graph) -> StarPartition:
        """The partition with lexicographically least profile (s_Δ, ..., s_1).

        Ties are broken by the smallest encoding. Only stars with at most σ(G)
        leaves are generated (any larger star makes the profile worse), and a
        branch is cut as soon as its partial profile exceeds the incumbent's,
        since adding stars only increases counts.
        """
        if G.n < 2 or G.min_degree() == 0:
            raise InvariantPreconditionError("star partitions need n >= 2 and no isolated vertex")
        sigma = int(StarPartitioner.star_partition_width(G))
        nbr = G.nbr
        counts = [0] * (sigma + 1)
        best: dict[str, tuple] = {}

        def partial() -> tuple[int, ...]:
            return tuple(counts[sigma:0:-1])

        def worse() -> bool:
            return "profile" in best and partial() > best["profile"]

        def place(c: int, L: tuple[int, ...], acc: list, free: VertexSet) -> None:
            counts[len(L)] += 1
            acc.append((c, L))
            if not worse():
                rec(free, acc)
            acc.pop()
            counts[len(L)] -= 1

        def rec(free: VertexSet, acc: list) -> None:
            if free == 0:
                cand = StarPartition.of(acc)
                key = (partial(), cand.encoding())
                if "profile" not in best or key < (best["profile"], best["partition"].encoding()):
                    best["profile"], best["partition"] = key[0], cand
                return
            v = (free & -free).bit_length() - 1
            rest = free & ~(1 << v)
            cand = members(nbr[v] & rest)
            for r in range(1, min(len(cand), sigma) + 1):
                for L in combinations(cand, r):
                    place(v, L, acc, rest & ~to_mask(L))
            for c in cand:
                others = members(nbr[c] & rest & ~(1 << c))
                for r in range(1, min(len(others), sigma - 1) + 1):
                    for L in combinations(others, r):
                        place(c, (v,) + L, acc, rest & ~(1 << c) & ~to_mask(L))

        rec(G.full, [])
        return best["partition"]

    @staticmethod
    def star_partition_from_matching(G: Graph) -> StarPartition:
        """A partition with ν(G) blocks grown from a maximum matching.

        Unsaturated vertices form an independent set and no matching edge has
        two distinct unsaturated neighbours at different ends (that would be
        an augmenting path), so for each edge xy the end adjacent to
        unsaturated vertices becomes the centre, and every unsaturated vertex
        finds an adjacent centre.
        """
        if G.n < 2 or G.min_degree() == 0:
            raise InvariantPreconditionError("star partitions need n >= 2 and no isolated vertex")
        M = GraphInvariants.maximum_matching(G)
        saturated = to_mask(v for e in M for v in e)
        loose = G.full & ~saturated
        blocks: dict[int, list[int]] = {}
        for x, y in M:
            x_loose, y_loose = G.nbr[x] & loose, G.nbr[y] & loose
            if x_loose and not y_loose:
                center, leaf = x, y
            elif y_loose and not x_loose:
                center, leaf = y, x
            else:
                # neither end, or both ends sharing the one unsaturated neighbour
                center, leaf = x, y
            blocks[center] = [leaf]
        centers = to_mask(blocks)
        for u in members(loose):
            c = members(G.nbr[u] & centers)[0]
            blocks[c].append(u)
        return StarPartition.of(blocks.items())

    @staticmethod
    def star_digraph(G: Graph, P: StarPartition) -> StarDigraph:
        P.validate(G)
        where = P.star_index()
        arcs = set()
        for i, s in enumerate(P.stars):
            for leaf in s.leaves:
                for u in members(G.nbr[leaf]):
                    j = where[u]
                    if j != i and P.stars[j].center == u:
                        arcs.add((i, j))
        return StarDigraph(len(P), tuple(sorted(arcs)))

    @staticmethod
    def check_lex_optimal_lemma(G: Graph, P: StarPartition) -> LemmaReport:
        """Check the three structural properties of lexicographically optimal partitions.

        (i)   leaves are pairwise non-adjacent, except the two leaves of one
              2-leaf star, or leaves of distinct stars of total size <= 5;
        (ii)  a leaf of S_i adjacent to the centre of S_j forces |S_i| <= |S_j| + 1;
        (iii) every star reachable in the star digraph from a σ-star has at
              least σ vertices.
        """
        P.validate(G)
        where = P.star_index()
        stars = P.stars
        leaf_set = P.leaf_mask()
        report = LemmaReport()

        bad_leaf_edge = None
        for x, y in G.edges:
            if not (leaf_set >> x & 1 and leaf_set >> y & 1):
                continue
            i, j = where[x], where[y]
            if i == j:
                ok = len(stars[i].leaves) == 2
            else:
                ok = stars[i].size + stars[j].size <= 5
            if not ok:
                bad_leaf_edge = (x, y)
                break
        report.results["leaf-leaf"] = bad_leaf_edge is None
        if bad_leaf_edge:
            report.counterexamples["leaf-leaf"] = bad_leaf_edge

        digraph = StarPartitioner.star_digraph(G, P)
        bad_arc = next(((i, j) for i, j in digraph.arcs if stars[i].size > stars[j].size + 1), None)
        report.results["leaf-center"] = bad_arc is None
        if bad_arc:
            report.counterexamples["leaf-center"] = bad_arc

        sigma = P.width
        d = digraph.to_networkx()
        bad_path = None
        for i, s in enumerate(stars):
            if len(s.leaves) != sigma:
                continue
            for j in sorted(nx.descendants(d, i)):
                if stars[j].size < sigma:
                    bad_path = (i, j)
                    break
            if bad_path:
                break
        report.results["sigma-paths"] = bad_path is None
        if bad_path:
            report.counterexamples["sigma-paths"] = bad_path
        return report

    @staticmethod
    def factor_criterion_holds(G: Graph, k: int) -> bool:
        """i(G - X) <= k|X| for every X ⊆ V(G) (exponential in n)."""
        return all(GraphInvariants.isolated_after_removal(G, X) <= k * popcount(X)
                   for X in range(G.full + 1))

    @staticmethod
    def sigma_formula(G: Graph) -> int:
        """max over nonempty proper S of ceil(i(G - S) / |S|)."""
        return max(-(-GraphInvariants.isolated_after_removal(G, S) // popcount(S))
                   for S in range(1, G.full))

    @staticmethod
    def sigma_formula_check(G: Graph) -> SigmaFormulaReport:
        if G.n < 2 or G.min_degree() == 0:
            return SigmaFormulaReport(False, reason="graph has an isolated vertex")
        if StarPartitioner.has_k_star_partition(G, 2)[0]:
            return SigmaFormulaReport(False, reason="graph has a 2-star partition")
        sigma = StarPartitioner.star_partition_width(G)
        return SigmaFormulaReport(True, sigma=sigma, formula=StarPartitioner.sigma_formula(G))

    @staticmethod
    def leaf_leaf_edges(G: Graph, P: StarPartition) -> int:
        leaves = P.leaf_mask()
        return sum(1 for x, y in G.edges if leaves >> x & 1 and leaves >> y & 1)

    @staticmethod
    def independent_leaf_designation(G: Graph, P: StarPartition) -> StarPartition:
        """Re-orient one-leaf stars so that as few leaf-leaf edges remain as possible.

        The profile does not change. In a tree, a lexicographically optimal
        partition admits an orientation with independent leaves.
        """
        twos = [i for i, s in enumerate(P.stars) if len(s.leaves) == 1]
        best, best_count = P, StarPartitioner.leaf_leaf_edges(G, P)
        if best_count == 0 or not twos:
            return P
        if len(twos) > 16:
            logger.debug("skipping re-orientation of %d two-vertex stars", len(twos))
            return P
        for flips in product((False, True), repeat=len(twos)):
            blocks = [(s.center, s.leaves) for s in P.stars]
            for i, flip in zip(twos, flips):
                if flip:
                    c, (leaf,) = blocks[i]
                    blocks[i] = (leaf, (c,))
            cand = StarPartition.of(blocks)
            count = StarPartitioner.leaf_leaf_edges(G, cand)
            if count < best_count:
                best, best_count = cand, count
                if count == 0:
                    break
        return best
