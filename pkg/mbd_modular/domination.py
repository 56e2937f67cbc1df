from __future__ import annotations
from dataclasses import dataclass
from itertools import combinations

import networkx as nx
from networkx.algorithms import bipartite

from .errors import GraphSizeError, InvariantPreconditionError
from .generators import GraphFamilies
from .graphs import Graph, VertexSet, members, to_mask
from .invariants import GraphInvariants

__all__ = ["LocalDomination", "SetFamily", "SdrResult", "HallMatcher"]


class LocalDomination:
    """ℓ-local domination numbers and induced-star tests."""

    @staticmethod
    def target_of(G: Graph, S: VertexSet, ell: int) -> VertexSet:
        """N(S) together with the members of S whose degree is exactly ℓ."""
        low = to_mask(v for v in members(S) if G.nbr[v].bit_count() == ell)
        return G.set_neighborhood(S) | low

    @staticmethod
    def local_domination_of_set(G: Graph, S: VertexSet, ell: int) -> tuple[int, ...]:
        """A minimum set of vertices outside S dominating the target of S."""
        found = GraphInvariants.min_dominating_set(
            G, target=LocalDomination.target_of(G, S, ell), candidates=G.full & ~S)
        if found is None:
            raise InvariantPreconditionError("target cannot be dominated from outside S; is δ(G) >= ℓ?")
        return found

    @staticmethod
    def local_domination_number(G: Graph, ell: int) -> int:
        """γ̃_ℓ(G): the worst ℓ-set S for Dominator's one-move repair.

        Exhaustive over all ℓ-subsets S; requires δ(G) >= ℓ >= 1.
        """
        if ell < 1:
            raise InvariantPreconditionError(f"ℓ must be >= 1, got {ell}")
        if G.min_degree() < ell:
            raise InvariantPreconditionError(f"local domination needs δ(G) >= {ell}, got δ={G.min_degree()}")
        return max(len(LocalDomination.local_domination_of_set(G, to_mask(S), ell))
                   for S in combinations(range(G.n), ell))

    @staticmethod
    def local_domination_number_simplified(G: Graph) -> int:
        """γ̃_1 as max over v of the domination number of N(v) within G - v."""
        if G.min_degree() < 1:
            raise InvariantPreconditionError("local domination needs δ(G) >= 1")
        return max(len(GraphInvariants.min_dominating_set(G, target=G.nbr[v], candidates=G.full & ~(1 << v)))
                   for v in range(G.n))

    @staticmethod
    def induced_star(G: Graph, k: int) -> tuple[int, tuple[int, ...]] | None:
        """Centre and leaves of an induced K_{1,k}, or None."""
        if k < 2:
            raise ValueError(f"k must be >= 2, got {k}")
        for c in range(G.n):
            nb = members(G.nbr[c])
            if len(nb) < k:
                continue
            for leaves in combinations(nb, k):
                if G.is_independent(to_mask(leaves)):
                    return c, leaves
        return None

    @staticmethod
    def is_induced_star_free(G: Graph, k: int) -> bool:
        return LocalDomination.induced_star(G, k) is None


@dataclass(frozen=True)
class SetFamily:
    """Finite sets F_1..F_n over integer ground elements.

    ``labels`` optionally names the origin of each set (e.g. the vertex of H
    whose incident edges form the set).
    """
    sets: tuple[frozenset[int], ...]
    labels: tuple[int, ...] = ()

    @classmethod
    def of(cls, sets, labels=()) -> "SetFamily":
        return cls(tuple(frozenset(s) for s in sets), tuple(labels))

    def __len__(self) -> int:
        return len(self.sets)

    def union(self, indices) -> frozenset[int]:
        out: set[int] = set()
        for i in indices:
            out |= self.sets[i]
        return frozenset(out)


@dataclass(frozen=True)
class SdrResult:
    """Either a witness (t representatives per set) or a Hall violator."""
    exists: bool
    t: int
    witness: tuple[tuple[int, ...], ...] | None = None
    violator: tuple[int, ...] | None = None

    def verify(self, family: SetFamily) -> bool:
        if self.exists:
            if self.witness is None or len(self.witness) != len(family):
                return False
            flat = [r for reps in self.witness for r in reps]
            return (len(flat) == len(set(flat))
                    and all(len(reps) == self.t and set(reps) <= family.sets[i]
                            for i, reps in enumerate(self.witness)))
        if not self.violator:
            return False
        return len(family.union(self.violator)) < self.t * len(self.violator)


class HallMatcher:
    """Systems of distinct t-representatives via bipartite matching."""

    @staticmethod
    def sdr_t_exists(family: SetFamily, t: int) -> SdrResult:
        """Decide whether every set can receive t representatives, all distinct.

        Each set is replicated t times and matched against the ground set with
        Hopcroft-Karp. If some copy stays unmatched, the sets reachable from
        the unmatched copies along alternating paths form a subfamily whose
        union is smaller than t times its size.
        """
        if t < 1:
            raise ValueError(f"t must be >= 1, got {t}")
        B = nx.Graph()
        copies = [("set", i, j) for i in range(len(family)) for j in range(t)]
        ground = sorted(set().union(*family.sets)) if len(family) else []
        B.add_nodes_from(copies, bipartite=0)
        B.add_nodes_from((("elem", x) for x in ground), bipartite=1)
        for i, s in enumerate(family.sets):
            for j in range(t):
                B.add_edges_from((("set", i, j), ("elem", x)) for x in sorted(s))
        matching = bipartite.hopcroft_karp_matching(B, top_nodes=copies) if B.number_of_edges() else {}

        unmatched = [c for c in copies if c not in matching]
        if not unmatched:
            witness = tuple(
                tuple(sorted(matching[("set", i, j)][1] for j in range(t)))
                for i in range(len(family)))
            return SdrResult(True, t, witness=witness)

        seen = set(unmatched)
        frontier = list(unmatched)
        while frontier:
            node = frontier.pop()
            for elem in B[node]:
                if elem in seen:
                    continue
                seen.add(elem)
                mate = matching.get(elem)
                if mate is not None and mate not in seen:
                    seen.add(mate)
                    frontier.append(mate)
        violator = tuple(sorted({node[1] for node in seen if node[0] == "set"}))
        return SdrResult(False, t, violator=violator)

    @staticmethod
    def clique_family(H: Graph) -> SetFamily:
        """For each non-isolated vertex u of H, the edges of H at u as vertices of L(H)."""
        if H.m < 1:
            raise GraphSizeError("clique family needs at least one edge")
        _, edge_map = GraphFamilies.line_graph(H)
        sets, labels = [], []
        for u in range(H.n):
            incident = [i for i, e in enumerate(edge_map) if u in e]
            if incident:
                sets.append(incident)
                labels.append(u)
        return SetFamily.of(sets, labels)
