from __future__ import annotations
import json
from pathlib import Path

import networkx as nx

from .errors import GraphFormatError
from .generators import FamilyPresets
from .graphs import Graph

__all__ = ["GraphCodec", "GRAPH_SCHEMA"]

GRAPH_SCHEMA = "mbd.graph/1"
_HEADER = ">>graph6<<"


class GraphCodec:
    """Read and write graphs as graph6, plain edge lists and JSON."""

    @staticmethod
    def parse_graph6(text: str) -> Graph:
        """Decode one graph6 string.

        The string is validated before it is handed to networkx so that a
        malformed input reports the offending character position.
        """
        s = text.strip()
        offset = 0
        if s.startswith(_HEADER):
            s = s[len(_HEADER):]
            offset = len(_HEADER)
        if not s:
            raise GraphFormatError("empty graph6 string", position=offset)
        for i, ch in enumerate(s):
            if not 63 <= ord(ch) <= 126:
                raise GraphFormatError(f"invalid graph6 character {ch!r}", position=offset + i)

        if s[0] != "~":
            n, head = ord(s[0]) - 63, 1
        elif len(s) >= 2 and s[1] != "~":
            if len(s) < 4:
                raise GraphFormatError("truncated vertex count", position=offset + len(s))
            n = 0
            for ch in s[1:4]:
                n = (n << 6) | (ord(ch) - 63)
            head = 4
        else:
            if len(s) < 8:
                raise GraphFormatError("truncated vertex count", position=offset + len(s))
            n = 0
            for ch in s[2:8]:
                n = (n << 6) | (ord(ch) - 63)
            head = 8

        bits = n * (n - 1) // 2
        expected = head + (bits + 5) // 6
        if len(s) != expected:
            pos = offset + min(len(s), expected)
            raise GraphFormatError(
                f"graph6 for n={n} needs {expected} characters, got {len(s)}", position=pos)
        pad = 6 * (expected - head) - bits
        if pad and (ord(s[-1]) - 63) & ((1 << pad) - 1):
            raise GraphFormatError("non-zero padding bits", position=offset + len(s) - 1)

        g = nx.from_graph6_bytes(s.encode("ascii"))
        return Graph.from_networkx(g)

    @staticmethod
    def write_graph6(G: Graph) -> str:
        return nx.to_graph6_bytes(G.to_networkx(), header=False).decode("ascii").strip()

    @staticmethod
    def parse_edge_list(text: str) -> Graph:
        """One ``u v`` pair per line, 0-based; ``#`` starts a comment.

        An optional ``n=<count>`` line fixes the vertex count (needed for
        trailing isolated vertices); otherwise n is the largest id plus one.
        """
        n: int | None = None
        edges: list[tuple[int, int]] = []
        seen: set[tuple[int, int]] = set()
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if line.startswith("n="):
                try:
                    n = int(line[2:])
                except ValueError as e:
                    raise GraphFormatError(f"bad vertex count {line!r}", position=lineno) from e
                continue
            parts = line.split()
            if len(parts) != 2:
                raise GraphFormatError(f"expected 'u v', got {line!r}", position=lineno)
            try:
                u, v = int(parts[0]), int(parts[1])
            except ValueError as e:
                raise GraphFormatError(f"non-integer vertex in {line!r}", position=lineno) from e
            if u < 0 or v < 0:
                raise GraphFormatError(f"negative vertex in {line!r}", position=lineno)
            if u == v:
                raise GraphFormatError(f"loop at vertex {u}", position=lineno)
            e = (min(u, v), max(u, v))
            if e in seen:
                raise GraphFormatError(f"duplicate edge {e[0]} {e[1]}", position=lineno)
            seen.add(e)
            edges.append(e)
        if n is None:
            if not edges:
                raise GraphFormatError("edge list has neither edges nor an n= line", position=1)
            n = 1 + max(max(e) for e in edges)
        return Graph(n, tuple(edges))

    @staticmethod
    def write_edge_list(G: Graph) -> str:
        lines = [f"n={G.n}"] + [f"{u} {v}" for u, v in G.edges]
        return "\n".join(lines) + "\n"

    @staticmethod
    def to_json(G: Graph) -> dict:
        return {
            "schema": GRAPH_SCHEMA,
            "n": G.n,
            "edges": [list(e) for e in G.edges],
            "graph6": GraphCodec.write_graph6(G),
        }

    @staticmethod
    def from_json(data: dict) -> Graph:
        try:
            return Graph.from_edges(int(data["n"]), (tuple(e) for e in data["edges"]))
        except (KeyError, TypeError) as e:
            raise GraphFormatError(f"graph JSON needs 'n' and 'edges': {e}") from e

    @staticmethod
    def read_graph6_lines(path: str | Path) -> list[Graph]:
        p = Path(path)
        if not p.exists():
            raise FileNotFoundError(f"File not found: {p}")
        return [GraphCodec.parse_graph6(line)
                for line in p.read_text(encoding="utf-8").splitlines() if line.strip()]

    @staticmethod
    def load_graph(source: str) -> Graph:
        """Resolve a CLI graph argument.

        Accepted forms, tried in order: an existing file (``.json``, ``.g6``
        or an edge list), a family spec such as ``grid:3,2``, an inline
        graph6 string.
        """
        p = Path(source)
        if p.is_file():
            text = p.read_text(encoding="utf-8")
            if p.suffix == ".json":
                try:
                    return GraphCodec.from_json(json.loads(text))
                except json.JSONDecodeError as e:
                    raise GraphFormatError(f"invalid JSON in {p}: {e.msg}", position=e.pos) from e
            stripped = text.strip()
            if p.suffix in (".g6", ".graph6") or (stripped and len(stripped.split()) == 1):
                return GraphCodec.parse_graph6(stripped.splitlines()[0])
            return GraphCodec.parse_edge_list(text)
        if FamilyPresets.is_family_spec(source):
            return FamilyPresets.parse(source)
        return GraphCodec.parse_graph6(source)
