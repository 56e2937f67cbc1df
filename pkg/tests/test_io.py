import json

import pytest

from mbd_modular.errors import GraphFormatError, GraphSizeError
from mbd_modular.generators import GraphFamilies
from mbd_modular.io import GRAPH_SCHEMA, GraphCodec


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------

class TestGraph6:
    def test_known_strings(self):
        assert GraphCodec.write_graph6(GraphFamilies.complete(3)) == "Bw"
        assert GraphCodec.write_graph6(GraphFamilies.path(3)) == "Bg"
        assert GraphCodec.parse_graph6("A_") == GraphFamilies.path(2)

    def test_header_is_accepted(self):
        assert GraphCodec.parse_graph6(">>graph6<<Bw") == GraphFamilies.complete(3)

    def test_invalid_character_reports_position(self):
        with pytest.raises(GraphFormatError) as exc:
            GraphCodec.parse_graph6("B!")
        assert exc.value.position == 1

    def test_wrong_length_reports_position(self):
        with pytest.raises(GraphFormatError) as exc:
            GraphCodec.parse_graph6("Bww")
        assert exc.value.position == 2

    def test_empty_string(self):
        with pytest.raises(GraphFormatError):
            GraphCodec.parse_graph6("   ")

    def test_nonzero_padding(self):
        # n=2 has a single edge bit; '`' sets a padding bit
        with pytest.raises(GraphFormatError, match="padding"):
            GraphCodec.parse_graph6("A`")

    def test_larger_graphs_survive(self):
        for G in (GraphFamilies.grid(4, 4), GraphFamilies.clique_chain(3, 4), GraphFamilies.cycle(11)):
            assert GraphCodec.parse_graph6(GraphCodec.write_graph6(G)) == G


# ---------------------------------------------------------------------------
# Edge lists and JSON
# ---------------------------------------------------------------------------

class TestEdgeList:
    def test_parse_with_comments_and_vertex_count(self):
        text = "# a path plus an isolated vertex\nn=4\n0 1\n1 2  # middle\n"
        G = GraphCodec.parse_edge_list(text)
        assert G.n == 4
        assert G.edges == ((0, 1), (1, 2))

    def test_vertex_count_inferred(self):
        assert GraphCodec.parse_edge_list("2 0\n").n == 3

    def test_errors_carry_line_numbers(self):
        with pytest.raises(GraphFormatError) as exc:
            GraphCodec.parse_edge_list("0 1\n1 x\n")
        assert exc.value.position == 2
        with pytest.raises(GraphFormatError) as exc:
            GraphCodec.parse_edge_list("0 1\n\n1 0\n")
        assert exc.value.position == 3
        with pytest.raises(GraphFormatError):
            GraphCodec.parse_edge_list("3 3\n")

    def test_declared_count_too_small(self):
        with pytest.raises(GraphSizeError):
            GraphCodec.parse_edge_list("n=2\n0 2\n")

    def test_write_then_parse(self):
        G = GraphFamilies.two_hub_graph()
        assert GraphCodec.parse_edge_list(GraphCodec.write_edge_list(G)) == G


def test_json_document():
    G = GraphFamilies.star(3)
    doc = GraphCodec.to_json(G)
    assert doc["schema"] == GRAPH_SCHEMA
    assert doc["n"] == 4
    assert doc["edges"] == [[0, 1], [0, 2], [0, 3]]
    assert GraphCodec.from_json(doc) == G
    with pytest.raises(GraphFormatError):
        GraphCodec.from_json({"n": 3})


# ---------------------------------------------------------------------------
# load_graph
# ---------------------------------------------------------------------------

class TestLoadGraph:
    def test_family_spec_and_inline_graph6(self):
        assert GraphCodec.load_graph("cycle:5") == GraphFamilies.cycle(5)
        assert GraphCodec.load_graph("Bw") == GraphFamilies.complete(3)

    def test_files(self, tmp_path):
        G = GraphFamilies.grid(2, 3)
        g6 = tmp_path / "grid.g6"
        g6.write_text(GraphCodec.write_graph6(G) + "\n", encoding="utf-8")
        edges = tmp_path / "grid.txt"
        edges.write_text(GraphCodec.write_edge_list(G), encoding="utf-8")
        js = tmp_path / "grid.json"
        js.write_text(json.dumps(GraphCodec.to_json(G)), encoding="utf-8")
        for p in (g6, edges, js):
            assert GraphCodec.load_graph(str(p)) == G

    def test_bad_json_file(self, tmp_path):
        p = tmp_path / "bad.json"
        p.write_text("{not json", encoding="utf-8")
        with pytest.raises(GraphFormatError):
            GraphCodec.load_graph(str(p))

    def test_read_graph6_lines(self, tmp_path):
        p = tmp_path / "many.g6"
        p.write_text("A_\nBw\n\nBg\n", encoding="utf-8")
        graphs = GraphCodec.read_graph6_lines(p)
        assert [G.n for G in graphs] == [2, 3, 3]
        with pytest.raises(FileNotFoundError):
            GraphCodec.read_graph6_lines(tmp_path / "missing.g6")
