"""Unit Tests for the Corpus Codec.

Tests for graph6 decoding and encoding, edge lists, DOT export and the
corpus stream, with networkx as the reference codec.
"""

import networkx as nx
import pytest

from ramseytype.codec import (
    CorpusStream,
    decode_graph6,
    encode_edge_list,
    encode_graph6,
    export_dot,
)
from ramseytype.errors import CodecError, ConfigError, ErrorCode, SourceLocation
from ramseytype.graph import build_graph, empty_graph, to_networkx
from ramseytype.harness.random_graphs import random_graph


class TestGraph6Goldens:
    """Fixed records checked against the format definition."""

    def test_k2(self, named):
        assert decode_graph6("A_") == named("K2")
        assert encode_graph6(named("K2")) == "A_"

    def test_e5(self, named):
        assert decode_graph6("D??") == named("E5")
        assert encode_graph6(empty_graph(5)) == "D??"

    def test_k3_and_p3(self, named):
        assert encode_graph6(named("K3")) == "Bw"
        assert encode_graph6(named("P3")) == "Bg"

    def test_null_graph(self):
        assert encode_graph6(empty_graph(0)) == "?"
        assert decode_graph6("?").order == 0

    def test_header_prefix(self, named):
        assert decode_graph6(">>graph6<<A_") == named("K2")
        assert encode_graph6(named("K2"), header=True) == ">>graph6<<A_"

    def test_medium_order_header(self):
        record = encode_graph6(empty_graph(63))
        assert record.startswith("~??~")
        assert decode_graph6(record).order == 63


class TestGraph6Errors:
    """Malformed records raise positioned codec errors."""

    def test_empty_record(self):
        with pytest.raises(CodecError) as exc:
            decode_graph6("")
        assert exc.value.code == ErrorCode.E101

    def test_bad_character(self):
        with pytest.raises(CodecError) as exc:
            decode_graph6("A!")
        assert exc.value.code == ErrorCode.E101

    def test_truncated_payload(self):
        with pytest.raises(CodecError) as exc:
            decode_graph6("A")
        assert exc.value.code == ErrorCode.E102

    def test_nonzero_padding(self):
        with pytest.raises(CodecError) as exc:
            decode_graph6("A`")
        assert exc.value.code == ErrorCode.E103

    def test_nonzero_padding_lenient(self, named):
        assert decode_graph6("A`", lenient=True) == named("K2")

    def test_location_in_error(self):
        with pytest.raises(CodecError) as exc:
            decode_graph6("A", location=SourceLocation("corpus.g6", 7))
        assert exc.value.source == "corpus.g6"
        assert exc.value.line == 7


class TestReferenceCodec:
    """Agreement with networkx on small and random graphs."""

    def test_exhaustive_small_orders(self):
        for n in range(1, 6):
            pairs = [(i, j) for j in range(n) for i in range(j)]
            for pattern in range(1 << len(pairs)):
                G = build_graph(n, [p for k, p in enumerate(pairs) if pattern >> k & 1])
                record = encode_graph6(G)
                reference = nx.to_graph6_bytes(to_networkx(G), header=False).decode().strip()
                assert record == reference
                assert decode_graph6(record) == G

    def test_random_graphs(self, rng):
        for _ in range(200):
            G = random_graph(rng.randint(1, 16), rng.random(), rng)
            record = encode_graph6(G)
            H = nx.from_graph6_bytes(record.encode())
            assert sorted(tuple(sorted(e)) for e in H.edges()) == G.edges()
            assert decode_graph6(record) == G


class TestTextFormats:
    """Edge lists and DOT."""

    def test_edge_list(self, named):
        assert encode_edge_list(named("P3")) == "3 2\n0 1\n1 2\n"

    def test_dot(self, named):
        assert export_dot(named("K2")) == "graph G {\n    0;\n    1;\n    0 -- 1;\n}\n"

    def test_dot_labels(self, named):
        text = export_dot(named("K2"), {0: "deg=1"}, name="H")
        assert text.startswith("graph H {")
        assert '0 [label="0: deg=1"];' in text


class TestCorpusStream:
    """Tests for the line-oriented corpus reader."""

    def test_graph6_records(self, named):
        stream = CorpusStream(["A_", "", "Bw"])
        records = list(stream.records())
        assert [r.index for r in records] == [0, 1]
        assert [r.line for r in records] == [1, 3]
        assert records[1].graph == named("K3")

    def test_strict_mode_raises_with_position(self):
        with pytest.raises(CodecError) as exc:
            list(CorpusStream(["A_", "A"], source="bad.g6"))
        assert exc.value.code == ErrorCode.E102
        assert exc.value.line == 2

    def test_lenient_mode_skips(self):
        stream = CorpusStream(["A_", "A", "Bw"], lenient=True)
        assert len(list(stream)) == 2
        assert stream.skipped == 1

    def test_edge_list_blocks(self, named):
        text = "# two graphs\n3 2\n0 1\n1 2\n2 1\n0 1\n"
        graphs = list(CorpusStream(text.splitlines(), format="edge-list"))
        assert graphs == [named("P3"), named("K2")]

    def test_edge_list_bad_vertex(self):
        with pytest.raises(CodecError) as exc:
            list(CorpusStream(["2 1", "0 5"], format="edge-list"))
        assert exc.value.code == ErrorCode.E105

    def test_unknown_format(self):
        with pytest.raises(ConfigError):
            CorpusStream([], format="sparse6")
