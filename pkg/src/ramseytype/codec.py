"""Corpus I/O: graph6, plain edge lists and DOT export.

graph6 follows the de facto format: a size header N(n), then the upper
triangle x(0,1), x(0,2), x(1,2), x(0,3), ... packed big-endian six bits
per character, zero padded, each character offset by 63.
"""

import logging
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Mapping, Optional, Tuple

from .errors import CodecError, ErrorCode, GraphError, SourceLocation, make_error
from .graph import Graph, build_graph

logger = logging.getLogger(__name__)

GRAPH6_HEADER = ">>graph6<<"
FORMATS = ("graph6", "edge-list")

_SMALL_MAX = 62
_MEDIUM_MAX = 258047
_LARGE_MAX = (1 << 36) - 1


def strip_graph6_header(text: str) -> str:
    """Remove surrounding whitespace and an optional '>>graph6<<' prefix."""
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):].strip()
    return s


def _decode_order(s: str, location: Optional[SourceLocation]) -> Tuple[int, int]:
    if not s:
        raise make_error(ErrorCode.E101, location, details="empty record")
    if s[0] != "~":
        return ord(s[0]) - 63, 1
    if len(s) >= 2 and s[1] == "~":
        width, start = 6, 2
    else:
        width, start = 3, 1
    chunk = s[start:start + width]
    if len(chunk) < width:
        raise make_error(ErrorCode.E101, location, details=f"'{s[:start + width]}' is truncated")
    n = 0
    for ch in chunk:
        n = (n << 6) | (ord(ch) - 63)
    return n, start + width


def decode_graph6(
    text: str,
    lenient: bool = False,
    location: Optional[SourceLocation] = None,
) -> Graph:
    """Decode one graph6 record.

    Args:
        text: The record, optionally prefixed with '>>graph6<<'
        lenient: Accept non-zero padding bits with a logged warning
        location: Position used in diagnostics

    Returns:
        The decoded graph
    """
    s = strip_graph6_header(text)
    for column, ch in enumerate(s, start=1):
        if not 63 <= ord(ch) <= 126:
            raise make_error(
                ErrorCode.E101,
                location,
                details=f"character {ch!r} at column {column} is outside '?'..'~'",
            )
    n, offset = _decode_order(s, location)
    payload = s[offset:]
    total = n * (n - 1) // 2
    expected = -(-total // 6)
    if len(payload) != expected:
        raise make_error(ErrorCode.E102, location, found=len(payload), expected=expected, order=n)

    value = 0
    for ch in payload:
        value = (value << 6) | (ord(ch) - 63)
    pad = expected * 6 - total
    if pad and value & ((1 << pad) - 1):
        if not lenient:
            raise make_error(ErrorCode.E103, location)
        logger.warning("%s: graph6 padding bits are not zero; ignored", location or "record")
    value >>= pad

    rows = [0] * n
    k = total - 1
    for j in range(1, n):
        for i in range(j):
            if value >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k -= 1
    return Graph(n, tuple(rows))


def _encode_order(n: int) -> str:
    if n < 0 or n > _LARGE_MAX:
        raise make_error(ErrorCode.E104, order=n)
    if n <= _SMALL_MAX:
        return chr(n + 63)
    if n <= _MEDIUM_MAX:
        return "~" + "".join(chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0))
    return "~~" + "".join(chr(((n >> shift) & 63) + 63) for shift in (30, 24, 18, 12, 6, 0))


def encode_graph6(G: Graph, header: bool = False) -> str:
    """Encode a graph as a canonical graph6 record (no trailing newline)."""
    n = G.order
    out = [GRAPH6_HEADER] if header else []
    out.append(_encode_order(n))
    acc = 0
    filled = 0
    for j in range(1, n):
        for i in range(j):
            acc = (acc << 1) | (G.rows[i] >> j & 1)
            filled += 1
            if filled == 6:
                out.append(chr(acc + 63))
                acc = 0
                filled = 0
    if filled:
        out.append(chr((acc << (6 - filled)) + 63))
    return "".join(out)


def encode_edge_list(G: Graph) -> str:
    """Edge-list block: 'n m' then one 'u v' line per edge."""
    edges = G.edges()
    lines = [f"{G.order} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def export_dot(
    G: Graph,
    labels: Optional[Mapping[int, str]] = None,
    name: str = "G",
) -> str:
    """Render an undirected DOT document.

    Every vertex gets a node line, isolated or not; edges follow in
    sorted order.

    Args:
        G: Graph to render
        labels: Optional per-vertex annotation shown in the node label
        name: DOT graph identifier
    """
    lines = [f"graph {name} {{"]
    for v in range(G.order):
        if labels and v in labels:
            text = f"{v}: {labels[v]}".replace('"', '\\"')
            lines.append(f'    {v} [label="{text}"];')
        else:
            lines.append(f"    {v};")
    for u, v in G.edges():
        lines.append(f"    {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


@dataclass
class CorpusRecord:
    """One graph read from a corpus, with the line it started on."""
    index: int
    line: int
    graph: Graph


class CorpusStream:
    """Line-oriented reader over graph6 or edge-list text.

    Records come out in input order. Malformed records raise a
    positioned CodecError, or are skipped with a warning in lenient
    mode.
    """

    def __init__(
        self,
        lines: Iterable[str],
        format: str = "graph6",
        source: str = "<stdin>",
        lenient: bool = False,
    ):
        if format not in FORMATS:
            raise make_error(
                ErrorCode.E402, details=f"unknown input format '{format}' (use {', '.join(FORMATS)})"
            )
        self.format = format
        self.source = source
        self.lenient = lenient
        self.line_number = 0
        self.skipped = 0
        self._lines = iter(lines)
        self._count = 0

    def __iter__(self) -> Iterator[Graph]:
        for record in self.records():
            yield record.graph

    def records(self) -> Iterator[CorpusRecord]:
        reader = self._graph6 if self.format == "graph6" else self._edge_lists
        for line, graph in reader():
            yield CorpusRecord(self._count, line, graph)
            self._count += 1

    def _next_line(self) -> Optional[str]:
        try:
            raw = next(self._lines)
        except StopIteration:
            return None
        self.line_number += 1
        return raw.rstrip("\r\n")

    def _skip(self, error: CodecError) -> None:
        if not self.lenient:
            raise error
        self.skipped += 1
        logger.warning("skipping malformed record: %s", error.format().replace("\n", " "))

    def _graph6(self) -> Iterator[Tuple[int, Graph]]:
        while True:
            raw = self._next_line()
            if raw is None:
                return
            if not raw.strip():
                continue
            location = SourceLocation(self.source, self.line_number)
            try:
                yield self.line_number, decode_graph6(raw, self.lenient, location)
            except CodecError as e:
                self._skip(e)

    def _content_line(self) -> Optional[str]:
        while True:
            raw = self._next_line()
            if raw is None:
                return None
            text = raw.split("#", 1)[0].strip()
            if text:
                return text

    def _ints(self, text: str, count: int, what: str) -> List[int]:
        parts = text.split()
        location = SourceLocation(self.source, self.line_number)
        if len(parts) != count:
            raise make_error(
                ErrorCode.E105, location, details=f"expected {what}, found '{text}'"
            )
        try:
            return [int(p) for p in parts]
        except ValueError:
            raise make_error(ErrorCode.E105, location, details=f"expected {what}, found '{text}'")

    def _edge_lists(self) -> Iterator[Tuple[int, Graph]]:
        while True:
            head = self._content_line()
            if head is None:
                return
            start = self.line_number
            try:
                n, m = self._ints(head, 2, "'n m'")
                if n < 0 or m < 0:
                    raise make_error(
                        ErrorCode.E105,
                        SourceLocation(self.source, start),
                        details="n and m must be non-negative",
                    )
                edges = []
                for _ in range(m):
                    body = self._content_line()
                    if body is None:
                        raise make_error(
                            ErrorCode.E105,
                            SourceLocation(self.source, start),
                            details=f"block ends before its {m} edge line(s)",
                        )
                    edges.append(tuple(self._ints(body, 2, "'u v'")))
                try:
                    graph = build_graph(n, edges)
                except GraphError as e:
                    raise make_error(
                        ErrorCode.E105,
                        SourceLocation(self.source, start),
                        details=e.message,
                    )
                yield start, graph
            except CodecError as e:
                # the rest of a broken block cannot be resynchronised
                self._skip(e)
                if self.lenient:
                    return
