"""Text interchange: edge-list and arc-list authoring formats, graph6 corpora.

Edge lists are UTF-8 text.  An optional first meaningful line
``vertices: a b c`` declares vertices (required for isolated ones); every
following line is one edge ``u v``.  ``#`` starts a comment.  Arc lists
use ``u > v`` lines with the same header and comment rules.

graph6 is the standard 6-bit packing: N(n) header byte, then the upper
triangle in column-major order, zero-padded to a byte boundary.
"""

from __future__ import annotations

from .errors import FormatError
from .graphs import (
    LabeledGraph,
    Orientation,
    g6_bytes_from_rows,
    rows_from_g6_bytes,
)

__all__ = [
    "FormatError",
    "parse_edge_list",
    "emit_edge_list",
    "parse_graph6",
    "emit_graph6",
    "parse_arc_list",
    "emit_arc_list",
    "parse_graph_auto",
]


def _meaningful_lines(text: str):
    """Yield (offset, stripped line) skipping blanks and # comments."""
    offset = 0
    for raw in text.splitlines(keepends=True):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield offset, line
        offset += len(raw.encode("utf-8"))


def _parse_lines(text: str, separator: str | None):
    """Shared edge-list / arc-list reader; separator is None or '>'."""
    vertices: list[str] = []
    seen: set[str] = set()
    pairs: list[tuple[str, str]] = []

    def note_vertex(v: str) -> None:
        if v not in seen:
            seen.add(v)
            vertices.append(v)

    first = True
    for offset, line in _meaningful_lines(text):
        if first and line.startswith("vertices:"):
            for v in line[len("vertices:") :].split():
                if v in seen:
                    raise FormatError(f"vertex {v!r} declared twice", offset)
                note_vertex(v)
            first = False
            continue
        first = False
        if separator is None:
            tokens = line.split()
            if len(tokens) != 2:
                raise FormatError(
                    f"expected 'u v', got {line!r}", offset
                )
        else:
            tokens = [t.strip() for t in line.split(separator)]
            if len(tokens) != 2 or not tokens[0] or not tokens[1]:
                raise FormatError(
                    f"expected 'u {separator} v', got {line!r}", offset
                )
        u, v = tokens
        if u == v:
            raise FormatError(f"loop at vertex {u!r}", offset)
        note_vertex(u)
        note_vertex(v)
        if any({u, v} == {a, b} for a, b in pairs):
            raise FormatError(f"duplicate pair {u!r} {v!r}", offset)
        pairs.append((u, v))
    return vertices, pairs


def parse_edge_list(text: str) -> LabeledGraph:
    vertices, pairs = _parse_lines(text, None)
    return LabeledGraph(vertices, pairs)


def emit_edge_list(g: LabeledGraph) -> str:
    lines = ["vertices: " + " ".join(g.vertices)]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def parse_arc_list(text: str) -> Orientation:
    vertices, pairs = _parse_lines(text, ">")
    underlying = LabeledGraph(vertices, pairs)
    return Orientation(underlying, pairs)


def emit_arc_list(o: Orientation) -> str:
    lines = ["vertices: " + " ".join(o.vertices)]
    lines.extend(f"{u} > {v}" for u, v in o.sorted_arcs())
    return "\n".join(lines) + "\n"


def parse_graph6(data: bytes | str) -> LabeledGraph:
    """Decode one graph6 line; vertex labels are decimal positions."""
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.rstrip(b"\r\n")
    n, rows = rows_from_g6_bytes(data)
    labels = tuple(str(i) for i in range(n))
    edges = [
        (labels[i], labels[j])
        for i in range(n)
        for j in range(i + 1, n)
        if rows[i] >> j & 1
    ]
    return LabeledGraph(labels, edges)


def emit_graph6(g: LabeledGraph) -> bytes:
    """Encode in g's own vertex order, so parse-then-emit is byte exact."""
    return g6_bytes_from_rows(g.n, g.adjacency_rows())


def parse_graph_auto(data: bytes | str) -> LabeledGraph:
    """Edge-list or graph6, decided by the shape of the first line.

    A line containing whitespace, a ``vertices:`` header, or a comment is
    edge-list text; otherwise the line is treated as graph6.
    """
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    for _, line in _meaningful_lines(text):
        if line.startswith("vertices:") or any(c.isspace() for c in line.strip()):
            return parse_edge_list(text)
        return parse_graph6(line)
    # nothing but comments/blanks: an empty edge list would have no vertices
    return parse_edge_list(text)
