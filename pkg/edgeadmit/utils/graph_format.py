import logging

from edgeadmit.exceptions.graph import GraphFormatError
from edgeadmit.models.multigraph import MultiGraph

logger = logging.getLogger(__name__)

COMMENT_PREFIX = "#"


def _content_lines(text: str) -> list[tuple[int, str]]:
    """Non-empty, non-comment lines with their 1-based line numbers."""
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith(COMMENT_PREFIX):
            continue
        lines.append((number, line))
    return lines


def _parse_ints(line: str, count: int, line_number: int) -> list[int]:
    parts = line.split()
    if len(parts) != count:
        raise GraphFormatError(f"expected {count} integers, got {line!r}", line_number=line_number)
    try:
        values = [int(part) for part in parts]
    except ValueError:
        raise GraphFormatError(f"non-integer token in {line!r}", line_number=line_number) from None
    if any(value < 0 for value in values):
        raise GraphFormatError(f"negative value in {line!r}", line_number=line_number)
    return values


def parse_graph(text: str) -> MultiGraph:
    """
    Parses the `n m` header followed by m `u v` edge lines.

    Vertices are 0..n-1. Edge ids follow file order starting at 0, parallel
    edges are repeated lines.

    Raises:
        GraphFormatError: On malformed lines, wrong edge count, loops or
            endpoints outside 0..n-1.
    """
    lines = _content_lines(text)
    if not lines:
        raise GraphFormatError("missing `n m` header")

    header_number, header = lines[0]
    vertex_count, edge_count = _parse_ints(header, 2, header_number)
    body = lines[1:]
    if len(body) != edge_count:
        raise GraphFormatError(
            f"header declares {edge_count} edges, found {len(body)} edge lines",
            line_number=header_number,
        )

    pairs = []
    for line_number, line in body:
        u, v = _parse_ints(line, 2, line_number)
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", line_number=line_number)
        for endpoint in (u, v):
            if endpoint >= vertex_count:
                raise GraphFormatError(
                    f"endpoint {endpoint} is not a declared vertex (n={vertex_count})",
                    line_number=line_number,
                )
        pairs.append((u, v))

    graph = MultiGraph.from_pairs(vertex_count, pairs)
    logger.debug("🔍 Parsed graph with %s vertices and %s edges", vertex_count, edge_count)
    return graph


def serialize_graph(graph: MultiGraph) -> str:
    """
    Writes the graph in file format, edges in edge id order.

    Vertex labels must be exactly 0..n-1; use `compact_labels` first otherwise.
    """
    vertices = graph.sorted_vertices()
    if vertices != tuple(range(len(vertices))):
        raise GraphFormatError("vertex labels must be 0..n-1 to serialize")
    lines = [f"{graph.number_of_vertices()} {graph.number_of_edges()}"]
    lines.extend(f"{u} {v}" for _, u, v in graph.edges())
    return "\n".join(lines) + "\n"


def compact_labels(graph: MultiGraph) -> tuple[MultiGraph, dict[int, int]]:
    """Relabels vertices to 0..n-1 preserving order; returns the graph and old -> new map."""
    mapping = {vertex: index for index, vertex in enumerate(graph.sorted_vertices())}
    return graph.relabel(mapping), mapping
