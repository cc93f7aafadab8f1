"""Edge-list text format.

Line 1 holds the vertex count ``n``; each further non-empty line holds one
edge ``u v`` separated by spaces or tabs. Lines starting with ``#`` are
comments. Output lists every edge once with ``u < v`` in lexicographic
order, so serialization is canonical.
"""

import io
import logging
from collections.abc import Iterator
from pathlib import Path
from typing import TextIO

from src.core.errors import ParseError
from src.core.graph.graph import Edge, Graph, edges, from_edges

logger = logging.getLogger(__name__)


def from_edge_list(text: str | TextIO) -> Graph:
    """
    Parse an edge list.

    Args:
        text: Whole document as a string, or an open text stream

    Returns:
        Validated Graph whose vertices are exactly those declared by the header

    Raises:
        ParseError: Missing header, wrong token count, non-integer token or
            undecodable bytes in the stream
        SelfLoopError, DuplicateEdgeError, VertexOutOfRangeError: Invalid edges
    """
    stream = io.StringIO(text) if isinstance(text, str) else text
    lines = _content_lines(stream)

    try:
        line_number, header = next(lines)
    except StopIteration:
        raise ParseError("Missing vertex count header") from None
    header_tokens = header.split()
    if len(header_tokens) != 1:
        raise ParseError(f"Expected a single vertex count, got {header!r}", line_number)
    vertex_count = _parse_int(header_tokens[0], line_number)

    graph = from_edges(vertex_count, _parse_edges(lines))
    logger.debug("Parsed edge list: n=%d m=%d", graph.vertex_count, graph.edge_count)
    return graph


def to_edge_list(g: Graph) -> str:
    """Serialize ``g`` in canonical edge-list form (trailing newline included)."""
    body = "".join(f"{u} {v}\n" for u, v in edges(g))
    return f"{g.vertex_count}\n{body}"


def read_graph(path: str | Path) -> Graph:
    with open(path, encoding="utf-8") as f:
        return from_edge_list(f)


def write_graph(g: Graph, path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(to_edge_list(g), encoding="utf-8")
    return path


def _content_lines(stream: TextIO) -> Iterator[tuple[int, str]]:
    try:
        for line_number, raw in enumerate(stream, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            yield line_number, line
    except UnicodeDecodeError as exc:
        # text streams decode ahead in chunks, so no reliable line number exists
        raise ParseError(f"Input is not valid UTF-8 text ({exc.reason})") from None


def _parse_edges(lines: Iterator[tuple[int, str]]) -> Iterator[Edge]:
    for line_number, line in lines:
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(f"Expected 'u v', got {line!r}", line_number)
        yield _parse_int(tokens[0], line_number), _parse_int(tokens[1], line_number)


def _parse_int(token: str, line_number: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"Not an integer: {token!r}", line_number) from None
