"""
Text formats for graphs and digraphs.

Edge list::

    # optional comments
    n m
    u v
    ...

JSON: ``{"n": 4, "edges": [[0, 1], ...]}`` for graphs and
``{"n": 4, "arcs": [[0, 1], ...]}`` for digraphs. Rendering is
deterministic: pairs come out sorted.
"""

import json
import logging
from pathlib import Path

from . import settings
from .exceptions import GraphError, GraphFormatError
from .graph import make_digraph, make_graph

logger = logging.getLogger(__name__)


def render_edgelist(graph):
    lines = [f"{graph.n} {graph.m}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges)
    return "\n".join(lines) + "\n"


def _check_vertex_count(n):
    if n > settings.MAX_GRAPH_VERTICES:
        raise GraphFormatError(
            f"vertex count {n} exceeds the limit of {settings.MAX_GRAPH_VERTICES}"
        )
    return n


def _parse_int(token, line_number):
    try:
        return int(token)
    except ValueError as exc:
        raise GraphFormatError(
            f"line {line_number}: {token!r} is not an integer"
        ) from exc


def parse_edgelist(text):
    """
    Parse the edge-list format.

    Raises:
        GraphFormatError: If the header is missing, a line is malformed, the
            edge count does not match the header or the vertex count is above
            `settings.MAX_GRAPH_VERTICES`.
    """
    rows = []
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphFormatError(
                f"line {line_number}: expected two integers, got {raw.strip()!r}"
            )
        rows.append(tuple(_parse_int(token, line_number) for token in tokens))
    if not rows:
        raise GraphFormatError("missing 'n m' header line")
    (n, m), edges = rows[0], rows[1:]
    if m != len(edges):
        raise GraphFormatError(
            f"header announces {m} edges but {len(edges)} were given"
        )
    _check_vertex_count(n)
    try:
        return make_graph(n, edges)
    except GraphError as exc:
        raise GraphFormatError(str(exc)) from exc


def graph_to_dict(graph):
    return {"n": graph.n, "edges": [list(edge) for edge in graph.edges]}


def _pairs_from(data, key):
    pairs = data.get(key)
    if not isinstance(pairs, list):
        raise GraphFormatError(f"'{key}' must be a list of pairs")
    return [tuple(pair) if isinstance(pair, list) else pair for pair in pairs]


def graph_from_dict(data):
    """
    Raises:
        GraphFormatError: If `data` is not a valid graph document.
    """
    if not isinstance(data, dict) or not isinstance(data.get("n"), int):
        raise GraphFormatError("a graph document needs an integer 'n'")
    try:
        return make_graph(_check_vertex_count(data["n"]), _pairs_from(data, "edges"))
    except GraphFormatError:
        raise
    except GraphError as exc:
        raise GraphFormatError(str(exc)) from exc


def digraph_to_dict(digraph):
    return {"n": digraph.n, "arcs": [list(arc) for arc in digraph.arcs]}


def digraph_from_dict(data):
    if not isinstance(data, dict) or not isinstance(data.get("n"), int):
        raise GraphFormatError("a digraph document needs an integer 'n'")
    try:
        return make_digraph(_check_vertex_count(data["n"]), _pairs_from(data, "arcs"))
    except GraphFormatError:
        raise
    except GraphError as exc:
        raise GraphFormatError(str(exc)) from exc


def dumps(data):
    """
    Deterministic JSON rendering shared by every document this package writes.
    """
    return json.dumps(data, indent=2) + "\n"


def loads(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"malformed JSON: {exc}") from exc


def render_graph_json(graph):
    return dumps(graph_to_dict(graph))


def parse_graph_json(text):
    return graph_from_dict(loads(text))


def _is_json(path):
    return Path(path).suffix.lower() == ".json"


def read_graph(path):
    """
    Read a graph from `path`, choosing the format by extension (``.json`` or edge list).

    Raises:
        GraphFormatError: If the file cannot be read or parsed.
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise GraphFormatError(f"cannot read {path}: {exc.strerror}") from exc
    if _is_json(path):
        return parse_graph_json(text)
    return parse_edgelist(text)


def write_graph(path, graph):
    text = render_graph_json(graph) if _is_json(path) else render_edgelist(graph)
    Path(path).write_text(text, encoding="utf-8")
    logger.info("Wrote %s to %s", graph, path)
