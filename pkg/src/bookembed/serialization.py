"""
Serialization module.

This module reads and writes graphs in the edge-list text format, and layouts as JSON reports.

The edge-list format has an optional header line `p <n> <m>`, then one `u v` pair per line.
Anything after a `#` is a comment, and blank lines are ignored. Without a header,
the vertices are `0..max`, where `max` is the largest endpoint.
"""

import json
from typing import Any, Dict, List, Optional, Tuple

from bookembed.augment import AugmentationTrace
from bookembed.exceptions import ParseError
from bookembed.graph import Graph, RotationSystem, build_graph
from bookembed.layout import BookLayout
from bookembed.pipeline import EmbeddingProvenance
from bookembed.types import Edge

REQUIRED_KEYS = ("n", "edges", "spine", "pages", "page_count", "provenance")


def _parse_int(token: str, line: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"expected an integer, got {token!r}", line)


def parse_edge_list(text: str) -> Graph:
    """
    Parse a graph in the edge-list format.

    Arguments:
        text: The text to parse.

    Raises:
        ParseError: When a line is malformed, or when the header does not match the edges.

    Returns:
        The graph (validation errors of [`build_graph`][bookembed.graph.build_graph] propagate).
    """
    header: Optional[Tuple[int, int, int]] = None
    edges: List[Edge] = []
    for number, raw_line in enumerate(text.splitlines(), 1):
        tokens = raw_line.split("#", 1)[0].split()
        if not tokens:
            continue
        if tokens[0] == "p":
            if header is not None or edges:
                raise ParseError("the header must come first, and only once", number)
            if len(tokens) != 3:
                raise ParseError("the header must read 'p <n> <m>'", number)
            header = (_parse_int(tokens[1], number), _parse_int(tokens[2], number), number)
            continue
        if len(tokens) != 2:
            raise ParseError(f"expected two vertices, got {len(tokens)} tokens", number)
        edges.append((_parse_int(tokens[0], number), _parse_int(tokens[1], number)))

    if header is None:
        size = max((max(edge) for edge in edges), default=-1) + 1
        return build_graph(size, edges)

    size, edge_count, number = header
    if edge_count != len(edges):
        raise ParseError(f"the header announces {edge_count} edges, but {len(edges)} are listed", number)
    return build_graph(size, edges)


def emit_edge_list(graph: Graph) -> str:
    """
    Write a graph in the edge-list format.

    Arguments:
        graph: The graph. Its vertices should be `0..n-1`.

    Returns:
        The text, with a header line.
    """
    lines = [f"p {graph.next_vertex()} {graph.m}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges)
    return "\n".join(lines) + "\n"


def _edge_key(edge: Edge) -> str:
    return f"{edge[0]}-{edge[1]}"


def _parse_edge_key(key: str) -> Edge:
    try:
        first, second = key.split("-")
        return int(first), int(second)
    except ValueError:
        raise ParseError(f"invalid edge key {key!r}, expected 'u-v'")


class LayoutReport:
    """A serializable summary of a layout and how it was built."""

    def __init__(self, struct: Dict[str, Any]) -> None:
        """
        Initialize the object.

        Arguments:
            struct: A dictionary Python object with the report keys.
        """
        self._struct = struct

    def __repr__(self) -> str:
        return f"LayoutReport(n={self.n}, page_count={self.page_count})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, LayoutReport):
            return NotImplemented
        return self._struct == other.as_dict()

    @classmethod
    def from_layout(
        cls,
        graph: Graph,
        layout: BookLayout,
        provenance: Optional[EmbeddingProvenance] = None,
        spine_crossings: Optional[int] = None,
        extra: Optional[Dict[str, Any]] = None,
    ) -> "LayoutReport":
        """
        Build a report from a graph and one of its layouts.

        Arguments:
            graph: The graph.
            layout: Its layout.
            provenance: How the layout was built.
            spine_crossings: The spine crossings, in homeomorphic mode.
            extra: Additional provenance entries.

        Returns:
            The report.
        """
        provenance_dict: Dict[str, Any] = dict(provenance.as_dict()) if provenance else {}
        provenance_dict.update(extra or {})
        struct: Dict[str, Any] = {
            "n": graph.n,
            "edges": [list(edge) for edge in graph.edges],
            "spine": list(layout.spine.order),
            "pages": {_edge_key(edge): page for edge, page in layout.pages.items()},
            "page_count": layout.page_count,
            "provenance": provenance_dict,
        }
        if spine_crossings is not None:
            struct["spine_crossings"] = spine_crossings
        return cls(struct)

    def as_dict(self) -> Dict[str, Any]:
        """
        Return the report as a dictionary.

        Returns:
            The JSON-serializable dictionary.
        """
        return self._struct

    @property
    def n(self) -> int:
        """
        Number of vertices.

        Returns:
            The vertex count.
        """
        return self._struct["n"]

    @property
    def edges(self) -> List[Edge]:
        """
        Edges of the graph.

        Returns:
            The canonical edges.
        """
        return [tuple(edge) for edge in self._struct["edges"]]  # type: ignore

    @property
    def spine(self) -> List[int]:
        """
        Spine order.

        Returns:
            The canonical cyclic order of the vertices.
        """
        return self._struct["spine"]

    @property
    def pages(self) -> Dict[Edge, int]:
        """
        Page of each edge.

        Returns:
            The page map.
        """
        return {_parse_edge_key(key): page for key, page in self._struct["pages"].items()}

    @property
    def page_count(self) -> int:
        """
        Number of pages used.

        Returns:
            The page count.
        """
        return self._struct["page_count"]

    @property
    def provenance(self) -> Dict[str, Any]:
        """
        How the layout was built.

        Returns:
            The provenance dictionary.
        """
        return self._struct["provenance"]

    @property
    def spine_crossings(self) -> Optional[int]:
        """
        Spine crossings, in homeomorphic mode.

        Returns:
            The crossing count, or None.
        """
        return self._struct.get("spine_crossings")

    def graph(self) -> Graph:
        """
        Rebuild the graph of the report.

        Returns:
            The graph.
        """
        return Graph(self.spine, self.edges)

    def layout(self) -> BookLayout:
        """
        Rebuild the layout of the report.

        Returns:
            The layout.
        """
        return BookLayout(self.spine, self.pages)


def emit_layout_json(report: LayoutReport) -> str:
    """
    Serialize a report to JSON, with sorted keys.

    Arguments:
        report: The report.

    Returns:
        The JSON text.
    """
    return json.dumps(report.as_dict(), sort_keys=True, indent=2)


def parse_layout_json(text: str) -> LayoutReport:
    """
    Parse a report serialized by [`emit_layout_json`][bookembed.serialization.emit_layout_json].

    Arguments:
        text: The JSON text.

    Raises:
        ParseError: When the text is not a valid report.

    Returns:
        The report.
    """
    try:
        struct = json.loads(text)
    except json.JSONDecodeError as error:
        raise ParseError(f"invalid JSON: {error.msg}", error.lineno)
    if not isinstance(struct, dict):
        raise ParseError("a layout report must be a JSON object")
    missing = [key for key in REQUIRED_KEYS if key not in struct]
    if missing:
        raise ParseError(f"missing keys in layout report: {', '.join(missing)}")
    report = LayoutReport(struct)
    for key in struct["pages"]:
        _parse_edge_key(key)
    if len(report.spine) != report.n:
        raise ParseError(f"the spine lists {len(report.spine)} vertices, expected {report.n}")
    return report


def emit_augmentation_json(graph: Graph, rotation: RotationSystem, trace: AugmentationTrace) -> str:
    """
    Serialize an augmented graph, its embedding and its trace to JSON, with sorted keys.

    Arguments:
        graph: The augmented graph.
        rotation: Its embedding.
        trace: The augmentation trace.

    Returns:
        The JSON text.
    """
    struct = {
        "original": {"n": trace.original_graph.n, "m": trace.original_graph.m},
        "n": graph.n,
        "edges": [list(edge) for edge in graph.edges],
        "rotation": {str(vertex): list(rotation[vertex]) for vertex in rotation.vertices},
        "trace": [
            {"vertex": item.vertex, "kind": item.kind, "anchors": list(item.anchors)} for item in trace.added
        ],
    }
    return json.dumps(struct, sort_keys=True, indent=2)
