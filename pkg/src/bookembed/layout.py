"""
Layout module.

This module defines [`BookLayout`][bookembed.layout.BookLayout] and the operations working
on a fixed spine order: chord conflicts, page assignment and layout verification.

Two edges `{a, b}` and `{c, d}` with four distinct endpoints interleave (cross) in a cyclic order
when exactly one of `c` and `d` lies strictly inside the arc going from `a` to `b`.
"""

from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import networkx as nx
from loguru import logger

from bookembed.exceptions import CoverageError, Infeasible, PreconditionViolated
from bookembed.graph import CyclicOrder, Graph, canonical_edge
from bookembed.types import Edge, PageMap


class BookLayout:
    """
    A book embedding: a spine order of the vertices and a page for each edge.

    Pages are numbered from 1.
    """

    def __init__(self, spine: Union[CyclicOrder, Iterable[int]], pages: Mapping[Edge, int]) -> None:
        """
        Initialize the object.

        Arguments:
            spine: The cyclic order of the vertices along the spine.
            pages: The page of each edge.

        Raises:
            PreconditionViolated: When a page index is lower than 1.
        """
        self.spine = spine if isinstance(spine, CyclicOrder) else CyclicOrder(spine)
        self.pages: PageMap = {}
        for edge, page in sorted(pages.items()):
            if page < 1:
                raise PreconditionViolated(f"Page indices start at 1, got {page} for edge {edge[0]}-{edge[1]}")
            self.pages[canonical_edge(*edge)] = page

    def __repr__(self) -> str:
        return f"BookLayout(spine={self.spine.order!r}, page_count={self.page_count})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, BookLayout):
            return NotImplemented
        return self.spine == other.spine and self.pages == other.pages

    @property
    def page_count(self) -> int:
        """
        Return the number of distinct pages used.

        Returns:
            The page count.
        """
        return len(set(self.pages.values()))

    def edges_on(self, page: int) -> List[Edge]:
        """
        Return the edges drawn on a page.

        Arguments:
            page: The page index.

        Returns:
            The sorted edges of the page.
        """
        return [edge for edge, edge_page in self.pages.items() if edge_page == page]

    def normalized(self) -> "BookLayout":
        """
        Return a copy whose used pages are renumbered `1..page_count`, preserving their order.

        Returns:
            The renumbered layout.
        """
        renumber = {page: index for index, page in enumerate(sorted(set(self.pages.values())), 1)}
        return BookLayout(self.spine, {edge: renumber[page] for edge, page in self.pages.items()})


def crossing_pairs(edges: Sequence[Edge], positions: Mapping[int, int]) -> List[Tuple[int, int]]:
    """
    Return the pairs of interleaving edges for a spine order.

    Arguments:
        edges: The edges.
        positions: The position of each vertex along the spine.

    Returns:
        Pairs of indices `(i, j)`, `i < j`, of edges that cross.
    """
    chords = []
    for index, (u, v) in enumerate(edges):
        left, right = sorted((positions[u], positions[v]))
        chords.append((left, right, index))
    chords.sort()

    pairs = []
    for first, (left, right, index) in enumerate(chords):
        for other_left, other_right, other_index in chords[first + 1 :]:
            if other_left >= right:
                break
            if left < other_left < right < other_right:
                pairs.append(tuple(sorted((index, other_index))))
    pairs.sort()
    return pairs  # type: ignore


def conflict_graph(graph: Graph, order: CyclicOrder) -> Graph:
    """
    Build the conflict graph of the edges of a graph in a spine order.

    Arguments:
        graph: The graph.
        order: A cyclic order of the vertices of the graph.

    Returns:
        A graph whose vertex `i` stands for `graph.edges[i]`, with an edge between every two crossing edges.
    """
    return Graph(range(graph.m), crossing_pairs(graph.edges, order.positions()))


def color_graph(adjacency: Mapping[int, Iterable[int]], colors: int) -> Optional[Dict[int, int]]:
    """
    Find a proper coloring with a given number of colors, by backtracking.

    Vertices are colored by decreasing degree, each one receiving the smallest free color first.

    Arguments:
        adjacency: The neighbors of each vertex.
        colors: The number of colors available.

    Returns:
        A color in `0..colors-1` for each vertex, or None if there is no such coloring.
    """
    vertices = sorted(adjacency, key=lambda vertex: (-len(list(adjacency[vertex])), vertex))
    neighbors = {vertex: list(adjacency[vertex]) for vertex in vertices}
    coloring: Dict[int, int] = {}

    def backtrack(depth: int) -> bool:  # noqa: WPS430 (nested function)
        if depth == len(vertices):
            return True
        vertex = vertices[depth]
        used = {coloring[neighbor] for neighbor in neighbors[vertex] if neighbor in coloring}
        # a color never used so far is interchangeable with any other unused one
        highest = max(coloring.values(), default=-1)
        for color in range(min(colors, highest + 2)):
            if color in used:
                continue
            coloring[vertex] = color
            if backtrack(depth + 1):
                return True
            del coloring[vertex]  # noqa: WPS420 (del)
        return False

    if backtrack(0):
        return dict(coloring)
    return None


def assign_pages(graph: Graph, order: CyclicOrder, pages: int) -> Union[BookLayout, Infeasible]:
    """
    Assign a page to each edge so that no two edges of a same page cross.

    Arguments:
        graph: The graph.
        order: A cyclic order of the vertices of the graph.
        pages: The page budget.

    Raises:
        PreconditionViolated: When the budget is lower than 1.

    Returns:
        A layout, or an `Infeasible` marker.
    """
    if pages < 1:
        raise PreconditionViolated(f"Page budget must be at least 1, got {pages}")

    conflicts = crossing_pairs(graph.edges, order.positions())
    if not conflicts:
        return BookLayout(order, {edge: 1 for edge in graph.edges})
    if pages == 1:
        return Infeasible(pages)

    conflict = nx.Graph()
    conflict.add_nodes_from(range(graph.m))
    conflict.add_edges_from(conflicts)

    if pages == 2:
        try:
            coloring = nx.bipartite.color(conflict)
        except nx.NetworkXError:
            logger.debug(f"Conflict graph is not bipartite for order {order.order}")
            return Infeasible(pages)
        # isolated edges go on page 1, and so does the first edge of each conflict component
        page_map = {
            edge: 1 if conflict.degree(index) == 0 else 2 - coloring[index] for index, edge in enumerate(graph.edges)
        }
        return BookLayout(order, page_map)

    coloring = color_graph({index: conflict[index] for index in conflict}, pages)
    if coloring is None:
        return Infeasible(pages)
    return BookLayout(order, {edge: coloring[index] + 1 for index, edge in enumerate(graph.edges)})


def verify_layout(graph: Graph, layout: BookLayout) -> List[Tuple[Edge, Edge]]:
    """
    List every pair of crossing edges placed on the same page.

    Arguments:
        graph: The graph.
        layout: A layout of the graph.

    Raises:
        CoverageError: When the layout misses (or has extra) vertices or edges.

    Returns:
        The violations, as pairs of edges. An empty list means the layout is valid.
    """
    if set(layout.spine) != set(graph.vertices):
        missing = sorted(set(graph.vertices) - set(layout.spine))
        extra = sorted(set(layout.spine) - set(graph.vertices))
        raise CoverageError(f"Spine does not match the vertices (missing {missing}, extra {extra})")
    if set(layout.pages) != set(graph.edges):
        missing_edges = sorted(set(graph.edges) - set(layout.pages))
        extra_edges = sorted(set(layout.pages) - set(graph.edges))
        raise CoverageError(f"Pages do not match the edges (missing {missing_edges}, extra {extra_edges})")

    violations = []
    for first, second in crossing_pairs(graph.edges, layout.spine.positions()):
        first_edge, second_edge = graph.edges[first], graph.edges[second]
        if layout.pages[first_edge] == layout.pages[second_edge]:
            violations.append((first_edge, second_edge))
    return violations
