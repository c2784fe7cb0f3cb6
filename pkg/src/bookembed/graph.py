"""
Graph module.

This module defines the value types shared by every other module:

- [`Graph`][bookembed.graph.Graph], a finite simple undirected graph on integer vertices;
- [`RotationSystem`][bookembed.graph.RotationSystem], a plane embedding given as cyclic neighbor orders;
- [`FaceSet`][bookembed.graph.FaceSet], the face boundary walks of an embedding;
- [`CyclicOrder`][bookembed.graph.CyclicOrder], a cyclic sequence of vertices in canonical form.

All of them are immutable once built.

Face traversal convention: from the directed edge `(u, v)`, the walk continues with `(v, w)`,
where `w` is the neighbor that immediately follows `u` in the rotation of `v`.
Rotations are read clockwise, so every face walk keeps its face on the same side.
"""

from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

import networkx as nx
from loguru import logger

from bookembed.exceptions import (
    CoverageError,
    DuplicateEdge,
    InconsistentRotation,
    LoopEdge,
    NotPlaneEmbedding,
    PreconditionViolated,
    VertexOutOfRange,
)
from bookembed.types import Edge


def canonical_edge(u: int, v: int) -> Edge:
    """
    Return the canonical form `(min, max)` of an unordered pair.

    Arguments:
        u: One endpoint.
        v: The other endpoint.

    Returns:
        The sorted pair.
    """
    return (u, v) if u < v else (v, u)


class Graph:
    """
    A finite simple undirected graph.

    Vertices are integers, edges are stored canonically as `(min, max)` pairs.
    The graph is backed by a frozen `networkx.Graph`, available as [`nx`][bookembed.graph.Graph.nx],
    so that library algorithms can be run on it directly.
    """

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable[Sequence[int]] = ()) -> None:
        """
        Initialize the object.

        Arguments:
            vertices: The vertex identifiers.
            edges: The edges, as pairs of vertices.

        Raises:
            LoopEdge: When an edge joins a vertex to itself.
            DuplicateEdge: When an unordered pair appears twice.
            VertexOutOfRange: When an endpoint is not in the vertex set.
        """
        self._vertices: Tuple[int, ...] = tuple(sorted(set(vertices)))
        vertex_set = set(self._vertices)
        seen = set()
        for u, v in edges:
            if u == v:
                raise LoopEdge((u, v))
            if u not in vertex_set or v not in vertex_set:
                raise VertexOutOfRange((u, v))
            edge = canonical_edge(u, v)
            if edge in seen:
                raise DuplicateEdge((u, v))
            seen.add(edge)
        self._edges: Tuple[Edge, ...] = tuple(sorted(seen))

        graph = nx.Graph()
        graph.add_nodes_from(self._vertices)
        graph.add_edges_from(self._edges)
        self._graph = nx.freeze(graph)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._vertices == other.vertices and self._edges == other.edges

    def __hash__(self) -> int:
        return hash((self._vertices, self._edges))

    def __contains__(self, vertex) -> bool:
        return self._graph.has_node(vertex)

    def __len__(self) -> int:
        return len(self._vertices)

    @property
    def vertices(self) -> Tuple[int, ...]:
        """
        Return the vertices, in increasing order.

        Returns:
            The vertices.
        """
        return self._vertices

    @property
    def edges(self) -> Tuple[Edge, ...]:
        """
        Return the canonical edges, in increasing order.

        Returns:
            The edges.
        """
        return self._edges

    @property
    def n(self) -> int:
        """
        Return the number of vertices.

        Returns:
            The vertex count.
        """
        return len(self._vertices)

    @property
    def m(self) -> int:
        """
        Return the number of edges.

        Returns:
            The edge count.
        """
        return len(self._edges)

    @property
    def nx(self) -> nx.Graph:
        """
        Return the frozen `networkx` graph backing this graph.

        Returns:
            A frozen `networkx.Graph`.
        """
        return self._graph

    def neighbors(self, vertex: int) -> Tuple[int, ...]:
        """
        Return the neighbors of a vertex, in increasing order.

        Arguments:
            vertex: A vertex of the graph.

        Returns:
            The sorted neighbors.
        """
        return tuple(sorted(self._graph[vertex]))

    def degree(self, vertex: int) -> int:
        """
        Return the degree of a vertex.

        Arguments:
            vertex: A vertex of the graph.

        Returns:
            The degree.
        """
        return len(self._graph[vertex])

    def has_edge(self, u: int, v: int) -> bool:
        """
        Tell if two vertices are adjacent.

        Arguments:
            u: One vertex.
            v: Another vertex.

        Returns:
            Whether `{u, v}` is an edge.
        """
        return self._graph.has_edge(u, v)

    def next_vertex(self) -> int:
        """
        Return the smallest identifier above every current vertex.

        Added vertices (augmentation, subdivision) are numbered upward from it.

        Returns:
            A fresh vertex identifier.
        """
        return self._vertices[-1] + 1 if self._vertices else 0

    def component_count(self, removed: Iterable[int] = ()) -> int:
        """
        Count the connected components, optionally after deleting some vertices.

        Arguments:
            removed: Vertices to delete (with their incident edges) before counting.

        Returns:
            The number of connected components.
        """
        removed = set(removed)
        if not removed:
            return nx.number_connected_components(self._graph)
        view = nx.restricted_view(self._graph, removed, [])
        return nx.number_connected_components(view)

    def components(self, removed: Iterable[int] = ()) -> List[FrozenSet[int]]:
        """
        Return the connected components, optionally after deleting some vertices.

        Components are sorted by their smallest vertex.

        Arguments:
            removed: Vertices to delete (with their incident edges) first.

        Returns:
            The vertex sets of the components.
        """
        view = nx.restricted_view(self._graph, set(removed), [])
        return sorted((frozenset(component) for component in nx.connected_components(view)), key=min)

    def is_connected(self) -> bool:
        """
        Tell if the graph is connected (the empty graph is not).

        Returns:
            Whether the graph is connected.
        """
        return bool(self._vertices) and nx.is_connected(self._graph)

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """
        Return the subgraph induced by some vertices.

        Arguments:
            vertices: The vertices to keep.

        Returns:
            The induced subgraph.
        """
        keep = set(vertices)
        return Graph(keep, (edge for edge in self._edges if edge[0] in keep and edge[1] in keep))

    def without(self, vertices: Iterable[int]) -> "Graph":
        """
        Return the graph minus some vertices and their incident edges.

        Arguments:
            vertices: The vertices to delete.

        Returns:
            The smaller graph.
        """
        drop = set(vertices)
        return self.induced(vertex for vertex in self._vertices if vertex not in drop)

    def extended(self, vertices: Iterable[int] = (), edges: Iterable[Sequence[int]] = ()) -> "Graph":
        """
        Return a supergraph with additional vertices and edges.

        Arguments:
            vertices: The vertices to add.
            edges: The edges to add.

        Returns:
            The larger graph.
        """
        return Graph((*self._vertices, *vertices), (*self._edges, *edges))


def build_graph(n: int, edge_list: Iterable[Sequence[int]]) -> Graph:
    """
    Build a graph on the vertices `0..n-1`.

    Arguments:
        n: The number of vertices.
        edge_list: The edges, as pairs of vertices.

    Raises:
        PreconditionViolated: When `n` is negative.

    Returns:
        The graph.
    """
    if n < 0:
        raise PreconditionViolated(f"Vertex count must be non-negative, got {n}")
    return Graph(range(n), edge_list)


class RotationSystem:
    """
    A plane embedding given by the clockwise cyclic order of the neighbors around each vertex.

    Rotation systems alone do not tell which face is unbounded:
    [`FaceSet`][bookembed.graph.FaceSet] carries that choice.
    """

    def __init__(self, rotation: Mapping[int, Sequence[int]]) -> None:
        """
        Initialize the object.

        Arguments:
            rotation: For each vertex, its neighbors in clockwise order.
        """
        self._rotation: Dict[int, Tuple[int, ...]] = {
            vertex: tuple(rotation[vertex]) for vertex in sorted(rotation)
        }
        self._index: Dict[int, Dict[int, int]] = {
            vertex: {neighbor: index for index, neighbor in enumerate(ring)}
            for vertex, ring in self._rotation.items()
        }

    def __repr__(self) -> str:
        return f"RotationSystem({self._rotation!r})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, RotationSystem):
            return NotImplemented
        return self._rotation == other._rotation  # noqa: WPS437 (protected attribute)

    def __hash__(self) -> int:
        return hash(tuple(self._rotation.items()))

    def __getitem__(self, vertex: int) -> Tuple[int, ...]:
        return self._rotation[vertex]

    def __contains__(self, vertex) -> bool:
        return vertex in self._rotation

    @property
    def vertices(self) -> Tuple[int, ...]:
        """
        Return the vertices covered by the rotation system.

        Returns:
            The sorted vertices.
        """
        return tuple(self._rotation)

    def successor(self, vertex: int, neighbor: int) -> int:
        """
        Return the neighbor that follows another one, clockwise around a vertex.

        Arguments:
            vertex: The center vertex.
            neighbor: A neighbor of `vertex`.

        Returns:
            The next neighbor clockwise.
        """
        ring = self._rotation[vertex]
        return ring[(self._index[vertex][neighbor] + 1) % len(ring)]

    def predecessor(self, vertex: int, neighbor: int) -> int:
        """
        Return the neighbor that precedes another one, clockwise around a vertex.

        Arguments:
            vertex: The center vertex.
            neighbor: A neighbor of `vertex`.

        Returns:
            The previous neighbor clockwise.
        """
        ring = self._rotation[vertex]
        return ring[(self._index[vertex][neighbor] - 1) % len(ring)]

    def as_dict(self) -> Dict[int, List[int]]:
        """
        Return a mutable copy of the rotations.

        Returns:
            A dictionary of lists.
        """
        return {vertex: list(ring) for vertex, ring in self._rotation.items()}

    def darts(self) -> Iterator[Edge]:
        """
        Iterate on the directed edges, vertex by vertex, clockwise.

        Yields:
            Directed edges `(vertex, neighbor)`.
        """
        for vertex, ring in self._rotation.items():
            for neighbor in ring:
                yield vertex, neighbor

    def restricted(self, vertices: Iterable[int]) -> "RotationSystem":
        """
        Return the rotation system of the subgraph induced by some vertices.

        Arguments:
            vertices: The vertices to keep.

        Returns:
            The restricted rotation system.
        """
        keep = set(vertices)
        return RotationSystem(
            {
                vertex: [neighbor for neighbor in ring if neighbor in keep]
                for vertex, ring in self._rotation.items()
                if vertex in keep
            },
        )

    def reversed_at(self, vertex: int) -> "RotationSystem":
        """
        Return a copy where the rotation of one vertex is reversed.

        Arguments:
            vertex: The vertex whose rotation is reversed.

        Returns:
            The modified rotation system.
        """
        rotation = self.as_dict()
        rotation[vertex].reverse()
        return RotationSystem(rotation)


def trace_faces(rotation: RotationSystem) -> List[Tuple[int, ...]]:
    """
    Partition the directed edges of a rotation system into closed face walks.

    Arguments:
        rotation: The rotation system.

    Returns:
        The face walks, each given as the sequence of the tails of its directed edges.
    """
    visited = set()
    faces = []
    for dart in rotation.darts():
        if dart in visited:
            continue
        walk = []
        current = dart
        while current not in visited:
            visited.add(current)
            tail, head = current
            walk.append(tail)
            current = (head, rotation.successor(head, tail))
        faces.append(tuple(walk))
    return faces


def default_outer_face(faces: Sequence[Sequence[int]]) -> Optional[int]:
    """
    Choose the outer face: maximum length, ties broken by the smallest contained vertex.

    Arguments:
        faces: The face walks.

    Returns:
        The index of the chosen face, or None when there are no faces.
    """
    if not faces:
        return None
    return min(range(len(faces)), key=lambda index: (-len(faces[index]), min(faces[index]), index))


class FaceSet:
    """The face boundary walks of a plane embedding, with a designated outer face."""

    def __init__(self, faces: Iterable[Sequence[int]], outer_face_index: Optional[int] = None) -> None:
        """
        Initialize the object.

        Arguments:
            faces: The closed boundary walks.
            outer_face_index: The index of the outer face. Default: the longest face,
                ties broken by the smallest contained vertex.
        """
        self._faces: Tuple[Tuple[int, ...], ...] = tuple(tuple(face) for face in faces)
        if outer_face_index is None:
            outer_face_index = default_outer_face(self._faces)
        self.outer_face_index = outer_face_index

    def __repr__(self) -> str:
        return f"FaceSet({len(self._faces)} faces, outer={self.outer_face_index})"

    def __len__(self) -> int:
        return len(self._faces)

    def __iter__(self) -> Iterator[Tuple[int, ...]]:
        return iter(self._faces)

    def __getitem__(self, index: int) -> Tuple[int, ...]:
        return self._faces[index]

    @property
    def faces(self) -> Tuple[Tuple[int, ...], ...]:
        """
        Return the face walks.

        Returns:
            The face walks.
        """
        return self._faces

    @property
    def outer_face(self) -> Optional[Tuple[int, ...]]:
        """
        Return the walk of the outer face.

        Returns:
            The outer face walk, or None for an embedding without edges.
        """
        if self.outer_face_index is None:
            return None
        return self._faces[self.outer_face_index]

    def lengths(self) -> List[int]:
        """
        Return the length of each face walk.

        Returns:
            The lengths.
        """
        return [len(face) for face in self._faces]

    def is_triangulation(self) -> bool:
        """
        Tell if every face (the outer one included) has exactly three edges.

        Returns:
            Whether all faces are triangles.
        """
        return bool(self._faces) and all(len(face) == 3 for face in self._faces)


def validate_embedding(graph: Graph, rotation: RotationSystem) -> FaceSet:
    """
    Check that a rotation system is a plane embedding of a graph, and return its faces.

    Arguments:
        graph: The graph.
        rotation: The rotation system.

    Raises:
        InconsistentRotation: When the rotations do not list exactly the edges of the graph.
        NotPlaneEmbedding: When the Euler relation `V - E + F = 1 + C` fails.

    Returns:
        The face walks.
    """
    if set(rotation.vertices) != set(graph.vertices):
        missing = sorted(set(graph.vertices) - set(rotation.vertices))
        extra = sorted(set(rotation.vertices) - set(graph.vertices))
        raise InconsistentRotation(f"Rotation covers the wrong vertices (missing {missing}, extra {extra})")

    for vertex in graph.vertices:
        ring = rotation[vertex]
        if len(set(ring)) != len(ring):
            raise InconsistentRotation(f"Rotation at {vertex} lists a neighbor twice")
        for neighbor in ring:
            if not graph.has_edge(vertex, neighbor):
                raise InconsistentRotation(f"Rotation at {vertex} lists {neighbor}, but {vertex}-{neighbor} is no edge")
        if len(ring) != graph.degree(vertex):
            absent = sorted(set(graph.neighbors(vertex)) - set(ring))
            raise InconsistentRotation(f"Edge {vertex}-{absent[0]} is missing from the rotation at {vertex}")

    faces = trace_faces(rotation)
    components = graph.component_count()
    components_with_edges = components - sum(1 for vertex in graph.vertices if graph.degree(vertex) == 0)
    face_count = len(faces) - components_with_edges + 1 if components_with_edges else 1
    if graph.n - graph.m + face_count != 1 + components:
        logger.debug(f"Euler relation fails: V={graph.n} E={graph.m} F={face_count} C={components}")
        raise NotPlaneEmbedding(
            f"Not a plane embedding: V - E + F = {graph.n} - {graph.m} + {face_count} != 1 + {components}",
        )
    return FaceSet(faces)


class CyclicOrder:
    """
    A cyclic sequence of distinct vertices.

    The order is always stored in canonical form: the smallest vertex first, and the second
    element smaller than the last one. Rotations and reflections of a same cyclic order
    are therefore equal.
    """

    def __init__(self, order: Iterable[int]) -> None:
        """
        Initialize the object.

        Arguments:
            order: The vertices in cyclic order.

        Raises:
            CoverageError: When a vertex appears twice.
        """
        sequence = list(order)
        if len(set(sequence)) != len(sequence):
            raise CoverageError("A cyclic order cannot list a vertex twice")
        self._order: Tuple[int, ...] = self.canonicalize(sequence)
        self._position = {vertex: index for index, vertex in enumerate(self._order)}

    @staticmethod
    def canonicalize(sequence: Sequence[int]) -> Tuple[int, ...]:
        """
        Return the canonical form of a cyclic sequence.

        Arguments:
            sequence: The vertices in cyclic order.

        Returns:
            The canonical rotation/reflection.
        """
        if not sequence:
            return ()
        start = sequence.index(min(sequence))
        rotated = list(sequence[start:]) + list(sequence[:start])
        if len(rotated) >= 3 and rotated[1] > rotated[-1]:
            rotated = [rotated[0], *reversed(rotated[1:])]
        return tuple(rotated)

    def __repr__(self) -> str:
        return f"CyclicOrder({self._order!r})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, CyclicOrder):
            return NotImplemented
        return self._order == other.order

    def __hash__(self) -> int:
        return hash(self._order)

    def __iter__(self) -> Iterator[int]:
        return iter(self._order)

    def __len__(self) -> int:
        return len(self._order)

    def __contains__(self, vertex) -> bool:
        return vertex in self._position

    @property
    def order(self) -> Tuple[int, ...]:
        """
        Return the canonical sequence.

        Returns:
            The vertices.
        """
        return self._order

    def position(self, vertex: int) -> int:
        """
        Return the index of a vertex in the canonical sequence.

        Arguments:
            vertex: A vertex of the order.

        Returns:
            Its position.
        """
        return self._position[vertex]

    def positions(self) -> Dict[int, int]:
        """
        Return the position of every vertex.

        Returns:
            A mapping from vertices to positions.
        """
        return dict(self._position)

    def restricted(self, vertices: Iterable[int]) -> "CyclicOrder":
        """
        Return the induced cyclic order on a subset of the vertices.

        Arguments:
            vertices: The vertices to keep.

        Returns:
            The induced order.
        """
        keep = set(vertices)
        return CyclicOrder(vertex for vertex in self._order if vertex in keep)

    def consecutive_pairs(self) -> List[Edge]:
        """
        Return the pairs of cyclically consecutive vertices.

        Returns:
            The canonical pairs (one pair for two vertices, none for fewer).
        """
        if len(self._order) < 2:
            return []
        if len(self._order) == 2:
            return [canonical_edge(*self._order)]
        return [
            canonical_edge(vertex, self._order[(index + 1) % len(self._order)])
            for index, vertex in enumerate(self._order)
        ]
