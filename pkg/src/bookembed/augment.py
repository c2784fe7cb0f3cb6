"""
Augment module.

This module classifies triangles, tests whether a block is nicely planar, and augments
plane graphs with new vertices:

- [`lemma1_augment`][bookembed.augment.lemma1_augment] makes a 2-connected plane graph without
  separating triangles 3-connected, without creating separating triangles;
- [`stellate`][bookembed.augment.stellate] adds a vertex inside every non-triangular face,
  producing a triangulation.

Both return an [`AugmentationTrace`][bookembed.augment.AugmentationTrace] that records what was added
and can restore the original graph exactly.
"""

from typing import Dict, List, NamedTuple, Sequence, Tuple

import networkx as nx
from loguru import logger
from networkx.utils import UnionFind

from bookembed.connectivity import is_k_connected, separating_pairs
from bookembed.exceptions import (
    BookEmbedException,
    InternalGuaranteeViolated,
    NotTwoConnected,
    PreconditionViolated,
    TooSmall,
    TraceMismatch,
)
from bookembed.graph import Graph, RotationSystem, canonical_edge, validate_embedding
from bookembed.planarity import planar_embed
from bookembed.types import Edge, Triangle

LEMMA1 = "lemma1"
STELLATION = "stellation"


class AddedVertex(NamedTuple):
    """A vertex added by an augmentation step."""

    vertex: int
    kind: str
    """Either `"lemma1"` or `"stellation"`."""
    anchors: Tuple[int, ...]
    """The triple `(v, a, b)` of a vertex added for 3-connectivity, or the boundary walk of a stellated face."""


class AugmentationTrace:
    """A record of the vertices and edges added to a plane graph."""

    def __init__(
        self,
        graph: Graph,
        rotation: RotationSystem,
        added: Sequence[AddedVertex] = (),
        edges: Sequence[Edge] = (),
    ) -> None:
        """
        Initialize the object.

        Arguments:
            graph: The graph before augmentation.
            rotation: The embedding before augmentation.
            added: The added vertices, in order.
            edges: The added edges, each incident to at least one added vertex.
        """
        self.original_graph = graph
        self.original_rotation = rotation
        self.added: Tuple[AddedVertex, ...] = tuple(added)
        self.added_edges: Tuple[Edge, ...] = tuple(edges)

    def __repr__(self) -> str:
        return f"AugmentationTrace(added={len(self.added)}, edges={len(self.added_edges)})"

    @property
    def added_vertices(self) -> Tuple[int, ...]:
        """
        Return the added vertices, in order of addition.

        Returns:
            The added vertices.
        """
        return tuple(item.vertex for item in self.added)

    def count(self, kind: str) -> int:
        """
        Count the added vertices of a kind.

        Arguments:
            kind: `"lemma1"` or `"stellation"`.

        Returns:
            The number of such vertices.
        """
        return sum(1 for item in self.added if item.kind == kind)

    def then(self, other: "AugmentationTrace") -> "AugmentationTrace":
        """
        Compose this trace with the trace of a later augmentation.

        Arguments:
            other: A trace whose original graph is the result of this trace.

        Raises:
            TraceMismatch: When the traces do not follow each other.

        Returns:
            A trace from this original graph to the result of the other trace.
        """
        expected = set(self.original_graph.vertices) | set(self.added_vertices)
        if set(other.original_graph.vertices) != expected:
            raise TraceMismatch("The second trace does not start from the result of the first one")
        return AugmentationTrace(
            self.original_graph,
            self.original_rotation,
            self.added + other.added,
            self.added_edges + other.added_edges,
        )

    def rollback(self, graph: Graph, rotation: RotationSystem) -> Tuple[Graph, RotationSystem]:
        """
        Delete every added vertex, restoring the original graph and embedding.

        Arguments:
            graph: The augmented graph.
            rotation: The augmented embedding.

        Raises:
            TraceMismatch: When the result is not the original graph and embedding.

        Returns:
            The original graph and rotation system.
        """
        added = set(self.added_vertices)
        if set(graph.vertices) != set(self.original_graph.vertices) | added:
            raise TraceMismatch("The graph does not have the vertices recorded by the trace")
        restored_graph = graph.without(added)
        restored_rotation = rotation.restricted(restored_graph.vertices)
        if restored_graph != self.original_graph:
            raise TraceMismatch("Deleting the added vertices does not give back the original graph")
        if restored_rotation != self.original_rotation:
            raise TraceMismatch("Deleting the added vertices does not give back the original embedding")
        return restored_graph, restored_rotation


def enumerate_triangles(graph: Graph) -> List[Triangle]:
    """
    List the triangles (3-cliques) of a graph.

    Arguments:
        graph: The graph.

    Returns:
        The sorted triples, each triangle once.
    """
    triangles = []
    for clique in nx.enumerate_all_cliques(graph.nx):
        if len(clique) > 3:
            break
        if len(clique) == 3:
            triangles.append(tuple(sorted(clique)))
    return sorted(triangles)  # type: ignore


def separating_triangles(graph: Graph) -> List[Triangle]:
    """
    List the triangles whose deletion increases the number of connected components.

    Deleting a triangle means deleting its three vertices and their incident edges.

    Arguments:
        graph: The graph.

    Returns:
        The sorted separating triangles.
    """
    components = graph.component_count()
    return [triangle for triangle in enumerate_triangles(graph) if graph.component_count(triangle) > components]


def is_nicely_planar_block(graph: Graph) -> bool:
    """
    Tell if a 2-connected planar graph has no separating triangle.

    Arguments:
        graph: A 2-connected planar graph (or a graph with at most two vertices).

    Raises:
        NotTwoConnected: When the graph is not 2-connected.
        NonPlanar: When the graph is not planar.

    Returns:
        Whether the graph is nicely planar.
    """
    if graph.n <= 2:
        return True
    if not is_k_connected(graph, 2):
        raise NotTwoConnected(f"Expected a 2-connected block, got {graph!r}")
    rotation = planar_embed(graph)
    if not rotation:
        raise rotation
    return not separating_triangles(graph)


def _check_lemma1_preconditions(graph: Graph, rotation: RotationSystem) -> None:
    try:
        two_connected = is_k_connected(graph, 2)
    except TooSmall:
        two_connected = False
    if not two_connected:
        raise PreconditionViolated("The graph is not 2-connected")
    try:
        validate_embedding(graph, rotation)
    except BookEmbedException as error:
        raise PreconditionViolated(f"The rotation system is not a plane embedding: {error}") from error
    triangles = separating_triangles(graph)
    if triangles:
        raise PreconditionViolated(f"The graph has a separating triangle {triangles[0]}")


def _pick_roles(graph: Graph, pair: Edge) -> Tuple[int, int]:
    first, second = pair
    if graph.degree(second) > graph.degree(first):
        return first, second
    return second, first


def _augment_pair(
    graph: Graph,
    rotation: Dict[int, List[int]],
    u: int,
    v: int,
) -> Tuple[Graph, List[AddedVertex], List[Edge]]:
    components = graph.components(removed=(u, v))
    component_of = {vertex: index for index, component in enumerate(components) for vertex in component}

    ring = rotation[v]
    start = ring.index(u) if u in ring else ring.index(min(ring))
    walk = [neighbor for neighbor in ring[start:] + ring[:start] if neighbor != u]

    merged = UnionFind(range(len(components)))
    next_vertex = graph.next_vertex()
    added, edges = [], []
    for a, b in zip(walk, walk[1:]):
        if merged[component_of[a]] == merged[component_of[b]]:
            continue
        merged.union(component_of[a], component_of[b])
        y = next_vertex
        next_vertex += 1
        rotation[v].insert(rotation[v].index(a) + 1, y)
        rotation[a].insert(rotation[a].index(v), y)
        rotation[b].insert(rotation[b].index(v) + 1, y)
        rotation[y] = [v, a, b]
        added.append(AddedVertex(y, LEMMA1, (v, a, b)))
        edges.extend(canonical_edge(y, other) for other in (v, a, b))

    return graph.extended([item.vertex for item in added], edges), added, edges


def lemma1_augment(graph: Graph, rotation: RotationSystem) -> Tuple[Graph, RotationSystem, AugmentationTrace]:
    """
    Augment a 2-connected plane graph without separating triangles to a 3-connected one.

    While a separating pair remains, the smallest one `{u, v}` is taken, `v` being the endpoint
    of larger degree. The neighbors of `v` other than `u` are read clockwise, starting at `u`
    (or at the smallest neighbor when `u` and `v` are not adjacent). For every two consecutive
    neighbors `a`, `b` lying in components of `G - {u, v}` that are not joined yet,
    a new vertex `y` adjacent to `v`, `a` and `b` is added in the face corner `a, v, b`.

    Arguments:
        graph: A 2-connected planar graph without separating triangles.
        rotation: A plane embedding of the graph.

    Raises:
        PreconditionViolated: When a precondition does not hold (the message names it).
        InternalGuaranteeViolated: When a round does not decrease the number of separating pairs.

    Returns:
        The augmented graph, its embedding, and the trace of the augmentation.
    """
    _check_lemma1_preconditions(graph, rotation)

    current_graph = graph
    current_rotation = rotation.as_dict()
    added: List[AddedVertex] = []
    edges: List[Edge] = []

    pairs = separating_pairs(graph)
    while pairs:
        u, v = _pick_roles(current_graph, pairs[0])
        logger.debug(f"Separating pair {pairs[0]} ({len(pairs)} left): augmenting around {v}")
        current_graph, round_added, round_edges = _augment_pair(current_graph, current_rotation, u, v)
        added.extend(round_added)
        edges.extend(round_edges)
        validate_embedding(current_graph, RotationSystem(current_rotation))

        remaining = separating_pairs(current_graph)
        if len(remaining) >= len(pairs):
            logger.error(f"Separating pairs went from {len(pairs)} to {len(remaining)}")
            raise InternalGuaranteeViolated("Augmentation did not reduce the number of separating pairs")
        pairs = remaining

    logger.debug(f"Added {len(added)} vertices to reach 3-connectivity")
    return current_graph, RotationSystem(current_rotation), AugmentationTrace(graph, rotation, added, edges)


def stellate(graph: Graph, rotation: RotationSystem) -> Tuple[Graph, RotationSystem, AugmentationTrace]:
    """
    Add a vertex inside every face longer than a triangle, joined to every vertex of the face.

    Arguments:
        graph: A 2-connected plane graph with at least three vertices.
        rotation: A plane embedding of the graph.

    Raises:
        NotTwoConnected: When the graph is too small or not 2-connected.
        InternalGuaranteeViolated: When the result is not a triangulation.

    Returns:
        The triangulation, its embedding, and the trace of the stellation.
    """
    if graph.n < 3:
        raise NotTwoConnected(f"Stellation needs a 2-connected graph with at least 3 vertices, got {graph!r}")
    face_set = validate_embedding(graph, rotation)
    two_connected = graph.m == 3 if graph.n == 3 else is_k_connected(graph, 2)
    if not two_connected:
        raise NotTwoConnected(f"Stellation needs a 2-connected graph, got {graph!r}")

    current = rotation.as_dict()
    next_vertex = graph.next_vertex()
    added: List[AddedVertex] = []
    edges: List[Edge] = []
    for face in face_set:
        if len(face) == 3:
            continue
        if len(set(face)) != len(face):
            raise NotTwoConnected(f"Face {face} repeats a vertex")
        star = next_vertex
        next_vertex += 1
        for index, vertex in enumerate(face):
            previous = face[index - 1]
            current[vertex].insert(current[vertex].index(previous) + 1, star)
        current[star] = list(reversed(face))
        added.append(AddedVertex(star, STELLATION, tuple(face)))
        edges.extend(canonical_edge(star, vertex) for vertex in face)

    result = graph.extended([item.vertex for item in added], edges)
    result_rotation = RotationSystem(current)
    validate_embedding(result, result_rotation)
    if result.m != 3 * result.n - 6:
        logger.error(f"Stellation gave {result.m} edges on {result.n} vertices")
        raise InternalGuaranteeViolated("Stellation did not produce a triangulation")
    logger.debug(f"Stellated {len(added)} faces")
    return result, result_rotation, AugmentationTrace(graph, rotation, added, edges)
