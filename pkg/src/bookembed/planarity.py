"""
Planarity module.

This module tests planarity, builds rotation systems, extracts faces and recognizes outerplanar graphs.
The planarity test itself is the left-right algorithm of `networkx` (`check_planarity`),
whose combinatorial embedding is converted to a [`RotationSystem`][bookembed.graph.RotationSystem].
"""

from typing import Optional, Union

import networkx as nx
from loguru import logger

from bookembed.exceptions import NonPlanar
from bookembed.graph import CyclicOrder, FaceSet, Graph, RotationSystem, validate_embedding


def planar_embed(graph: Graph) -> Union[RotationSystem, NonPlanar]:
    """
    Compute a plane embedding of a graph.

    The result is deterministic for a given graph, since the backing
    `networkx` graph always lists vertices and edges in sorted order.

    Arguments:
        graph: The graph to embed.

    Returns:
        A rotation system accepted by [`validate_embedding`][bookembed.graph.validate_embedding],
        or a (falsy) `NonPlanar` marker.
    """
    if graph.n >= 3 and graph.m > 3 * graph.n - 6:
        logger.debug(f"Edge-count screen rejects {graph!r}")
        return NonPlanar()

    is_planar, embedding = nx.check_planarity(graph.nx)
    if not is_planar:
        return NonPlanar()

    rotation = RotationSystem(
        {
            vertex: list(embedding.neighbors_cw_order(vertex)) if vertex in embedding else []
            for vertex in graph.vertices
        },
    )
    validate_embedding(graph, rotation)
    return rotation


def faces(graph: Graph, rotation: RotationSystem) -> FaceSet:
    """
    Return the faces of a plane embedding.

    The outer face is the longest face walk, ties broken by the smallest contained vertex.

    Arguments:
        graph: The graph.
        rotation: A plane embedding of the graph.

    Returns:
        The face walks.
    """
    return validate_embedding(graph, rotation)


def _with_apex(graph: Graph):
    apex = graph.next_vertex()
    return apex, graph.extended([apex], [(apex, vertex) for vertex in graph.vertices])


def is_outerplanar(graph: Graph) -> bool:
    """
    Tell if a graph is outerplanar.

    A graph is outerplanar when it stays planar after adding a new vertex adjacent to all its vertices.

    Arguments:
        graph: The graph.

    Returns:
        Whether the graph is outerplanar.
    """
    _, augmented = _with_apex(graph)
    return bool(planar_embed(augmented))


def outerplanar_order(graph: Graph) -> Optional[CyclicOrder]:
    """
    Return the cyclic order of the vertices around the outer face of an outerplanar embedding.

    The order is read from the rotation of an apex vertex joined to every vertex.
    When the graph is 2-connected, every edge is a chord that crosses no other one in this order.

    Arguments:
        graph: The graph.

    Returns:
        The cyclic order, or None when the graph is not outerplanar.
    """
    apex, augmented = _with_apex(graph)
    rotation = planar_embed(augmented)
    if not rotation:
        return None
    return CyclicOrder(rotation[apex])
