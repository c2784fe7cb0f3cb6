"""Tests for the `planarity` module."""

import networkx as nx
import pytest

from bookembed.exceptions import NonPlanar
from bookembed.layout import assign_pages
from bookembed.oracle import pagenumber_oracle
from bookembed.planarity import faces, is_outerplanar, outerplanar_order, planar_embed

from .conftest import cycle, from_nx


def test_planar_embed_k4(k4):
    """
    Embed K4.

    Arguments:
        k4: The complete graph on four vertices.
    """
    rotation = planar_embed(k4)
    assert rotation
    assert len(faces(k4, rotation)) == 4


@pytest.mark.parametrize("graph", [nx.complete_graph(5), nx.complete_bipartite_graph(3, 3), nx.petersen_graph()])
def test_planar_embed_rejects_non_planar(graph):
    """
    Check that non-planar graphs give a falsy marker.

    Arguments:
        graph: A non-planar networkx graph.
    """
    result = planar_embed(from_nx(graph))
    assert not result
    assert isinstance(result, NonPlanar)


def test_planar_embed_is_deterministic(octahedron):
    """
    Check that embedding twice gives the same rotation system.

    Arguments:
        octahedron: The octahedron.
    """
    assert planar_embed(octahedron) == planar_embed(octahedron)


def test_octahedron_faces_are_triangles(octahedron):
    """
    Check the faces of a triangulation.

    Arguments:
        octahedron: The octahedron.
    """
    face_set = faces(octahedron, planar_embed(octahedron))
    assert len(face_set) == 8
    assert face_set.is_triangulation()


def test_cube_faces_are_quadrilaterals(cube):
    """
    Check the faces of the cube.

    Arguments:
        cube: The cube.
    """
    face_set = faces(cube, planar_embed(cube))
    assert face_set.lengths() == [4] * 6
    assert not face_set.is_triangulation()


@pytest.mark.parametrize(
    ("graph", "expected"),
    [
        (nx.cycle_graph(6), True),
        (nx.path_graph(4), True),
        (nx.complete_graph(4), False),
        (nx.complete_bipartite_graph(2, 3), False),
        (nx.empty_graph(3), True),
    ],
)
def test_is_outerplanar(graph, expected):
    """
    Check outerplanarity on small families.

    Arguments:
        graph: A networkx graph.
        expected: Whether it is outerplanar.
    """
    assert is_outerplanar(from_nx(graph)) is expected


def test_outerplanarity_matches_one_page_embeddability():
    """Check that outerplanar graphs are exactly the graphs of page number at most 1."""
    for graph in nx.graph_atlas_g()[1:209]:
        assert is_outerplanar(from_nx(graph)) == (pagenumber_oracle(from_nx(graph)) <= 1)


def test_outerplanar_order_follows_outer_cycle(eared_triangle):
    """
    Check that the order of a 2-connected outerplanar graph is its outer cycle.

    Arguments:
        eared_triangle: A triangle with two ears.
    """
    order = outerplanar_order(eared_triangle)
    assert order.order == (0, 2, 4, 1, 3)
    assert assign_pages(eared_triangle, order, 1)


def test_outerplanar_order_of_cycle():
    """Check the order of a cycle."""
    assert outerplanar_order(cycle(5)).order == (0, 1, 2, 3, 4)


def test_outerplanar_order_of_non_outerplanar_graph(k4):
    """
    Check that K4 has no outerplanar order.

    Arguments:
        k4: The complete graph on four vertices.
    """
    assert outerplanar_order(k4) is None
