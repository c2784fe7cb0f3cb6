"""Tests for the `augment` module."""

import networkx as nx
import pytest

from bookembed.augment import (
    LEMMA1,
    STELLATION,
    AugmentationTrace,
    enumerate_triangles,
    is_nicely_planar_block,
    lemma1_augment,
    separating_triangles,
    stellate,
)
from bookembed.connectivity import is_k_connected
from bookembed.exceptions import NonPlanar, NotTwoConnected, PreconditionViolated, TraceMismatch
from bookembed.graph import RotationSystem, build_graph, validate_embedding
from bookembed.planarity import planar_embed

from .conftest import cycle, from_nx

STACKED_K4 = build_graph(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (1, 4), (2, 4)])


def test_enumerate_triangles(k4, cube):
    """
    List the triangles of K4 and of the cube.

    Arguments:
        k4: The complete graph on four vertices.
        cube: The cube.
    """
    assert enumerate_triangles(k4) == [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
    assert enumerate_triangles(cube) == []


def test_separating_triangles(k4, octahedron, eared_triangle):
    """
    Find separating triangles.

    Arguments:
        k4: The complete graph on four vertices.
        octahedron: The octahedron.
        eared_triangle: A triangle with two ears.
    """
    assert separating_triangles(k4) == []
    assert separating_triangles(octahedron) == []
    assert separating_triangles(eared_triangle) == [(0, 1, 2)]
    assert separating_triangles(STACKED_K4) == [(0, 1, 2)]


def test_separating_triangle_of_bonnet(bonnet):
    """
    Check that only the triangle carrying the pendant edges is separating.

    Arguments:
        bonnet: A triangle with three pendant edges, beside another triangle.
    """
    assert bonnet.component_count() == 2
    assert bonnet.component_count((0, 1, 2)) == 4
    assert separating_triangles(bonnet) == [(0, 1, 2)]


@pytest.mark.parametrize(
    ("fixture", "expected"),
    [("k4", True), ("c4", True), ("octahedron", True), ("cube", True), ("eared_triangle", False)],
)
def test_is_nicely_planar_block(request, fixture, expected):
    """
    Classify blocks.

    Arguments:
        request: Pytest fixture to get other fixtures.
        fixture: The name of the graph fixture.
        expected: Whether the block is nicely planar.
    """
    assert is_nicely_planar_block(request.getfixturevalue(fixture)) is expected


def test_is_nicely_planar_block_small_graphs():
    """Check that blocks of one or two vertices are nicely planar."""
    assert is_nicely_planar_block(build_graph(1, []))
    assert is_nicely_planar_block(build_graph(2, [(0, 1)]))


def test_is_nicely_planar_block_rejects_cutpoints(bowtie):
    """
    Check that a graph with a cutpoint is not a block.

    Arguments:
        bowtie: Two triangles sharing vertex 2.
    """
    with pytest.raises(NotTwoConnected):
        is_nicely_planar_block(bowtie)


def test_is_nicely_planar_block_rejects_non_planar(k5):
    """
    Check that K5 is rejected.

    Arguments:
        k5: The complete graph on five vertices.
    """
    with pytest.raises(NonPlanar):
        is_nicely_planar_block(k5)


@pytest.mark.parametrize("size", [4, 5, 6, 8])
def test_lemma1_augment_cycles(size):
    """
    Augment cycles to 3-connected graphs.

    Arguments:
        size: The length of the cycle.
    """
    graph = cycle(size)
    rotation = planar_embed(graph)
    augmented, augmented_rotation, trace = lemma1_augment(graph, rotation)
    assert is_k_connected(augmented, 3)
    assert separating_triangles(augmented) == []
    validate_embedding(augmented, augmented_rotation)
    assert trace.count(LEMMA1) == augmented.n - size
    assert trace.count(STELLATION) == 0
    assert trace.rollback(augmented, augmented_rotation) == (graph, rotation)


def test_lemma1_augment_keeps_three_connected_graphs(octahedron):
    """
    Check that a 3-connected graph is left untouched.

    Arguments:
        octahedron: The octahedron.
    """
    rotation = planar_embed(octahedron)
    augmented, augmented_rotation, trace = lemma1_augment(octahedron, rotation)
    assert augmented == octahedron
    assert augmented_rotation == rotation
    assert trace.added == ()


def test_lemma1_augment_grid():
    """Augment a grid, which has many separating pairs."""
    graph = from_nx(nx.convert_node_labels_to_integers(nx.grid_2d_graph(3, 3)))
    rotation = planar_embed(graph)
    augmented, augmented_rotation, trace = lemma1_augment(graph, rotation)
    assert is_k_connected(augmented, 3)
    assert separating_triangles(augmented) == []
    assert trace.rollback(augmented, augmented_rotation) == (graph, rotation)


def test_lemma1_new_vertices_attach_to_anchors(c4):
    """
    Check the neighborhood of added vertices.

    Arguments:
        c4: The cycle on four vertices.
    """
    augmented, _, trace = lemma1_augment(c4, planar_embed(c4))
    for item in trace.added:
        assert set(augmented.neighbors(item.vertex)) <= set(item.anchors) | set(trace.added_vertices)


@pytest.mark.parametrize("fixture", ["bowtie", "eared_triangle"])
def test_lemma1_preconditions(request, fixture):
    """
    Check that unsuitable graphs are rejected.

    Arguments:
        request: Pytest fixture to get other fixtures.
        fixture: The name of the graph fixture.
    """
    graph = request.getfixturevalue(fixture)
    with pytest.raises(PreconditionViolated):
        lemma1_augment(graph, planar_embed(graph))


def test_lemma1_rejects_non_plane_rotation(k4):
    """
    Check that a rotation system of the torus is rejected.

    Arguments:
        k4: The complete graph on four vertices.
    """
    with pytest.raises(PreconditionViolated, match="not a plane embedding"):
        lemma1_augment(k4, planar_embed(k4).reversed_at(0))


def test_stellate_cube(cube):
    """
    Stellate the six faces of the cube.

    Arguments:
        cube: The cube.
    """
    rotation = planar_embed(cube)
    triangulation, triangulation_rotation, trace = stellate(cube, rotation)
    assert triangulation.n == 14
    assert triangulation.m == 36
    assert validate_embedding(triangulation, triangulation_rotation).is_triangulation()
    assert trace.count(STELLATION) == 6
    assert all(len(item.anchors) == 4 for item in trace.added)
    assert trace.rollback(triangulation, triangulation_rotation) == (cube, rotation)


def test_stellate_cycle(c4):
    """
    Stellate both faces of a cycle.

    Arguments:
        c4: The cycle on four vertices.
    """
    triangulation, _, trace = stellate(c4, planar_embed(c4))
    assert triangulation.n == 6
    assert triangulation.m == 12
    assert len(trace.added) == 2


def test_stellate_triangle_adds_nothing():
    """Check that a triangle is already a triangulation."""
    triangle = cycle(3)
    triangulation, _, trace = stellate(triangle, planar_embed(triangle))
    assert triangulation == triangle
    assert trace.added == ()


@pytest.mark.parametrize(
    "graph",
    [
        build_graph(2, [(0, 1)]),
        build_graph(3, [(0, 1), (1, 2)]),
        build_graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]),
    ],
)
def test_stellate_requires_two_connected(graph):
    """
    Check that stellation rejects graphs that are not 2-connected.

    Arguments:
        graph: A graph that is not 2-connected.
    """
    with pytest.raises(NotTwoConnected):
        stellate(graph, planar_embed(graph))


def test_traces_compose(cube):
    """
    Chain the 3-connectivity augmentation and stellation, then roll back.

    Arguments:
        cube: The cube.
    """
    rotation = planar_embed(cube)
    augmented, augmented_rotation, first = lemma1_augment(cube, rotation)
    triangulation, triangulation_rotation, second = stellate(augmented, augmented_rotation)
    trace = first.then(second)
    assert trace.added_vertices == second.added_vertices
    assert trace.rollback(triangulation, triangulation_rotation) == (cube, rotation)


def test_traces_must_follow_each_other(c4, k4):
    """
    Check that unrelated traces cannot be composed.

    Arguments:
        c4: The cycle on four vertices.
        k4: The complete graph on four vertices.
    """
    _, _, first = lemma1_augment(c4, planar_embed(c4))
    second = AugmentationTrace(k4, planar_embed(k4))
    with pytest.raises(TraceMismatch):
        first.then(second)


def test_rollback_detects_foreign_graph(c4, k4):
    """
    Check that rollback needs the augmented graph.

    Arguments:
        c4: The cycle on four vertices.
        k4: The complete graph on four vertices.
    """
    trace = AugmentationTrace(c4, planar_embed(c4))
    with pytest.raises(TraceMismatch):
        trace.rollback(k4, planar_embed(k4))


def test_rotation_of_added_lemma1_vertex(c4):
    """
    Check the rotation of an added vertex lists its anchors.

    Arguments:
        c4: The cycle on four vertices.
    """
    _, rotation, trace = lemma1_augment(c4, planar_embed(c4))
    first = trace.added[0]
    assert isinstance(rotation, RotationSystem)
    assert rotation[first.vertex] == first.anchors
