"""Tests for the `connectivity` module."""

import pytest

from bookembed.connectivity import blocks_and_cutpoints, is_k_connected, merge_layouts, separating_pairs
from bookembed.exceptions import InvalidBlockLayout, NotTwoConnected, PreconditionViolated, TooSmall
from bookembed.generators import grid
from bookembed.graph import Graph, build_graph
from bookembed.layout import BookLayout, verify_layout
from bookembed.oracle import pagenumber_oracle
from bookembed.pipeline import two_page_embed

from .conftest import cycle


def test_blocks_of_bowtie(bowtie):
    """
    Decompose two triangles sharing a vertex.

    Arguments:
        bowtie: Two triangles sharing vertex 2.
    """
    tree = blocks_and_cutpoints(bowtie)
    assert tree.blocks == (frozenset({0, 1, 2}), frozenset({2, 3, 4}))
    assert tree.cutpoints == frozenset({2})
    assert tree.incidence == ((2, 0), (2, 1))
    assert tree.blocks_containing(2) == [0, 1]
    assert tree.block_graph(1) == Graph([2, 3, 4], [(2, 3), (2, 4), (3, 4)])


def test_block_cut_tree_as_networkx(bowtie):
    """
    Check the forest nodes.

    Arguments:
        bowtie: Two triangles sharing vertex 2.
    """
    forest = blocks_and_cutpoints(bowtie).tree()
    assert set(forest.nodes) == {("B", 0), ("B", 1), ("C", 2)}
    assert forest.number_of_edges() == 2


def test_isolated_vertices_are_blocks():
    """Check that an isolated vertex forms its own block."""
    tree = blocks_and_cutpoints(build_graph(3, [(0, 1)]))
    assert tree.blocks == (frozenset({0, 1}), frozenset({2}))
    assert not tree.cutpoints


def test_blocks_of_bonnet(bonnet):
    """
    Decompose a triangle with pendant edges, beside another triangle.

    Arguments:
        bonnet: A triangle with three pendant edges, beside another triangle.
    """
    tree = blocks_and_cutpoints(bonnet)
    assert [sorted(block) for block in tree.blocks] == [[0, 1, 2], [0, 3], [0, 4], [0, 5], [6, 7, 8]]
    assert tree.cutpoints == frozenset({0})
    assert tree.blocks_containing(0) == [0, 1, 2, 3]
    assert tree.tree().number_of_edges() == 4


def test_blocks_of_path():
    """Check that every edge of a path is a block."""
    tree = blocks_and_cutpoints(build_graph(4, [(0, 1), (1, 2), (2, 3)]))
    assert len(tree.blocks) == 3
    assert tree.cutpoints == frozenset({1, 2})


@pytest.mark.parametrize(
    ("fixture", "k", "expected"),
    [
        ("k4", 2, True),
        ("k4", 3, True),
        ("octahedron", 3, True),
        ("cube", 3, True),
        ("c4", 2, True),
        ("c4", 3, False),
        ("bowtie", 2, False),
        ("wheel", 3, True),
        ("wheel", 2, True),
    ],
)
def test_is_k_connected(request, fixture, k, expected):
    """
    Check connectivity tests on small graphs.

    Arguments:
        request: Pytest fixture to get other fixtures.
        fixture: The name of the graph fixture.
        k: The connectivity to test.
        expected: The expected answer.
    """
    assert is_k_connected(request.getfixturevalue(fixture), k) is expected


def test_is_k_connected_rejects_small_graphs():
    """Check that a triangle is too small for a 3-connectivity test."""
    with pytest.raises(TooSmall):
        is_k_connected(cycle(3), 3)


def test_is_k_connected_rejects_other_k(k4):
    """
    Check that only 2 and 3 are supported.

    Arguments:
        k4: The complete graph on four vertices.
    """
    with pytest.raises(PreconditionViolated):
        is_k_connected(k4, 4)


def test_separating_pairs(c4, k4):
    """
    Check separating pairs of a cycle and a complete graph.

    Arguments:
        c4: The cycle on four vertices.
        k4: The complete graph on four vertices.
    """
    assert separating_pairs(c4) == [(0, 2), (1, 3)]
    assert separating_pairs(k4) == []


def test_separating_pairs_of_theta_graph():
    """Check that the two poles of a theta graph separate it."""
    theta = build_graph(5, [(0, 1), (1, 4), (0, 2), (2, 4), (0, 3), (3, 4)])
    assert (0, 4) in separating_pairs(theta)


def test_separating_pairs_of_grid():
    """Check the pairs separating two squares that share an edge."""
    assert separating_pairs(grid(2, 3)) == [(0, 4), (1, 3), (1, 4), (1, 5), (2, 4)]


def test_separating_pairs_needs_two_connected(bowtie):
    """
    Check that graphs with a cutpoint are rejected.

    Arguments:
        bowtie: Two triangles sharing vertex 2.
    """
    with pytest.raises(NotTwoConnected):
        separating_pairs(bowtie)


def test_merge_layouts_splices_at_cutpoint(bowtie):
    """
    Merge the layouts of two triangles.

    Arguments:
        bowtie: Two triangles sharing vertex 2.
    """
    tree = blocks_and_cutpoints(bowtie)
    layouts = {
        0: BookLayout([0, 1, 2], {(0, 1): 1, (0, 2): 1, (1, 2): 1}),
        1: BookLayout([2, 3, 4], {(2, 3): 2, (2, 4): 2, (3, 4): 2}),
    }
    merged = merge_layouts(tree, layouts)
    assert merged.spine.order == (0, 1, 2, 3, 4)
    assert verify_layout(bowtie, merged) == []
    assert merged.page_count == 1


def test_merge_layouts_concatenates_components():
    """Check that components are laid out one after the other."""
    graph = build_graph(5, [(0, 3), (1, 4), (2, 4)])
    tree = blocks_and_cutpoints(graph)
    layouts = {
        index: BookLayout(block, {edge: 1 for edge in tree.block_graph(index).edges})
        for index, block in enumerate(tree.blocks)
    }
    merged = merge_layouts(tree, layouts)
    assert set(merged.spine) == set(graph.vertices)
    assert verify_layout(graph, merged) == []


def test_merge_layouts_requires_every_block(bowtie):
    """
    Check that a missing block layout is reported.

    Arguments:
        bowtie: Two triangles sharing vertex 2.
    """
    tree = blocks_and_cutpoints(bowtie)
    with pytest.raises(InvalidBlockLayout) as exc_info:
        merge_layouts(tree, {0: BookLayout([0, 1, 2], {(0, 1): 1, (0, 2): 1, (1, 2): 1})})
    assert exc_info.value.block == 1


def test_merge_layouts_rejects_crossing_block(k4):
    """
    Check that an invalid block layout is reported.

    Arguments:
        k4: The complete graph on four vertices.
    """
    tree = blocks_and_cutpoints(k4)
    with pytest.raises(InvalidBlockLayout):
        merge_layouts(tree, {0: BookLayout([0, 1, 2, 3], {edge: 1 for edge in k4.edges})})


def test_merge_layouts_of_two_k4_sharing_a_cutpoint():
    """Merge two-page layouts of two copies of K4 glued at vertex 3."""
    first = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    second = [(3, 4), (3, 5), (3, 6), (4, 5), (4, 6), (5, 6)]
    graph = build_graph(7, first + second)
    tree = blocks_and_cutpoints(graph)
    assert tree.cutpoints == frozenset({3})
    layouts = {
        0: BookLayout([0, 1, 2, 3], {edge: 2 if edge == (1, 3) else 1 for edge in first}),
        1: BookLayout([3, 4, 5, 6], {edge: 2 if edge == (4, 6) else 1 for edge in second}),
    }
    merged = merge_layouts(tree, layouts)
    assert sorted(merged.spine) == list(range(7))
    assert verify_layout(graph, merged) == []
    assert merged.page_count == 2


def test_pendant_edge_keeps_page_number_of_k4(k4):
    """
    Check that a pendant edge attached to K4 needs no third page.

    Arguments:
        k4: The complete graph on four vertices.
    """
    graph = k4.extended([4], [(3, 4)])
    assert pagenumber_oracle(graph) == 2
    layout = two_page_embed(graph)
    assert verify_layout(graph, layout) == []
    assert layout.page_count == 2
