"""Tests for the `layout` module."""

import pytest

from bookembed.exceptions import CoverageError, Infeasible, PreconditionViolated
from bookembed.graph import CyclicOrder, Graph, build_graph
from bookembed.layout import BookLayout, assign_pages, color_graph, conflict_graph, crossing_pairs, verify_layout

IDENTITY = {vertex: vertex for vertex in range(6)}
THREE_CROSSING = build_graph(6, [(0, 3), (1, 4), (2, 5)])


@pytest.mark.parametrize(
    ("edges", "expected"),
    [
        ([(0, 2), (1, 3)], [(0, 1)]),
        ([(0, 2), (2, 3)], []),
        ([(0, 3), (1, 2)], []),
        ([(0, 1), (2, 3)], []),
        ([(0, 3), (1, 4), (2, 5)], [(0, 1), (0, 2), (1, 2)]),
    ],
)
def test_crossing_pairs(edges, expected):
    """
    Check interleaving detection.

    Arguments:
        edges: The edges.
        expected: The crossing index pairs.
    """
    assert crossing_pairs(edges, IDENTITY) == expected


def test_conflict_graph(k4):
    """
    Check the conflict graph of K4 in its natural order.

    Arguments:
        k4: The complete graph on four vertices.
    """
    assert conflict_graph(k4, CyclicOrder(range(4))) == Graph(range(6), [(1, 4)])


def test_color_graph():
    """Color a triangle."""
    triangle = {0: [1, 2], 1: [0, 2], 2: [0, 1]}
    assert color_graph(triangle, 2) is None
    coloring = color_graph(triangle, 3)
    assert sorted(coloring.values()) == [0, 1, 2]


def test_assign_pages_two_pages(k4):
    """
    Lay out K4 on two pages.

    Arguments:
        k4: The complete graph on four vertices.
    """
    layout = assign_pages(k4, CyclicOrder(range(4)), 2)
    assert layout
    assert layout.pages[(0, 2)] == 1
    assert layout.pages[(1, 3)] == 2
    assert layout.edges_on(2) == [(1, 3)]
    assert layout.page_count == 2
    assert verify_layout(k4, layout) == []


def test_assign_pages_one_page_infeasible(k4):
    """
    Check that K4 needs two pages.

    Arguments:
        k4: The complete graph on four vertices.
    """
    result = assign_pages(k4, CyclicOrder(range(4)), 1)
    assert not result
    assert isinstance(result, Infeasible)
    assert result.pages == 1


def test_assign_pages_one_page(c4):
    """
    Lay out a cycle on a single page.

    Arguments:
        c4: The cycle on four vertices.
    """
    layout = assign_pages(c4, CyclicOrder(range(4)), 1)
    assert layout.page_count == 1


def test_assign_pages_three_pages():
    """Check that three mutually crossing edges need three pages."""
    order = CyclicOrder(range(6))
    assert not assign_pages(THREE_CROSSING, order, 2)
    layout = assign_pages(THREE_CROSSING, order, 3)
    assert layout.page_count == 3
    assert verify_layout(THREE_CROSSING, layout) == []


def test_assign_pages_rejects_zero_pages(k4):
    """
    Check the page budget.

    Arguments:
        k4: The complete graph on four vertices.
    """
    with pytest.raises(PreconditionViolated):
        assign_pages(k4, CyclicOrder(range(4)), 0)


def test_layout_without_edges_is_truthy():
    """Check that a valid layout is truthy even without edges."""
    layout = assign_pages(build_graph(1, []), CyclicOrder([0]), 1)
    assert layout
    assert layout.page_count == 0


def test_verify_layout_reports_crossings(k4):
    """
    Check that crossing edges on a same page are reported.

    Arguments:
        k4: The complete graph on four vertices.
    """
    layout = BookLayout(range(4), {edge: 1 for edge in k4.edges})
    assert verify_layout(k4, layout) == [((0, 2), (1, 3))]


def test_verify_layout_coverage(k4, c4):
    """
    Check that layouts must cover the graph exactly.

    Arguments:
        k4: The complete graph on four vertices.
        c4: The cycle on four vertices.
    """
    with pytest.raises(CoverageError):
        verify_layout(k4, BookLayout(range(4), {edge: 1 for edge in c4.edges}))
    with pytest.raises(CoverageError):
        verify_layout(k4, BookLayout(range(5), {edge: 1 for edge in k4.edges}))


def test_book_layout_rejects_page_zero():
    """Check that pages start at 1."""
    with pytest.raises(PreconditionViolated):
        BookLayout([0, 1], {(0, 1): 0})


def test_book_layout_canonical_edges():
    """Check that edges are stored canonically."""
    assert BookLayout([0, 1], {(1, 0): 1}).pages == {(0, 1): 1}


def test_book_layout_normalized():
    """Check page renumbering."""
    layout = BookLayout([0, 1, 2], {(0, 1): 3, (1, 2): 5, (0, 2): 3})
    assert layout.normalized().pages == {(0, 1): 1, (0, 2): 1, (1, 2): 2}
    assert layout.normalized() == BookLayout([2, 1, 0], {(0, 1): 1, (0, 2): 1, (1, 2): 2})


def test_conflict_graph_of_k5_is_a_cycle():
    """Check that the five chords of K5 in its natural order cross along a 5-cycle."""
    k5 = build_graph(5, [(first, second) for first in range(5) for second in range(first + 1, 5)])
    conflicts = conflict_graph(k5, CyclicOrder(range(5)))
    assert conflicts == Graph(range(10), [(1, 5), (1, 6), (2, 6), (2, 8), (5, 8)])
    chords = [vertex for vertex in conflicts.vertices if conflicts.degree(vertex)]
    assert len(chords) == 5
    assert all(conflicts.degree(vertex) == 2 for vertex in chords)
    assert conflicts.induced(chords).is_connected()
