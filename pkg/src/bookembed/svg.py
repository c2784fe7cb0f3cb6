"""
SVG module.

This module draws book layouts as SVG documents: the vertices are labeled points on a horizontal spine,
page-1 edges are half-circles above the spine, page-2 edges are half-circles below it,
and edges of further pages are flatter or taller half-ellipses above it, in their own colors.
"""

from typing import Optional, Sequence

import svgwrite

from bookembed.exceptions import CoverageError, InvalidLayout
from bookembed.graph import Graph
from bookembed.layout import BookLayout, verify_layout

DEFAULT_PAGE_COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")


def _arc_height(page: int, radius: float) -> float:
    if page <= 2:
        return radius
    return radius * (1 + 0.4 * (page - 2))


def emit_svg(
    graph: Graph,
    layout: BookLayout,
    spacing: float = 40,
    margin: float = 30,
    vertex_radius: float = 4,
    font_size: float = 11,
    page_colors: Optional[Sequence[str]] = None,
) -> str:
    """
    Draw a layout as an SVG document.

    Arguments:
        graph: The graph.
        layout: A valid layout of the graph.
        spacing: The distance between two consecutive spine vertices.
        margin: The blank space around the drawing.
        vertex_radius: The radius of the vertex points.
        font_size: The font size of the vertex labels.
        page_colors: The stroke color of each page, starting with page 1.

    Raises:
        InvalidLayout: When the layout is not valid for the graph.

    Returns:
        The SVG text.
    """
    try:
        violations = verify_layout(graph, layout)
    except CoverageError as error:
        raise InvalidLayout(str(error)) from error
    if violations:
        first, second = violations[0]
        raise InvalidLayout(f"Edges {first[0]}-{first[1]} and {second[0]}-{second[1]} cross on the same page")

    colors = list(page_colors or DEFAULT_PAGE_COLORS)
    positions = layout.spine.positions()

    above, below = 0.0, 0.0
    for (u, v), page in layout.pages.items():
        radius = abs(positions[u] - positions[v]) * spacing / 2
        if page == 2:
            below = max(below, radius)
        else:
            above = max(above, _arc_height(page, radius))

    width = 2 * margin + max(len(layout.spine) - 1, 0) * spacing
    spine_y = margin + above
    height = spine_y + below + margin + font_size
    drawing = svgwrite.Drawing(size=(f"{width:g}", f"{height:g}"))

    drawing.add(
        drawing.line(start=(margin, spine_y), end=(width - margin, spine_y), stroke="black", stroke_width=1),
    )

    for (u, v), page in layout.pages.items():
        left, right = sorted((positions[u], positions[v]))
        x1, x2 = margin + left * spacing, margin + right * spacing
        radius = (x2 - x1) / 2
        height_radius = _arc_height(page, radius)
        # sweep flag 1 goes clockwise on screen, so above the spine from left to right
        sweep = 0 if page == 2 else 1
        path = f"M {x1:g},{spine_y:g} A {radius:g},{height_radius:g} 0 0,{sweep} {x2:g},{spine_y:g}"
        drawing.add(
            drawing.path(d=path, fill="none", stroke=colors[(page - 1) % len(colors)], stroke_width=1.5),
        )

    for vertex in layout.spine:
        x = margin + positions[vertex] * spacing
        drawing.add(drawing.circle(center=(x, spine_y), r=vertex_radius, fill="black"))
        drawing.add(
            drawing.text(
                str(vertex),
                insert=(x, spine_y + vertex_radius + font_size),
                text_anchor="middle",
                font_size=font_size,
                font_family="sans-serif",
            ),
        )

    return drawing.tostring()
