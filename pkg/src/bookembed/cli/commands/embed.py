"""Command to lay out a graph on two pages."""

from typing import Optional

from loguru import logger

from bookembed.cli.context import Context
from bookembed.hamiltonian import subhamiltonian_completion
from bookembed.pipeline import Embedder, homeomorphic_two_page
from bookembed.serialization import LayoutReport, emit_edge_list, emit_layout_json
from bookembed.svg import emit_svg


def embed(context: Context, homeomorphic: bool = False, budget: Optional[int] = None) -> int:
    """
    Embed subcommand.

    Arguments:
        context: The invocation context.
        homeomorphic: Whether to subdivide every edge once first.
        budget: The node budget of the Hamiltonian search.

    Returns:
        int: Always 0, failures are raised.
    """
    graph = context.read_graph()
    if budget is None:
        budget = context.setting("search", "hamiltonian_budget")
    shortcut = context.setting("layout", "outerplanar_shortcut")

    if homeomorphic:
        result = homeomorphic_two_page(graph, budget, shortcut)
        graph, layout = result.subdivided, result.layout
        report = LayoutReport.from_layout(
            graph,
            layout,
            result.provenance,
            spine_crossings=result.spine_crossings,
            extra={
                "mode": "homeomorphic",
                "original_n": result.original.n,
                "original_m": result.original.m,
                "meets_crossing_bound": result.meets_crossing_bound,
            },
        )
    else:
        layout, provenance = Embedder(budget, shortcut).embed(graph)
        report = LayoutReport.from_layout(graph, layout, provenance)

    output_format = context.format("json")
    logger.debug(f"Writing the layout as {output_format}")
    if output_format == "svg":
        context.write(emit_svg(graph, layout, **context.render_settings()))
    elif output_format == "edgelist":
        context.write(emit_edge_list(subhamiltonian_completion(graph, layout.spine)))
    else:
        context.write(emit_layout_json(report))
    return 0
