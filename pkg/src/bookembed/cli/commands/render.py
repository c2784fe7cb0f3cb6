"""Command to draw layouts."""

from bookembed.cli.context import Context
from bookembed.pipeline import two_page_embed
from bookembed.serialization import parse_edge_list, parse_layout_json
from bookembed.svg import emit_svg


def render(context: Context) -> int:
    """
    Render subcommand.

    The input is either a JSON layout report, or an edge list that gets laid out first.

    Arguments:
        context: The invocation context.

    Returns:
        int: Always 0, failures are raised.
    """
    text = context.read()
    if text.lstrip().startswith("{"):
        report = parse_layout_json(text)
        graph, layout = report.graph(), report.layout()
    else:
        graph = parse_edge_list(text)
        layout = two_page_embed(
            graph,
            context.setting("search", "hamiltonian_budget"),
            context.setting("layout", "outerplanar_shortcut"),
        )
    context.write(emit_svg(graph, layout, **context.render_settings()))
    return 0
