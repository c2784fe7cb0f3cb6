"""Command to verify a layout report."""

from bookembed.cli.context import Context
from bookembed.layout import verify_layout
from bookembed.serialization import parse_layout_json


def verify(context: Context) -> int:
    """
    Verify subcommand.

    Arguments:
        context: The invocation context.

    Returns:
        int: 0 if the layout is valid, 1 if two edges of a same page cross.
    """
    report = parse_layout_json(context.read())
    graph = report.graph()
    layout = report.layout()
    violations = verify_layout(graph, layout)
    if not violations:
        context.write(f"valid: {graph.n} vertices, {graph.m} edges, {layout.page_count} page(s)")
        return 0
    lines = [
        f"crossing on page {layout.pages[first]}: {first[0]}-{first[1]} x {second[0]}-{second[1]}"
        for first, second in violations
    ]
    context.write("\n".join(lines))
    return 1
