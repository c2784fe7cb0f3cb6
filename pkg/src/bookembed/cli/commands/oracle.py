"""Command to compute the page number of a small graph."""

from typing import Optional

from bookembed.cli.context import Context
from bookembed.oracle import pagenumber_oracle


def oracle(context: Context, max_n: Optional[int] = None, workers: Optional[int] = None) -> int:
    """
    Oracle subcommand.

    Arguments:
        context: The invocation context.
        max_n: The maximum number of vertices accepted.
        workers: The number of worker processes.

    Returns:
        int: Always 0, failures are raised.
    """
    graph = context.read_graph()
    pagenumber = pagenumber_oracle(
        graph,
        max_n if max_n is not None else context.setting("oracle", "max_n"),
        workers if workers is not None else context.setting("oracle", "workers"),
    )
    context.write(str(pagenumber))
    return 0
