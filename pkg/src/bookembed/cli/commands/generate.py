"""Command to generate graphs."""

from typing import Optional

from loguru import logger

from bookembed import generators
from bookembed.cli.context import Context
from bookembed.graph import Graph
from bookembed.serialization import emit_edge_list


def generate(
    context: Context,
    kind: str,
    depth: Optional[int] = None,
    rows: Optional[int] = None,
    cols: Optional[int] = None,
    per_edge: int = 1,
    nodes: Optional[int] = None,
) -> int:
    """
    Generate subcommand.

    Arguments:
        context: The invocation context.
        kind: The kind of graph to generate.
        depth: The depth of X-trees.
        rows: The number of rows of grids.
        cols: The number of columns of grids.
        per_edge: The number of vertices added on each edge when subdividing.
        nodes: The number of vertices of random blocks.

    Returns:
        int: Always 0, failures are raised.
    """
    graph: Graph
    if kind == "xtree":
        graph = generators.x_tree(depth)  # type: ignore
    elif kind == "ext-xtree":
        graph = generators.extended_x_tree(depth)  # type: ignore
    elif kind == "grid":
        graph = generators.grid(rows, cols)  # type: ignore
    elif kind == "subdivide":
        graph, _ = generators.subdivide(context.read_graph(), per_edge)
    else:
        seed = 0 if context.seed is None else context.seed
        graph = generators.random_nicely_planar_block(nodes, seed)  # type: ignore
    logger.info(f"Generated {graph!r}")
    context.write(emit_edge_list(graph))
    return 0
