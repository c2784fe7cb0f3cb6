"""
Oracle module.

This module computes the exact page number (book thickness) of small graphs by brute force:
every cyclic order of the vertices is tried, and the conflict graph of each order is colored exactly.
"""

from concurrent.futures import ProcessPoolExecutor
from itertools import permutations
from typing import Iterator, Optional, Sequence, Tuple

import networkx as nx
from loguru import logger

from bookembed.exceptions import TooLarge
from bookembed.graph import Graph
from bookembed.layout import color_graph, crossing_pairs
from bookembed.types import Edge

DEFAULT_MAX_N = 9


def canonical_orders(vertices: Sequence[int], second: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    """
    Enumerate the cyclic orders of some vertices, one per rotation and reflection class.

    The smallest vertex comes first, and the second vertex is smaller than the last one.

    Arguments:
        vertices: The vertices.
        second: Only enumerate the orders whose second vertex is this one.

    Yields:
        The canonical orders.
    """
    if not vertices:
        return
    first, *rest = sorted(vertices)
    if len(rest) < 2:
        yield (first, *rest)
        return
    if second is None:
        for candidate in rest:
            yield from canonical_orders(vertices, candidate)
        return
    others = [vertex for vertex in rest if vertex != second]
    for tail in permutations(others):
        if second < tail[-1]:
            yield (first, second, *tail)


def _order_pagenumber(edges: Sequence[Edge], order: Sequence[int], best: int) -> int:
    positions = {vertex: index for index, vertex in enumerate(order)}
    conflicts = crossing_pairs(edges, positions)
    if not conflicts:
        return 1
    if best <= 2:
        return best
    conflict = nx.Graph(conflicts)
    lower = max(2, max(len(clique) for clique in nx.find_cliques(conflict)))
    for pages in range(lower, best):
        if color_graph({index: conflict[index] for index in conflict}, pages) is not None:
            return pages
    return best


def _best_for(vertices: Sequence[int], edges: Sequence[Edge], second: Optional[int], best: int) -> int:
    for order in canonical_orders(vertices, second):
        best = min(best, _order_pagenumber(edges, order, best))
        if best == 1:
            break
    return best


def pagenumber_oracle(graph: Graph, n_cap: int = DEFAULT_MAX_N, workers: int = 1) -> int:
    """
    Compute the exact page number of a small graph.

    Arguments:
        graph: The graph.
        n_cap: The maximum number of vertices accepted.
        workers: The number of processes. When greater than 1, the orders are partitioned
            by their second vertex across a process pool. The result does not depend on it.

    Raises:
        TooLarge: When the graph has more than `n_cap` vertices.

    Returns:
        The minimum number of pages over all spine orders (0 for a graph without edges).
    """
    if graph.n > n_cap:
        raise TooLarge(f"The oracle accepts at most {n_cap} vertices, got {graph.n}")
    if graph.m == 0:
        return 0

    # m edges never need more than m pages
    upper = graph.m
    vertices, edges = graph.vertices, graph.edges
    if workers <= 1 or graph.n < 4:
        result = _best_for(vertices, edges, None, upper + 1)
    else:
        seconds = sorted(vertices)[1:]
        with ProcessPoolExecutor(max_workers=workers) as executor:
            results = executor.map(
                _best_for,
                [vertices] * len(seconds),
                [edges] * len(seconds),
                seconds,
                [upper + 1] * len(seconds),
            )
            result = min(results)
    logger.debug(f"Page number of {graph!r}: {result}")
    return result
