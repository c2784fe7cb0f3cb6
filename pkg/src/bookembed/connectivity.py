"""
Connectivity module.

This module computes cutpoints, blocks and the block-cutpoint forest, tests 2- and 3-connectivity,
lists separating pairs, and merges per-block book layouts into a layout of the whole graph.
"""

from typing import Dict, FrozenSet, Iterable, List, Mapping, Sequence, Tuple

import networkx as nx
from loguru import logger

from bookembed.exceptions import CoverageError, InvalidBlockLayout, NotTwoConnected, PreconditionViolated, TooSmall
from bookembed.graph import Graph, canonical_edge
from bookembed.layout import BookLayout, verify_layout
from bookembed.types import Edge


class BlockCutTree:
    """
    The block-cutpoint forest of a graph.

    Blocks are sorted by their smallest vertex (then by their sorted vertices), so that
    block indices are stable. Isolated vertices are single-vertex blocks.
    """

    def __init__(self, graph: Graph, blocks: Iterable[Iterable[int]], cutpoints: Iterable[int]) -> None:
        """
        Initialize the object.

        Arguments:
            graph: The decomposed graph.
            blocks: The vertex sets of the blocks.
            cutpoints: The cutpoints.
        """
        self.graph = graph
        self.blocks: Tuple[FrozenSet[int], ...] = tuple(
            sorted((frozenset(block) for block in blocks), key=lambda block: sorted(block)),
        )
        self.cutpoints: FrozenSet[int] = frozenset(cutpoints)
        self.incidence: Tuple[Tuple[int, int], ...] = tuple(
            (cutpoint, index)
            for index, block in enumerate(self.blocks)
            for cutpoint in sorted(block & self.cutpoints)
        )

    def __repr__(self) -> str:
        return f"BlockCutTree(blocks={len(self.blocks)}, cutpoints={sorted(self.cutpoints)})"

    def blocks_containing(self, vertex: int) -> List[int]:
        """
        Return the indices of the blocks containing a vertex.

        Arguments:
            vertex: A vertex of the graph.

        Returns:
            The sorted block indices.
        """
        return [index for index, block in enumerate(self.blocks) if vertex in block]

    def block_graph(self, index: int) -> Graph:
        """
        Return the subgraph of a block.

        Every edge joining two vertices of a block belongs to that block,
        so the block subgraph is the induced subgraph.

        Arguments:
            index: The block index.

        Returns:
            The block subgraph.
        """
        return self.graph.induced(self.blocks[index])

    def tree(self) -> nx.Graph:
        """
        Return the forest as a `networkx` graph.

        Block nodes are `("B", index)` tuples, cutpoint nodes are `("C", vertex)` tuples.

        Returns:
            The bipartite block-cutpoint forest.
        """
        forest = nx.Graph()
        forest.add_nodes_from(("B", index) for index in range(len(self.blocks)))
        forest.add_nodes_from(("C", cutpoint) for cutpoint in sorted(self.cutpoints))
        forest.add_edges_from((("C", cutpoint), ("B", index)) for cutpoint, index in self.incidence)
        return forest


def blocks_and_cutpoints(graph: Graph) -> BlockCutTree:
    """
    Decompose a graph into blocks and cutpoints.

    Blocks come from the lowpoint depth-first search of `networkx`.

    Arguments:
        graph: The graph.

    Returns:
        The block-cutpoint forest (empty for the empty graph).
    """
    blocks: List[Iterable[int]] = list(nx.biconnected_components(graph.nx))
    blocks.extend({vertex} for vertex in graph.vertices if graph.degree(vertex) == 0)
    cutpoints = nx.articulation_points(graph.nx)
    return BlockCutTree(graph, blocks, cutpoints)


def _is_biconnected(graph: nx.Graph) -> bool:
    return nx.is_connected(graph) and next(nx.articulation_points(graph), None) is None


def is_k_connected(graph: Graph, k: int) -> bool:
    """
    Tell if no set of fewer than `k` vertices disconnects a graph.

    For `k = 3`, every vertex is deleted in turn and the rest is tested for cutpoints,
    which is the same as deleting every pair of vertices.

    Arguments:
        graph: The graph.
        k: The connectivity, 2 or 3.

    Raises:
        PreconditionViolated: When `k` is not 2 or 3.
        TooSmall: When the graph has `k` vertices or fewer.

    Returns:
        Whether the graph is k-connected.
    """
    if k not in {2, 3}:
        raise PreconditionViolated(f"Only 2- and 3-connectivity are supported, got k={k}")
    if graph.n <= k:
        raise TooSmall(f"A {k}-connectivity test needs more than {k} vertices, got {graph.n}")
    if not _is_biconnected(graph.nx):
        return False
    if k == 2:
        return True
    return all(
        _is_biconnected(nx.restricted_view(graph.nx, {vertex}, [])) for vertex in graph.vertices
    )


def separating_pairs(graph: Graph) -> List[Edge]:
    """
    List the pairs of vertices whose deletion disconnects a 2-connected graph.

    Arguments:
        graph: A 2-connected graph.

    Raises:
        NotTwoConnected: When the graph is not 2-connected.

    Returns:
        The pairs `(u, v)`, `u < v`, sorted.
    """
    if graph.n < 3 or not _is_biconnected(graph.nx):
        raise NotTwoConnected(f"Separating pairs are only defined for 2-connected graphs, got {graph!r}")
    pairs = set()
    for vertex in graph.vertices:
        view = nx.restricted_view(graph.nx, {vertex}, [])
        for cutpoint in nx.articulation_points(view):
            pairs.add(canonical_edge(vertex, cutpoint))
    return sorted(pairs)


def _check_block_layout(tree: BlockCutTree, index: int, layout: BookLayout) -> None:
    try:
        violations = verify_layout(tree.block_graph(index), layout)
    except CoverageError as error:
        raise InvalidBlockLayout(index, str(error)) from error
    if violations:
        first, second = violations[0]
        raise InvalidBlockLayout(index, f"edges {first[0]}-{first[1]} and {second[0]}-{second[1]} cross")


def _splice(spine: List[int], cutpoint: int, child: Sequence[int]) -> None:
    start = child.index(cutpoint)
    remainder = list(child[start + 1 :]) + list(child[:start])
    position = spine.index(cutpoint) + 1
    spine[position:position] = remainder


def merge_layouts(tree: BlockCutTree, per_block: Mapping[int, BookLayout]) -> BookLayout:
    """
    Merge the layouts of the blocks of a graph into a layout of the graph.

    Each connected component is processed depth-first from the block containing its smallest vertex.
    The spine order of each child block is rotated so that its cutpoint comes first,
    and the rest of it is spliced right after the cutpoint in the order built so far.
    Pages are reused across blocks. Components are then concatenated along the spine.

    Arguments:
        tree: The block-cutpoint forest.
        per_block: A layout for each block index.

    Raises:
        InvalidBlockLayout: When a block layout is missing or invalid.

    Returns:
        A layout of the whole graph, using as many pages as the worst block.
    """
    layouts: Dict[int, BookLayout] = {}
    for index in range(len(tree.blocks)):
        if index not in per_block:
            raise InvalidBlockLayout(index, "no layout given")
        _check_block_layout(tree, index, per_block[index])
        layouts[index] = per_block[index].normalized()

    spine: List[int] = []
    pages: Dict[Edge, int] = {}
    visited = set()

    for component in tree.graph.components():
        root = tree.blocks_containing(min(component))[0]
        component_spine = list(layouts[root].spine)
        visited.add(root)
        pages.update(layouts[root].pages)
        stack = [root]
        while stack:
            parent = stack.pop()
            children = sorted(
                (child, cutpoint)
                for cutpoint in sorted(tree.blocks[parent] & tree.cutpoints)
                for child in tree.blocks_containing(cutpoint)
                if child not in visited
            )
            for child, cutpoint in children:
                if child in visited:
                    continue
                visited.add(child)
                logger.trace(f"Splicing block {child} after cutpoint {cutpoint}")
                _splice(component_spine, cutpoint, layouts[child].spine.order)
                pages.update(layouts[child].pages)
                stack.append(child)
        spine.extend(component_spine)

    return BookLayout(spine, pages)
