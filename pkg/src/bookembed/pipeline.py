"""
Pipeline module.

This module chains the construction of two-page book embeddings.

Each block of the graph is laid out on its own:

- blocks of one or two vertices trivially;
- outerplanar blocks on a single page, in the order of their outer face;
- other blocks by augmenting them to 3-connectivity, stellating them into a triangulation,
  finding a Hamiltonian cycle of the triangulation, restricting it to the block's vertices,
  and splitting the edges into two pages.

The block layouts are then merged along the block-cutpoint forest.
"""

from typing import Any, Dict, List, Optional, Tuple

from loguru import logger

from bookembed.augment import LEMMA1, STELLATION, lemma1_augment, separating_triangles, stellate
from bookembed.connectivity import blocks_and_cutpoints, merge_layouts
from bookembed.exceptions import InternalGuaranteeViolated, NotNicelyPlanar, NotPlanar
from bookembed.generators import subdivide
from bookembed.graph import Graph, canonical_edge
from bookembed.hamiltonian import DEFAULT_BUDGET, hamiltonian_cycle, spine_order
from bookembed.layout import BookLayout, assign_pages, verify_layout
from bookembed.planarity import outerplanar_order, planar_embed
from bookembed.types import SubdivisionMap

TRIVIAL = "trivial"
OUTERPLANAR = "outerplanar"
WHITNEY = "whitney"


class EmbeddingProvenance:
    """How a layout was built, block by block."""

    def __init__(self, struct: Optional[Dict[str, Any]] = None) -> None:
        """
        Initialize the object.

        Arguments:
            struct: A dictionary as returned by `as_dict`.
        """
        self._struct = struct or {"blocks": []}

    def __repr__(self) -> str:
        return f"EmbeddingProvenance(blocks={self.block_count})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, EmbeddingProvenance):
            return NotImplemented
        return self._struct == other.as_dict()

    def record(self, block: int, route: str, vertices: int, **details: int) -> None:
        """
        Record how a block was laid out.

        Arguments:
            block: The block index.
            route: `"trivial"`, `"outerplanar"` or `"whitney"`.
            vertices: The number of vertices of the block.
            **details: Counters of the route (added vertices, search nodes).
        """
        entry = {"block": block, "route": route, "vertices": vertices}
        entry.update(details)
        self._struct["blocks"].append(entry)

    def as_dict(self) -> Dict[str, Any]:
        """
        Return the provenance as a dictionary.

        Returns:
            A JSON-serializable dictionary.
        """
        return self._struct

    @property
    def blocks(self) -> List[Dict[str, Any]]:
        """
        Records of the blocks.

        Returns:
            One record per block.
        """
        return self._struct["blocks"]

    @property
    def block_count(self) -> int:
        """
        Number of blocks processed.

        Returns:
            The block count.
        """
        return len(self.blocks)

    @property
    def lemma1_vertices(self) -> int:
        """
        Total number of vertices added to reach 3-connectivity.

        Returns:
            The vertex count.
        """
        return sum(block.get("lemma1_vertices", 0) for block in self.blocks)

    @property
    def stellation_vertices(self) -> int:
        """
        Total number of vertices added by stellation.

        Returns:
            The vertex count.
        """
        return sum(block.get("stellation_vertices", 0) for block in self.blocks)

    @property
    def search_nodes(self) -> int:
        """
        Total number of Hamiltonian search nodes.

        Returns:
            The node count.
        """
        return sum(block.get("search_nodes", 0) for block in self.blocks)

    def routes(self) -> List[str]:
        """
        Return the route of each block.

        Returns:
            The routes, in block order.
        """
        return [block["route"] for block in self.blocks]


class Embedder:
    """Build two-page book embeddings of nicely planar graphs."""

    def __init__(self, budget: int = DEFAULT_BUDGET, outerplanar_shortcut: bool = True) -> None:
        """
        Initialize the object.

        Arguments:
            budget: The node budget of each Hamiltonian search.
            outerplanar_shortcut: Whether to lay out outerplanar blocks on one page directly.
        """
        self.budget = budget
        self.outerplanar_shortcut = outerplanar_shortcut

    def __repr__(self) -> str:
        return f"Embedder(budget={self.budget}, outerplanar_shortcut={self.outerplanar_shortcut})"

    def embed(self, graph: Graph) -> Tuple[BookLayout, EmbeddingProvenance]:
        """
        Build a layout of a graph on at most two pages.

        Arguments:
            graph: A planar graph whose blocks are nicely planar.

        Raises:
            NotPlanar: When the graph is not planar.
            InternalGuaranteeViolated: When the merged layout is not a valid two-page layout.

        Returns:
            The layout, and how it was built.
        """
        if not planar_embed(graph):
            raise NotPlanar("The graph is not planar")

        tree = blocks_and_cutpoints(graph)
        logger.debug(f"Laying out {len(tree.blocks)} blocks of {graph!r}")
        provenance = EmbeddingProvenance()
        layouts = {}
        for index in range(len(tree.blocks)):
            layouts[index] = self.embed_block(tree.block_graph(index), index, provenance)

        layout = merge_layouts(tree, layouts)
        violations = verify_layout(graph, layout)
        if violations or layout.page_count > 2:
            logger.error(f"Merged layout has {len(violations)} violations on {layout.page_count} pages")
            raise InternalGuaranteeViolated("The merged layout is not a valid two-page layout")
        logger.info(f"Laid out {graph!r} on {layout.page_count} page(s)")
        return layout, provenance

    def embed_block(self, block: Graph, index: int, provenance: EmbeddingProvenance) -> BookLayout:
        """
        Build a layout of a block on at most two pages.

        Arguments:
            block: A block (2-connected graph, single edge, or single vertex).
            index: The block index, for the provenance record.
            provenance: The provenance to update.

        Raises:
            NotNicelyPlanar: When the block has a separating triangle.
            InternalGuaranteeViolated: When a guaranteed step fails.

        Returns:
            The block layout.
        """
        if block.n <= 2:
            provenance.record(index, TRIVIAL, block.n)
            return BookLayout(block.vertices, {edge: 1 for edge in block.edges})

        triangles = separating_triangles(block)
        if triangles:
            raise NotNicelyPlanar(triangles[0])

        order = outerplanar_order(block) if self.outerplanar_shortcut else None
        if order is not None:
            layout = assign_pages(block, order, 1)
            if layout:
                provenance.record(index, OUTERPLANAR, block.n)
                return layout
            logger.debug(f"Block {index} is outerplanar but its apex order is not one-page")

        rotation = planar_embed(block)
        if not rotation:
            raise InternalGuaranteeViolated(f"Block {index} of a planar graph is not planar")
        augmented, augmented_rotation, lemma1_trace = lemma1_augment(block, rotation)
        triangulation, _, stellation_trace = stellate(augmented, augmented_rotation)
        trace = lemma1_trace.then(stellation_trace)

        cycle = hamiltonian_cycle(triangulation, self.budget)
        if not cycle:
            logger.error(f"No Hamiltonian cycle in the triangulation of block {index}")
            raise InternalGuaranteeViolated("The augmented triangulation has no Hamiltonian cycle")

        layout = assign_pages(block, spine_order(cycle, trace), 2)
        if not layout:
            logger.error(f"Spine order of block {index} does not give two pages")
            raise InternalGuaranteeViolated("The Hamiltonian spine order does not give a two-page layout")

        provenance.record(
            index,
            WHITNEY,
            block.n,
            lemma1_vertices=trace.count(LEMMA1),
            stellation_vertices=trace.count(STELLATION),
            search_nodes=cycle.nodes,
        )
        return layout


def two_page_embed(
    graph: Graph,
    budget: int = DEFAULT_BUDGET,
    outerplanar_shortcut: bool = True,
) -> BookLayout:
    """
    Build a layout of a nicely planar graph on at most two pages.

    Arguments:
        graph: A planar graph whose blocks are nicely planar.
        budget: The node budget of each Hamiltonian search.
        outerplanar_shortcut: Whether to lay out outerplanar blocks on one page directly.

    Returns:
        A valid layout with at most two pages.
    """
    layout, _ = Embedder(budget, outerplanar_shortcut).embed(graph)
    return layout


class HomeomorphicLayout:
    """A two-page layout of a subdivision of a graph."""

    def __init__(
        self,
        original: Graph,
        subdivided: Graph,
        subdivision_map: SubdivisionMap,
        layout: BookLayout,
        provenance: Optional[EmbeddingProvenance] = None,
    ) -> None:
        """
        Initialize the object.

        Arguments:
            original: The original graph.
            subdivided: The subdivided graph.
            subdivision_map: The internal vertices of each original edge.
            layout: A layout of the subdivided graph.
            provenance: How the layout was built.
        """
        self.original = original
        self.subdivided = subdivided
        self.subdivision_map = subdivision_map
        self.layout = layout
        self.provenance = provenance or EmbeddingProvenance()
        self.spine_crossings = count_spine_crossings(subdivision_map, layout)

    def __repr__(self) -> str:
        return f"HomeomorphicLayout(original={self.original!r}, spine_crossings={self.spine_crossings})"

    @property
    def meets_crossing_bound(self) -> bool:
        """
        Tell if the spine is crossed at most `p - 2` times, `p` being the original vertex count.

        Returns:
            Whether the bound holds.
        """
        return self.spine_crossings <= max(self.original.n - 2, 0)


def count_spine_crossings(subdivision_map: SubdivisionMap, layout: BookLayout) -> int:
    """
    Count the subdivision vertices whose two path edges lie on different pages.

    Arguments:
        subdivision_map: The internal vertices of each original edge.
        layout: A layout of the subdivided graph.

    Returns:
        The number of spine crossings.
    """
    crossings = 0
    for (u, v), internal in subdivision_map.items():
        path = (u, *internal, v)
        for previous, vertex, following in zip(path, path[1:], path[2:]):
            before = layout.pages[canonical_edge(previous, vertex)]
            after = layout.pages[canonical_edge(vertex, following)]
            if before != after:
                crossings += 1
    return crossings


def homeomorphic_two_page(
    graph: Graph,
    budget: int = DEFAULT_BUDGET,
    outerplanar_shortcut: bool = True,
) -> HomeomorphicLayout:
    """
    Build a two-page layout of a planar graph with every edge subdivided once.

    Subdividing every edge once doubles the length of every cycle, so the subdivision has no triangle
    and the two-page construction applies to it.

    Arguments:
        graph: A planar graph.
        budget: The node budget of each Hamiltonian search.
        outerplanar_shortcut: Whether to lay out outerplanar blocks on one page directly.

    Raises:
        NotPlanar: When the graph is not planar.

    Returns:
        The homeomorphic layout.
    """
    if not planar_embed(graph):
        raise NotPlanar("The graph is not planar")
    subdivided, mapping = subdivide(graph, 1)
    layout, provenance = Embedder(budget, outerplanar_shortcut).embed(subdivided)
    result = HomeomorphicLayout(graph, subdivided, mapping, layout, provenance)
    if not result.meets_crossing_bound:
        logger.warning(
            f"Spine crossings above p - 2: {result.spine_crossings} > {graph.n - 2} for {graph!r}",
        )
    return result
