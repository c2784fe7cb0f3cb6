"""
Hamiltonian module.

This module searches Hamiltonian cycles, extracts spine orders from cycles of augmented graphs,
and completes a graph into a Hamiltonian one along a spine order.
"""

from typing import Dict, List, Optional, Sequence, Set, Tuple, Union

import networkx as nx
from loguru import logger

from bookembed.augment import AugmentationTrace
from bookembed.connectivity import is_k_connected
from bookembed.exceptions import BudgetExceeded, CoverageError, NotFound, NotSubhamiltonianOrder, TraceMismatch
from bookembed.graph import CyclicOrder, Graph
from bookembed.layout import assign_pages
from bookembed.types import Edge

DEFAULT_BUDGET = 5_000_000

class HamiltonianCycle:
    """A cycle through every vertex of a graph."""

    def __init__(self, order: Sequence[int], nodes: int = 0) -> None:
        """
        Initialize the object.

        Arguments:
            order: The vertices along the cycle, each exactly once.
            nodes: The number of search nodes explored to find the cycle.
        """
        self.order: Tuple[int, ...] = CyclicOrder.canonicalize(list(order))
        self.nodes = nodes

    def __repr__(self) -> str:
        return f"HamiltonianCycle({self.order!r})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, HamiltonianCycle):
            return NotImplemented
        return self.order == other.order

    def edges(self) -> List[Edge]:
        """
        Return the edges of the cycle.

        Returns:
            The canonical pairs of cyclically consecutive vertices.
        """
        return CyclicOrder(self.order).consecutive_pairs()

    def is_cycle_of(self, graph: Graph) -> bool:
        """
        Tell if this is a Hamiltonian cycle of a graph.

        Arguments:
            graph: The graph.

        Returns:
            Whether the cycle covers the vertices and only uses edges of the graph.
        """
        return (
            len(self.order) >= 3
            and sorted(self.order) == list(graph.vertices)
            and all(graph.has_edge(*edge) for edge in self.edges())
        )


class _Search:
    """Depth-first search over edge choices, with propagation of forced edges."""

    def __init__(self, graph: Graph, budget: int) -> None:
        self.vertices = list(graph.vertices)
        self.size = graph.n
        self.budget = budget
        self.nodes = 0
        self.count = 0
        # edges not excluded yet, chosen edges included
        self.allowed: Dict[int, Set[int]] = {vertex: set(graph.neighbors(vertex)) for vertex in self.vertices}
        self.chosen: Dict[int, Set[int]] = {vertex: set() for vertex in self.vertices}
        # other end of the chosen path through each path endpoint
        self.end: Dict[int, int] = {vertex: vertex for vertex in self.vertices}
        self.trail: List[Tuple[str, int, int, int, int]] = []
        self.queue: List[int] = []

    def run(self) -> Optional[List[int]]:
        self.queue.extend(self.vertices)
        if not self._settle():
            return None
        if self.count == self.size:
            return self._cycle()
        frames = [self._frame()]
        while frames:
            frame = frames[-1]
            vertex, candidates = frame.vertex, frame.candidates
            self._undo(frame.mark)
            if frame.index == len(candidates):
                frames.pop()
                continue
            if frame.index > 0:
                if not self._exclude(vertex, candidates[frame.index - 1]):
                    frames.pop()
                    continue
                frame.mark = len(self.trail)
            candidate = candidates[frame.index]
            frame.index += 1
            if self._choose(vertex, candidate) and self._settle():
                if self.count == self.size:
                    return self._cycle()
                frames.append(self._frame())
        return None

    def _frame(self) -> "_Frame":
        best = None
        for vertex in self.vertices:
            degree = len(self.chosen[vertex])
            if degree == 2:
                continue
            key = (len(self.allowed[vertex]) - degree, -degree, vertex)
            if best is None or key < best:
                best = key
        vertex = best[2]  # type: ignore
        candidates = sorted(
            self.allowed[vertex] - self.chosen[vertex],
            key=lambda other: (len(self.allowed[other]) - len(self.chosen[other]), other),
        )
        return _Frame(vertex, candidates, len(self.trail))

    def _choose(self, first: int, second: int) -> bool:
        if second in self.chosen[first]:
            return True
        if second not in self.allowed[first] or len(self.chosen[first]) == 2 or len(self.chosen[second]) == 2:
            return False
        closing = self.end[first] == second
        if closing and self.count != self.size - 1:
            return False

        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(self.budget)

        head, tail = self.end[first], self.end[second]
        self.chosen[first].add(second)
        self.chosen[second].add(first)
        self.count += 1
        self.end[head] = tail
        self.end[tail] = head
        self.trail.append(("choose", first, second, head, tail))
        self.queue.extend((first, second))
        # joining the two ends of a path early would close a cycle too short
        if not closing and self.count < self.size - 1 and tail in self.allowed[head] - self.chosen[head]:
            self._delete(head, tail)
        return True

    def _delete(self, first: int, second: int) -> None:
        self.allowed[first].discard(second)
        self.allowed[second].discard(first)
        self.trail.append(("delete", first, second, 0, 0))
        self.queue.extend((first, second))

    def _exclude(self, first: int, second: int) -> bool:
        if second in self.chosen[first]:
            return False
        if second in self.allowed[first]:
            self._delete(first, second)
        return self._settle()

    def _settle(self) -> bool:
        if not self._propagate():
            self.queue.clear()
            return False
        return self._biconnected()

    def _propagate(self) -> bool:
        while self.queue:
            vertex = self.queue.pop()
            allowed, chosen = self.allowed[vertex], self.chosen[vertex]
            if len(allowed) < 2:
                return False
            if len(chosen) == 2:
                for other in sorted(allowed - chosen):
                    self._delete(vertex, other)
            elif len(allowed) == 2:
                for other in sorted(allowed - chosen):
                    if not self._choose(vertex, other):
                        return False
        return True

    def _biconnected(self) -> bool:
        remaining = nx.Graph()
        remaining.add_nodes_from(self.vertices)
        remaining.add_edges_from(
            (vertex, other) for vertex, others in self.allowed.items() for other in others if vertex < other
        )
        return nx.is_biconnected(remaining)

    def _undo(self, mark: int) -> None:
        while len(self.trail) > mark:
            action, first, second, head, tail = self.trail.pop()
            if action == "delete":
                self.allowed[first].add(second)
                self.allowed[second].add(first)
                continue
            self.chosen[first].discard(second)
            self.chosen[second].discard(first)
            self.count -= 1
            self.end[head] = first
            self.end[tail] = second

    def _cycle(self) -> List[int]:
        start = self.vertices[0]
        order = [start]
        previous, current = start, min(self.chosen[start])
        while current != start:
            order.append(current)
            previous, current = current, next(other for other in self.chosen[current] if other != previous)
        return order


class _Frame:
    """A branching point: the vertex, its candidate edges, and the trail length to restore."""

    def __init__(self, vertex: int, candidates: List[int], mark: int) -> None:
        self.vertex = vertex
        self.candidates = candidates
        self.mark = mark
        self.index = 0


def hamiltonian_cycle(graph: Graph, budget: int = DEFAULT_BUDGET) -> Union[HamiltonianCycle, NotFound]:
    """
    Search a Hamiltonian cycle.

    The search is exhaustive: a `NotFound` result means that no cycle exists.
    It branches on the edges of the vertex with the fewest remaining options, and propagates
    after each choice: a vertex left with two usable edges takes both, a vertex holding two
    chosen edges drops the others, and the edge closing a path early is dropped.
    A branch is cut when a vertex keeps fewer than two usable edges, or when the usable edges
    no longer form a 2-connected graph.

    Arguments:
        graph: The graph.
        budget: The maximum number of chosen edges, forced ones included.

    Raises:
        BudgetExceeded: When the budget is exhausted before a conclusion.

    Returns:
        A Hamiltonian cycle, or a `NotFound` marker.
    """
    if graph.n < 3:
        return NotFound(f"A Hamiltonian cycle needs at least 3 vertices, got {graph.n}")
    if any(graph.degree(vertex) < 2 for vertex in graph.vertices):
        return NotFound("A vertex has fewer than 2 neighbors")
    if not is_k_connected(graph, 2):
        return NotFound("The graph is not 2-connected")

    search = _Search(graph, budget)
    path = search.run()
    logger.debug(f"Hamiltonian search explored {search.nodes} nodes on {graph!r}")
    if path is None:
        return NotFound()
    return HamiltonianCycle(path, nodes=search.nodes)


def spine_order(cycle: HamiltonianCycle, trace: AugmentationTrace) -> CyclicOrder:
    """
    Restrict the cycle of an augmented graph to the original vertices.

    Arguments:
        cycle: A Hamiltonian cycle of the augmented graph.
        trace: The augmentation trace.

    Raises:
        TraceMismatch: When the cycle vertices are not the original and added vertices.

    Returns:
        The induced cyclic order of the original vertices.
    """
    added = set(trace.added_vertices)
    if set(cycle.order) != set(trace.original_graph.vertices) | added:
        raise TraceMismatch("The cycle does not cover exactly the original and added vertices")
    return CyclicOrder(vertex for vertex in cycle.order if vertex not in added)


def subhamiltonian_completion(graph: Graph, order: CyclicOrder) -> Graph:
    """
    Add an edge between every two consecutive vertices of a spine order that are not adjacent.

    Arguments:
        graph: The graph.
        order: A cyclic order of its vertices admitting a two-page layout.

    Raises:
        CoverageError: When the order does not list exactly the vertices of the graph.
        NotSubhamiltonianOrder: When the graph has no two-page layout in this order.

    Returns:
        A planar supergraph in which the order is a Hamiltonian cycle.
    """
    if set(order) != set(graph.vertices):
        raise CoverageError("The order does not list exactly the vertices of the graph")
    if not assign_pages(graph, order, 2):
        raise NotSubhamiltonianOrder(f"The graph has no two-page layout with spine {order.order}")
    missing = [pair for pair in order.consecutive_pairs() if not graph.has_edge(*pair)]
    return graph.extended(edges=missing)
