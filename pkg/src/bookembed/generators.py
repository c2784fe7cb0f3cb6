"""
Generators module.

This module builds the graph families used as inputs and test corpora:
X-trees, extended X-trees, grids, subdivisions, and seeded random graphs.

Vertices are numbered level by level (left to right) in X-trees, row by row in grids,
and new subdivision vertices are numbered upward from the largest existing vertex.
"""

import random
from typing import Dict, List, Optional, Set, Tuple

from bookembed.augment import separating_triangles
from bookembed.exceptions import PreconditionViolated
from bookembed.graph import Graph, canonical_edge
from bookembed.types import Edge, SubdivisionMap


def _level(depth: int) -> range:
    return range(2**depth - 1, 2 ** (depth + 1) - 1)


def _x_tree_edges(depth: int) -> List[Edge]:
    edges = []
    for parent in range(2**depth - 1):
        edges.append((parent, 2 * parent + 1))
        edges.append((parent, 2 * parent + 2))
    for level in range(1, depth + 1):
        vertices = _level(level)
        edges.extend(zip(vertices, vertices[1:]))
    return edges


def x_tree(depth: int) -> Graph:
    """
    Build an X-tree: a complete binary tree plus a path through each level.

    Arguments:
        depth: The depth of the tree (0 for a single vertex).

    Raises:
        PreconditionViolated: When the depth is negative.

    Returns:
        The X-tree, on `2^(depth+1) - 1` vertices. Vertex `i` has children `2i+1` and `2i+2`.
    """
    if depth < 0:
        raise PreconditionViolated(f"Depth must be non-negative, got {depth}")
    return Graph(range(2 ** (depth + 1) - 1), _x_tree_edges(depth))


def extended_x_tree(depth: int) -> Graph:
    """
    Build an extended X-tree: each level path is closed into a cycle when its ends are not adjacent.

    Arguments:
        depth: The depth of the tree (0 for a single vertex).

    Raises:
        PreconditionViolated: When the depth is negative.

    Returns:
        The extended X-tree.
    """
    if depth < 0:
        raise PreconditionViolated(f"Depth must be non-negative, got {depth}")
    edges = _x_tree_edges(depth)
    existing = set(edges)
    for level in range(1, depth + 1):
        vertices = _level(level)
        closing = (vertices[0], vertices[-1])
        if closing not in existing:
            edges.append(closing)
    return Graph(range(2 ** (depth + 1) - 1), edges)


def grid(rows: int, cols: int) -> Graph:
    """
    Build a grid, the product of two paths.

    Arguments:
        rows: The number of rows.
        cols: The number of columns.

    Raises:
        PreconditionViolated: When a dimension is lower than 1.

    Returns:
        The grid. Vertex `r * cols + c` sits at row `r`, column `c`.
    """
    if rows < 1 or cols < 1:
        raise PreconditionViolated(f"Grid dimensions must be at least 1, got {rows}x{cols}")
    edges = []
    for row in range(rows):
        for col in range(cols):
            vertex = row * cols + col
            if col + 1 < cols:
                edges.append((vertex, vertex + 1))
            if row + 1 < rows:
                edges.append((vertex, vertex + cols))
    return Graph(range(rows * cols), edges)


def subdivide(graph: Graph, per_edge: int) -> Tuple[Graph, SubdivisionMap]:
    """
    Replace every edge by a path with the same number of internal vertices.

    Arguments:
        graph: The graph.
        per_edge: The number of internal vertices per edge.

    Raises:
        PreconditionViolated: When `per_edge` is negative.

    Returns:
        The subdivided graph, and the internal vertices of each original edge, ordered from its
        smaller endpoint to its larger one.
    """
    if per_edge < 0:
        raise PreconditionViolated(f"Subdivision count must be non-negative, got {per_edge}")
    if per_edge == 0:
        return graph, {edge: () for edge in graph.edges}

    next_vertex = graph.next_vertex()
    mapping: SubdivisionMap = {}
    edges = []
    for u, v in graph.edges:
        internal = tuple(range(next_vertex, next_vertex + per_edge))
        next_vertex += per_edge
        mapping[(u, v)] = internal
        path = (u, *internal, v)
        edges.extend(zip(path, path[1:]))
    added = [vertex for internal in mapping.values() for vertex in internal]
    return Graph((*graph.vertices, *added), edges), mapping


def contract_subdivision(subdivided: Graph, mapping: SubdivisionMap) -> Graph:
    """
    Recover a graph from one of its subdivisions.

    Arguments:
        subdivided: The subdivided graph.
        mapping: The internal vertices of each original edge, as returned by
            [`subdivide`][bookembed.generators.subdivide].

    Raises:
        PreconditionViolated: When the subdivided graph does not match the mapping.

    Returns:
        The original graph.
    """
    internal: Set[int] = {vertex for path in mapping.values() for vertex in path}
    expected: Set[Edge] = set()
    for (u, v), path in mapping.items():
        full = (u, *path, v)
        expected.update(canonical_edge(*pair) for pair in zip(full, full[1:]))
    if set(subdivided.edges) != expected:
        raise PreconditionViolated("The subdivision paths do not match the edges of the graph")
    return Graph((vertex for vertex in subdivided.vertices if vertex not in internal), mapping.keys())


class _EarGrower:
    """Grow a 2-connected plane graph by adding paths (ears) inside its faces."""

    def __init__(self, rng: random.Random, cycle: List[int]) -> None:
        self.rng = rng
        self.vertex_count = len(cycle)
        self.edges: Set[Edge] = {canonical_edge(u, v) for u, v in zip(cycle, cycle[1:] + cycle[:1])}
        self.faces: List[List[int]] = [list(cycle), list(reversed(cycle))]

    def graph(self) -> Graph:
        return Graph(range(self.vertex_count), self.edges)

    def propose(self, length: int) -> Optional[Tuple[int, int, int]]:
        face_index = self.rng.randrange(len(self.faces))
        face = self.faces[face_index]
        first, second = sorted(self.rng.sample(range(len(face)), 2))
        if length == 0:
            consecutive = second - first in {1, len(face) - 1}
            if consecutive or canonical_edge(face[first], face[second]) in self.edges:
                return None
        return face_index, first, second

    def add(self, face_index: int, first: int, second: int, length: int) -> None:
        face = self.faces.pop(face_index)
        internal = list(range(self.vertex_count, self.vertex_count + length))
        self.vertex_count += length
        path = [face[first], *internal, face[second]]
        self.edges.update(canonical_edge(u, v) for u, v in zip(path, path[1:]))
        # the ear splits the face into two faces, each bounded by one side of the face and the ear
        self.faces.append(face[first : second + 1] + list(reversed(internal)))
        self.faces.append(face[second:] + face[: first + 1] + internal)

    def undo(self, snapshot: Tuple[int, Set[Edge], List[List[int]]]) -> None:
        self.vertex_count, self.edges, self.faces = snapshot

    def snapshot(self) -> Tuple[int, Set[Edge], List[List[int]]]:
        return self.vertex_count, set(self.edges), [list(face) for face in self.faces]


def random_nicely_planar_block(n: int, seed: Optional[int] = None, attempts: int = 1000) -> Graph:
    """
    Build a random 2-connected planar graph without separating triangles.

    The graph grows from a cycle by adding ears inside faces, rejecting any ear
    that creates a separating triangle.

    Arguments:
        n: The number of vertices (at least 3).
        seed: The random seed.
        attempts: The number of rejected ears tolerated.

    Raises:
        PreconditionViolated: When `n` is lower than 3.

    Returns:
        The random block.
    """
    if n < 3:
        raise PreconditionViolated(f"A random block needs at least 3 vertices, got {n}")
    rng = random.Random(seed)
    grower = _EarGrower(rng, list(range(rng.randint(3, min(n, 6)))))
    chords = rng.randint(0, n // 2)
    while (grower.vertex_count < n or chords > 0) and attempts > 0:
        remaining = n - grower.vertex_count
        length = rng.randint(1, min(3, remaining)) if remaining else 0
        proposal = grower.propose(length)
        if proposal is None:
            attempts -= 1
            continue
        snapshot = grower.snapshot()
        grower.add(*proposal, length)
        if separating_triangles(grower.graph()):
            grower.undo(snapshot)
            attempts -= 1
        elif length == 0:
            chords -= 1
    return grower.graph()


def random_planar_bipartite(n: int, seed: Optional[int] = None, attempts: int = 1000) -> Graph:
    """
    Build a random connected planar bipartite graph.

    The graph grows from an even cycle by adding ears of the right parity inside faces,
    then some vertices are hung as pendant paths.

    Arguments:
        n: The number of vertices (at least 4).
        seed: The random seed.
        attempts: The number of rejected ears tolerated.

    Raises:
        PreconditionViolated: When `n` is lower than 4.

    Returns:
        The random bipartite graph.
    """
    if n < 4:
        raise PreconditionViolated(f"A random bipartite graph needs at least 4 vertices, got {n}")
    rng = random.Random(seed)
    pendants = rng.randint(0, n // 4)
    grower = _EarGrower(rng, list(range(4)))
    color: Dict[int, int] = {vertex: vertex % 2 for vertex in range(4)}
    target = n - pendants
    while grower.vertex_count < target and attempts > 0:
        remaining = target - grower.vertex_count
        length = rng.randint(0, min(3, remaining))
        proposal = grower.propose(length)
        if proposal is None:
            attempts -= 1
            continue
        face = grower.faces[proposal[0]]
        same_side = color[face[proposal[1]]] == color[face[proposal[2]]]
        # an ear keeps the graph bipartite when its edge count has the parity of its endpoints' distance
        if same_side == (length % 2 == 0):
            attempts -= 1
            continue
        start = grower.vertex_count
        grower.add(*proposal, length)
        for offset in range(length):
            color[start + offset] = (color[face[proposal[1]]] + offset + 1) % 2

    edges = set(grower.edges)
    count = grower.vertex_count
    while count < n:
        anchor = rng.randrange(count)
        edges.add((anchor, count))
        count += 1
    return Graph(range(count), edges)


def random_planar(n: int, seed: Optional[int] = None, keep: float = 0.6) -> Graph:
    """
    Build a random planar graph by deleting edges of a random stacked triangulation.

    Arguments:
        n: The number of vertices.
        seed: The random seed.
        keep: The probability of keeping each edge.

    Returns:
        The random planar graph (possibly disconnected).
    """
    rng = random.Random(seed)
    if n < 3:
        return Graph(range(n), [(0, 1)] if n == 2 and rng.random() < keep else [])
    edges = {(0, 1), (0, 2), (1, 2)}
    triangles = [(0, 1, 2), (0, 1, 2)]
    for vertex in range(3, n):
        a, b, c = triangles.pop(rng.randrange(len(triangles)))
        edges.update({(a, vertex), (b, vertex), (c, vertex)})
        triangles.extend([(a, b, vertex), (a, c, vertex), (b, c, vertex)])
    return Graph(range(n), (edge for edge in sorted(edges) if rng.random() < keep))


def random_glued_blocks(seed: Optional[int] = None, blocks: Optional[int] = None, max_n: int = 8) -> Graph:
    """
    Build a random connected graph by gluing random blocks at cutpoints.

    Blocks are single edges, or cycles with random chords; they need not be planar.

    Arguments:
        seed: The random seed.
        blocks: The number of blocks (default: 2 or 3, at random).
        max_n: The maximum number of vertices.

    Returns:
        The glued graph.
    """
    rng = random.Random(seed)
    blocks = blocks or rng.randint(2, 3)
    edges: Set[Edge] = set()
    count = 1
    for index in range(blocks):
        budget = max_n - count + 1
        remaining = blocks - index - 1
        size = rng.randint(2, max(2, min(5, budget - remaining)))
        anchor = rng.randrange(count)
        members = [anchor, *range(count, count + size - 1)]
        count += size - 1
        rng.shuffle(members)
        if size == 2:
            edges.add(canonical_edge(*members))
            continue
        edges.update(canonical_edge(u, v) for u, v in zip(members, members[1:] + members[:1]))
        for first in range(size):
            for second in range(first + 2, size):
                if (first, second) != (0, size - 1) and rng.random() < 0.5:
                    edges.add(canonical_edge(members[first], members[second]))
    return Graph(range(count), edges)
