"""Configuration for the pytest test suite."""

import os
from pathlib import Path

import networkx as nx
import pytest

from bookembed import Graph, build_graph, enable_logger


@pytest.fixture(autouse=True)
def tests_logs(request):
    # put logs in tests/logs
    log_path = Path("tests") / "logs"

    # tidy logs in subdirectories based on test module and class names
    module = request.module
    class_ = request.cls
    name = request.node.name + ".log"

    if module:
        log_path /= module.__name__.replace("tests.", "")
    if class_:
        log_path /= class_.__name__

    log_path.mkdir(parents=True, exist_ok=True)

    # append last part of the name and enable logger
    log_path /= name
    if log_path.exists():
        log_path.unlink()
    # loguru formats file paths, braces from parametrized ids must be escaped
    sink = str(log_path).replace("{", "{{").replace("}", "}}")
    enable_logger(sink=sink, level=os.environ.get("PYTEST_LOG_LEVEL", "TRACE"))


def cycle(n: int) -> Graph:
    """
    Build a cycle.

    Arguments:
        n: The number of vertices.

    Returns:
        The cycle `0, 1, ..., n-1`.
    """
    return build_graph(n, [(vertex, (vertex + 1) % n) for vertex in range(n)])


def from_nx(graph: nx.Graph) -> Graph:
    """
    Convert a `networkx` graph on integer vertices.

    Arguments:
        graph: The networkx graph.

    Returns:
        The graph.
    """
    return Graph(graph.nodes, graph.edges)


@pytest.fixture
def k4() -> Graph:
    """
    Provide the complete graph on four vertices.

    Returns:
        K4.
    """
    return from_nx(nx.complete_graph(4))


@pytest.fixture
def k5() -> Graph:
    """
    Provide the complete graph on five vertices.

    Returns:
        K5.
    """
    return from_nx(nx.complete_graph(5))


@pytest.fixture
def octahedron() -> Graph:
    """
    Provide the octahedron, a 4-connected triangulation.

    Returns:
        The octahedron.
    """
    return from_nx(nx.octahedral_graph())


@pytest.fixture
def cube() -> Graph:
    """
    Provide the cube, a 3-connected planar bipartite graph.

    Returns:
        The cube.
    """
    return from_nx(nx.cubical_graph())


@pytest.fixture
def c4() -> Graph:
    """
    Provide the cycle on four vertices.

    Returns:
        C4.
    """
    return cycle(4)


@pytest.fixture
def bowtie() -> Graph:
    """
    Provide two triangles sharing vertex 2.

    Returns:
        The bowtie.
    """
    return build_graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])


@pytest.fixture
def eared_triangle() -> Graph:
    """
    Provide the triangle `0 1 2` with the ears `0 3 1` and `1 4 2`.

    This 2-connected outerplanar graph has a separating triangle.

    Returns:
        The eared triangle.
    """
    return build_graph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (1, 4), (2, 4)])


@pytest.fixture
def bonnet() -> Graph:
    """
    Provide the triangle `0 1 2` with three pendant edges at 0, beside the disjoint triangle `6 7 8`.

    Deleting the first triangle takes the graph from 2 to 4 components.

    Returns:
        The bonnet.
    """
    return build_graph(9, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (0, 5), (6, 7), (6, 8), (7, 8)])


@pytest.fixture
def wheel() -> Graph:
    """
    Provide the wheel with hub 0 and rim `1 2 3 4`.

    Returns:
        The wheel on five vertices.
    """
    return from_nx(nx.wheel_graph(5))
