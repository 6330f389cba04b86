import pytest

from wtoll.exceptions import (
    AsymmetricAdjacencyError,
    EmptyGraphError,
    GraphError,
    SelfLoopError,
    VertexRangeError,
)
from wtoll.graphs import Graph


@pytest.mark.parametrize(
    "order, edges, error, code",
    [
        (0, [], EmptyGraphError, "empty-graph"),
        (3, [(0, 3)], VertexRangeError, "vertex-range"),
        (3, [(-1, 0)], VertexRangeError, "vertex-range"),
        (3, [(1, 1)], SelfLoopError, "self-loop"),
    ],
)
def test_1(order, edges, error, code):
    with pytest.raises(error) as exception_info:
        Graph.from_edge_list(order, edges)
    assert exception_info.value.code == code
    assert isinstance(exception_info.value, GraphError)
    assert isinstance(exception_info.value, ValueError)


def test_2():
    """
    Repeated and reversed edges collapse.
    """
    graph = Graph.from_edge_list(3, [(0, 1), (1, 0), (1, 2), (0, 1)])
    assert graph.size == 2
    assert graph.edges() == [(0, 1), (1, 2)]


def test_3():
    graph = Graph.from_edge_list(1, [])
    assert graph.is_connected()
    assert graph.is_complete()
    assert graph.size == 0


def test_4():
    """
    Names do not take part in equality.
    """
    named = Graph.from_edge_list(2, [(0, 1)], names=["x", "y"])
    assert named == Graph.from_edge_list(2, [(0, 1)])
    assert named.name(1) == "y"


@pytest.mark.parametrize(
    "adjacency, error",
    [
        ((0b010, 0b000, 0b000), AsymmetricAdjacencyError),
        ((0b001, 0b000, 0b000), SelfLoopError),
        ((0b1000, 0b000, 0b000), VertexRangeError),
        ((-1, 0b000, 0b000), VertexRangeError),
        ((0b010, 0b001), VertexRangeError),
    ],
)
def test_5(adjacency, error):
    """
    Rows built by hand are checked like edge lists.
    """
    with pytest.raises(error):
        Graph(3, adjacency)
    assert Graph(3, (0b110, 0b001, 0b001)).edges() == [(0, 1), (0, 2)]
