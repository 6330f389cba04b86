import networkx as nx
import pytest

from wtoll.exceptions import Graph6Error
from wtoll.graphs import Graph, encode_graph6, generators, parse_graph6


def reference_graph6(graph: Graph) -> str:
    return nx.to_graph6_bytes(graph.to_networkx(), header=False).decode().strip()


@pytest.mark.parametrize(
    "graph",
    [
        generators.path_graph(1),
        generators.path_graph(4),
        generators.cycle_graph(5),
        generators.star_graph(3),
        generators.two_clique_bridge(3),
        generators.random_connected_graph(8, 0.4, seed=5),
        generators.path_graph(63),
        generators.cycle_graph(70),
    ],
)
def test_1(graph):
    """
    Agrees with the networkx writer, including the four-byte order field.
    """
    text = encode_graph6(graph)
    assert text == reference_graph6(graph)
    assert parse_graph6(text) == graph


def test_2(cycle5):
    assert parse_graph6("Dhc") == cycle5
    assert parse_graph6(">>graph6<<Dhc\n") == cycle5


@pytest.mark.parametrize(
    "text",
    [
        "",
        "?",
        "D",
        "Dhcc",
        "Dh d",
        "Dhd",
        "~?",
    ],
)
def test_3(text):
    with pytest.raises(Graph6Error) as exception_info:
        parse_graph6(text)
    assert exception_info.value.code == "graph6"
