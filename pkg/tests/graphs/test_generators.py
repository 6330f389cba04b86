import networkx as nx
import pytest

from wtoll.exceptions import GraphError
from wtoll.graphs import generators


@pytest.mark.parametrize("k", [1, 3, 4])
def test_1(k):
    graph = generators.two_clique_bridge(k)
    assert graph.order == 2 * k + 1
    assert graph.size == 2 * (k * (k - 1) // 2) + 2
    assert graph.is_connected()
    assert graph.neighbors(k).to_list() == [0, k + 1]
    assert graph.name(k) == "m"


@pytest.mark.parametrize("seed", range(5))
@pytest.mark.parametrize("p", [0.0, 0.2, 0.6])
def test_2(seed, p):
    graph = generators.random_connected_graph(8, p, seed)
    assert graph.order == 8
    assert graph.is_connected()
    assert graph == generators.random_connected_graph(8, p, seed)


@pytest.mark.parametrize("seed", range(5))
def test_3(seed):
    graph = generators.random_tree(7, seed)
    assert nx.is_tree(graph.to_networkx())
    assert graph == generators.random_tree(7, seed)


def test_4():
    assert generators.complete_graph(5).size == 10
    assert generators.cycle_graph(6).size == 6
    assert generators.path_graph(6).size == 5
    assert generators.star_graph(4).order == 5


@pytest.mark.parametrize(
    "factory, arguments",
    [
        (generators.cycle_graph, (2,)),
        (generators.path_graph, (0,)),
        (generators.random_connected_graph, (5, 1.5, 0)),
    ],
)
def test_5(factory, arguments):
    with pytest.raises(GraphError):
        factory(*arguments)
