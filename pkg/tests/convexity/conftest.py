import pytest

from wtoll.graphs import Graph, generators


@pytest.fixture
def star():
    return generators.star_graph(3)


@pytest.fixture
def bridge():
    return generators.two_clique_bridge(3)


@pytest.fixture
def kite():
    """
    u=0 and v=1 share the neighbor 2; 3 hangs off v and 2.
    """
    return Graph.from_edge_list(4, [(0, 2), (1, 2), (1, 3), (2, 3)])
