import pytest

from wtoll.graphs import generators


@pytest.fixture
def star():
    return generators.star_graph(3)


@pytest.fixture
def bridge():
    return generators.two_clique_bridge(3)


@pytest.fixture
def cycle5():
    return generators.cycle_graph(5)


@pytest.fixture
def path4():
    return generators.path_graph(4)
