import itertools

import pytest

from wtoll.convexity.intervals import IntervalKind, interval
from wtoll.graphs import generators
from wtoll.verify.corpus import atlas_graphs


SMALL_GRAPHS = atlas_graphs(2, 5)

CHAIN = [
    IntervalKind.GEODESIC,
    IntervalKind.MONOPHONIC,
    IntervalKind.TOLL,
    IntervalKind.WEAKLY_TOLL,
]


@pytest.mark.parametrize("graph", SMALL_GRAPHS)
def test_1(graph):
    for u, v in itertools.combinations(range(graph.order), 2):
        sets = [interval(graph, u, v, kind) for kind in CHAIN]
        for inner, outer in zip(sets, sets[1:]):
            assert inner <= outer


def test_2():
    cycle = generators.cycle_graph(6)
    assert interval(cycle, 0, 2, IntervalKind.GEODESIC).to_list() == [0, 1, 2]
    assert interval(cycle, 0, 2, IntervalKind.MONOPHONIC).to_list() == list(range(6))
    assert interval(cycle, 0, 3, IntervalKind.GEODESIC).to_list() == list(range(6))


def test_3():
    """
    Adjacent endpoints span themselves under every symmetric kind.
    """
    graph = generators.random_connected_graph(7, 0.5, seed=4)
    for u, v in graph.edges():
        for kind in CHAIN:
            assert interval(graph, u, v, kind).to_list() == [u, v]
