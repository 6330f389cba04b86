import itertools

import pytest

from wtoll.convexity.hulls import wth, wtn
from wtoll.convexity.intervals import IntervalKind, interval
from wtoll.convexity.oracle import (
    WALK_KINDS,
    WalkBudget,
    oracle_interval,
    oracle_wth,
    oracle_wtn,
)
from wtoll.exceptions import GraphError
from wtoll.graphs import generators
from wtoll.verify.corpus import atlas_graphs


SMALL_GRAPHS = atlas_graphs(2, 5)


@pytest.mark.parametrize("kind", WALK_KINDS)
@pytest.mark.parametrize("graph", SMALL_GRAPHS)
def test_1(graph, kind):
    for u, v in itertools.permutations(range(graph.order), 2):
        assert interval(graph, u, v, kind) == oracle_interval(graph, u, v, kind)


@pytest.mark.parametrize("seed", range(4))
def test_2(seed):
    graph = generators.random_connected_graph(8, 0.3, seed)
    for kind in WALK_KINDS:
        for u, v in itertools.permutations(range(graph.order), 2):
            assert interval(graph, u, v, kind) == oracle_interval(graph, u, v, kind)


def test_3(kite):
    assert oracle_interval(kite, 0, 1, IntervalKind.WEAKLY_TOLL).to_list() == [0, 1, 2]


def test_4():
    path = generators.path_graph(4)
    kind = IntervalKind.WEAKLY_TOLL
    assert oracle_interval(path, 0, 3, kind, WalkBudget(2)).to_list() == []
    assert oracle_interval(path, 0, 3, kind, WalkBudget(3)).to_list() == [0, 1, 2, 3]
    assert WalkBudget.default(path) == WalkBudget(10)


def test_5(star):
    with pytest.raises(GraphError):
        oracle_interval(star, 1, 2, IntervalKind.GEODESIC)
    with pytest.raises(ValueError):
        WalkBudget(0)


@pytest.mark.parametrize(
    "graph",
    [
        generators.star_graph(3),
        generators.cycle_graph(6),
        generators.complete_graph(4),
        generators.two_clique_bridge(3),
    ],
)
def test_6(graph):
    assert oracle_wtn(graph)[0] == wtn(graph).number
    assert oracle_wth(graph)[0] == wth(graph).number
