import pytest

from wtoll.convexity.hulls import (
    check_maximum_decomposition,
    check_neighbor_extension,
    check_wtn_characterization,
    interval_report,
    maximum_interval_pairs,
)
from wtoll.exceptions import CompleteGraphError
from wtoll.graphs import generators
from wtoll.verify.corpus import atlas_graphs


SMALL_GRAPHS = atlas_graphs(2, 5)

NON_COMPLETE = [graph for graph in SMALL_GRAPHS if not graph.is_complete()]


def test_1(star):
    reports = maximum_interval_pairs(star)
    assert [report.pair for report in reports] == [(1, 2), (1, 3), (2, 3)]
    assert all(report.is_maximum for report in reports)
    assert all(not report.x for report in reports)


def test_2(bridge):
    report = interval_report(bridge, 1, 5)
    assert report.interval.to_list() == [0, 1, 3, 4, 5]
    assert report.x.to_list() == [2, 6]
    assert report.x_u.to_list() == [2]
    assert report.x_v.to_list() == [6]
    assert not report.is_maximum


def test_3(bridge):
    """
    Pairs across the bridge miss part of both cliques.
    """
    for report in maximum_interval_pairs(bridge):
        u, v = report.pair
        assert not bridge.has_edge(u, v)
        assert len(report.x_u | report.x_v) > 0


def test_4():
    with pytest.raises(CompleteGraphError):
        maximum_interval_pairs(generators.complete_graph(4))


@pytest.mark.parametrize("graph", NON_COMPLETE)
def test_5(graph):
    assert check_neighbor_extension(graph)
    assert check_maximum_decomposition(graph)
    assert check_wtn_characterization(graph)


@pytest.mark.parametrize("seed", range(5))
def test_6(seed):
    graph = generators.random_connected_graph(8, 0.4, seed)
    if graph.is_complete():
        pytest.skip("complete draw")
    assert check_neighbor_extension(graph)
    assert check_maximum_decomposition(graph)
    assert check_wtn_characterization(graph)
