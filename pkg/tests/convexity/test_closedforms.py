import itertools

import pytest

from wtoll.convexity import closedforms
from wtoll.convexity.closedforms import Anchor, Prediction, Target
from wtoll.convexity.hulls import hull, wth, wtn
from wtoll.convexity.intervals import (
    IntervalKind,
    is_weakly_toll_set,
    weakly_toll_interval,
)
from wtoll.graphs import Graph, generators, products

PATH = generators.path_graph(3)
CYCLE = generators.cycle_graph(4)
BRIDGE = generators.two_clique_bridge(3)

FACTOR_PAIRS = [(PATH, PATH), (PATH, CYCLE), (CYCLE, PATH)]


@pytest.mark.parametrize("G, H", FACTOR_PAIRS)
def test_1(G, H):
    product = products.lexicographic(G, H)
    for g in range(G.order):
        for h1, h2 in itertools.combinations(range(H.order), 2):
            prediction = closedforms.lex_interval_same_layer(G, H, g, h1, h2)
            if not prediction.applicable:
                assert H.has_edge(h1, h2)
                continue
            u, v = product.pair_vertex(g, h1), product.pair_vertex(g, h2)
            assert prediction.holds_for(weakly_toll_interval(product.graph, u, v))


@pytest.mark.parametrize("G, H", FACTOR_PAIRS)
def test_2(G, H):
    product = products.lexicographic(G, H)
    for g1, g2 in itertools.combinations(range(G.order), 2):
        for h1, h2 in itertools.combinations(range(H.order), 2):
            prediction = closedforms.lex_interval_cross_layer(G, H, g1, h1, g2, h2)
            if not prediction.applicable:
                continue
            u, v = product.pair_vertex(g1, h1), product.pair_vertex(g2, h2)
            assert prediction.holds_for(weakly_toll_interval(product.graph, u, v))


@pytest.mark.parametrize(
    "G, H, expected", [(PATH, PATH, 2), (PATH, BRIDGE, 3), (BRIDGE, PATH, 2)]
)
def test_3(G, H, expected):
    product = products.lexicographic(G, H).graph
    prediction = closedforms.lex_wtn(G, H)
    assert prediction.value == expected
    assert len(prediction.witness) == expected
    assert is_weakly_toll_set(product, prediction.witness)
    assert prediction.holds_for(wtn(product).number)


def test_4():
    product = products.lexicographic(PATH, BRIDGE).graph
    prediction = closedforms.lex_wth(PATH, BRIDGE)
    closed = hull(product, prediction.witness, IntervalKind.WEAKLY_TOLL)
    assert closed == product.vertices
    assert prediction.holds_for(wth(product).number)


@pytest.mark.parametrize(
    "G, H, reason",
    [
        (generators.complete_graph(3), PATH, "first factor is complete"),
        (PATH, generators.complete_graph(2), "second factor is complete"),
    ],
)
def test_5(G, H, reason):
    for function in (closedforms.lex_wtn, closedforms.lex_wth):
        prediction = function(G, H)
        assert not prediction.applicable
        assert prediction.reason == reason


@pytest.mark.parametrize("G, H", [(PATH, PATH), (PATH, CYCLE)])
def test_6(G, H):
    product = products.corona(G, H)
    graph = product.graph
    for i in range(G.order):
        for h1, h2 in itertools.combinations(range(H.order), 2):
            prediction = closedforms.corona_interval_same_copy(G, H, i, h1, h2)
            if prediction.applicable:
                u, v = product.copy_vertex(i, h1), product.copy_vertex(i, h2)
                assert prediction.holds_for(weakly_toll_interval(graph, u, v))
    for i, j in itertools.combinations(range(G.order), 2):
        prediction = closedforms.corona_interval_base_pair(G, H, i, j)
        assert prediction.holds_for(weakly_toll_interval(graph, i, j))
        for k, l in itertools.product(range(H.order), repeat=2):
            prediction = closedforms.corona_interval_cross_copies(G, H, i, k, j, l)
            u, v = product.copy_vertex(i, k), product.copy_vertex(j, l)
            assert prediction.holds_for(weakly_toll_interval(graph, u, v))


@pytest.mark.parametrize("G, H", [(PATH, PATH), (CYCLE, PATH)])
def test_7(G, H):
    product = products.corona(G, H)
    for i, j, k in itertools.product(range(G.order), range(G.order), range(H.order)):
        prediction = closedforms.corona_interval_mixed(G, H, i, j, k)
        observed = weakly_toll_interval(product.graph, i, product.copy_vertex(j, k))
        assert prediction.holds_for(observed), (i, j, k)


def test_8():
    product = products.corona(CYCLE, PATH)
    base = product.graph.vertex_set(range(CYCLE.order))
    prediction = closedforms.corona_base_restriction(CYCLE, PATH, 0, 2)
    assert prediction.holds_for(weakly_toll_interval(product.graph, 0, 2) & base)
    assert not closedforms.corona_base_restriction(CYCLE, PATH, 0, 1).applicable


@pytest.mark.parametrize("H, expected", [(PATH, 2), (BRIDGE, 3)])
def test_9(H, expected):
    product = products.corona(PATH, H).graph
    prediction = closedforms.corona_wtn(PATH, H)
    assert prediction.value == expected
    assert is_weakly_toll_set(product, prediction.witness)
    witness = closedforms.corona_wth(PATH, H).witness
    assert hull(product, witness, IntervalKind.WEAKLY_TOLL) == product.vertices


def test_10():
    fibers = [generators.complete_graph(2), BRIDGE, BRIDGE]
    product = products.generalized_corona(PATH, fibers).graph
    prediction = closedforms.generalized_corona_wtn(PATH, fibers)
    assert prediction.target is Target.WTN_UPPER_BOUND
    assert is_weakly_toll_set(product, prediction.witness)
    assert prediction.holds_for(wtn(product).number)
    witness = closedforms.generalized_corona_wth(PATH, fibers).witness
    assert hull(product, witness, IntervalKind.WEAKLY_TOLL) == product.vertices


def test_11():
    complete = generators.complete_graph(3)
    prediction = closedforms.generalized_corona_wtn(PATH, [complete] * 3)
    assert prediction.reason == "no fiber is connected and non-complete"
    prediction = closedforms.generalized_corona_wtn(PATH, [PATH] * 2)
    assert prediction.reason == "expected 3 fibers, got 2"


def test_12():
    edgeless = Graph.from_edge_list(2, [])
    fibers = [PATH, edgeless, generators.complete_graph(1)]
    product = products.generalized_corona(PATH, fibers).graph
    prediction = closedforms.generalized_corona_wtn(PATH, fibers)
    assert prediction.target is Target.WTN
    assert (prediction.value, str(prediction.witness)) == (2, "3 5")
    assert prediction.holds_for(wtn(product).number)
    assert is_weakly_toll_set(product, prediction.witness)
    witness = closedforms.generalized_corona_wth(PATH, fibers).witness
    assert hull(product, witness, IntervalKind.WEAKLY_TOLL) == product.vertices


def test_13():
    edgeless = Graph.from_edge_list(3, [])
    fibers = [edgeless, generators.complete_graph(2), edgeless]
    prediction = closedforms.generalized_corona_wth(PATH, fibers)
    assert prediction.reason == "no fiber is connected and non-complete"


def test_14():
    for G, H in [(PATH, PATH), (generators.complete_graph(3), PATH)]:
        product = products.cartesian(G, H).graph
        assert closedforms.cartesian_wtn(G, H).holds_for(wtn(product).number)
    product = products.strong(PATH, PATH).graph
    assert closedforms.strong_wtn_bound(PATH, PATH).holds_for(wtn(product).number)


def test_15():
    prediction = closedforms.cartesian_wtn(PATH, generators.path_graph(1))
    assert prediction.reason == "second factor is trivial"


def test_16():
    bound = Prediction(Target.WTN_UPPER_BOUND, "bound", 3)
    assert bound.holds_for(2) and bound.holds_for(3)
    assert not bound.holds_for(4)
    exact = Prediction(Target.WTN, "exact", 3)
    assert not exact.holds_for(2)


def test_17():
    skipped = Prediction.skip(Target.WTN, "skipped", "first factor is complete")
    assert not skipped.applicable
    with pytest.raises(ValueError):
        skipped.holds_for(2)


def test_18():
    assert closedforms.lex_wtn(PATH, BRIDGE).provenance is Anchor.LEX_WTN
    skipped = closedforms.corona_wth(generators.complete_graph(3), PATH)
    assert not skipped.applicable
    assert skipped.provenance is Anchor.CORONA_WTH
    assert closedforms.lex_wtn.__name__ == "lex_wtn"
