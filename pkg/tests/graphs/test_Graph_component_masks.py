from wtoll.graphs import Graph


def test_1(cycle5):
    allowed = cycle5.full_mask & ~(1 << 0 | 1 << 2)
    assert cycle5.component_masks(allowed) == [0b00010, 0b11000]


def test_2(star):
    assert star.component_masks(star.full_mask & ~1) == [0b0010, 0b0100, 0b1000]
    assert star.component_masks(0) == []


def test_3():
    graph = Graph.from_edge_list(5, [(0, 1), (3, 4)])
    assert [str(component) for component in graph.connected_components()] == [
        "0 1",
        "2",
        "3 4",
    ]
    assert not graph.is_connected()
