from uqbar.strings import normalize

from wtoll.graphs import generators, products
from wtoll.graphs.dot import to_dot


def test_1(bridge):
    assert to_dot(bridge.induced_subgraph([0, 3, 4]).graph) == normalize(
        """
        graph G {
            "0" [label="a_1"];
            "1" [label="m"];
            "2" [label="b_1"];
            "0" -- "1";
            "1" -- "2";
        }
        """
    )


def test_2():
    product = products.corona(generators.path_graph(2), generators.path_graph(1))
    assert to_dot(product, name="C") == normalize(
        """
        graph C {
            "0" [label="g_0"];
            "1" [label="g_1"];
            "2" [label="h_0^0"];
            "3" [label="h_0^1"];
            "0" -- "1";
            "0" -- "2";
            "1" -- "3";
        }
        """
    )


def test_3():
    product = products.lexicographic(generators.path_graph(2), generators.path_graph(2))
    assert '[label="(1,0)"]' in to_dot(product)
