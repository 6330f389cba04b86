import pytest

from wtoll.exceptions import ExpressionError, ProductArityError
from wtoll.graphs import ProductGraph, ProductKind, generators
from wtoll.graphs.parser import parse


@pytest.mark.parametrize(
    "text, expected",
    [
        ("path(4)", generators.path_graph(4)),
        ("cycle(5)", generators.cycle_graph(5)),
        ("complete(4)", generators.complete_graph(4)),
        ("star(3)", generators.star_graph(3)),
        ("bridge(3)", generators.two_clique_bridge(3)),
        ("tree(6, 1)", generators.random_tree(6, 1)),
        ("random(7, 0.4, 2)", generators.random_connected_graph(7, 0.4, 2)),
        ('g6("Dhc")', generators.cycle_graph(5)),
        ("  path( 3 )\n", generators.path_graph(3)),
    ],
)
def test_1(text, expected):
    assert parse(text) == expected


def test_2():
    product = parse("corona(path(3), lex(path(2), path(2)))")
    assert isinstance(product, ProductGraph)
    assert product.kind is ProductKind.CORONA
    assert product.fiber == generators.complete_graph(4)
    assert product.graph.order == 3 + 3 * 4


@pytest.mark.parametrize(
    "text",
    [
        "",
        "path",
        "path(",
        "path(4",
        "path(4))",
        "nothing(3)",
        "path(4, 5)",
        "path(2.5)",
        'path("4")',
        "lex(path(2), 3)",
        "path(4) $",
        "gcorona(path(2))",
    ],
)
def test_3(text):
    with pytest.raises(ExpressionError) as exception_info:
        parse(text)
    assert exception_info.value.code == "expression"


def test_4():
    with pytest.raises(ProductArityError):
        parse("gcorona(path(3), path(2), path(2))")
