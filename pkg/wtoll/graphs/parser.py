# type: ignore
# flake8: noqa
"""
Parses graph expressions into graphs and product graphs.

::

    >>> from wtoll.graphs.parser import parse

::

    >>> parse("path(4)")
    Graph(order=4, edges=[(0, 1), (1, 2), (2, 3)])

::

    >>> parse('g6("Dhc")')
    Graph(order=5, edges=[(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)])

::

    >>> product = parse("lex(path(3), bridge(3))")
    >>> product
    ProductGraph(kind=lex, order=21, size=...)
    >>> str(product.labels[-1])
    '(2,6)'

::

    >>> parse("gcorona(path(2), complete(1), path(3))")
    ProductGraph(kind=gcorona, order=6, size=7)

::

    >>> parse("random(7, 0.4, 2)").is_connected()
    True

"""
from typing import Any, Callable, Dict, List, Tuple, Union

from sly import Lexer, Parser

from ..exceptions import ExpressionError
from . import generators, products
from .bases import Graph
from .graph6 import parse_graph6
from .products import ProductGraph


def parse(text: str) -> Union[Graph, ProductGraph]:
    result = GraphExpressionParser().parse(GraphExpressionLexer().tokenize(text))
    if result is None:
        raise ExpressionError(f"empty graph expression {text!r}")
    return result


def _as_graph(value) -> Graph:
    if isinstance(value, ProductGraph):
        return value.graph
    if isinstance(value, Graph):
        return value
    raise ExpressionError(f"expected a graph, got {value!r}")


def _as_integer(value) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise ExpressionError(f"expected an integer, got {value!r}")
    return value


def _as_number(value) -> float:
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return float(value)
    raise ExpressionError(f"expected a number, got {value!r}")


def _as_string(value) -> str:
    if not isinstance(value, str):
        raise ExpressionError(f"expected a quoted string, got {value!r}")
    return value


COERCIONS: Dict[str, Callable[[Any], Any]] = {
    "f": _as_number,
    "g": _as_graph,
    "i": _as_integer,
    "s": _as_string,
}

FUNCTIONS: Dict[str, Tuple[Callable, str]] = {
    "bridge": (generators.two_clique_bridge, "i"),
    "cart": (products.cartesian, "gg"),
    "complete": (generators.complete_graph, "i"),
    "corona": (products.corona, "gg"),
    "cycle": (generators.cycle_graph, "i"),
    "g6": (parse_graph6, "s"),
    "lex": (products.lexicographic, "gg"),
    "path": (generators.path_graph, "i"),
    "random": (generators.random_connected_graph, "ifi"),
    "star": (generators.star_graph, "i"),
    "strong": (products.strong, "gg"),
    "tree": (generators.random_tree, "ii"),
}


def apply(name: str, arguments: List) -> Union[Graph, ProductGraph]:
    if name == "gcorona":
        if len(arguments) < 2:
            raise ExpressionError("gcorona takes a base graph and one graph per vertex")
        graphs = [_as_graph(argument) for argument in arguments]
        return products.generalized_corona(graphs[0], graphs[1:])
    if name not in FUNCTIONS:
        raise ExpressionError(f"unknown graph function {name!r}")
    function, signature = FUNCTIONS[name]
    if len(arguments) != len(signature):
        raise ExpressionError(
            f"{name} takes {len(signature)} arguments, got {len(arguments)}"
        )
    return function(
        *(COERCIONS[code](argument) for code, argument in zip(signature, arguments))
    )


class GraphExpressionLexer(Lexer):
    ignore = " \t"
    ignore_newline = r"\n+"

    COMMA = ","
    LPAREN = r"\("
    NAME = "[a-z][a-z0-9_]*"
    RPAREN = r"\)"

    tokens = {"COMMA", "FLOAT", "LPAREN", "NAME", "NUMBER", "RPAREN", "STRING"}

    @_(r"[0-9]*\.[0-9]+")
    def FLOAT(self, t):
        t.value = float(t.value)
        return t

    @_("[0-9]+")
    def NUMBER(self, t):
        t.value = int(t.value)
        return t

    @_(r'"[^"]*"')
    def STRING(self, t):
        t.value = t.value[1:-1]
        return t

    def error(self, t):
        raise ExpressionError(f"illegal character {t.value[0]!r} at index {self.index}")


class GraphExpressionParser(Parser):
    start = "expression"
    tokens = GraphExpressionLexer.tokens

    @_("NAME LPAREN arguments RPAREN")
    def expression(self, p):
        return apply(p.NAME, p.arguments)

    @_("argument", "arguments COMMA argument")
    def arguments(self, p):
        if len(p) == 1:
            return [p[0]]
        p[0].append(p[2])
        return p[0]

    @_("expression", "FLOAT", "NUMBER", "STRING")
    def argument(self, p):
        return p[0]

    def error(self, token):
        if token is None:
            raise ExpressionError("unexpected end of graph expression")
        raise ExpressionError(f"unexpected {token.value!r} at index {token.index}")
