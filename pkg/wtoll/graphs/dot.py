"""
Graphviz export.

::

    >>> from wtoll.graphs import generators, products
    >>> from wtoll.graphs.dot import to_dot
    >>> print(to_dot(generators.path_graph(2)))
    graph G {
        "0" [label="0"];
        "1" [label="1"];
        "0" -- "1";
    }

::

    >>> product = products.cartesian(
    ...     generators.path_graph(2), generators.path_graph(1)
    ... )
    >>> print(to_dot(product, name="P"))
    graph P {
        "0" [label="(0,0)"];
        "1" [label="(1,0)"];
        "0" -- "1";
    }

"""
from typing import Union

from .bases import Graph
from .products import ProductGraph


def to_dot(source: Union[Graph, ProductGraph], name: str = "G") -> str:
    if isinstance(source, ProductGraph):
        graph = source.graph
        labels = [str(label) for label in source.labels]
    else:
        graph = source
        labels = [graph.name(vertex) for vertex in range(graph.order)]
    lines = [f"graph {name} {{"]
    for vertex, label in enumerate(labels):
        lines.append(f'    "{vertex}" [label="{label}"];')
    for u, v in graph.edges():
        lines.append(f'    "{u}" -- "{v}";')
    lines.append("}")
    return "\n".join(lines)
