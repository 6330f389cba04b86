"""
Plain-text graph formats: edge lists and graph6 lists.

An edge list starts with a line ``n m`` followed by ``m`` lines ``u v`` of
0-based vertex ids.

::

    >>> from wtoll.graphs import generators
    >>> from wtoll.graphs.io import format_edge_list, parse_edge_list
    >>> text = format_edge_list(generators.path_graph(3))
    >>> print(text)
    3 2
    0 1
    1 2
    >>> parse_edge_list(text)
    Graph(order=3, edges=[(0, 1), (1, 2)])

"""
import logging
import pathlib
from typing import Iterable, List, Union

from ..exceptions import EdgeListError, Graph6Error
from .bases import Graph
from .graph6 import encode_graph6, parse_graph6
from .parser import parse
from .products import ProductGraph

logger = logging.getLogger("wtoll.graphs")


def _is_edge_list(text: str) -> bool:
    lines = text.strip().splitlines()
    return bool(lines) and len(lines[0].split()) == 2


def format_edge_list(graph: Graph) -> str:
    edges = graph.edges()
    lines = [f"{graph.order} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines)


def parse_edge_list(text: str) -> Graph:
    lines = [line.split() for line in text.strip().splitlines() if line.strip()]
    if not lines or len(lines[0]) != 2:
        raise EdgeListError("edge list must start with a line 'n m'")
    try:
        order, size = int(lines[0][0]), int(lines[0][1])
        edges = [(int(u), int(v)) for u, v in lines[1:]]
    except ValueError as exception:
        raise EdgeListError(f"malformed edge list: {exception}")
    if len(edges) != size:
        raise EdgeListError(f"header announces {size} edges, found {len(edges)}")
    return Graph.from_edge_list(order, edges)


def read_graph(path: Union[str, pathlib.Path]) -> Graph:
    text = pathlib.Path(path).read_text()
    if _is_edge_list(text):
        return parse_edge_list(text)
    lines = text.strip().splitlines()
    if not lines:
        raise Graph6Error(f"{path} is empty")
    return parse_graph6(lines[0])


def read_graph6_list(path: Union[str, pathlib.Path]) -> List[Graph]:
    graphs = [
        parse_graph6(line)
        for line in pathlib.Path(path).read_text().splitlines()
        if line.strip()
    ]
    logger.info("read %d graphs from %s", len(graphs), path)
    return graphs


def write_graph6_list(path: Union[str, pathlib.Path], graphs: Iterable[Graph]) -> None:
    lines = [encode_graph6(graph) for graph in graphs]
    pathlib.Path(path).write_text("".join(line + "\n" for line in lines))


def load_graph(source: str) -> Union[Graph, ProductGraph]:
    """
    Reads ``source`` as a graph expression when it contains a parenthesis, as a
    file when such a path exists, and as a graph6 string otherwise.

    ::

        >>> load_graph("star(3)")
        Graph(order=4, edges=[(0, 1), (0, 2), (0, 3)])
        >>> load_graph("Ch")
        Graph(order=4, edges=[(0, 1), (1, 2), (2, 3)])

    """
    if "(" in source:
        return parse(source)
    path = pathlib.Path(source)
    if path.is_file():
        return read_graph(path)
    return parse_graph6(source.strip())
