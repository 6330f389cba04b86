"""
Graph families used throughout the verification corpus.

::

    >>> from wtoll.graphs import generators
    >>> generators.star_graph(3)
    Graph(order=4, edges=[(0, 1), (0, 2), (0, 3)])
    >>> graph = generators.two_clique_bridge(3)
    >>> graph.order, graph.size
    (7, 8)
    >>> graph.names
    ('a_1', 'a_2', 'a_3', 'm', 'b_1', 'b_2', 'b_3')

"""
import itertools
import random

import networkx as nx

from ..exceptions import GraphError
from .bases import Graph


def _require_order(k: int, minimum: int = 1) -> None:
    if not isinstance(k, int) or k < minimum:
        raise GraphError(f"graph size must be an integer >= {minimum}, got {k!r}")


def path_graph(k: int) -> Graph:
    _require_order(k)
    return Graph.from_edge_list(k, [(i, i + 1) for i in range(k - 1)])


def cycle_graph(k: int) -> Graph:
    _require_order(k, 3)
    return Graph.from_edge_list(k, [(i, (i + 1) % k) for i in range(k)])


def complete_graph(k: int) -> Graph:
    _require_order(k)
    return Graph.from_edge_list(k, itertools.combinations(range(k), 2))


def star_graph(k: int) -> Graph:
    """
    K_{1,k} with the center at vertex 0.
    """
    _require_order(k)
    return Graph.from_edge_list(k + 1, [(0, i) for i in range(1, k + 1)])


def random_tree(k: int, seed: int) -> Graph:
    _require_order(k)
    return Graph.from_networkx(
        nx.random_labeled_tree(k, seed=seed), nodes=list(range(k))
    )


def random_connected_graph(k: int, p: float, seed: int) -> Graph:
    """
    Draws G(k, p) once, then joins its components by seeded random edges.

    ::

        >>> graph = random_connected_graph(8, 0.1, seed=3)
        >>> graph.is_connected()
        True
        >>> graph == random_connected_graph(8, 0.1, seed=3)
        True

    """
    _require_order(k)
    if not 0 <= p <= 1:
        raise GraphError(f"edge probability must lie in [0, 1], got {p!r}")
    rng = random.Random(seed)
    graph = nx.gnp_random_graph(k, p, seed=rng.randrange(2 ** 32))
    components = [sorted(component) for component in nx.connected_components(graph)]
    components.sort()
    for left, right in zip(components, components[1:]):
        graph.add_edge(rng.choice(left), rng.choice(right))
    return Graph.from_networkx(graph, nodes=list(range(k)))


def two_clique_bridge(k: int) -> Graph:
    """
    Two copies of K_k whose first vertices are joined by a path of length two.

    Vertices are ``a_1 .. a_k`` (ids ``0 .. k-1``), the middle vertex ``m``
    (id ``k``) and ``b_1 .. b_k`` (ids ``k+1 .. 2k``).
    """
    _require_order(k)
    left = list(range(k))
    right = list(range(k + 1, 2 * k + 1))
    edges = list(itertools.combinations(left, 2))
    edges.extend(itertools.combinations(right, 2))
    edges.extend([(left[0], k), (k, right[0])])
    names = [f"a_{i + 1}" for i in range(k)] + ["m"]
    names += [f"b_{i + 1}" for i in range(k)]
    return Graph.from_edge_list(2 * k + 1, edges, names)
