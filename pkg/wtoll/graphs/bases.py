"""
Immutable simple graphs over dense vertex ids.

Adjacency is stored as one integer bitmask per vertex; vertex sets are bitmasks
bound to the order of the graph they came from.

::

    >>> from wtoll.graphs import Graph
    >>> graph = Graph.from_edge_list(4, [(1, 0), (1, 2), (1, 3)])
    >>> graph
    Graph(order=4, edges=[(0, 1), (1, 2), (1, 3)])
    >>> print(graph.neighbors(1))
    0 2 3
    >>> graph.is_connected(), graph.is_complete()
    (True, False)

::

    >>> subgraph = graph.delete_vertices([1])
    >>> subgraph.graph
    Graph(order=3, edges=[])
    >>> subgraph.vertex_map
    (0, 2, 3)

"""
import dataclasses
import logging
from collections import deque
from typing import Dict, Iterable, Iterator, List, NamedTuple, Optional, Tuple, Union

import networkx as nx

from ..exceptions import (
    AsymmetricAdjacencyError,
    CompleteGraphError,
    DisconnectedGraphError,
    EmptyGraphError,
    SelfLoopError,
    TrivialGraphError,
    VertexRangeError,
)

logger = logging.getLogger("wtoll.graphs")


def iterate_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclasses.dataclass(frozen=True, repr=False)
class VertexSet:
    """
    A subset of the vertices ``0 .. order - 1`` of some graph.

    ::

        >>> from wtoll.graphs import VertexSet
        >>> left = VertexSet.from_vertices(5, [0, 2])
        >>> right = VertexSet.from_vertices(5, [2, 3])
        >>> print(left | right)
        0 2 3
        >>> print(left - right)
        0
        >>> len(left & right)
        1
        >>> left <= left | right
        True

    """

    order: int
    mask: int = 0

    ### SPECIAL METHODS ###

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.order:
            raise VertexRangeError(f"vertex set mask exceeds order {self.order}")

    def __and__(self, expr: "VertexSet") -> "VertexSet":
        return VertexSet(self.order, self.mask & self._coerce(expr))

    def __contains__(self, vertex) -> bool:
        return isinstance(vertex, int) and 0 <= vertex < self.order and bool(
            self.mask >> vertex & 1
        )

    def __iter__(self) -> Iterator[int]:
        return iterate_bits(self.mask)

    def __le__(self, expr: "VertexSet") -> bool:
        return self.mask & ~self._coerce(expr) == 0

    def __len__(self) -> int:
        return popcount(self.mask)

    def __or__(self, expr: "VertexSet") -> "VertexSet":
        return VertexSet(self.order, self.mask | self._coerce(expr))

    def __repr__(self) -> str:
        return f"{type(self).__name__}(order={self.order}, vertices={list(self)})"

    def __str__(self) -> str:
        return " ".join(str(vertex) for vertex in self)

    def __sub__(self, expr: "VertexSet") -> "VertexSet":
        return VertexSet(self.order, self.mask & ~self._coerce(expr))

    ### PRIVATE METHODS ###

    def _coerce(self, expr: "VertexSet") -> int:
        if not isinstance(expr, VertexSet):
            raise TypeError(f"expected a VertexSet, got {type(expr).__name__}")
        if expr.order != self.order:
            raise ValueError(f"order mismatch: {self.order} != {expr.order}")
        return expr.mask

    ### PUBLIC METHODS ###

    @classmethod
    def empty(cls, order: int) -> "VertexSet":
        return cls(order, 0)

    @classmethod
    def from_vertices(cls, order: int, vertices: Iterable[int]) -> "VertexSet":
        mask = 0
        for vertex in vertices:
            if not 0 <= vertex < order:
                raise VertexRangeError(
                    f"vertex {vertex} out of range for order {order}"
                )
            mask |= 1 << vertex
        return cls(order, mask)

    @classmethod
    def full(cls, order: int) -> "VertexSet":
        return cls(order, (1 << order) - 1)

    def complement(self) -> "VertexSet":
        return VertexSet(self.order, ((1 << self.order) - 1) & ~self.mask)

    def isdisjoint(self, expr: "VertexSet") -> bool:
        return not self.mask & self._coerce(expr)

    def to_list(self) -> List[int]:
        return list(self)


class Subgraph(NamedTuple):
    """
    An induced subgraph plus the original id of every new vertex.
    """

    graph: "Graph"
    vertex_map: Tuple[int, ...]

    @property
    def inverse_map(self) -> Dict[int, int]:
        return {old: new for new, old in enumerate(self.vertex_map)}

    def lift(self, vertices: Iterable[int]) -> List[int]:
        return [self.vertex_map[vertex] for vertex in vertices]


@dataclasses.dataclass(frozen=True, repr=False)
class Graph:
    """
    A finite simple undirected graph.
    """

    order: int
    adjacency: Tuple[int, ...]
    names: Optional[Tuple[str, ...]] = dataclasses.field(default=None, compare=False)

    ### SPECIAL METHODS ###

    def __post_init__(self):
        if self.order < 1:
            raise EmptyGraphError("a graph needs at least one vertex")
        if len(self.adjacency) != self.order:
            raise VertexRangeError(
                f"expected {self.order} adjacency rows, got {len(self.adjacency)}"
            )
        for vertex, row in enumerate(self.adjacency):
            if row < 0 or row >> self.order:
                raise VertexRangeError(
                    f"row {vertex} names a vertex out of range for order {self.order}"
                )
            if row >> vertex & 1:
                raise SelfLoopError(f"self-loop at vertex {vertex}")
            for neighbor in iterate_bits(row):
                if not self.adjacency[neighbor] >> vertex & 1:
                    raise AsymmetricAdjacencyError(
                        f"edge {vertex}-{neighbor} is missing from row {neighbor}"
                    )

    def __repr__(self) -> str:
        return f"{type(self).__name__}(order={self.order}, edges={self.edges()})"

    ### PUBLIC METHODS ###

    @classmethod
    def from_edge_list(
        cls,
        order: int,
        edges: Iterable[Tuple[int, int]],
        names: Optional[Iterable[str]] = None,
    ) -> "Graph":
        if order < 1:
            raise EmptyGraphError("a graph needs at least one vertex")
        adjacency = [0] * order
        for u, v in edges:
            for vertex in (u, v):
                if not 0 <= vertex < order:
                    raise VertexRangeError(
                        f"vertex {vertex} out of range for order {order}"
                    )
            if u == v:
                raise SelfLoopError(f"self-loop at vertex {u}")
            adjacency[u] |= 1 << v
            adjacency[v] |= 1 << u
        return cls(order, tuple(adjacency), tuple(names) if names is not None else None)

    @classmethod
    def from_networkx(cls, graph: nx.Graph, nodes: Optional[List] = None) -> "Graph":
        if nodes is None:
            nodes = list(graph.nodes)
        indices = {node: index for index, node in enumerate(nodes)}
        if len(indices) != graph.number_of_nodes():
            raise VertexRangeError("node ordering does not cover the graph")
        return cls.from_edge_list(
            len(nodes), [(indices[u], indices[v]) for u, v in graph.edges]
        )

    def check_vertex(self, *vertices: int) -> None:
        for vertex in vertices:
            if not isinstance(vertex, int) or not 0 <= vertex < self.order:
                raise VertexRangeError(
                    f"vertex {vertex} out of range for order {self.order}"
                )

    def closed_neighborhood(self, vertex: int) -> VertexSet:
        self.check_vertex(vertex)
        return VertexSet(self.order, self.adjacency[vertex] | 1 << vertex)

    def component_masks(self, allowed: Optional[int] = None) -> List[int]:
        """
        Connected components of the subgraph induced by ``allowed``, as
        bitmasks ordered by their lowest vertex.
        """
        if allowed is None:
            allowed = self.full_mask
        components = []
        remaining = allowed
        while remaining:
            component = frontier = remaining & -remaining
            while frontier:
                reached = 0
                for vertex in iterate_bits(frontier):
                    reached |= self.adjacency[vertex]
                frontier = reached & remaining & ~component
                component |= frontier
            components.append(component)
            remaining &= ~component
        return components

    def connected_components(self) -> List[VertexSet]:
        return [VertexSet(self.order, mask) for mask in self.component_masks()]

    def degree(self, vertex: int) -> int:
        self.check_vertex(vertex)
        return popcount(self.adjacency[vertex])

    def delete_vertices(self, vertices: Union[VertexSet, Iterable[int]]) -> Subgraph:
        if not isinstance(vertices, VertexSet):
            vertices = VertexSet.from_vertices(self.order, vertices)
        return self.induced_subgraph(vertices.complement())

    def distances(self, source: int) -> List[Optional[int]]:
        self.check_vertex(source)
        distances: List[Optional[int]] = [None] * self.order
        distances[source] = 0
        queue = deque([source])
        while queue:
            vertex = queue.popleft()
            for neighbor in iterate_bits(self.adjacency[vertex]):
                if distances[neighbor] is None:
                    distances[neighbor] = distances[vertex] + 1
                    queue.append(neighbor)
        return distances

    def edges(self) -> List[Tuple[int, int]]:
        return [
            (u, v)
            for u in range(self.order)
            for v in iterate_bits(self.adjacency[u])
            if u < v
        ]

    def has_edge(self, u: int, v: int) -> bool:
        self.check_vertex(u, v)
        return bool(self.adjacency[u] >> v & 1)

    def induced_subgraph(self, vertices: Union[VertexSet, Iterable[int]]) -> Subgraph:
        if not isinstance(vertices, VertexSet):
            vertices = VertexSet.from_vertices(self.order, vertices)
        vertex_map = tuple(vertices)
        new_ids = {old: new for new, old in enumerate(vertex_map)}
        edges = [
            (new_ids[u], new_ids[v])
            for u, v in self.edges()
            if u in new_ids and v in new_ids
        ]
        names = None
        if self.names is not None:
            names = [self.names[old] for old in vertex_map]
        logger.debug(
            "induced subgraph on %d of %d vertices", len(vertex_map), self.order
        )
        return Subgraph(Graph.from_edge_list(len(vertex_map), edges, names), vertex_map)

    def is_complete(self) -> bool:
        full_mask = self.full_mask
        return all(
            row == full_mask & ~(1 << vertex)
            for vertex, row in enumerate(self.adjacency)
        )

    def is_connected(self) -> bool:
        return len(self.component_masks()) == 1

    def name(self, vertex: int) -> str:
        self.check_vertex(vertex)
        if self.names is None:
            return str(vertex)
        return self.names[vertex]

    def neighbor_mask(self, vertex: int) -> int:
        return self.adjacency[vertex]

    def neighbors(self, vertex: int) -> VertexSet:
        self.check_vertex(vertex)
        return VertexSet(self.order, self.adjacency[vertex])

    def require_connected(self) -> "Graph":
        if not self.is_connected():
            raise DisconnectedGraphError(
                f"graph with {self.order} vertices is not connected"
            )
        return self

    def require_noncomplete(self) -> "Graph":
        if self.is_complete():
            raise CompleteGraphError(f"graph with {self.order} vertices is complete")
        return self

    def require_nontrivial(self) -> "Graph":
        if self.order < 2:
            raise TrivialGraphError("graph needs at least two vertices")
        return self

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.order))
        graph.add_edges_from(self.edges())
        return graph

    def vertex_set(self, vertices: Iterable[int] = ()) -> VertexSet:
        return VertexSet.from_vertices(self.order, vertices)

    ### PUBLIC PROPERTIES ###

    @property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    @property
    def size(self) -> int:
        return sum(popcount(row) for row in self.adjacency) // 2

    @property
    def vertices(self) -> VertexSet:
        return VertexSet.full(self.order)
