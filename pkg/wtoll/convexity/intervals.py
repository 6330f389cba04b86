"""
Walk-based intervals on connected graphs.

Weakly toll, semi weakly toll and toll intervals are computed from the
components of the graph with the closed neighborhoods of both endpoints removed;
monophonic intervals enumerate induced paths and geodesic intervals compare
breadth-first distances.

::

    >>> from wtoll.graphs import generators
    >>> from wtoll.convexity.intervals import IntervalKind, interval
    >>> star = generators.star_graph(3)
    >>> print(interval(star, 1, 2, IntervalKind.WEAKLY_TOLL))
    0 1 2 3
    >>> print(interval(star, 1, 2, IntervalKind.TOLL))
    0 1 2

::

    >>> cycle = generators.cycle_graph(5)
    >>> for kind in IntervalKind:
    ...     print(kind.value, interval(cycle, 0, 2, kind))
    ...
    wt 0 1 2 3 4
    swt 0 1 2 3 4
    toll 0 1 2 3 4
    mono 0 1 2 3 4
    geo 0 1 2

"""
import enum
import itertools
import logging
from typing import Callable, Dict, Iterable, List, Union

from ..graphs.bases import Graph, VertexSet, iterate_bits

logger = logging.getLogger("wtoll.convexity")


class IntervalKind(enum.Enum):
    WEAKLY_TOLL = "wt"
    SEMI_WEAKLY_TOLL = "swt"
    TOLL = "toll"
    MONOPHONIC = "mono"
    GEODESIC = "geo"

    @property
    def is_ordered(self) -> bool:
        return self is IntervalKind.SEMI_WEAKLY_TOLL


def _prepare(graph: Graph, u: int, v: int) -> None:
    graph.check_vertex(u, v)
    graph.require_connected()


def _touches(graph: Graph, vertex: int, components: List[int]) -> int:
    """
    Bitmask over component indices of the components adjacent to ``vertex``.
    """
    row = graph.adjacency[vertex]
    touched = 0
    for index, component in enumerate(components):
        if row & component:
            touched |= 1 << index
    return touched


def _union(components: List[int], indices: int) -> int:
    mask = 0
    for index in iterate_bits(indices):
        mask |= components[index]
    return mask


def _weakly_toll_mask(graph: Graph, u: int, v: int) -> int:
    adjacency = graph.adjacency
    if u == v:
        return 1 << u
    if adjacency[u] >> v & 1:
        return 1 << u | 1 << v
    around_u, around_v = adjacency[u], adjacency[v]
    closed = around_u | around_v | 1 << u | 1 << v
    components = graph.component_masks(graph.full_mask & ~closed)
    touched = {
        hub: _touches(graph, hub, components)
        for hub in iterate_bits(around_u | around_v)
    }
    result = 1 << u | 1 << v
    for a in iterate_bits(around_u):
        for b in iterate_bits(around_v):
            # a hub adjacent to both endpoints has to serve as both hubs
            if a != b and (around_v >> a & 1 or around_u >> b & 1):
                continue
            if a == b or adjacency[a] >> b & 1 or touched[a] & touched[b]:
                result |= 1 << a | 1 << b
                result |= _union(components, touched[a] | touched[b])
    return result


def _semi_weakly_toll_mask(graph: Graph, u: int, v: int) -> int:
    if u == v:
        return 1 << u
    around_u = graph.adjacency[u]
    result = 1 << u
    for a in iterate_bits(around_u):
        allowed = graph.full_mask & ~(around_u | 1 << u) | 1 << a
        for component in graph.component_masks(allowed):
            if component >> a & 1 and component >> v & 1:
                result |= component
    return result


def _toll_mask(graph: Graph, u: int, v: int) -> int:
    adjacency = graph.adjacency
    if u == v:
        return 1 << u
    if adjacency[u] >> v & 1:
        return 1 << u | 1 << v
    around_u, around_v = adjacency[u], adjacency[v]
    closed = around_u | around_v | 1 << u | 1 << v
    only_u, only_v = around_u & ~around_v, around_v & ~around_u
    result = 1 << u | 1 << v | (around_u & around_v)
    for a in iterate_bits(only_u):
        if adjacency[a] & only_v:
            result |= 1 << a | (adjacency[a] & only_v)
    for component in graph.component_masks(graph.full_mask & ~closed):
        entries_u = [a for a in iterate_bits(only_u) if adjacency[a] & component]
        entries_v = [b for b in iterate_bits(only_v) if adjacency[b] & component]
        if entries_u and entries_v:
            result |= component
            for entry in entries_u + entries_v:
                result |= 1 << entry
    return result


def _monophonic_mask(graph: Graph, u: int, v: int) -> int:
    adjacency = graph.adjacency
    if u == v:
        return 1 << u
    result = 0
    # path mask, closed neighborhoods of all but the last vertex, last vertex
    stack = [(1 << u, 0, u)]
    while stack:
        path, blocked, last = stack.pop()
        if last == v:
            result |= path
            continue
        if blocked >> v & 1:
            continue
        if adjacency[last] >> v & 1:
            # any other step would put v into the blocked set
            result |= path | 1 << v
            continue
        next_blocked = blocked | adjacency[last] | 1 << last
        for vertex in iterate_bits(adjacency[last] & ~blocked & ~path):
            stack.append((path | 1 << vertex, next_blocked, vertex))
    return result


def _geodesic_mask(graph: Graph, u: int, v: int) -> int:
    from_u, from_v = graph.distances(u), graph.distances(v)
    total = from_u[v]
    return sum(
        1 << x
        for x in range(graph.order)
        if from_u[x] is not None
        and from_v[x] is not None
        and from_u[x] + from_v[x] == total
    )


ENGINES: Dict[IntervalKind, Callable[[Graph, int, int], int]] = {
    IntervalKind.WEAKLY_TOLL: _weakly_toll_mask,
    IntervalKind.SEMI_WEAKLY_TOLL: _semi_weakly_toll_mask,
    IntervalKind.TOLL: _toll_mask,
    IntervalKind.MONOPHONIC: _monophonic_mask,
    IntervalKind.GEODESIC: _geodesic_mask,
}


def interval_mask(graph: Graph, u: int, v: int, kind: IntervalKind) -> int:
    return ENGINES[kind](graph, u, v)


def interval(graph: Graph, u: int, v: int, kind: IntervalKind) -> VertexSet:
    _prepare(graph, u, v)
    return VertexSet(graph.order, interval_mask(graph, u, v, kind))


def weakly_toll_interval(graph: Graph, u: int, v: int) -> VertexSet:
    """
    All vertices on some weakly toll walk between ``u`` and ``v``.

    ::

        >>> from wtoll.graphs import generators
        >>> print(weakly_toll_interval(generators.path_graph(4), 0, 3))
        0 1 2 3
        >>> print(weakly_toll_interval(generators.path_graph(4), 1, 2))
        1 2

    """
    return interval(graph, u, v, IntervalKind.WEAKLY_TOLL)


def semi_weakly_toll_interval(graph: Graph, u: int, v: int) -> VertexSet:
    """
    All vertices on some walk from source ``u`` to target ``v`` whose only
    vertex adjacent to ``u`` is the second one.

    The target side is unrestricted, so for adjacent endpoints the walk may
    wander from ``v`` and come back:

    ::

        >>> from wtoll.graphs import generators
        >>> print(semi_weakly_toll_interval(generators.path_graph(3), 0, 1))
        0 1 2
        >>> print(semi_weakly_toll_interval(generators.path_graph(3), 1, 0))
        0 1

    """
    return interval(graph, u, v, IntervalKind.SEMI_WEAKLY_TOLL)


def toll_interval(graph: Graph, u: int, v: int) -> VertexSet:
    return interval(graph, u, v, IntervalKind.TOLL)


def monophonic_interval(graph: Graph, u: int, v: int) -> VertexSet:
    return interval(graph, u, v, IntervalKind.MONOPHONIC)


def geodesic_interval(graph: Graph, u: int, v: int) -> VertexSet:
    return interval(graph, u, v, IntervalKind.GEODESIC)


def _pairs(vertices: List[int], kind: IntervalKind) -> Iterable:
    if kind.is_ordered:
        return itertools.permutations(vertices, 2)
    return itertools.combinations(vertices, 2)


def interval_closure(
    graph: Graph, vertices: Union[VertexSet, Iterable[int]], kind: IntervalKind
) -> VertexSet:
    """
    Union of the intervals of all pairs of ``vertices``.

    ::

        >>> from wtoll.graphs import generators
        >>> tree = generators.star_graph(3)
        >>> print(interval_closure(tree, [1, 3], IntervalKind.WEAKLY_TOLL))
        0 1 2 3
        >>> print(interval_closure(tree, [1, 3], IntervalKind.TOLL))
        0 1 3

    """
    if not isinstance(vertices, VertexSet):
        vertices = VertexSet.from_vertices(graph.order, vertices)
    graph.require_connected()
    result = vertices.mask
    for u, v in _pairs(list(vertices), kind):
        result |= interval_mask(graph, u, v, kind)
    return VertexSet(graph.order, result)


def is_weakly_toll_set(graph: Graph, vertices: Union[VertexSet, Iterable[int]]) -> bool:
    closure = interval_closure(graph, vertices, IntervalKind.WEAKLY_TOLL)
    return closure.mask == graph.full_mask


class IntervalTable:
    """
    Every pair interval of one graph, as bitmasks.

    ::

        >>> from wtoll.graphs import generators
        >>> table = IntervalTable(generators.path_graph(4), IntervalKind.GEODESIC)
        >>> print(table.interval(0, 2))
        0 1 2
        >>> print(table.closure(VertexSet.from_vertices(4, [0, 3])))
        0 1 2 3

    """

    ### INITIALIZER ###

    def __init__(self, graph: Graph, kind: IntervalKind):
        graph.require_connected()
        self.graph = graph
        self.kind = kind
        order = graph.order
        self.rows: List[List[int]] = [[0] * order for _ in range(order)]
        for u in range(order):
            self.rows[u][u] = 1 << u
        for u, v in _pairs(list(range(order)), kind):
            mask = interval_mask(graph, u, v, kind)
            self.rows[u][v] = mask
            if not kind.is_ordered:
                self.rows[v][u] = mask
        logger.debug(
            "interval table for %s on %d vertices", kind.value, graph.order
        )

    ### PUBLIC METHODS ###

    def closure(self, vertices: VertexSet) -> VertexSet:
        return VertexSet(self.graph.order, self.closure_mask(vertices.mask))

    def closure_mask(self, mask: int) -> int:
        members = list(iterate_bits(mask))
        result = mask
        for u, v in _pairs(members, self.kind):
            result |= self.rows[u][v]
        return result

    def hull_mask(self, mask: int) -> int:
        while True:
            closure = self.closure_mask(mask)
            if closure == mask:
                return mask
            mask = closure

    def interval(self, u: int, v: int) -> VertexSet:
        self.graph.check_vertex(u, v)
        return VertexSet(self.graph.order, self.rows[u][v])
