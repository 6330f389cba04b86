"""
Convex sets, hulls, interval and hull numbers, and maximum intervals.

::

    >>> from wtoll.graphs import generators
    >>> from wtoll.convexity.hulls import hull, wtn, wth
    >>> from wtoll.convexity.intervals import IntervalKind
    >>> bridge = generators.two_clique_bridge(3)
    >>> print(hull(bridge, [1, 5], IntervalKind.WEAKLY_TOLL))
    0 1 3 4 5
    >>> wtn(bridge)
    SearchResult(number=4, witness=VertexSet(order=7, vertices=[1, 2, 5, 6]))
    >>> wth(bridge).number
    4

"""
import dataclasses
import itertools
import logging
from typing import Callable, Iterable, List, NamedTuple, Optional, Tuple, Union

from ..exceptions import EmptyVertexSetError, VertexRangeError
from ..graphs.bases import Graph, VertexSet, iterate_bits
from .intervals import IntervalKind, IntervalTable, interval_mask

logger = logging.getLogger("wtoll.convexity")


class SearchResult(NamedTuple):
    number: int
    witness: VertexSet


@dataclasses.dataclass(frozen=True)
class IntervalReport:
    """
    A pair interval W together with the vertices it misses: X = V \\ W,
    X_u = N[u] \\ W and X_v = N[v] \\ W.
    """

    pair: Tuple[int, int]
    interval: VertexSet
    x: VertexSet
    x_u: VertexSet
    x_v: VertexSet
    is_maximum: bool = False


def _as_vertex_set(graph: Graph, vertices) -> VertexSet:
    if not isinstance(vertices, VertexSet):
        return VertexSet.from_vertices(graph.order, vertices)
    if vertices.order != graph.order:
        raise VertexRangeError(
            f"vertex set of order {vertices.order} "
            f"used with a graph of order {graph.order}"
        )
    return vertices


def is_convex(
    graph: Graph, vertices: Union[VertexSet, Iterable[int]], kind: IntervalKind
) -> bool:
    """
    ::

        >>> from wtoll.graphs import generators
        >>> star = generators.star_graph(3)
        >>> is_convex(star, [0, 1, 2], IntervalKind.TOLL)
        True
        >>> is_convex(star, [0, 1, 2], IntervalKind.WEAKLY_TOLL)
        False

    """
    vertices = _as_vertex_set(graph, vertices)
    graph.require_connected()
    members = list(vertices)
    pairs = (
        itertools.permutations(members, 2)
        if kind.is_ordered
        else itertools.combinations(members, 2)
    )
    return all(interval_mask(graph, u, v, kind) & ~vertices.mask == 0 for u, v in pairs)


def hull(
    graph: Graph,
    vertices: Union[VertexSet, Iterable[int]],
    kind: IntervalKind,
    table: Optional[IntervalTable] = None,
) -> VertexSet:
    vertices = _as_vertex_set(graph, vertices)
    if not vertices.mask:
        raise EmptyVertexSetError("the hull of the empty set is undefined")
    if table is None:
        table = IntervalTable(graph, kind)
    mask, iterations = vertices.mask, 0
    while True:
        closure = table.closure_mask(mask)
        if closure == mask:
            break
        mask = closure
        iterations += 1
    logger.debug("hull of %s reached after %d closures", vertices, iterations)
    return VertexSet(graph.order, mask)


def _search(
    graph: Graph,
    generates: Callable[[int], bool],
    certificate: Optional[VertexSet],
    label: str,
) -> SearchResult:
    graph.require_connected()
    graph.require_nontrivial()
    limit = graph.order
    if certificate is not None and generates(certificate.mask):
        limit = len(certificate) - 1
    elif certificate is not None:
        logger.warning("rejected %s certificate %s", label, certificate)
        certificate = None
    for size in range(2, limit + 1):
        logger.debug("%s search over sets of size %d", label, size)
        for candidate in itertools.combinations(range(graph.order), size):
            mask = 0
            for vertex in candidate:
                mask |= 1 << vertex
            if generates(mask):
                return SearchResult(size, VertexSet(graph.order, mask))
    if certificate is None:
        raise AssertionError("the whole vertex set always generates")
    return SearchResult(len(certificate), certificate)


def interval_number(
    graph: Graph,
    kind: IntervalKind = IntervalKind.WEAKLY_TOLL,
    certificate: Optional[VertexSet] = None,
    table: Optional[IntervalTable] = None,
) -> SearchResult:
    """
    Smallest set whose pairwise intervals cover the graph.

    Candidates are tried by increasing size in lexicographic order. A verified
    ``certificate`` bounds the search from above and is returned when nothing
    smaller generates.

    ::

        >>> from wtoll.graphs import generators
        >>> interval_number(generators.cycle_graph(6), IntervalKind.GEODESIC)
        SearchResult(number=2, witness=VertexSet(order=6, vertices=[0, 3]))
        >>> interval_number(generators.complete_graph(4)).number
        4

    """
    if table is None:
        table = IntervalTable(graph, kind)
    full = graph.full_mask
    return _search(
        graph,
        lambda mask: table.closure_mask(mask) == full,
        certificate,
        f"{kind.value} interval number",
    )


def hull_number(
    graph: Graph,
    kind: IntervalKind = IntervalKind.WEAKLY_TOLL,
    certificate: Optional[VertexSet] = None,
    table: Optional[IntervalTable] = None,
) -> SearchResult:
    if table is None:
        table = IntervalTable(graph, kind)
    full = graph.full_mask
    return _search(
        graph,
        lambda mask: table.hull_mask(mask) == full,
        certificate,
        f"{kind.value} hull number",
    )


def wtn(graph: Graph, certificate: Optional[VertexSet] = None) -> SearchResult:
    return interval_number(graph, IntervalKind.WEAKLY_TOLL, certificate)


def wth(graph: Graph, certificate: Optional[VertexSet] = None) -> SearchResult:
    return hull_number(graph, IntervalKind.WEAKLY_TOLL, certificate)


def interval_report(
    graph: Graph, u: int, v: int, table: Optional[IntervalTable] = None
) -> IntervalReport:
    """
    ::

        >>> from wtoll.graphs import generators
        >>> report = interval_report(generators.two_clique_bridge(3), 1, 5)
        >>> print(report.x, "|", report.x_u, "|", report.x_v)
        2 6 | 2 | 6

    """
    graph.check_vertex(u, v)
    if table is None:
        mask = interval_mask(graph.require_connected(), u, v, IntervalKind.WEAKLY_TOLL)
    else:
        mask = table.rows[u][v]
    order = graph.order
    return IntervalReport(
        pair=(u, v),
        interval=VertexSet(order, mask),
        x=VertexSet(order, graph.full_mask & ~mask),
        x_u=VertexSet(order, (graph.adjacency[u] | 1 << u) & ~mask),
        x_v=VertexSet(order, (graph.adjacency[v] | 1 << v) & ~mask),
    )


def maximum_interval_pairs(graph: Graph) -> List[IntervalReport]:
    """
    Every pair ``u < v`` whose weakly toll interval has maximum size.

    ::

        >>> from wtoll.graphs import generators
        >>> for report in maximum_interval_pairs(generators.star_graph(3)):
        ...     report.pair, len(report.interval)
        ...
        ((1, 2), 4)
        ((1, 3), 4)
        ((2, 3), 4)

    """
    graph.require_connected().require_noncomplete()
    table = IntervalTable(graph, IntervalKind.WEAKLY_TOLL)
    reports = [
        interval_report(graph, u, v, table)
        for u, v in itertools.combinations(range(graph.order), 2)
    ]
    largest = max(len(report.interval) for report in reports)
    return [
        dataclasses.replace(report, is_maximum=True)
        for report in reports
        if len(report.interval) == largest
    ]


def check_neighbor_extension(graph: Graph) -> bool:
    """
    A vertex outside N[u] and N[v] with a neighbor in the interior of the
    interval of a non-adjacent pair ``u, v`` belongs to that interval.
    """
    graph.require_connected()
    adjacency = graph.adjacency
    for u, v in itertools.combinations(range(graph.order), 2):
        if adjacency[u] >> v & 1:
            continue
        mask = interval_mask(graph, u, v, IntervalKind.WEAKLY_TOLL)
        interior = mask & ~(1 << u | 1 << v)
        outside = graph.full_mask & ~(adjacency[u] | adjacency[v] | 1 << u | 1 << v)
        for x in iterate_bits(outside & ~mask):
            if adjacency[x] & interior:
                logger.warning("neighbor extension fails at %d for (%d, %d)", x, u, v)
                return False
    return True


def check_maximum_decomposition(graph: Graph) -> bool:
    """
    At a maximum pair with non-adjacent endpoints the missed vertices split
    disjointly into X_u and X_v.
    """
    for report in maximum_interval_pairs(graph):
        u, v = report.pair
        if graph.adjacency[u] >> v & 1:
            continue
        if report.x != report.x_u | report.x_v:
            return False
        if not report.x_u.isdisjoint(report.x_v):
            return False
    return True


def check_wtn_characterization(graph: Graph) -> bool:
    """
    wtn > 2 exactly when every maximum non-adjacent pair misses part of
    N[u] or N[v].
    """
    reports = maximum_interval_pairs(graph)
    for report in reports:
        u, v = report.pair
        # adjacent pairs span two vertices; a non-adjacent pair spans three
        if graph.adjacency[u] >> v & 1:
            logger.warning("maximum pair %s is adjacent", report.pair)
            return False
    all_deficient = all(len(report.x_u | report.x_v) > 0 for report in reports)
    return (wtn(graph).number > 2) == all_deficient
