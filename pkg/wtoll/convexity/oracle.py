"""
Brute-force reference intervals, read straight off the walk definitions.

A walk is explored one step at a time over states ``(current, first, last)``
where ``first`` is the second vertex of the walk and ``last`` the single vertex
adjacent to the target that the walk has left so far. These two vertices fix
every later constraint, so a vertex lies on an admissible walk of at most
``budget`` steps exactly when some state at that vertex has a forward distance
from the start plus a backward distance to acceptance within the budget.

Nothing here is shared with the component-based engines.

::

    >>> from wtoll.graphs import generators
    >>> from wtoll.convexity.intervals import IntervalKind
    >>> from wtoll.convexity.oracle import oracle_interval
    >>> star = generators.star_graph(3)
    >>> print(oracle_interval(star, 1, 2, IntervalKind.WEAKLY_TOLL))
    0 1 2 3
    >>> print(oracle_interval(star, 1, 2, IntervalKind.TOLL))
    0 1 2

"""
import dataclasses
import itertools
import logging
from collections import deque
from typing import Dict, List, NamedTuple, Optional, Set, Tuple

from ..exceptions import GraphError
from ..graphs.bases import Graph, VertexSet
from .intervals import IntervalKind

logger = logging.getLogger("wtoll.convexity.oracle")

WALK_KINDS = (
    IntervalKind.WEAKLY_TOLL,
    IntervalKind.SEMI_WEAKLY_TOLL,
    IntervalKind.TOLL,
)


@dataclasses.dataclass(frozen=True)
class WalkBudget:
    max_len: int

    def __post_init__(self):
        if self.max_len < 1:
            raise ValueError(f"walk budget must be at least 1, got {self.max_len}")

    @classmethod
    def default(cls, graph: Graph) -> "WalkBudget":
        return cls(2 * graph.order + 2)


class WalkState(NamedTuple):
    current: int
    first: Optional[int]
    last: Optional[int]


def _neighbor_lists(graph: Graph) -> List[Set[int]]:
    neighbors: List[Set[int]] = [set() for _ in range(graph.order)]
    for x, y in graph.edges():
        neighbors[x].add(y)
        neighbors[y].add(x)
    return neighbors


def _step(
    state: WalkState,
    target: int,
    neighbors: List[Set[int]],
    source: int,
    sink: int,
    kind: IntervalKind,
) -> Optional[WalkState]:
    """
    Leaves ``state.current`` towards ``target``; None when the step breaks a
    walk condition.
    """
    current, first, last = state
    # leaving current: it is not the final vertex of the walk
    if kind is not IntervalKind.SEMI_WEAKLY_TOLL and sink in neighbors[current]:
        if last is None:
            last = current
        elif kind is IntervalKind.TOLL or last != current:
            return None
    # arriving at target
    if first is None:
        first = target
    elif source in neighbors[target]:
        if kind is IntervalKind.TOLL or target != first:
            return None
    return WalkState(target, first, last)


def _accepts(state: WalkState, sink: int) -> bool:
    return state.current == sink and state.first is not None


def oracle_interval(
    graph: Graph,
    u: int,
    v: int,
    kind: IntervalKind,
    budget: Optional[WalkBudget] = None,
) -> VertexSet:
    if kind not in WALK_KINDS:
        raise GraphError(f"no walk oracle for {kind.value} intervals")
    graph.check_vertex(u, v)
    graph.require_connected()
    if budget is None:
        budget = WalkBudget.default(graph)
    if u == v:
        return VertexSet.from_vertices(graph.order, [u])
    neighbors = _neighbor_lists(graph)
    start = WalkState(u, None, None)
    forward: Dict[WalkState, int] = {start: 0}
    predecessors: Dict[WalkState, List[WalkState]] = {start: []}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        if forward[state] >= budget.max_len:
            continue
        for target in sorted(neighbors[state.current]):
            following = _step(state, target, neighbors, u, v, kind)
            if following is None:
                continue
            predecessors.setdefault(following, []).append(state)
            if following not in forward:
                forward[following] = forward[state] + 1
                queue.append(following)
    backward: Dict[WalkState, int] = {
        state: 0 for state in forward if _accepts(state, v)
    }
    queue = deque(backward)
    while queue:
        state = queue.popleft()
        for previous in predecessors[state]:
            if previous not in backward:
                backward[previous] = backward[state] + 1
                queue.append(previous)
    vertices = {
        state.current
        for state, distance in backward.items()
        if forward[state] + distance <= budget.max_len
    }
    logger.debug(
        "oracle %s(%d, %d): %d states, budget %d",
        kind.value,
        u,
        v,
        len(forward),
        budget.max_len,
    )
    return VertexSet.from_vertices(graph.order, vertices)


def _search(graph: Graph, generates) -> Tuple[int, VertexSet]:
    graph.require_connected()
    graph.require_nontrivial()
    for size in range(2, graph.order + 1):
        for candidate in itertools.combinations(range(graph.order), size):
            if generates(candidate):
                return size, VertexSet.from_vertices(graph.order, candidate)
    raise AssertionError("the whole vertex set always generates")


def _oracle_table(graph: Graph) -> Dict[Tuple[int, int], Set[int]]:
    table = {}
    for u, v in itertools.combinations(range(graph.order), 2):
        table[u, v] = set(oracle_interval(graph, u, v, IntervalKind.WEAKLY_TOLL))
    return table


def _oracle_closure(table, vertices) -> Set[int]:
    covered = set(vertices)
    for u, v in itertools.combinations(sorted(vertices), 2):
        covered |= table[u, v]
    return covered


def oracle_wtn(graph: Graph) -> Tuple[int, VertexSet]:
    """
    Smallest weakly toll set by exhaustive subset search.

    ::

        >>> from wtoll.graphs import generators
        >>> number, witness = oracle_wtn(generators.two_clique_bridge(3))
        >>> number, str(witness)
        (4, '1 2 5 6')

    """
    table = _oracle_table(graph)
    return _search(
        graph, lambda candidate: len(_oracle_closure(table, candidate)) == graph.order
    )


def oracle_wth(graph: Graph) -> Tuple[int, VertexSet]:
    table = _oracle_table(graph)

    def generates(candidate):
        hull = set(candidate)
        while True:
            closure = _oracle_closure(table, hull)
            if closure == hull:
                return len(hull) == graph.order
            hull = closure

    return _search(graph, generates)
