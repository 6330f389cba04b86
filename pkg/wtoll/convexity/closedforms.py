"""
Closed-form intervals and invariants of product graphs.

Each function evaluates a formula in terms of factor intervals and returns a
:class:`Prediction` over the vertex ids of the matching product (see
:mod:`wtoll.graphs.products` for the numbering). Predictions whose hypotheses
fail come back with ``applicable=False`` and a reason.

::

    >>> from wtoll.graphs import generators
    >>> from wtoll.convexity import closedforms
    >>> path, bridge = generators.path_graph(3), generators.two_clique_bridge(3)
    >>> prediction = closedforms.lex_interval_same_layer(path, bridge, 1, 1, 5)
    >>> print(prediction.value.complement())
    9 13
    >>> closedforms.lex_wtn(path, bridge).value
    3
    >>> closedforms.lex_wtn(path, path).value
    2

::

    >>> prediction = closedforms.lex_wtn(generators.complete_graph(3), path)
    >>> prediction.applicable, prediction.reason
    (False, 'first factor is complete')

"""
import dataclasses
import enum
import functools
import itertools
from typing import Callable, Iterable, List, Optional, Sequence, Union

from ..graphs.bases import Graph, VertexSet, iterate_bits
from ..graphs.products import copy_offsets, pair_vertex
from .hulls import wtn
from .intervals import semi_weakly_toll_interval, weakly_toll_interval


class Anchor(str, enum.Enum):
    """
    The published statement a prediction or check rests on.
    """

    WEAKLY_TOLL_INTERVAL = "definition: weakly toll interval"
    SEMI_WEAKLY_TOLL_INTERVAL = "definition: semi weakly toll interval"
    TOLL_INTERVAL = "definition: toll interval"
    WEAKLY_TOLL_WALK = "definition: weakly toll walk"
    WEAKLY_TOLL_HULL = "definition: weakly toll hull"
    CONVEXITY_NESTING = "remark: nesting of path convexities"
    NEIGHBOR_EXTENSION = "lemma: neighbors of an interval interior"
    MAXIMUM_DECOMPOSITION = "lemma: decomposition of a maximum interval"
    WTN_ABOVE_TWO = "corollary: weakly toll number above two"
    STAR_EXAMPLE = "example: the star K_{1,3}"
    COMPLETE_WTN = "example: complete graphs"
    TREE_WTN = "example: trees"
    BRIDGE_WTN = "example: two cliques joined by a path of length two"
    TWO_LEAVES_WTN = "proposition: graphs with two vertices of degree one"
    WTH_BOUND = "remark: hull number at most interval number"
    TOLL_NUMBER_BOUND = "remark: weakly toll number at most toll number"
    LEX_SAME_LAYER = "lemma: lexicographic interval within a layer"
    LEX_CROSS_LAYER = "lemma: lexicographic interval across layers"
    LEX_WTN = "theorem: weakly toll number of lexicographic products"
    LEX_WTH = "theorem: weakly toll hull number of lexicographic products"
    CORONA_SAME_COPY = "lemma: corona interval within a copy"
    CORONA_CROSS_COPIES = "lemma: corona interval across copies"
    CORONA_BASE_PAIR = "lemma: corona interval between base vertices"
    CORONA_MIXED = "lemma: corona interval between a base vertex and a copy"
    CORONA_BASE_RESTRICTION = "lemma: corona interval restricted to the base"
    CORONA_WTN = "theorem: weakly toll number of corona products"
    CORONA_WTH = "theorem: weakly toll hull number of corona products"
    GENERALIZED_CORONA = "theorem: generalized corona products"
    CARTESIAN_WTN = "theorem: weakly toll number of Cartesian products"
    STRONG_WTN = "theorem: weakly toll number of strong products"


class Target(enum.Enum):
    INTERVAL = "interval"
    WTN = "wtn"
    WTH = "wth"
    WTN_UPPER_BOUND = "wtn-upper-bound"


@dataclasses.dataclass(frozen=True)
class Prediction:
    target: Target
    statement: str
    value: Union[VertexSet, int, None] = None
    applicable: bool = True
    reason: str = ""
    witness: Optional[VertexSet] = None
    provenance: Optional[Anchor] = None

    ### PUBLIC METHODS ###

    @classmethod
    def skip(cls, target: Target, statement: str, reason: str) -> "Prediction":
        return cls(target=target, statement=statement, applicable=False, reason=reason)

    def holds_for(self, observed: Union[VertexSet, int]) -> bool:
        if not self.applicable:
            raise ValueError(f"prediction does not apply: {self.reason}")
        if self.target is Target.WTN_UPPER_BOUND:
            return observed <= self.value
        return observed == self.value


def cites(anchor: Anchor) -> Callable:
    """
    Stamps every prediction a closed form returns with ``anchor``.
    """

    def decorator(function):
        @functools.wraps(function)
        def wrapper(*args, **kwargs) -> Prediction:
            return dataclasses.replace(function(*args, **kwargs), provenance=anchor)

        return wrapper

    return decorator


def _factor_reason(
    graphs: Sequence[Graph], names: Sequence[str] = ("first", "second")
) -> Optional[str]:
    for name, graph in zip(names, graphs):
        if not graph.is_connected():
            return f"{name} factor is disconnected"
        if graph.is_complete():
            return f"{name} factor is complete"
    return None


def _non_adjacent_reason(graph: Graph, u: int, v: int, what: str) -> Optional[str]:
    graph.check_vertex(u, v)
    if u == v:
        return f"{what} coincide"
    if graph.adjacency[u] >> v & 1:
        return f"{what} are adjacent"
    return None


def _first_non_adjacent_pair(graph: Graph):
    for u, v in itertools.combinations(range(graph.order), 2):
        if not graph.adjacency[u] >> v & 1:
            return u, v
    raise ValueError("complete graphs have no non-adjacent pair")


def _first_distance_two_pair(graph: Graph):
    for u in range(graph.order):
        distances = graph.distances(u)
        for v in range(u + 1, graph.order):
            if distances[v] == 2:
                return u, v
    raise ValueError("graph has no pair at distance two")


def _exactly_one_missed(H: Graph, h1: int, h2: int) -> List[int]:
    inside = weakly_toll_interval(H, h1, h2)
    return [
        x
        for x in range(H.order)
        if x not in inside and (H.adjacency[x] >> h1 & 1) != (H.adjacency[x] >> h2 & 1)
    ]


### LEXICOGRAPHIC ###


def _lex_set(G: Graph, H: Graph, pairs: Iterable) -> VertexSet:
    return VertexSet.from_vertices(
        G.order * H.order, (pair_vertex(g, h, H.order) for g, h in pairs)
    )


@cites(Anchor.LEX_SAME_LAYER)
def lex_interval_same_layer(G: Graph, H: Graph, g: int, h1: int, h2: int) -> Prediction:
    statement = "lexicographic interval between two vertices of one H-layer"
    G.check_vertex(g)
    reason = _factor_reason([G, H]) or _non_adjacent_reason(H, h1, h2, "h1 and h2")
    if reason:
        return Prediction.skip(Target.INTERVAL, statement, reason)
    missed = _lex_set(G, H, ((g, x) for x in _exactly_one_missed(H, h1, h2)))
    return Prediction(Target.INTERVAL, statement, missed.complement())


@cites(Anchor.LEX_CROSS_LAYER)
def lex_interval_cross_layer(
    G: Graph, H: Graph, g1: int, h1: int, g2: int, h2: int
) -> Prediction:
    statement = "lexicographic interval between vertices of different H-layers"
    reason = (
        _factor_reason([G, H])
        or _non_adjacent_reason(G, g1, g2, "g1 and g2")
        or _non_adjacent_reason(H, h1, h2, "h1 and h2")
    )
    if reason:
        return Prediction.skip(Target.INTERVAL, statement, reason)
    rows = weakly_toll_interval(G, g1, g2)
    covered = _lex_set(G, H, ((g, h) for g in rows for h in range(H.order)))
    removed = _lex_set(
        G,
        H,
        itertools.chain(
            ((g1, x) for x in iterate_bits(H.adjacency[h1])),
            ((g2, x) for x in iterate_bits(H.adjacency[h2])),
        ),
    )
    return Prediction(Target.INTERVAL, statement, covered - removed)


@cites(Anchor.LEX_WTN)
def lex_wtn(G: Graph, H: Graph) -> Prediction:
    """
    2 when wtn(H) = 2, otherwise 3, with a weakly toll set of that size.
    """
    statement = "weakly toll number of a lexicographic product"
    reason = _factor_reason([G, H])
    if reason:
        return Prediction.skip(Target.WTN, statement, reason)
    fiber = wtn(H)
    if fiber.number == 2:
        witness = _lex_set(G, H, ((0, h) for h in fiber.witness))
        return Prediction(Target.WTN, statement, 2, witness=witness)
    g1, g2 = _first_distance_two_pair(G)
    h1, h2 = _first_non_adjacent_pair(H)
    witness = _lex_set(G, H, [(g1, h1), (g1, h2), (g2, h1)])
    return Prediction(Target.WTN, statement, 3, witness=witness)


@cites(Anchor.LEX_WTH)
def lex_wth(G: Graph, H: Graph) -> Prediction:
    statement = "weakly toll hull number of a lexicographic product"
    reason = _factor_reason([G, H])
    if reason:
        return Prediction.skip(Target.WTH, statement, reason)
    g1, _ = _first_distance_two_pair(G)
    h1, h2 = _first_non_adjacent_pair(H)
    return Prediction(
        Target.WTH, statement, 2, witness=_lex_set(G, H, [(g1, h1), (g1, h2)])
    )


### CORONA ###


class _CoronaIds:
    def __init__(self, G: Graph, fibers: Sequence[Graph]):
        self.G = G
        self.fibers = list(fibers)
        self.offsets = copy_offsets(G.order, [fiber.order for fiber in fibers])
        self.order = G.order + sum(fiber.order for fiber in fibers)

    def copy(self, i: int, h: int) -> int:
        return self.offsets[i] + h

    def copy_mask(self, i: int, hs: Optional[Iterable[int]] = None) -> int:
        if hs is None:
            hs = range(self.fibers[i].order)
        mask = 0
        for h in hs:
            mask |= 1 << self.copy(i, h)
        return mask

    def vertex_set(self, mask: int) -> VertexSet:
        return VertexSet(self.order, mask)


@cites(Anchor.CORONA_SAME_COPY)
def corona_interval_same_copy(
    G: Graph, H: Graph, i: int, h1: int, h2: int
) -> Prediction:
    statement = "corona interval between two vertices of one copy"
    G.check_vertex(i)
    reason = _factor_reason([G, H]) or _non_adjacent_reason(H, h1, h2, "h1 and h2")
    if reason:
        return Prediction.skip(Target.INTERVAL, statement, reason)
    ids = _CoronaIds(G, [H] * G.order)
    missed = ids.copy_mask(i, _exactly_one_missed(H, h1, h2))
    return Prediction(
        Target.INTERVAL, statement, ids.vertex_set(missed).complement()
    )


@cites(Anchor.CORONA_CROSS_COPIES)
def corona_interval_cross_copies(
    G: Graph, H: Graph, i: int, k: int, j: int, l: int
) -> Prediction:
    statement = "corona interval between vertices of two different copies"
    G.check_vertex(i, j)
    H.check_vertex(k, l)
    reason = _factor_reason([G, H])
    if not reason and i == j:
        reason = "copies coincide"
    if reason:
        return Prediction.skip(Target.INTERVAL, statement, reason)
    ids = _CoronaIds(G, [H] * G.order)
    removed = ids.copy_mask(i, iterate_bits(H.adjacency[k]))
    removed |= ids.copy_mask(j, iterate_bits(H.adjacency[l]))
    return Prediction(
        Target.INTERVAL, statement, ids.vertex_set(removed).complement()
    )


@cites(Anchor.CORONA_BASE_PAIR)
def corona_interval_base_pair(G: Graph, H: Graph, i: int, j: int) -> Prediction:
    statement = "corona interval between two base vertices"
    G.check_vertex(i, j)
    reason = _factor_reason([G, H])
    if not reason and i == j:
        reason = "base vertices coincide"
    if reason:
        return Prediction.skip(Target.INTERVAL, statement, reason)
    ids = _CoronaIds(G, [H] * G.order)
    base = weakly_toll_interval(G, i, j)
    mask = base.mask
    for x in base:
        if x not in (i, j):
            mask |= ids.copy_mask(x)
    return Prediction(Target.INTERVAL, statement, ids.vertex_set(mask))


@cites(Anchor.CORONA_MIXED)
def corona_interval_mixed(G: Graph, H: Graph, i: int, j: int, k: int) -> Prediction:
    """
    Interval between base vertex ``g_i`` and vertex ``h_k`` of copy ``j``.

    For ``i != j`` the base part comes from the semi weakly toll interval from
    ``g_i`` to ``g_j``, which also covers adjacent ``g_i, g_j``.
    """
    statement = "corona interval between a base vertex and a copy vertex"
    G.check_vertex(i, j)
    H.check_vertex(k)
    reason = _factor_reason([G, H])
    if reason:
        return Prediction.skip(Target.INTERVAL, statement, reason)
    ids = _CoronaIds(G, [H] * G.order)
    if i == j:
        return Prediction(
            Target.INTERVAL, statement, ids.vertex_set(1 << i | 1 << ids.copy(i, k))
        )
    mask = 1 << i | 1 << j
    mask |= ids.copy_mask(j) & ~ids.copy_mask(j, iterate_bits(H.adjacency[k]))
    for x in semi_weakly_toll_interval(G, i, j):
        if x not in (i, j):
            mask |= 1 << x | ids.copy_mask(x)
    return Prediction(Target.INTERVAL, statement, ids.vertex_set(mask))


@cites(Anchor.CORONA_BASE_RESTRICTION)
def corona_base_restriction(G: Graph, H: Graph, i: int, j: int) -> Prediction:
    """
    The corona interval of non-adjacent base vertices, cut down to the base,
    equals their interval in the base graph.
    """
    statement = "corona interval of base vertices restricted to the base"
    reason = _factor_reason([G, H]) or _non_adjacent_reason(G, i, j, "base vertices")
    if reason:
        return Prediction.skip(Target.INTERVAL, statement, reason)
    ids = _CoronaIds(G, [H] * G.order)
    return Prediction(
        Target.INTERVAL, statement, ids.vertex_set(weakly_toll_interval(G, i, j).mask)
    )


@cites(Anchor.CORONA_WTN)
def corona_wtn(G: Graph, H: Graph) -> Prediction:
    statement = "weakly toll number of a corona product"
    reason = _factor_reason([G, H])
    if reason:
        return Prediction.skip(Target.WTN, statement, reason)
    ids = _CoronaIds(G, [H] * G.order)
    fiber = wtn(H)
    if fiber.number == 2:
        witness = ids.vertex_set(ids.copy_mask(0, fiber.witness))
        return Prediction(Target.WTN, statement, 2, witness=witness)
    h1, h2 = _first_non_adjacent_pair(H)
    neighbor = next(iterate_bits(G.adjacency[0]))
    witness = ids.vertex_set(ids.copy_mask(0, [h1, h2]) | 1 << neighbor)
    return Prediction(Target.WTN, statement, 3, witness=witness)


@cites(Anchor.CORONA_WTH)
def corona_wth(G: Graph, H: Graph) -> Prediction:
    statement = "weakly toll hull number of a corona product"
    reason = _factor_reason([G, H])
    if reason:
        return Prediction.skip(Target.WTH, statement, reason)
    ids = _CoronaIds(G, [H] * G.order)
    h1, h2 = _first_non_adjacent_pair(H)
    return Prediction(
        Target.WTH, statement, 2, witness=ids.vertex_set(ids.copy_mask(0, [h1, h2]))
    )


def _generalized_reason(G: Graph, fibers: Sequence[Graph]) -> Optional[str]:
    if len(fibers) != G.order:
        return f"expected {G.order} fibers, got {len(fibers)}"
    if not G.is_connected():
        return "base graph is disconnected"
    if G.order < 2:
        return "base graph is trivial"
    if not _generalized_candidates(fibers):
        return "no fiber is connected and non-complete"
    return None


def _generalized_candidates(fibers: Sequence[Graph]) -> List[int]:
    return [
        i
        for i, fiber in enumerate(fibers)
        if fiber.is_connected() and not fiber.is_complete()
    ]


@cites(Anchor.GENERALIZED_CORONA)
def generalized_corona_wtn(G: Graph, fibers: Sequence[Graph]) -> Prediction:
    """
    2 when some connected non-complete fiber has weakly toll number 2,
    otherwise at most 3. Other fibers may be complete or disconnected.

    ::

        >>> from wtoll.graphs import generators
        >>> path, bridge = generators.path_graph(3), generators.two_clique_bridge(3)
        >>> prediction = generalized_corona_wtn(
        ...     path, [generators.complete_graph(2), bridge, path]
        ... )
        >>> prediction.target.value, prediction.value, str(prediction.witness)
        ('wtn', 2, '12 14')
        >>> prediction = generalized_corona_wtn(
        ...     path, [generators.complete_graph(2), bridge, bridge]
        ... )
        >>> prediction.target.value, prediction.value, str(prediction.witness)
        ('wtn-upper-bound', 3, '0 5 9')

    """
    statement = "weakly toll number of a generalized corona"
    reason = _generalized_reason(G, fibers)
    if reason:
        return Prediction.skip(Target.WTN, statement, reason)
    ids = _CoronaIds(G, fibers)
    candidates = _generalized_candidates(fibers)
    for i in candidates:
        fiber = wtn(fibers[i])
        if fiber.number == 2:
            witness = ids.vertex_set(ids.copy_mask(i, fiber.witness))
            return Prediction(Target.WTN, statement, 2, witness=witness)
    i = candidates[0]
    h1, h2 = _first_non_adjacent_pair(fibers[i])
    neighbor = next(iterate_bits(G.adjacency[i]))
    witness = ids.vertex_set(ids.copy_mask(i, [h1, h2]) | 1 << neighbor)
    return Prediction(Target.WTN_UPPER_BOUND, statement, 3, witness=witness)


@cites(Anchor.GENERALIZED_CORONA)
def generalized_corona_wth(G: Graph, fibers: Sequence[Graph]) -> Prediction:
    statement = "weakly toll hull number of a generalized corona"
    reason = _generalized_reason(G, fibers)
    if reason:
        return Prediction.skip(Target.WTH, statement, reason)
    ids = _CoronaIds(G, fibers)
    i = _generalized_candidates(fibers)[0]
    h1, h2 = _first_non_adjacent_pair(fibers[i])
    return Prediction(
        Target.WTH, statement, 2, witness=ids.vertex_set(ids.copy_mask(i, [h1, h2]))
    )


### CARTESIAN AND STRONG ###


@cites(Anchor.CARTESIAN_WTN)
def cartesian_wtn(G: Graph, H: Graph) -> Prediction:
    statement = "weakly toll number of a Cartesian product"
    for name, graph in zip(("first", "second"), (G, H)):
        if not graph.is_connected():
            return Prediction.skip(
                Target.WTN, statement, f"{name} factor is disconnected"
            )
        if graph.order < 2:
            return Prediction.skip(Target.WTN, statement, f"{name} factor is trivial")
    return Prediction(Target.WTN, statement, 2)


@cites(Anchor.STRONG_WTN)
def strong_wtn_bound(G: Graph, H: Graph) -> Prediction:
    statement = "weakly toll number of a strong product"
    reason = _factor_reason([G, H])
    if reason:
        return Prediction.skip(Target.WTN_UPPER_BOUND, statement, reason)
    return Prediction(Target.WTN_UPPER_BOUND, statement, 3)
