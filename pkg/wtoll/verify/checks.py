"""
Registered verification checks.

Every check owns an instance generator over a :class:`~wtoll.verify.corpus.Corpus`
and an evaluator turning one instance into one verdict. Evaluators are plain
module-level functions, so instances can be evaluated in worker processes.

::

    >>> from wtoll.verify.checks import CHECKS, resolve_suite, run_check
    >>> [check.check_id for check in resolve_suite("examples")]
    ['star-example', 'complete-wtn', 'tree-wtn', 'bridge-wtn', 'two-leaves-wtn']
    >>> from wtoll.verify.corpus import CorpusSpec
    >>> verdicts = run_check("bridge-wtn", CorpusSpec())
    >>> [(verdict.predicted, verdict.observed) for verdict in verdicts]
    [(4, 4), (6, 6)]

"""
import dataclasses
import itertools
import logging
import random
import time
from typing import Any, Callable, Dict, Iterator, List, Optional

from ..convexity import closedforms
from ..convexity.closedforms import Anchor, Prediction
from ..convexity.hulls import (
    check_maximum_decomposition,
    check_neighbor_extension,
    check_wtn_characterization,
    hull,
    interval_number,
    wth,
    wtn,
)
from ..convexity.intervals import (
    IntervalKind,
    IntervalTable,
    interval,
    is_weakly_toll_set,
)
from ..convexity.oracle import WALK_KINDS, WalkBudget, oracle_interval
from ..exceptions import UnknownCheckError, WtollError
from ..graphs import generators, products
from ..graphs.bases import Graph, VertexSet, iterate_bits
from .corpus import Corpus, CorpusSpec, Instance, atlas_graphs
from .reports import Status, Verdict

logger = logging.getLogger("wtoll.verify")

GROUPS = (
    "oracle",
    "structure",
    "examples",
    "lexicographic",
    "corona",
    "products",
    "convexity",
)


ANCHORS: Dict[str, Anchor] = {
    "oracle-weakly-toll": Anchor.WEAKLY_TOLL_INTERVAL,
    "oracle-semi-weakly-toll": Anchor.SEMI_WEAKLY_TOLL_INTERVAL,
    "oracle-toll": Anchor.TOLL_INTERVAL,
    "oracle-budget-stability": Anchor.WEAKLY_TOLL_WALK,
    "interval-nesting": Anchor.CONVEXITY_NESTING,
    "neighbor-extension": Anchor.NEIGHBOR_EXTENSION,
    "maximum-decomposition": Anchor.MAXIMUM_DECOMPOSITION,
    "wtn-characterization": Anchor.WTN_ABOVE_TWO,
    "star-example": Anchor.STAR_EXAMPLE,
    "complete-wtn": Anchor.COMPLETE_WTN,
    "tree-wtn": Anchor.TREE_WTN,
    "bridge-wtn": Anchor.BRIDGE_WTN,
    "two-leaves-wtn": Anchor.TWO_LEAVES_WTN,
    "lex-same-layer": Anchor.LEX_SAME_LAYER,
    "lex-cross-layer": Anchor.LEX_CROSS_LAYER,
    "lex-wtn": Anchor.LEX_WTN,
    "lex-wth": Anchor.LEX_WTH,
    "lex-witness": Anchor.LEX_WTN,
    "corona-same-copy": Anchor.CORONA_SAME_COPY,
    "corona-cross-copies": Anchor.CORONA_CROSS_COPIES,
    "corona-base-pair": Anchor.CORONA_BASE_PAIR,
    "corona-mixed": Anchor.CORONA_MIXED,
    "corona-mixed-adjacent": Anchor.CORONA_MIXED,
    "corona-base-restriction": Anchor.CORONA_BASE_RESTRICTION,
    "corona-wtn": Anchor.CORONA_WTN,
    "corona-wth": Anchor.CORONA_WTH,
    "corona-witness": Anchor.CORONA_WTN,
    "generalized-corona": Anchor.GENERALIZED_CORONA,
    "cartesian-wtn": Anchor.CARTESIAN_WTN,
    "strong-wtn-bound": Anchor.STRONG_WTN,
    "convexity-chain": Anchor.CONVEXITY_NESTING,
    "hull-axioms": Anchor.WEAKLY_TOLL_HULL,
    "wth-bound": Anchor.WTH_BOUND,
    "wtn-le-tn": Anchor.TOLL_NUMBER_BOUND,
}


@dataclasses.dataclass(frozen=True)
class Check:
    check_id: str
    group: str
    anchor: Anchor
    statement: str
    instances: Callable[[Corpus], Iterator[Instance]]
    evaluate: Callable[[Instance], Verdict]


CHECKS: Dict[str, Check] = {}


def register(
    check_id: str,
    group: str,
    statement: str,
    instances: Callable[[Corpus], Iterator[Instance]],
):
    anchor = ANCHORS[check_id]

    def decorator(evaluate):
        CHECKS[check_id] = Check(
            check_id, group, anchor, statement, instances, evaluate
        )
        return evaluate

    return decorator


def resolve_suite(name: str) -> List[Check]:
    if name == "all":
        return list(CHECKS.values())
    if name in GROUPS:
        return [check for check in CHECKS.values() if check.group == name]
    if name in CHECKS:
        return [CHECKS[name]]
    raise UnknownCheckError(f"unknown suite {name!r}")


def evaluate(instance: Instance) -> Verdict:
    """
    Evaluates one instance and stamps the verdict with its anchor and
    runtime. Any failure while evaluating becomes a mismatch.
    """
    check = CHECKS[instance.check_id]
    started = time.perf_counter()
    try:
        verdict = check.evaluate(instance)
    except WtollError as exception:
        verdict = _failure(instance, f"error [{exception.code}]: {exception}")
    except Exception as exception:
        logger.exception("%s failed on %s", instance.check_id, instance.graphs)
        verdict = _failure(instance, f"error [{type(exception).__name__}]: {exception}")
    runtime = time.perf_counter() - started
    if verdict.status is Status.MISMATCH:
        logger.warning("%s mismatch on %s", instance.check_id, instance.graphs)
    return dataclasses.replace(verdict, anchor=check.anchor.value, runtime=runtime)


def run_check(check_id: str, spec: CorpusSpec) -> List[Verdict]:
    if check_id not in CHECKS:
        raise UnknownCheckError(f"unknown check {check_id!r}")
    check = CHECKS[check_id]
    logger.info("running %s: %s", check_id, check.statement)
    verdicts = [evaluate(instance) for instance in check.instances(Corpus(spec))]
    logger.info("finished %s with %d verdicts", check_id, len(verdicts))
    return verdicts


### VERDICTS ###


def _verdict(
    instance: Instance,
    predicted: Any,
    observed: Any,
    holds: Optional[bool] = None,
    reason: str = "",
) -> Verdict:
    if holds is None:
        holds = predicted == observed
    return Verdict(
        check_id=instance.check_id,
        instance=instance.describe(),
        predicted=predicted,
        observed=observed,
        status=Status.MATCH if holds else Status.MISMATCH,
        reason=reason,
    )


def _failure(instance: Instance, reason: str) -> Verdict:
    return Verdict(
        check_id=instance.check_id,
        instance=instance.describe(),
        predicted=None,
        observed=None,
        status=Status.MISMATCH,
        reason=reason,
    )


def _judge(instance: Instance, prediction: Prediction, observed: Any) -> Verdict:
    if not prediction.applicable:
        return Verdict(
            check_id=instance.check_id,
            instance=instance.describe(),
            predicted=None,
            observed=None,
            status=Status.SKIPPED,
            reason=prediction.reason,
        )
    return _verdict(
        instance, prediction.value, observed, prediction.holds_for(observed)
    )


def _non_adjacent_pairs(graph: Graph) -> List[tuple]:
    return [
        (u, v)
        for u, v in itertools.combinations(range(graph.order), 2)
        if not graph.adjacency[u] >> v & 1
    ]


def _adjacent_pairs(graph: Graph) -> List[tuple]:
    return [(u, v) for u, v in graph.edges()]


### ORACLE ###


def _oracle_instances(check_id: str) -> Callable[[Corpus], Iterator[Instance]]:
    def instances(corpus: Corpus) -> Iterator[Instance]:
        for graph in corpus.oracle_graphs:
            yield Instance.of(check_id, graph, budget=corpus.spec.walk_budget(graph))

    return instances


def _agree_with_oracle(instance: Instance, kind: IntervalKind) -> Verdict:
    (graph,) = instance.decode()
    budget = WalkBudget(instance.budget)
    pairs = (
        itertools.permutations(range(graph.order), 2)
        if kind.is_ordered
        else itertools.combinations(range(graph.order), 2)
    )
    for u, v in pairs:
        engine = interval(graph, u, v, kind)
        oracle = oracle_interval(graph, u, v, kind, budget)
        if engine != oracle:
            failing = dataclasses.replace(instance, vertices=(u, v))
            return _verdict(failing, engine, oracle)
    return _verdict(instance, True, True)


@register(
    "oracle-weakly-toll",
    "oracle",
    "weakly toll intervals agree with the walk oracle",
    _oracle_instances("oracle-weakly-toll"),
)
def evaluate_oracle_weakly_toll(instance: Instance) -> Verdict:
    return _agree_with_oracle(instance, IntervalKind.WEAKLY_TOLL)


@register(
    "oracle-semi-weakly-toll",
    "oracle",
    "semi weakly toll intervals agree with the walk oracle",
    _oracle_instances("oracle-semi-weakly-toll"),
)
def evaluate_oracle_semi_weakly_toll(instance: Instance) -> Verdict:
    return _agree_with_oracle(instance, IntervalKind.SEMI_WEAKLY_TOLL)


@register(
    "oracle-toll",
    "oracle",
    "toll intervals agree with the walk oracle",
    _oracle_instances("oracle-toll"),
)
def evaluate_oracle_toll(instance: Instance) -> Verdict:
    return _agree_with_oracle(instance, IntervalKind.TOLL)


@register(
    "oracle-budget-stability",
    "oracle",
    "walk oracle results do not change between budgets 2n and the configured budget",
    _oracle_instances("oracle-budget-stability"),
)
def evaluate_oracle_budget_stability(instance: Instance) -> Verdict:
    (graph,) = instance.decode()
    wide, narrow = WalkBudget(instance.budget), WalkBudget(2 * graph.order)
    for kind in WALK_KINDS:
        for u, v in itertools.permutations(range(graph.order), 2):
            expected = oracle_interval(graph, u, v, kind, wide)
            observed = oracle_interval(graph, u, v, kind, narrow)
            if expected != observed:
                failing = dataclasses.replace(
                    instance, vertices=(u, v), note=kind.value
                )
                return _verdict(failing, expected, observed)
    return _verdict(instance, True, True)


### STRUCTURE ###


def _structure_instances(check_id: str, noncomplete: bool):
    def instances(corpus: Corpus) -> Iterator[Instance]:
        for graph in corpus.oracle_graphs:
            if noncomplete and graph.is_complete():
                continue
            yield Instance.of(check_id, graph)

    return instances


@register(
    "interval-nesting",
    "structure",
    "geodesic, monophonic, toll and weakly toll intervals nest and hold both endpoints",
    _structure_instances("interval-nesting", noncomplete=False),
)
def evaluate_interval_nesting(instance: Instance) -> Verdict:
    (graph,) = instance.decode()
    chain = [
        IntervalKind.GEODESIC,
        IntervalKind.MONOPHONIC,
        IntervalKind.TOLL,
        IntervalKind.WEAKLY_TOLL,
    ]
    for u, v in itertools.combinations(range(graph.order), 2):
        sets = [interval(graph, u, v, kind) for kind in chain]
        ends = VertexSet.from_vertices(graph.order, [u, v])
        nested = all(inner <= outer for inner, outer in zip(sets, sets[1:]))
        if not nested or not ends <= sets[0]:
            failing = dataclasses.replace(instance, vertices=(u, v))
            observed = {kind.value: found for kind, found in zip(chain, sets)}
            return _verdict(failing, True, observed, holds=False)
    return _verdict(instance, True, True)


@register(
    "neighbor-extension",
    "structure",
    "outside vertices next to an interval interior belong to the interval",
    _structure_instances("neighbor-extension", noncomplete=False),
)
def evaluate_neighbor_extension(instance: Instance) -> Verdict:
    (graph,) = instance.decode()
    return _verdict(instance, True, check_neighbor_extension(graph))


@register(
    "maximum-decomposition",
    "structure",
    "a maximum interval misses exactly the disjoint union of X_u and X_v",
    _structure_instances("maximum-decomposition", noncomplete=True),
)
def evaluate_maximum_decomposition(instance: Instance) -> Verdict:
    (graph,) = instance.decode()
    return _verdict(instance, True, check_maximum_decomposition(graph))


@register(
    "wtn-characterization",
    "structure",
    "wtn > 2 exactly when every maximum pair misses part of a closed neighborhood",
    _structure_instances("wtn-characterization", noncomplete=True),
)
def evaluate_wtn_characterization(instance: Instance) -> Verdict:
    (graph,) = instance.decode()
    return _verdict(instance, True, check_wtn_characterization(graph))


### EXAMPLES ###


def _star_instances(corpus: Corpus) -> Iterator[Instance]:
    star = generators.star_graph(3)
    for kind in (IntervalKind.WEAKLY_TOLL, IntervalKind.TOLL):
        yield Instance.of("star-example", star, vertices=(1, 2), note=kind.value)


@register(
    "star-example",
    "examples",
    "in K_{1,3} two leaves span every vertex by weakly toll walks "
    "but only three by tolled walks",
    _star_instances,
)
def evaluate_star_example(instance: Instance) -> Verdict:
    (graph,) = instance.decode()
    kind = IntervalKind(instance.note)
    u, v = instance.vertices
    expected = [0, 1, 2, 3] if kind is IntervalKind.WEAKLY_TOLL else [0, 1, 2]
    return _verdict(instance, expected, interval(graph, u, v, kind).to_list())


@register(
    "complete-wtn",
    "examples",
    "wtn(K_n) = n",
    lambda corpus: (
        Instance.of("complete-wtn", generators.complete_graph(order))
        for order in range(3, 7)
    ),
)
def evaluate_complete_wtn(instance: Instance) -> Verdict:
    (graph,) = instance.decode()
    return _verdict(instance, graph.order, wtn(graph).number)


@register(
    "tree-wtn",
    "examples",
    "every tree has weakly toll number 2",
    lambda corpus: (Instance.of("tree-wtn", tree) for tree in corpus.trees),
)
def evaluate_tree_wtn(instance: Instance) -> Verdict:
    (graph,) = instance.decode()
    return _verdict(instance, 2, wtn(graph).number)


@register(
    "bridge-wtn",
    "examples",
    "two K_k joined through a middle vertex have weakly toll number 2k - 2",
    lambda corpus: (
        Instance.of("bridge-wtn", generators.two_clique_bridge(k), note=f"k={k}")
        for k in (3, 4)
    ),
)
def evaluate_bridge_wtn(instance: Instance) -> Verdict:
    (graph,) = instance.decode()
    k = (graph.order - 1) // 2
    return _verdict(instance, 2 * k - 2, wtn(graph).number)


@register(
    "two-leaves-wtn",
    "examples",
    "a graph with two vertices of degree 1 has weakly toll number 2",
    lambda corpus: (
        Instance.of("two-leaves-wtn", graph) for graph in corpus.leaf_graphs
    ),
)
def evaluate_two_leaves_wtn(instance: Instance) -> Verdict:
    (graph,) = instance.decode()
    return _verdict(instance, 2, wtn(graph).number)


### LEXICOGRAPHIC ###


def _sampled_pairs(corpus: Corpus, check_id: str) -> Iterator[tuple]:
    rng = corpus.rng(check_id)
    pool = corpus.factor_pool
    for _ in range(corpus.spec.interval_instance_count):
        yield rng, rng.choice(pool), rng.choice(pool)


def _lex_same_layer_instances(corpus: Corpus) -> Iterator[Instance]:
    for rng, G, H in _sampled_pairs(corpus, "lex-same-layer"):
        h1, h2 = rng.choice(_non_adjacent_pairs(H))
        yield Instance.of(
            "lex-same-layer", G, H, vertices=(rng.randrange(G.order), h1, h2)
        )


@register(
    "lex-same-layer",
    "lexicographic",
    "lexicographic interval inside an H-layer",
    _lex_same_layer_instances,
)
def evaluate_lex_same_layer(instance: Instance) -> Verdict:
    G, H = instance.decode()
    g, h1, h2 = instance.vertices
    product = products.lexicographic(G, H)
    observed = interval(
        product.graph,
        product.pair_vertex(g, h1),
        product.pair_vertex(g, h2),
        IntervalKind.WEAKLY_TOLL,
    )
    prediction = closedforms.lex_interval_same_layer(G, H, g, h1, h2)
    return _judge(instance, prediction, observed)


def _lex_cross_layer_instances(corpus: Corpus) -> Iterator[Instance]:
    for rng, G, H in _sampled_pairs(corpus, "lex-cross-layer"):
        g1, g2 = rng.choice(_non_adjacent_pairs(G))
        h1, h2 = rng.choice(_non_adjacent_pairs(H))
        if rng.random() < 0.5:
            h1, h2 = h2, h1
        yield Instance.of("lex-cross-layer", G, H, vertices=(g1, h1, g2, h2))


@register(
    "lex-cross-layer",
    "lexicographic",
    "lexicographic interval between different H-layers",
    _lex_cross_layer_instances,
)
def evaluate_lex_cross_layer(instance: Instance) -> Verdict:
    G, H = instance.decode()
    g1, h1, g2, h2 = instance.vertices
    product = products.lexicographic(G, H)
    observed = interval(
        product.graph,
        product.pair_vertex(g1, h1),
        product.pair_vertex(g2, h2),
        IntervalKind.WEAKLY_TOLL,
    )
    prediction = closedforms.lex_interval_cross_layer(G, H, g1, h1, g2, h2)
    return _judge(instance, prediction, observed)


def _pair_instances(check_id: str) -> Callable[[Corpus], Iterator[Instance]]:
    def instances(corpus: Corpus) -> Iterator[Instance]:
        for G, H in corpus.product_pairs(check_id):
            yield Instance.of(check_id, G, H)

    return instances


@register(
    "lex-wtn",
    "lexicographic",
    "wtn(G[H]) is 2 when wtn(H) = 2 and 3 otherwise",
    _pair_instances("lex-wtn"),
)
def evaluate_lex_wtn(instance: Instance) -> Verdict:
    G, H = instance.decode()
    prediction = closedforms.lex_wtn(G, H)
    product = products.lexicographic(G, H)
    observed = wtn(product.graph, certificate=prediction.witness).number
    return _judge(instance, prediction, observed)


@register(
    "lex-wth",
    "lexicographic",
    "wth(G[H]) = 2",
    _pair_instances("lex-wth"),
)
def evaluate_lex_wth(instance: Instance) -> Verdict:
    G, H = instance.decode()
    prediction = closedforms.lex_wth(G, H)
    product = products.lexicographic(G, H)
    observed = wth(product.graph, certificate=prediction.witness).number
    return _judge(instance, prediction, observed)


def _certify(
    instance: Instance,
    graph: Graph,
    wtn_prediction: Prediction,
    wth_prediction: Prediction,
) -> Verdict:
    if not wtn_prediction.applicable:
        return _judge(instance, wtn_prediction, None)
    witnesses = {"wtn": wtn_prediction.witness, "wth": wth_prediction.witness}
    valid = (
        len(wtn_prediction.witness) == wtn_prediction.value
        and is_weakly_toll_set(graph, wtn_prediction.witness)
        and len(wth_prediction.witness) == wth_prediction.value
        and hull(graph, wth_prediction.witness, IntervalKind.WEAKLY_TOLL).mask
        == graph.full_mask
    )
    return _verdict(instance, witnesses, witnesses, holds=valid)


@register(
    "lex-witness",
    "lexicographic",
    "the explicit lexicographic witnesses are a weakly toll set and a hull set",
    _pair_instances("lex-witness"),
)
def evaluate_lex_witness(instance: Instance) -> Verdict:
    G, H = instance.decode()
    product = products.lexicographic(G, H)
    return _certify(
        instance, product.graph, closedforms.lex_wtn(G, H), closedforms.lex_wth(G, H)
    )


### CORONA ###


def _corona_same_copy_instances(corpus: Corpus) -> Iterator[Instance]:
    for rng, G, H in _sampled_pairs(corpus, "corona-same-copy"):
        h1, h2 = rng.choice(_non_adjacent_pairs(H))
        yield Instance.of(
            "corona-same-copy", G, H, vertices=(rng.randrange(G.order), h1, h2)
        )


@register(
    "corona-same-copy",
    "corona",
    "corona interval inside one copy of H",
    _corona_same_copy_instances,
)
def evaluate_corona_same_copy(instance: Instance) -> Verdict:
    G, H = instance.decode()
    i, h1, h2 = instance.vertices
    product = products.corona(G, H)
    observed = interval(
        product.graph,
        product.copy_vertex(i, h1),
        product.copy_vertex(i, h2),
        IntervalKind.WEAKLY_TOLL,
    )
    prediction = closedforms.corona_interval_same_copy(G, H, i, h1, h2)
    return _judge(instance, prediction, observed)


def _corona_cross_copies_instances(corpus: Corpus) -> Iterator[Instance]:
    for rng, G, H in _sampled_pairs(corpus, "corona-cross-copies"):
        i, j = rng.sample(range(G.order), 2)
        k, l = rng.randrange(H.order), rng.randrange(H.order)
        yield Instance.of("corona-cross-copies", G, H, vertices=(i, k, j, l))


@register(
    "corona-cross-copies",
    "corona",
    "corona interval between two different copies of H",
    _corona_cross_copies_instances,
)
def evaluate_corona_cross_copies(instance: Instance) -> Verdict:
    G, H = instance.decode()
    i, k, j, l = instance.vertices
    product = products.corona(G, H)
    observed = interval(
        product.graph,
        product.copy_vertex(i, k),
        product.copy_vertex(j, l),
        IntervalKind.WEAKLY_TOLL,
    )
    prediction = closedforms.corona_interval_cross_copies(G, H, i, k, j, l)
    return _judge(instance, prediction, observed)


def _corona_base_pair_instances(corpus: Corpus) -> Iterator[Instance]:
    for rng, G, H in _sampled_pairs(corpus, "corona-base-pair"):
        i, j = rng.sample(range(G.order), 2)
        yield Instance.of("corona-base-pair", G, H, vertices=(i, j))


@register(
    "corona-base-pair",
    "corona",
    "corona interval between two base vertices",
    _corona_base_pair_instances,
)
def evaluate_corona_base_pair(instance: Instance) -> Verdict:
    G, H = instance.decode()
    i, j = instance.vertices
    product = products.corona(G, H)
    observed = interval(product.graph, i, j, IntervalKind.WEAKLY_TOLL)
    return _judge(instance, closedforms.corona_interval_base_pair(G, H, i, j), observed)


def _corona_mixed_instances(check_id: str, adjacent: bool):
    def instances(corpus: Corpus) -> Iterator[Instance]:
        for rng, G, H in _sampled_pairs(corpus, check_id):
            if adjacent:
                i, j = rng.choice(_adjacent_pairs(G))
                note = "adjacent base vertices"
            elif rng.random() < 0.25:
                i = j = rng.randrange(G.order)
                note = "same base vertex"
            else:
                i, j = rng.choice(_non_adjacent_pairs(G))
                note = ""
            if rng.random() < 0.5:
                i, j = j, i
            yield Instance.of(
                check_id, G, H, vertices=(i, j, rng.randrange(H.order)), note=note
            )

    return instances


def _evaluate_corona_mixed(instance: Instance) -> Verdict:
    G, H = instance.decode()
    i, j, k = instance.vertices
    product = products.corona(G, H)
    observed = interval(
        product.graph, i, product.copy_vertex(j, k), IntervalKind.WEAKLY_TOLL
    )
    return _judge(instance, closedforms.corona_interval_mixed(G, H, i, j, k), observed)


@register(
    "corona-mixed",
    "corona",
    "corona interval between a base vertex and a vertex of a copy",
    _corona_mixed_instances("corona-mixed", adjacent=False),
)
def evaluate_corona_mixed(instance: Instance) -> Verdict:
    return _evaluate_corona_mixed(instance)


@register(
    "corona-mixed-adjacent",
    "corona",
    "corona interval between a base vertex and a copy over an adjacent base vertex",
    _corona_mixed_instances("corona-mixed-adjacent", adjacent=True),
)
def evaluate_corona_mixed_adjacent(instance: Instance) -> Verdict:
    return _evaluate_corona_mixed(instance)


def _corona_base_restriction_instances(corpus: Corpus) -> Iterator[Instance]:
    for rng, G, H in _sampled_pairs(corpus, "corona-base-restriction"):
        i, j = rng.choice(_non_adjacent_pairs(G))
        yield Instance.of("corona-base-restriction", G, H, vertices=(i, j))


@register(
    "corona-base-restriction",
    "corona",
    "a corona interval of base vertices meets the base in their base interval",
    _corona_base_restriction_instances,
)
def evaluate_corona_base_restriction(instance: Instance) -> Verdict:
    G, H = instance.decode()
    i, j = instance.vertices
    product = products.corona(G, H)
    found = interval(product.graph, i, j, IntervalKind.WEAKLY_TOLL)
    base = VertexSet(found.order, found.mask & G.full_mask)
    return _judge(instance, closedforms.corona_base_restriction(G, H, i, j), base)


@register(
    "corona-wtn",
    "corona",
    "wtn(G o H) is 2 when wtn(H) = 2 and 3 otherwise",
    _pair_instances("corona-wtn"),
)
def evaluate_corona_wtn(instance: Instance) -> Verdict:
    G, H = instance.decode()
    prediction = closedforms.corona_wtn(G, H)
    product = products.corona(G, H)
    observed = wtn(product.graph, certificate=prediction.witness).number
    return _judge(instance, prediction, observed)


@register(
    "corona-wth",
    "corona",
    "wth(G o H) = 2",
    _pair_instances("corona-wth"),
)
def evaluate_corona_wth(instance: Instance) -> Verdict:
    G, H = instance.decode()
    prediction = closedforms.corona_wth(G, H)
    product = products.corona(G, H)
    observed = wth(product.graph, certificate=prediction.witness).number
    return _judge(instance, prediction, observed)


@register(
    "corona-witness",
    "corona",
    "the explicit corona witnesses are a weakly toll set and a hull set",
    _pair_instances("corona-witness"),
)
def evaluate_corona_witness(instance: Instance) -> Verdict:
    G, H = instance.decode()
    product = products.corona(G, H)
    return _certify(
        instance,
        product.graph,
        closedforms.corona_wtn(G, H),
        closedforms.corona_wth(G, H),
    )


def _generalized_corona_instances(corpus: Corpus) -> Iterator[Instance]:
    path, bridge = generators.path_graph(3), generators.two_clique_bridge(3)
    complete = [generators.complete_graph(order) for order in (1, 2, 3)]
    disconnected = [Graph.from_edge_list(2, []), Graph.from_edge_list(3, [(0, 1)])]
    fixed = [
        (path, complete[1], bridge, path),
        (path, complete[1], bridge, bridge),
        (path, path, disconnected[0], complete[0]),
    ]
    count = corpus.spec.generalized_corona_count
    for graphs in fixed[:count]:
        yield Instance.of("generalized-corona", *graphs)
    rng = corpus.rng("generalized-corona")
    noncomplete = [graph for graph in corpus.factor_pool if graph.order <= 4]
    noncomplete.append(bridge)
    bases = atlas_graphs(2, 4)
    for _ in range(max(count - len(fixed), 0)):
        G = rng.choice(bases)
        fibers = [
            rng.choice(complete + noncomplete + disconnected) for _ in range(G.order)
        ]
        fibers[rng.randrange(G.order)] = rng.choice(noncomplete)
        yield Instance.of("generalized-corona", G, *fibers)


@register(
    "generalized-corona",
    "corona",
    "a generalized corona has wtn 2 or at most 3 by its fibers, and wth 2",
    _generalized_corona_instances,
)
def evaluate_generalized_corona(instance: Instance) -> Verdict:
    G, *fibers = instance.decode()
    product = products.generalized_corona(G, fibers)
    wtn_prediction = closedforms.generalized_corona_wtn(G, fibers)
    wth_prediction = closedforms.generalized_corona_wth(G, fibers)
    if not wtn_prediction.applicable:
        return _judge(instance, wtn_prediction, None)
    observed_wtn = wtn(product.graph, certificate=wtn_prediction.witness).number
    observed_wth = wth(product.graph, certificate=wth_prediction.witness).number
    predicted = {
        wtn_prediction.target.value: wtn_prediction.value,
        "wth": wth_prediction.value,
    }
    observed = {"wtn": observed_wtn, "wth": observed_wth}
    holds = wtn_prediction.holds_for(observed_wtn) and wth_prediction.holds_for(
        observed_wth
    )
    return _verdict(instance, predicted, observed, holds=holds)


### PRODUCTS ###


def _cartesian_instances(corpus: Corpus) -> Iterator[Instance]:
    rng = corpus.rng("cartesian-wtn")
    pool = atlas_graphs(2, corpus.spec.factor_max_order)
    for _ in range(corpus.spec.product_pair_count):
        yield Instance.of("cartesian-wtn", rng.choice(pool), rng.choice(pool))


@register(
    "cartesian-wtn",
    "products",
    "wtn(G [] H) = 2 for connected non-trivial factors",
    _cartesian_instances,
)
def evaluate_cartesian_wtn(instance: Instance) -> Verdict:
    G, H = instance.decode()
    product = products.cartesian(G, H)
    return _judge(instance, closedforms.cartesian_wtn(G, H), wtn(product.graph).number)


@register(
    "strong-wtn-bound",
    "products",
    "wtn(G x H) <= 3 for connected non-complete factors",
    _pair_instances("strong-wtn-bound"),
)
def evaluate_strong_wtn_bound(instance: Instance) -> Verdict:
    G, H = instance.decode()
    product = products.strong(G, H)
    observed = wtn(product.graph).number
    return _judge(instance, closedforms.strong_wtn_bound(G, H), observed)


### CONVEXITY ###


@register(
    "convexity-chain",
    "convexity",
    "weakly toll convex sets are toll, monophonic and geodesic convex in turn",
    lambda corpus: (
        Instance.of("convexity-chain", graph) for graph in corpus.chain_graphs
    ),
)
def evaluate_convexity_chain(instance: Instance) -> Verdict:
    (graph,) = instance.decode()
    chain = [
        IntervalKind.WEAKLY_TOLL,
        IntervalKind.TOLL,
        IntervalKind.MONOPHONIC,
        IntervalKind.GEODESIC,
    ]
    tables = [IntervalTable(graph, kind) for kind in chain]
    for mask in range(1, graph.full_mask + 1):
        convex = [table.closure_mask(mask) == mask for table in tables]
        if any(outer and not inner for outer, inner in zip(convex, convex[1:])):
            failing = dataclasses.replace(
                instance, vertices=tuple(iterate_bits(mask))
            )
            observed = {kind.value: flag for kind, flag in zip(chain, convex)}
            return _verdict(failing, True, observed, holds=False)
    return _verdict(instance, True, True)


def _hull_axiom_instances(corpus: Corpus) -> Iterator[Instance]:
    rng = corpus.rng("hull-axioms")
    graphs = corpus.oracle_graphs
    for _ in range(corpus.spec.hull_axiom_count):
        graph = rng.choice(graphs)
        subset = [x for x in range(graph.order) if rng.random() < 0.3]
        if not subset:
            subset = [rng.randrange(graph.order)]
        yield Instance.of(
            "hull-axioms", graph, vertices=tuple(subset), seed=rng.randrange(2 ** 32)
        )


@register(
    "hull-axioms",
    "convexity",
    "the weakly toll hull is extensive, idempotent and monotone",
    _hull_axiom_instances,
)
def evaluate_hull_axioms(instance: Instance) -> Verdict:
    (graph,) = instance.decode()
    rng = random.Random(instance.seed)
    table = IntervalTable(graph, IntervalKind.WEAKLY_TOLL)
    subset = VertexSet.from_vertices(graph.order, instance.vertices)
    superset = subset | VertexSet.from_vertices(
        graph.order, (x for x in range(graph.order) if rng.random() < 0.5)
    )
    closed = hull(graph, subset, IntervalKind.WEAKLY_TOLL, table)
    axioms = {
        "extensive": subset <= closed,
        "idempotent": hull(graph, closed, IntervalKind.WEAKLY_TOLL, table) == closed,
        "monotone": closed <= hull(graph, superset, IntervalKind.WEAKLY_TOLL, table),
    }
    expected = {name: True for name in axioms}
    return _verdict(instance, expected, axioms)


@register(
    "wth-bound",
    "convexity",
    "wth(G) <= wtn(G)",
    _structure_instances("wth-bound", noncomplete=False),
)
def evaluate_wth_bound(instance: Instance) -> Verdict:
    (graph,) = instance.decode()
    number = wtn(graph).number
    hull_set = wth(graph).number
    return _verdict(instance, number, hull_set, holds=hull_set <= number)


@register(
    "wtn-le-tn",
    "convexity",
    "wtn(G) <= tn(G)",
    _structure_instances("wtn-le-tn", noncomplete=False),
)
def evaluate_wtn_le_tn(instance: Instance) -> Verdict:
    (graph,) = instance.decode()
    toll_number = interval_number(graph, IntervalKind.TOLL).number
    number = wtn(graph).number
    return _verdict(instance, toll_number, number, holds=number <= toll_number)
