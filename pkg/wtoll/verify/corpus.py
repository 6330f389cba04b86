"""
Verification corpora: which graphs and product factors each check runs over.

A :class:`CorpusSpec` is a flat mapping, usually read from YAML::

    exhaustive_max_order: 6
    random_orders: [7, 8]
    random_count: 300
    seed: 1

and a :class:`Corpus` turns it into concrete, seeded graph lists.

::

    >>> from wtoll.verify.corpus import Corpus, CorpusSpec
    >>> corpus = Corpus(CorpusSpec(exhaustive_max_order=4, random_count=2))
    >>> len(corpus.exhaustive_graphs), len(corpus.random_graphs)
    (9, 2)
    >>> [graph.order for graph in corpus.random_graphs]
    [7, 8]

"""
import dataclasses
import functools
import logging
import pathlib
import random
from typing import Any, Dict, List, Mapping, Optional, Tuple, Union

import networkx as nx
import yaml

from ..exceptions import InfeasibleSpecError
from ..graphs import generators
from ..graphs.bases import Graph
from ..graphs.graph6 import encode_graph6, parse_graph6

logger = logging.getLogger("wtoll.verify")

ATLAS_MAX_ORDER = 7
ORACLE_MAX_ORDER = 8
PRODUCT_MAX_ORDER = 40
CHAIN_MAX_ORDER = 6


@dataclasses.dataclass(frozen=True)
class CorpusSpec:
    exhaustive_max_order: int = 6
    random_orders: Tuple[int, ...] = (7, 8)
    random_count: int = 300
    edge_probabilities: Tuple[float, ...] = (0.3, 0.5, 0.7)
    seed: int = 1
    tree_count: int = 50
    leaf_graph_count: int = 50
    factor_min_order: int = 3
    factor_max_order: int = 5
    product_pair_count: int = 30
    interval_instance_count: int = 200
    generalized_corona_count: int = 10
    chain_max_order: int = 5
    hull_axiom_count: int = 1000
    walk_budget_extra: int = 2

    ### INITIALIZER ###

    def __post_init__(self):
        for field in dataclasses.fields(self):
            value = getattr(self, field.name)
            if field.name == "edge_probabilities":
                if not isinstance(value, tuple) or not value or not all(
                    isinstance(p, (int, float)) and 0 < p <= 1 for p in value
                ):
                    raise InfeasibleSpecError(
                        f"edge_probabilities must be non-empty and in (0, 1]: {value!r}"
                    )
            elif field.name == "random_orders":
                if not isinstance(value, tuple) or not value or not all(
                    isinstance(k, int) for k in value
                ):
                    raise InfeasibleSpecError(
                        f"random_orders must list integers: {value!r}"
                    )
            elif not isinstance(value, int) or isinstance(value, bool) or value < 0:
                raise InfeasibleSpecError(
                    f"{field.name} must be a non-negative integer: {value!r}"
                )
        if not 2 <= self.exhaustive_max_order <= ATLAS_MAX_ORDER:
            raise InfeasibleSpecError(
                f"exhaustive_max_order must lie in [2, {ATLAS_MAX_ORDER}]"
            )
        for order in self.random_orders:
            if not 2 <= order <= ORACLE_MAX_ORDER:
                raise InfeasibleSpecError(
                    f"random order {order} exceeds the oracle limit {ORACLE_MAX_ORDER}"
                )
        if not 3 <= self.factor_min_order <= self.factor_max_order:
            raise InfeasibleSpecError(
                "factor orders need 3 <= factor_min_order <= factor_max_order"
            )
        largest = self.factor_max_order * (1 + self.factor_max_order)
        if largest > PRODUCT_MAX_ORDER:
            raise InfeasibleSpecError(
                f"factors of order {self.factor_max_order} give products of "
                f"{largest} vertices, beyond the exact search limit {PRODUCT_MAX_ORDER}"
            )
        if not 2 <= self.chain_max_order <= CHAIN_MAX_ORDER:
            raise InfeasibleSpecError(
                f"chain_max_order must lie in [2, {CHAIN_MAX_ORDER}]"
            )
        if self.walk_budget_extra < 2:
            raise InfeasibleSpecError("walk_budget_extra must be at least 2")

    ### PUBLIC METHODS ###

    @classmethod
    def from_mapping(cls, mapping: Optional[Mapping[str, Any]]) -> "CorpusSpec":
        if mapping is None:
            return cls()
        if not isinstance(mapping, Mapping):
            raise InfeasibleSpecError("a corpus spec must be a key/value mapping")
        names = {field.name for field in dataclasses.fields(cls)}
        unknown = sorted(set(mapping) - names)
        if unknown:
            raise InfeasibleSpecError(f"unknown corpus spec keys: {', '.join(unknown)}")
        values = {
            key: tuple(value) if isinstance(value, list) else value
            for key, value in mapping.items()
        }
        return cls(**values)

    @classmethod
    def load(cls, file_path: Union[str, pathlib.Path]) -> "CorpusSpec":
        try:
            mapping = yaml.safe_load(pathlib.Path(file_path).read_text())
        except yaml.YAMLError as exception:
            raise InfeasibleSpecError(f"unreadable corpus spec: {exception}")
        return cls.from_mapping(mapping)

    def serialize(self) -> Dict[str, Any]:
        return {
            key: list(value) if isinstance(value, tuple) else value
            for key, value in dataclasses.asdict(self).items()
        }

    def walk_budget(self, graph: Graph) -> int:
        return 2 * graph.order + self.walk_budget_extra


@dataclasses.dataclass(frozen=True)
class Instance:
    """
    One unit of verification work: graphs travel as graph6 strings so that
    instances pickle cheaply and describe themselves in reports.
    """

    check_id: str
    graphs: Tuple[str, ...]
    vertices: Tuple[int, ...] = ()
    seed: Optional[int] = None
    budget: Optional[int] = None
    note: str = ""

    @classmethod
    def of(cls, check_id: str, *graphs: Graph, **kwargs) -> "Instance":
        return cls(check_id, tuple(encode_graph6(graph) for graph in graphs), **kwargs)

    def decode(self) -> List[Graph]:
        return [parse_graph6(text) for text in self.graphs]

    def describe(self) -> Dict[str, Any]:
        return {
            "budget": self.budget,
            "graphs": list(self.graphs),
            "note": self.note,
            "seed": self.seed,
            "vertices": list(self.vertices),
        }


@functools.lru_cache(maxsize=None)
def atlas_graphs(min_order: int, max_order: int) -> Tuple[Graph, ...]:
    """
    Every connected graph with ``min_order`` to ``max_order`` vertices, one per
    isomorphism class, in atlas order.

    ::

        >>> [len(atlas_graphs(order, order)) for order in range(1, 6)]
        [1, 1, 2, 6, 21]

    """
    if max_order > ATLAS_MAX_ORDER:
        raise InfeasibleSpecError(f"the graph atlas stops at order {ATLAS_MAX_ORDER}")
    graphs = []
    for graph in nx.graph_atlas_g():
        order = graph.number_of_nodes()
        if min_order <= order <= max_order and nx.is_connected(graph):
            graphs.append(Graph.from_networkx(graph, nodes=sorted(graph.nodes)))
    return tuple(graphs)


class Corpus:
    def __init__(self, spec: CorpusSpec):
        self.spec = spec

    ### PUBLIC METHODS ###

    def rng(self, label: str) -> random.Random:
        return random.Random(f"{self.spec.seed}:{label}")

    def product_pairs(self, label: str) -> List[Tuple[Graph, Graph]]:
        """
        Admissible factor pairs: three fixed pairs covering a factor of weakly
        toll number 2 and one of weakly toll number 4, then seeded draws.
        """
        path, bridge = generators.path_graph(3), generators.two_clique_bridge(3)
        pairs = [(path, path), (path, bridge), (bridge, path)]
        rng = self.rng(label)
        pool = self.factor_pool
        while len(pairs) < self.spec.product_pair_count:
            pairs.append((rng.choice(pool), rng.choice(pool)))
        return pairs[: self.spec.product_pair_count]

    ### PUBLIC PROPERTIES ###

    @functools.cached_property
    def chain_graphs(self) -> Tuple[Graph, ...]:
        return atlas_graphs(2, self.spec.chain_max_order)

    @functools.cached_property
    def exhaustive_graphs(self) -> Tuple[Graph, ...]:
        return atlas_graphs(2, self.spec.exhaustive_max_order)

    @functools.cached_property
    def factor_pool(self) -> Tuple[Graph, ...]:
        """
        Connected, non-complete factors.
        """
        return tuple(
            graph
            for graph in atlas_graphs(
                self.spec.factor_min_order, self.spec.factor_max_order
            )
            if not graph.is_complete()
        )

    @functools.cached_property
    def leaf_graphs(self) -> Tuple[Graph, ...]:
        """
        Seeded connected graphs with two pendant vertices attached.
        """
        rng = self.rng("leaf-graphs")
        graphs = []
        probabilities = self.spec.edge_probabilities
        for index in range(self.spec.leaf_graph_count):
            order = 3 + index % 4
            core = generators.random_connected_graph(
                order, probabilities[index % len(probabilities)], rng.randrange(2 ** 32)
            )
            edges = core.edges()
            edges.append((rng.randrange(order), order))
            edges.append((rng.randrange(order), order + 1))
            graphs.append(Graph.from_edge_list(order + 2, edges))
        return tuple(graphs)

    @functools.cached_property
    def oracle_graphs(self) -> Tuple[Graph, ...]:
        return self.exhaustive_graphs + self.random_graphs

    @functools.cached_property
    def random_graphs(self) -> Tuple[Graph, ...]:
        orders = self.spec.random_orders
        probabilities = self.spec.edge_probabilities
        rng = self.rng("random-graphs")
        graphs = tuple(
            generators.random_connected_graph(
                orders[index % len(orders)],
                probabilities[index % len(probabilities)],
                rng.randrange(2 ** 32),
            )
            for index in range(self.spec.random_count)
        )
        logger.debug("drew %d random connected graphs", len(graphs))
        return graphs

    @functools.cached_property
    def trees(self) -> Tuple[Graph, ...]:
        rng = self.rng("trees")
        return tuple(
            generators.random_tree(3 + index % 6, rng.randrange(2 ** 32))
            for index in range(self.spec.tree_count)
        )
