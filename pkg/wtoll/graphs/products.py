"""
Lexicographic, Cartesian, strong, corona and generalized corona products.

Product vertices are numbered row-major over ``(g, h)``; corona products number
the base vertices first, then copy ``0``, copy ``1`` and so on.

::

    >>> from wtoll.graphs import generators, products
    >>> product = products.lexicographic(
    ...     generators.path_graph(2), generators.path_graph(3)
    ... )
    >>> product
    ProductGraph(kind=lex, order=6, size=13)
    >>> [str(label) for label in product.labels]
    ['(0,0)', '(0,1)', '(0,2)', '(1,0)', '(1,1)', '(1,2)']
    >>> print(product.layer(products.Layer.G_LAYER, 1))
    1 4

::

    >>> corona = products.corona(generators.path_graph(3), generators.path_graph(3))
    >>> corona
    ProductGraph(kind=corona, order=12, size=17)
    >>> [str(label) for label in corona.labels[:5]]
    ['g_0', 'g_1', 'g_2', 'h_0^0', 'h_1^0']

"""
import dataclasses
import enum
import functools
import logging
from typing import Dict, List, Sequence, Tuple, Union

import networkx as nx

from ..exceptions import ProductArityError, ProductKindError, VertexRangeError
from .bases import Graph, VertexSet

logger = logging.getLogger("wtoll.graphs")


class ProductKind(enum.Enum):
    LEXICOGRAPHIC = "lex"
    CARTESIAN = "cart"
    STRONG = "strong"
    CORONA = "corona"
    GENERALIZED_CORONA = "gcorona"

    @property
    def is_corona(self) -> bool:
        return self in (ProductKind.CORONA, ProductKind.GENERALIZED_CORONA)


class Layer(enum.Enum):
    G_LAYER = "g-layer"
    H_LAYER = "h-layer"
    COPY = "copy"


@dataclasses.dataclass(frozen=True, order=True)
class Pair:
    g: int
    h: int

    def __str__(self):
        return f"({self.g},{self.h})"


@dataclasses.dataclass(frozen=True, order=True)
class Base:
    g: int

    def __str__(self):
        return f"g_{self.g}"


@dataclasses.dataclass(frozen=True, order=True)
class Copy:
    i: int
    h: int

    def __str__(self):
        return f"h_{self.h}^{self.i}"


ProductVertexLabel = Union[Pair, Base, Copy]


def pair_vertex(g: int, h: int, h_order: int) -> int:
    return g * h_order + h


def copy_offsets(base_order: int, copy_orders: Sequence[int]) -> List[int]:
    offsets, offset = [], base_order
    for copy_order in copy_orders:
        offsets.append(offset)
        offset += copy_order
    return offsets


@dataclasses.dataclass(frozen=True, repr=False)
class ProductGraph:
    kind: ProductKind
    graph: Graph
    labels: Tuple[ProductVertexLabel, ...]
    factors: Tuple[Graph, ...]

    ### SPECIAL METHODS ###

    def __repr__(self):
        return (
            f"{type(self).__name__}(kind={self.kind.value}, "
            f"order={self.graph.order}, size={self.graph.size})"
        )

    ### PRIVATE METHODS ###

    def _require_pairs(self, operation: str) -> None:
        if self.kind.is_corona:
            raise ProductKindError(f"{operation} is undefined for {self.kind.value}")

    @functools.cached_property
    def _indices(self) -> Dict[ProductVertexLabel, int]:
        return {label: vertex for vertex, label in enumerate(self.labels)}

    ### PUBLIC METHODS ###

    def copy_vertex(self, i: int, h: int) -> int:
        return self.index(Copy(i, h))

    def index(self, label: ProductVertexLabel) -> int:
        try:
            return self._indices[label]
        except KeyError:
            raise VertexRangeError(f"no vertex labelled {label}")

    def label(self, vertex: int) -> ProductVertexLabel:
        self.graph.check_vertex(vertex)
        return self.labels[vertex]

    def layer(self, which: Layer, coordinate: int) -> VertexSet:
        """
        ``G_LAYER`` at ``h`` is G^h, ``H_LAYER`` at ``g`` is ^gH and ``COPY``
        at ``i`` is the i-th corona copy.
        """
        if which is Layer.COPY:
            if not self.kind.is_corona:
                raise ProductKindError(f"{self.kind.value} products have no copies")
            self.base.check_vertex(coordinate)
            vertices = [
                vertex
                for vertex, label in enumerate(self.labels)
                if isinstance(label, Copy) and label.i == coordinate
            ]
        elif which is Layer.G_LAYER:
            self._require_pairs("G-layers")
            self.fiber.check_vertex(coordinate)
            vertices = [
                pair_vertex(g, coordinate, self.fiber.order)
                for g in range(self.base.order)
            ]
        else:
            self._require_pairs("H-layers")
            self.base.check_vertex(coordinate)
            vertices = [
                pair_vertex(coordinate, h, self.fiber.order)
                for h in range(self.fiber.order)
            ]
        return VertexSet.from_vertices(self.graph.order, vertices)

    def pair_vertex(self, g: int, h: int) -> int:
        return self.index(Pair(g, h))

    def project_g(self, vertex: int) -> int:
        self._require_pairs("projections")
        return self.label(vertex).g

    def project_h(self, vertex: int) -> int:
        self._require_pairs("projections")
        return self.label(vertex).h

    ### PUBLIC PROPERTIES ###

    @property
    def base(self) -> Graph:
        return self.factors[0]

    @property
    def fiber(self) -> Graph:
        if self.kind is ProductKind.GENERALIZED_CORONA:
            raise ProductKindError("a generalized corona has one fiber per vertex")
        return self.factors[1]


def _pair_product(kind: ProductKind, function, G: Graph, H: Graph) -> ProductGraph:
    nodes = [(g, h) for g in range(G.order) for h in range(H.order)]
    graph = Graph.from_networkx(function(G.to_networkx(), H.to_networkx()), nodes)
    logger.debug("built %s product of order %d", kind.value, graph.order)
    labels = tuple(Pair(g, h) for g, h in nodes)
    return ProductGraph(kind, graph, labels, (G, H))


def lexicographic(G: Graph, H: Graph) -> ProductGraph:
    return _pair_product(ProductKind.LEXICOGRAPHIC, nx.lexicographic_product, G, H)


def cartesian(G: Graph, H: Graph) -> ProductGraph:
    return _pair_product(ProductKind.CARTESIAN, nx.cartesian_product, G, H)


def strong(G: Graph, H: Graph) -> ProductGraph:
    return _pair_product(ProductKind.STRONG, nx.strong_product, G, H)


def _corona_nodes(G: Graph, fibers: Sequence[Graph]) -> List:
    nodes: List = list(range(G.order))
    for i, fiber in enumerate(fibers):
        nodes.extend((i, h) for h in range(fiber.order))
    return nodes


def _corona_labels(nodes: List) -> Tuple[ProductVertexLabel, ...]:
    return tuple(
        Copy(*node) if isinstance(node, tuple) else Base(node) for node in nodes
    )


def corona(G: Graph, H: Graph) -> ProductGraph:
    nodes = _corona_nodes(G, [H] * G.order)
    graph = Graph.from_networkx(
        nx.corona_product(G.to_networkx(), H.to_networkx()), nodes
    )
    logger.debug("built corona product of order %d", graph.order)
    return ProductGraph(ProductKind.CORONA, graph, _corona_labels(nodes), (G, H))


def generalized_corona(G: Graph, fibers: Sequence[Graph]) -> ProductGraph:
    """
    Joins base vertex ``g_i`` to every vertex of its own graph ``fibers[i]``.
    """
    fibers = tuple(fibers)
    if len(fibers) != G.order:
        raise ProductArityError(
            f"generalized corona needs {G.order} fibers, got {len(fibers)}"
        )
    product = G.to_networkx()
    for i, fiber in enumerate(fibers):
        product.add_nodes_from((i, h) for h in range(fiber.order))
        product.add_edges_from(((i, x), (i, y)) for x, y in fiber.edges())
        product.add_edges_from((i, (i, h)) for h in range(fiber.order))
    nodes = _corona_nodes(G, fibers)
    graph = Graph.from_networkx(product, nodes)
    logger.debug("built generalized corona of order %d", graph.order)
    return ProductGraph(
        ProductKind.GENERALIZED_CORONA, graph, _corona_labels(nodes), (G,) + fibers
    )


def build(kind: ProductKind, G: Graph, *fibers: Graph) -> ProductGraph:
    if kind is ProductKind.GENERALIZED_CORONA:
        return generalized_corona(G, fibers)
    if len(fibers) != 1:
        raise ProductArityError(f"{kind.value} takes exactly two factors")
    return {
        ProductKind.LEXICOGRAPHIC: lexicographic,
        ProductKind.CARTESIAN: cartesian,
        ProductKind.STRONG: strong,
        ProductKind.CORONA: corona,
    }[kind](G, fibers[0])
