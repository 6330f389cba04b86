import dataclasses
import pathlib
from typing import Optional, Tuple, Union

from ..bases import Command
from ..convexity.hulls import hull, hull_number, interval_number, interval_report
from ..convexity.intervals import IntervalKind, interval
from ..exceptions import GraphError
from ..graphs.bases import Graph, VertexSet
from ..graphs.dot import to_dot
from ..graphs.graph6 import encode_graph6
from ..graphs.io import format_edge_list, load_graph
from ..graphs.products import ProductGraph, ProductKind, build


def _graph_of(source: Union[Graph, ProductGraph]) -> Graph:
    if isinstance(source, ProductGraph):
        return source.graph
    return source


def _echo_vertices(harness, source: Union[Graph, ProductGraph], vertices: VertexSet):
    harness.echo(str(vertices))
    if isinstance(source, ProductGraph):
        for vertex in vertices:
            harness.echo(f"{vertex}\t{source.labels[vertex]}")


@dataclasses.dataclass
class ComputeInterval(Command):
    graph: str
    kind: str
    u: int
    v: int
    report: bool = False

    async def do(self, harness) -> int:
        source = load_graph(self.graph)
        graph, kind = _graph_of(source), IntervalKind(self.kind)
        if self.report and kind is not IntervalKind.WEAKLY_TOLL:
            raise GraphError("--report describes weakly toll intervals only")
        _echo_vertices(harness, source, interval(graph, self.u, self.v, kind))
        if self.report:
            report = interval_report(graph, self.u, self.v)
            harness.echo(f"X: {report.x}")
            harness.echo(f"X_u: {report.x_u}")
            harness.echo(f"X_v: {report.x_v}")
        return 0


@dataclasses.dataclass
class ComputeInvariant(Command):
    graph: str
    what: str = "wtn"
    kind: str = "wt"
    witness: bool = False

    async def do(self, harness) -> int:
        source = load_graph(self.graph)
        search = interval_number if self.what == "wtn" else hull_number
        result = search(_graph_of(source), IntervalKind(self.kind))
        harness.echo(str(result.number))
        if self.witness:
            _echo_vertices(harness, source, result.witness)
        return 0


@dataclasses.dataclass
class ComputeHull(Command):
    graph: str
    vertices: Tuple[int, ...]
    kind: str = "wt"

    async def do(self, harness) -> int:
        source = load_graph(self.graph)
        graph = _graph_of(source)
        if not self.vertices:
            raise GraphError("--set needs at least one vertex")
        graph.check_vertex(*self.vertices)
        closed = hull(graph, self.vertices, IntervalKind(self.kind))
        _echo_vertices(harness, source, closed)
        return 0


def _render(source: Union[Graph, ProductGraph], format_: str) -> str:
    if format_ == "dot":
        return to_dot(source)
    graph = _graph_of(source)
    if format_ == "edges":
        return format_edge_list(graph)
    return encode_graph6(graph)


@dataclasses.dataclass
class BuildProduct(Command):
    """
    Writes the product to ``out`` and its vertex labels to standard output, or
    the rendered product alone to standard output when ``out`` is unset.
    """

    kind: str
    g: str
    h: Tuple[str, ...]
    out: Optional[str] = None
    format: str = "g6"

    async def do(self, harness) -> int:
        factors = [_graph_of(load_graph(text)) for text in (self.g,) + tuple(self.h)]
        product = build(ProductKind(self.kind), factors[0], *factors[1:])
        rendered = _render(product, self.format)
        if self.out is None:
            harness.echo(rendered)
            return 0
        pathlib.Path(self.out).write_text(rendered + "\n")
        for vertex, label in enumerate(product.labels):
            harness.echo(f"{vertex}\t{label}")
        return 0


@dataclasses.dataclass
class ExportGraph(Command):
    graph: str
    dot: Optional[str] = None

    async def do(self, harness) -> int:
        rendered = to_dot(load_graph(self.graph))
        if self.dot is None:
            harness.echo(rendered)
        else:
            pathlib.Path(self.dot).write_text(rendered + "\n")
        return 0
