class WtollError(Exception):
    code = "error"


class GraphError(WtollError, ValueError):
    code = "graph"


class EmptyGraphError(GraphError):
    code = "empty-graph"


class VertexRangeError(GraphError):
    code = "vertex-range"


class EmptyVertexSetError(GraphError):
    code = "empty-set"


class SelfLoopError(GraphError):
    code = "self-loop"


class AsymmetricAdjacencyError(GraphError):
    code = "asymmetric"


class DisconnectedGraphError(GraphError):
    code = "disconnected"


class TrivialGraphError(GraphError):
    code = "trivial"


class CompleteGraphError(GraphError):
    code = "complete"


class Graph6Error(GraphError):
    code = "graph6"


class EdgeListError(GraphError):
    code = "edge-list"


class ProductKindError(GraphError):
    code = "product-kind"


class ProductArityError(GraphError):
    code = "product-arity"


class ExpressionError(GraphError):
    code = "expression"


class InfeasibleSpecError(WtollError, ValueError):
    code = "infeasible-spec"


class UnknownCheckError(WtollError, KeyError):
    code = "unknown-check"

    def __str__(self):
        return str(self.args[0]) if self.args else ""
