"""Exception hierarchy.

Every input problem derives from :class:`GraphError` (a ``ValueError``), so the
CLI can map the whole family to exit code 2.
"""


class GraphError(ValueError):
    pass


class LoopEdge(GraphError):
    pass


class Disconnected(GraphError):
    pass


class BadRotation(GraphError):
    pass


class NonPositiveResistance(GraphError):
    pass


class NotPlanarEmbedding(GraphError):
    pass


class UnknownEdge(GraphError, KeyError):
    def __str__(self) -> str:
        return ValueError.__str__(self)


class BridgePresent(GraphError):
    """Raised by :func:`dualnet.duality.dual` when the primal has bridges."""

    def __init__(self, edge_ids):
        self.edge_ids = tuple(edge_ids)
        super().__init__("bridge edges would dualize to loops: " + ", ".join(self.edge_ids))


class NetworkFileError(GraphError):
    pass


class CapExceeded(RuntimeError):
    def __init__(self, cap: int):
        self.cap = cap
        super().__init__(f"more than {cap} spanning trees; use determinant-only mode")
