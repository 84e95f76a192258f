"""Exception types shared across the package."""


class GraphError(ValueError):
    """Invalid graph construction or an edge-level precondition failure."""


class DisconnectedGraphError(GraphError):
    """The operation is only defined for connected graphs."""


class EdgeListFormatError(ValueError):
    """Malformed edge-list text."""


class VerificationError(RuntimeError):
    """A computation contradicted a claim it is required to satisfy."""
