"""Exception types shared across the package."""

from __future__ import annotations


class RainbowCactusError(Exception):
    """Base class for all errors raised by this package."""


class EdgeListFormatError(RainbowCactusError):
    """Malformed edge-list text; carries the 1-based line number."""

    def __init__(self, message: str, line_number: int | None = None):
        super().__init__(message)
        self.line_number = line_number


class EmptyInputError(RainbowCactusError):
    pass


class SelfLoopError(RainbowCactusError):
    def __init__(self, label: int):
        super().__init__(f"self-loop at vertex {label}")
        self.label = label


class ParallelEdgeError(RainbowCactusError):
    def __init__(self, edge: tuple[int, int]):
        super().__init__(f"duplicate edge {edge[0]} {edge[1]}")
        self.edge = edge


class DisconnectedError(RainbowCactusError):
    def __init__(self, unreachable_label: int):
        super().__init__(f"graph is disconnected (vertex {unreachable_label} unreachable)")
        self.unreachable_label = unreachable_label


class NotGeodeticError(RainbowCactusError):
    """Two shortest parents found where a unique shortest path was expected."""

    def __init__(self, u: int, v: int, fork: int):
        super().__init__(f"multiple shortest {u},{v} paths branch at vertex {fork}")
        self.u = u
        self.v = v
        self.fork = fork


class EdgeNotInCycleError(RainbowCactusError):
    def __init__(self, edge: int):
        super().__init__(f"edge {edge} is not part of this cycle block")
        self.edge = edge


class VertexNotInCycleError(RainbowCactusError):
    def __init__(self, vertex: int):
        super().__init__(f"vertex {vertex} is not part of this cycle block")
        self.vertex = vertex


class NotOddCactusError(RainbowCactusError):
    pass


class NotAntipodalEdgeError(RainbowCactusError):
    def __init__(self, edge: int):
        super().__init__(f"edge {edge} is not antipodal to a cut vertex")
        self.edge = edge


class PartialColoringError(RainbowCactusError):
    pass


class TooLargeError(RainbowCactusError):
    def __init__(self, edge_count: int, max_edges: int):
        super().__init__(f"graph has {edge_count} edges, brute force is capped at {max_edges}")
        self.edge_count = edge_count
        self.max_edges = max_edges


class InvalidSpecError(RainbowCactusError):
    pass


class InvalidPartitionError(RainbowCactusError):
    def __init__(self, property_name: str, witness: object = None):
        super().__init__(f"partition violates property {property_name!r} (witness: {witness!r})")
        self.property_name = property_name
        self.witness = witness
