"""Exception hierarchy shared by every matchgeo module."""


class MatchgeoError(ValueError):
    """Base class for all errors raised by matchgeo."""


class DuplicateVertex(MatchgeoError):
    def __init__(self, vertex):
        self.vertex = vertex
        super().__init__(f"vertex {vertex} is covered more than once")


class VertexOutOfRange(MatchgeoError):
    def __init__(self, vertex, m):
        self.vertex = vertex
        self.m = m
        super().__init__(f"vertex {vertex} is outside [1, {2 * m}]")


class WrongEdgeCount(MatchgeoError):
    def __init__(self, count, m):
        self.count = count
        self.m = m
        super().__init__(f"expected {m} pairs, got {count}")


class MixedSizes(MatchgeoError):
    def __init__(self, m1, m2):
        super().__init__(f"matchings have different sizes: m={m1} and m={m2}")


class EdgeAlreadyPresent(MatchgeoError):
    def __init__(self, edge):
        self.edge = edge
        super().__init__(f"edge {edge[0]}-{edge[1]} is already in the matching")


class SharedVertex(MatchgeoError):
    def __init__(self, e1, e2):
        super().__init__(f"edges {e1[0]}-{e1[1]} and {e2[0]}-{e2[1]} share a vertex")


class NotNonCrossing(MatchgeoError):
    def __init__(self, matching):
        self.matching = matching
        super().__init__(f"matching {matching} has crossing edges")


class ResourceLimit(MatchgeoError):
    """Raised when a brute-force computation would exceed its configured size cap."""


class CapExceeded(MatchgeoError):
    """Raised when the number of geodesics to enumerate is above the caller's cap."""

    def __init__(self, count, cap):
        self.count = count
        self.cap = cap
        super().__init__(f"{count} geodesics exceed the enumeration cap of {cap}")
