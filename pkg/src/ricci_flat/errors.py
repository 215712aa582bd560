"""Exception hierarchy shared by every module."""


class RicciFlatError(Exception):
    """Base class for all library errors."""


class GraphError(RicciFlatError, ValueError):
    pass


class SelfLoop(GraphError):
    def __init__(self, u):
        super().__init__(f"self-loop at vertex {u}")
        self.u = u


class DuplicateEdge(GraphError):
    def __init__(self, u, v):
        super().__init__(f"duplicate edge ({u}, {v})")
        self.u, self.v = u, v


class VertexOutOfRange(GraphError):
    def __init__(self, v, n):
        super().__init__(f"vertex {v} out of range for n={n}")
        self.v, self.n = v, n


class GraphFormatError(GraphError):
    """Malformed edge-list text."""


class NotAnEdge(GraphError):
    def __init__(self, x, y):
        super().__init__(f"({x}, {y}) is not an edge")
        self.x, self.y = x, y


class IsolatedVertex(RicciFlatError, ValueError):
    pass


class AlphaOutOfRange(RicciFlatError, ValueError):
    pass


class DisconnectedSupports(RicciFlatError, ValueError):
    pass


class InvalidMeasure(RicciFlatError, ValueError):
    pass


class LinearityViolation(RicciFlatError, ArithmeticError):
    """The two-point curvature quotients disagree.

    This indicates a bug or a broken assumption about the idleness
    function; it is never swallowed.
    """

    def __init__(self, x, y, values):
        super().__init__(f"curvature quotients differ on edge ({x}, {y}): {values}")
        self.x, self.y, self.values = x, y, values


class EmptyGraph(RicciFlatError, ValueError):
    pass


class DegreeTooLarge(RicciFlatError, ValueError):
    pass


class GirthTooSmall(RicciFlatError, ValueError):
    pass


class PreconditionViolated(RicciFlatError, ValueError):
    pass


class InvalidSpec(RicciFlatError, ValueError):
    pass


class LimitExceeded(RicciFlatError, ValueError):
    pass
