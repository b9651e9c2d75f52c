"""Exception types raised across the package."""


class AdjDimError(Exception):
    """Base class for all package errors."""


class OrderOutOfRange(AdjDimError, ValueError):
    pass


class InvalidEdge(AdjDimError, ValueError):
    pass


class VertexOutOfRange(AdjDimError, IndexError):
    pass


class EmptyGraph(AdjDimError, ValueError):
    pass


class DisconnectedGraph(AdjDimError, ValueError):
    pass


class MalformedGraph6(AdjDimError, ValueError):
    pass


class EmptyLandmarkSet(AdjDimError, ValueError):
    pass


class DuplicateLandmark(AdjDimError, ValueError):
    pass


class InvalidParameters(AdjDimError, ValueError):
    pass


class ScopeTooLarge(AdjDimError, ValueError):
    pass
