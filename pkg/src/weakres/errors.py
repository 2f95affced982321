"""Exception types shared across the package."""


class WeakresError(Exception):
    """Base class for all domain errors raised by this package."""


class InvalidOrderError(WeakresError, ValueError):
    """Product graph side length outside the supported range (n >= 3)."""


class InvalidVertexError(WeakresError, ValueError):
    """Coordinate pair outside [n] x [n]."""


class InvalidEdgeError(WeakresError, ValueError):
    """Self-loop, duplicate edge, or malformed edge-list entry."""


class DisconnectedGraphError(WeakresError, ValueError):
    """Edge list describes a graph that is not connected."""


class DegeneratePairError(WeakresError, ValueError):
    """Identical vertices passed where a distinct pair is required."""


class DegenerateGraphError(WeakresError, ValueError):
    """Graph too small for the requested computation."""


class InvalidParameterError(WeakresError, ValueError):
    """Construction or solver parameter outside its documented range."""


class NoKnownConstructionError(WeakresError, ValueError):
    """No explicit construction covers the requested (n, k)."""


class OutOfRangeError(WeakresError, ValueError):
    """k exceeds the largest threshold admitting a weak k-resolving set."""


class BudgetExhaustedError(WeakresError, RuntimeError):
    """Internal signal: search node budget ran out.

    Never escapes ``solve_wdim``; it is converted into an inexact report.
    """
