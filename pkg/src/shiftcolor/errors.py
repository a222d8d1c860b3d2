"""Exception hierarchy shared by every module of the package."""


class ColoringError(Exception):
    """Base class for all errors raised by shiftcolor."""

    kind = "coloring-error"


class GraphError(ColoringError, ValueError):
    """An update would break a structural invariant of the graph."""

    kind = "graph-error"


class LoopError(GraphError):
    kind = "self-loop"


class ParallelEdgeError(GraphError):
    kind = "parallel-edge"


class MissingEdgeError(GraphError):
    kind = "missing-edge"


class DegreeCapError(GraphError):
    kind = "degree-cap"


class ColorConflictError(GraphError):
    kind = "color-conflict"


class PaletteError(GraphError):
    kind = "palette"


class ShiftError(GraphError):
    """A shift path is malformed or some prefix of it is not shiftable."""

    kind = "invalid-shift"


class ConfigError(ColoringError, ValueError):
    """Parameters outside the domain where an algorithm is defined."""

    kind = "config"


class EngineError(ColoringError):
    """The engine could not extend the coloring (for example a broken promise)."""

    kind = "engine"


class InvariantViolation(EngineError):
    """Something the algorithm guarantees did not hold. Always a bug or bad input."""

    kind = "invariant-violation"


class FormatError(ColoringError, ValueError):
    kind = "format"


class WorkloadError(ColoringError, ValueError):
    kind = "workload"
