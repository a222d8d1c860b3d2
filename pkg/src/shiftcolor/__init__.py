"""Dynamic edge coloring with bounded worst-case recourse via shift trees."""

from .errors import (
    ColorConflictError,
    ColoringError,
    ConfigError,
    DegreeCapError,
    EngineError,
    FormatError,
    GraphError,
    InvariantViolation,
    LoopError,
    MissingEdgeError,
    PaletteError,
    ParallelEdgeError,
    ShiftError,
    WorkloadError,
)
from .fileformat import read_instance, write_instance
from .graph import ColoredGraph, ColorOverlay, ShiftPath, Update, Violation, edge_key, verify_proper
from .shift_tree import (
    BCopies,
    Exhausted,
    ShiftTree,
    Skeleton,
    UsefulPath,
    build_shift_tree,
    depth_budget,
    expand_skeleton,
    skeleton,
)

__version__ = "0.1.0"
