"""Insertion engines: large palette, delta-2, handler-free and adaptive."""

from .config import EngineConfig, EngineKind, RecourseReport
from .engine import delete_edge, delete_edge_adaptive, extend_coloring, insert_edge, local_violations
from .handlers import HandlerResult, cycle_handler, effectiveness_scores, leaves_handler
from .neighbours import bad_color_count_bound, bad_colors, classify_neighbour, is_dangerous
from .params import (
    GOLDEN_GAP_LIMIT,
    arboricity_promise_holds,
    c_star,
    choose_b,
    girth_depth_bound,
    golden_gap,
    large_palette_feasible,
    low_arboricity_growth,
    low_arboricity_path_bound,
    min_feasible_c,
    palette_is_trivial,
)

__all__ = [
    "EngineConfig",
    "EngineKind",
    "RecourseReport",
    "insert_edge",
    "delete_edge",
    "delete_edge_adaptive",
    "extend_coloring",
    "local_violations",
    "HandlerResult",
    "leaves_handler",
    "cycle_handler",
    "effectiveness_scores",
    "classify_neighbour",
    "is_dangerous",
    "bad_colors",
    "bad_color_count_bound",
    "GOLDEN_GAP_LIMIT",
    "c_star",
    "golden_gap",
    "min_feasible_c",
    "palette_is_trivial",
    "large_palette_feasible",
    "choose_b",
    "arboricity_promise_holds",
    "low_arboricity_growth",
    "low_arboricity_path_bound",
    "girth_depth_bound",
]
