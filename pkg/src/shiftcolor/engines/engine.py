"""Insertion and deletion driven by shift trees."""

from __future__ import annotations

from ..errors import ConfigError, EngineError, InvariantViolation
from ..graph import ColoredGraph, Edge, ShiftPath, edge_key
from ..shift_tree import BCopies, Exhausted, UsefulPath, build_shift_tree, depth_budget, local_bound
from .config import EngineConfig, EngineKind, RecourseReport
from .handlers import cycle_handler, leaves_handler


def _check_graph(cfg: EngineConfig, g: ColoredGraph) -> None:
    if (g.delta, g.extra) != (cfg.delta, cfg.extra):
        raise ConfigError(
            f"engine configured for delta={cfg.delta}, extra={cfg.extra} "
            f"but graph has delta={g.delta}, extra={g.extra}"
        )


def _find_path(cfg: EngineConfig, g: ColoredGraph, edge: Edge) -> tuple[ShiftPath, int, int, str]:
    b = cfg.copy_threshold()
    limit = None
    if cfg.kind is EngineKind.LARGE_PALETTE and not cfg.adaptive:
        limit = depth_budget(max(g.n, 1), cfg.extra, int(b))
    outcome = build_shift_tree(
        g,
        edge,
        b=b,
        local_palette=cfg.adaptive,
        skip_root_return=cfg.kind is EngineKind.DELTA_MINUS_2,
        depth_limit=limit,
    )
    depth = outcome.tree.height
    if isinstance(outcome, UsefulPath):
        name = "direct" if len(outcome.path) == 1 else "useful-path"
        return outcome.path, outcome.color, depth, name
    if isinstance(outcome, BCopies):
        if cfg.kind is EngineKind.DELTA_MINUS_2:
            res = cycle_handler(outcome)
        else:
            res = leaves_handler(outcome)
        return res.path, res.color, depth, res.name
    assert isinstance(outcome, Exhausted)
    if cfg.kind is EngineKind.NO_HANDLER:
        raise EngineError(
            f"shift tree for {edge} ran out of vertices without a useful path; "
            "the arboricity promise does not hold for this graph"
        )
    raise InvariantViolation(f"shift tree for {edge} ran out of vertices without stopping")


def extend_coloring(cfg: EngineConfig, g: ColoredGraph, edge: tuple[int, int]) -> tuple[RecourseReport, dict[Edge, int]]:
    """Color the single uncolored ``edge`` by shifting along a chosen path.

    Returns the report and the colors the touched edges had before.
    """
    u, v = edge
    free = g.free_for_edge(u, v)
    if cfg.adaptive:
        k = local_bound(g, u, v)
        free = [c for c in free if c <= k]
    if free:
        # the tree would stop at its root; skip building it
        g.assign_color(u, v, free[0])
        return RecourseReport(0, 1, 0, "direct"), {edge_key(u, v): 0}
    path, color, depth, name = _find_path(cfg, g, (u, v))
    before = {e: g.color(*e) for e in path.edges}
    g.shift_along_path(path)
    g.assign_color(*path.last, color)
    if cfg.adaptive and color > local_bound(g, *path.last):
        raise InvariantViolation(f"terminal color {color} breaks the local bound on {path.last}")
    new = edge_key(u, v)
    recolored = sum(1 for e, c in before.items() if e != new and g.color(*e) != c)
    return RecourseReport(recolored, len(path), depth, name), before


def insert_edge(cfg: EngineConfig, g: ColoredGraph, u: int, v: int) -> RecourseReport:
    """Insert ``(u, v)`` and extend the coloring to it."""
    _check_graph(cfg, g)
    if g.uncolored_edges():
        raise EngineError("the graph must be fully colored before an insertion")
    g.insert_edge(u, v)
    report, _ = extend_coloring(cfg, g, (u, v))
    return report


def delete_edge(cfg: EngineConfig, g: ColoredGraph, u: int, v: int) -> RecourseReport:
    """Delete ``(u, v)``; adaptive configurations then repair the local bound."""
    _check_graph(cfg, g)
    if cfg.adaptive:
        return delete_edge_adaptive(cfg, g, u, v)
    g.delete_edge(u, v)
    return RecourseReport(0, 0, 0, "delete", colored_new=False)


def local_violations(g: ColoredGraph, vertices: tuple[int, ...]) -> list[Edge]:
    """Edges at the given vertices whose color exceeds ``max degree + extra``."""
    bad = []
    for w in vertices:
        for z, c in g.neighbours(w).items():
            if c > max(g.degree(w), g.degree(z)) + g.extra:
                e = edge_key(w, z)
                if e not in bad:
                    bad.append(e)
    return bad


def delete_edge_adaptive(cfg: EngineConfig, g: ColoredGraph, u: int, v: int) -> RecourseReport:
    """Delete ``(u, v)`` and recolor the (at most two) edges around its
    endpoints whose color is now above the local bound."""
    if not cfg.adaptive:
        raise ConfigError("adaptive deletion needs an adaptive configuration")
    g.delete_edge(u, v)
    offenders = local_violations(g, (u, v))
    if len(offenders) > 2:
        raise InvariantViolation(f"deleting ({u}, {v}) left {len(offenders)} edges above the local bound")
    original: dict[Edge, int] = {}
    path_len = depth = 0
    for e in offenders:
        a, b = e
        if g.color(a, b) <= max(g.degree(a), g.degree(b)) + g.extra:
            continue
        original.setdefault(e, g.color(a, b))
        g.uncolor(a, b)
        report, before = extend_coloring(cfg, g, (a, b))
        for f, c in before.items():
            original.setdefault(f, c)
        path_len += report.path_len
        depth = max(depth, report.tree_depth)
    recolored = sum(1 for f, c in original.items() if g.has_edge(*f) and g.color(*f) != c)
    return RecourseReport(recolored, path_len, depth, "repair", colored_new=False)
