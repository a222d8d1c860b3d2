"""Turning a tree that stopped on repeated copies into a shiftable path.

Both handlers receive a shift tree in which some vertex ``x`` has shown up
as several non-expanded leaves, and return a chain whose last edge can be
colored after the shift.  Candidate chains are always checked by simulating
the shift on a copy-on-write overlay, so a handler never hands back a chain
that fails to shift.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import InvariantViolation, ShiftError
from ..graph import ColorOverlay, Edge, ShiftPath, edge_key
from ..shift_tree import (
    BCopies,
    ShiftTree,
    Skeleton,
    edge_free_colors,
    expand_skeleton,
    skeleton,
)


@dataclass
class HandlerResult:
    path: ShiftPath
    color: int
    name: str


def _try_chain(tree: ShiftTree, edges: list[Edge]) -> int | None:
    """Smallest terminal color if ``edges`` shifts cleanly and its last edge
    can then be colored, else None."""
    ov = ColorOverlay(tree.graph)
    try:
        ShiftPath(tuple(edges)).check_shape()
        for e, f in zip(edges, edges[1:]):
            ov.step(e, f)
    except ShiftError:
        return None
    free = edge_free_colors(tree.graph, ov, *edges[-1], tree.local_palette)
    return free[0] if free else None


def effectiveness_scores(
    tree: ShiftTree, skel: Skeleton, expansion: dict[int, list[tuple[int, int]]]
) -> dict[int, tuple[int, int]]:
    """For each vertex ``y`` reached below the skeleton leaves, the pair
    ``(new leaves labelled y, grandchildren of y's inner skeleton node)``.

    The virtual parent ``u`` of the root also counts as an inner node whose
    grandchildren are the root's skeleton children.
    """
    leaves: dict[int, int] = {}
    for kids in expansion.values():
        for y, _ in kids:
            leaves[y] = leaves.get(y, 0) + 1
    scores = {}
    for y, n_leaves in leaves.items():
        grand = 0
        node = tree.first.get(y)
        if node is not None and skel.kids.get(node):
            grand += sum(len(skel.kids[c]) for c in skel.kids[node])
        if y == tree.u:
            grand += len(skel.kids.get(0, []))
        scores[y] = (n_leaves, grand)
    return scores


def leaves_handler(outcome: BCopies) -> HandlerResult:
    """Generic handler for copy thresholds ``2 <= b <= C``.

    Extends every skeleton leaf by one level, picks the neighbour ``y`` of
    ``x`` with the largest surplus of new leaves over inner grandchildren
    (smallest index on ties), and returns the first copy of ``y`` whose
    chain ends on a colorable edge.
    """
    tree = outcome.tree
    g = tree.graph
    x = outcome.vertex
    skel = skeleton(tree, x)
    for leaf in skel.leaves:
        color = _try_chain(tree, tree.path_edges(leaf))
        if color is not None:
            return HandlerResult(tree.path(leaf), color, "leaves")
    expansion = expand_skeleton(tree, skel)
    scores = effectiveness_scores(tree, skel, expansion)
    if not scores:
        raise InvariantViolation(f"skeleton leaves of vertex {x} have no children")
    best = min(scores, key=lambda y: (-(scores[y][0] - scores[y][1]), y))
    ordered = sorted(skel.leaves, key=lambda i: (tree.depth[i], i))
    for leaf in ordered:
        if any(y == best for y, _ in expansion[leaf]):
            edges = tree.path_edges(leaf) + [edge_key(x, best)]
            color = _try_chain(tree, edges)
            if color is not None:
                return HandlerResult(ShiftPath(tuple(edges)), color, "leaves")
    raise InvariantViolation(
        f"no copy of the most effective neighbour {best} of {x} ends on a colorable edge "
        f"(delta={g.delta}, extra={g.extra})"
    )


def cycle_handler(outcome: BCopies) -> HandlerResult:
    """Handler for ``C = delta - 2`` with threshold 2.

    The two copies of ``x`` close a cycle (or a figure eight) through their
    lowest common ancestor.  Shift down the tree to one copy and keep going
    back up along the other branch; stop at the first edge that can be
    colored, trying both directions and keeping the shorter chain.
    """
    tree = outcome.tree
    x = outcome.vertex
    ends = list(outcome.copies[:2])
    inner = tree.first.get(x)
    if inner is not None and tree.children[inner]:
        for i in (0, 1):
            if tree.is_ancestor(inner, ends[i]) and not tree.is_ancestor(inner, ends[1 - i]):
                ends[i] = inner
    lin1, lin2 = tree.lineage(ends[0]), tree.lineage(ends[1])
    k = 0
    while k < min(len(lin1), len(lin2)) and lin1[k] == lin2[k]:
        k += 1
    e1 = [tree.entering_edge(i) for i in lin1]
    e2 = [tree.entering_edge(i) for i in lin2]
    best: tuple[int, list[Edge], int] | None = None
    for chain in (e1 + e2[k:][::-1], e2 + e1[k:][::-1]):
        ov = ColorOverlay(tree.graph)
        for j in range(len(chain)):
            if best is not None and j + 1 >= best[0]:
                break
            if j:
                try:
                    ov.step(chain[j - 1], chain[j])
                except ShiftError:
                    break
            free = edge_free_colors(tree.graph, ov, *chain[j], tree.local_palette)
            if free:
                best = (j + 1, chain[: j + 1], free[0])
                break
    if best is None:
        raise InvariantViolation(f"neither direction around the cycle through {x} ends on a colorable edge")
    return HandlerResult(ShiftPath(tuple(best[1])), best[2], "cycle")
