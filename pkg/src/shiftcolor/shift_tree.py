"""Breadth-first shift trees rooted at an uncolored edge.

For an uncolored edge ``(u, v)`` the tree is rooted at ``v`` and ``u`` acts as
a virtual parent.  Every node stands for a chain of edges from ``(u, v)`` down
to the edge entering that node.  A vertex ``y`` is a child of node ``x``
(entered from ``p``) when the edge ``(x, y)`` carries a color that is free at
``p`` once colors have been shifted down to make ``(p, x)`` uncolored.  Only
the first node created for a vertex is expanded further.

Construction stops after a full level when either some node's entering edge
can be colored directly (a useful path), or some vertex has accumulated ``b``
non-expanded copies, or no expandable node is left.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import inf

from .errors import ConfigError, InvariantViolation
from .graph import ColoredGraph, ColorOverlay, Edge, ShiftPath, edge_key


def depth_budget(n: int, extra: int, b: int) -> int:
    """Largest depth a tree built with copy threshold ``b`` can reach.

    Equal to ``floor(log_beta(n)) + 1`` with ``beta = (extra + 1) / b``,
    computed with exact rational arithmetic.
    """
    if b < 2:
        raise ConfigError(f"copy threshold must be at least 2, got {b}")
    if b > extra:
        raise ConfigError(f"copy threshold {b} exceeds the number of extra colors {extra}")
    if n < 1:
        raise ConfigError(f"vertex count must be positive, got {n}")
    beta = Fraction(extra + 1, b)
    height, power = 0, beta
    while power <= n:
        height += 1
        power *= beta
    return height + 1


@dataclass
class ShiftTree:
    graph: ColoredGraph
    u: int
    v: int
    local_palette: bool = False
    vertex: list[int] = field(default_factory=list)
    parent: list[int] = field(default_factory=list)
    color: list[int] = field(default_factory=list)
    active: list[bool] = field(default_factory=list)
    depth: list[int] = field(default_factory=list)
    children: list[list[int]] = field(default_factory=list)
    first: dict[int, int] = field(default_factory=dict)
    levels: list[list[int]] = field(default_factory=list)

    def add(self, vertex: int, parent: int, color: int) -> int:
        i = len(self.vertex)
        is_active = vertex not in self.first
        if is_active:
            self.first[vertex] = i
        self.vertex.append(vertex)
        self.parent.append(parent)
        self.color.append(color)
        self.active.append(is_active)
        self.depth.append(0 if parent < 0 else self.depth[parent] + 1)
        self.children.append([])
        if parent >= 0:
            self.children[parent].append(i)
        d = self.depth[i]
        if d == len(self.levels):
            self.levels.append([])
        self.levels[d].append(i)
        return i

    def __len__(self) -> int:
        return len(self.vertex)

    @property
    def height(self) -> int:
        return len(self.levels) - 1

    def parent_vertex(self, i: int) -> int:
        p = self.parent[i]
        return self.u if p < 0 else self.vertex[p]

    def entering_edge(self, i: int) -> Edge:
        return edge_key(self.parent_vertex(i), self.vertex[i])

    def lineage(self, i: int) -> list[int]:
        """Nodes from the root down to ``i``."""
        out = []
        while i >= 0:
            out.append(i)
            i = self.parent[i]
        out.reverse()
        return out

    def path_edges(self, i: int) -> list[Edge]:
        """The chain from ``(u, v)`` to the edge entering ``i``."""
        return [self.entering_edge(j) for j in self.lineage(i)]

    def path(self, i: int) -> ShiftPath:
        return ShiftPath(tuple(self.path_edges(i)))

    def is_ancestor(self, a: int, b: int) -> bool:
        """True when ``a`` is a proper ancestor of ``b``."""
        b = self.parent[b]
        while b >= 0:
            if b == a:
                return True
            b = self.parent[b]
        return False

    def overlay(self, i: int) -> ColorOverlay:
        """Colors after shifting along the chain ending at node ``i``."""
        edges = self.path_edges(i)
        ov = ColorOverlay(self.graph)
        for e, f in zip(edges, edges[1:]):
            ov.step(e, f)
        return ov

    def copies(self, x: int) -> list[int]:
        return [i for i, w in enumerate(self.vertex) if w == x]

    def freed_color(self, i: int) -> int:
        """Color freed at the parent of ``i`` by shifting down to ``i``."""
        p = self.parent[i]
        return 0 if p < 0 else self.color[p]

    def outline(self) -> str:
        """Indented preorder dump: ``depth vertex active|inactive freed_color``."""
        lines: list[str] = []
        stack = [0] if self.vertex else []
        while stack:
            i = stack.pop()
            state = "active" if self.active[i] else "inactive"
            d = self.depth[i]
            lines.append(f"{'  ' * d}{d} {self.vertex[i]} {state} {self.freed_color(i)}")
            stack.extend(reversed(self.children[i]))
        return "\n".join(lines) + ("\n" if lines else "")


@dataclass
class UsefulPath:
    path: ShiftPath
    color: int
    node: int
    tree: ShiftTree


@dataclass
class BCopies:
    vertex: int
    copies: list[int]
    tree: ShiftTree


@dataclass
class Exhausted:
    tree: ShiftTree


TreeOutcome = UsefulPath | BCopies | Exhausted


def local_bound(g: ColoredGraph, a: int, b: int) -> int:
    """Largest color an edge ``{a, b}`` may take in local-palette mode."""
    return max(g.degree(a), g.degree(b)) + g.extra


def edge_free_colors(g: ColoredGraph, ov: ColorOverlay, a: int, b: int, local: bool) -> list[int]:
    free = ov.free_for_edge(a, b)
    if local:
        k = local_bound(g, a, b)
        free = [c for c in free if c <= k]
    return free


def child_candidates(g: ColoredGraph, ov: ColorOverlay, p: int, x: int, local: bool) -> list[tuple[int, int]]:
    """Children ``(y, color)`` of a node for vertex ``x`` entered from ``p``.

    ``ov`` must describe the colors after shifting so that ``(p, x)`` is
    uncolored.  In local-palette mode only colors up to the local bound of
    ``(p, x)`` are considered and at most ``extra + 1`` children are kept.
    """
    free_p = ov.free(p)
    if local:
        k = local_bound(g, p, x)
        colors = sorted(c for c in free_p if c <= k)
    else:
        colors = sorted(free_p)
    out = []
    for c in colors:
        y = ov.holder(x, c)
        if y is not None:
            out.append((y, c))
            if local and len(out) == g.extra + 1:
                break
    return out


def build_shift_tree(
    g: ColoredGraph,
    edge: tuple[int, int],
    b: float = inf,
    local_palette: bool = False,
    skip_root_return: bool = False,
    depth_limit: int | None = None,
    stop_on_useful: bool = True,
) -> TreeOutcome:
    """Grow the shift tree for the uncolored ``edge = (u, v)`` rooted at ``v``.

    ``b`` is the copy threshold (``inf`` disables that stop).  With
    ``skip_root_return`` a copy of ``v`` hanging directly below ``u`` does not
    count toward the threshold.  When ``depth_limit`` is given, exceeding it
    without stopping raises :class:`InvariantViolation`.

    ``stop_on_useful=False`` keeps growing past useful nodes so that only
    the copy threshold (or exhaustion) ends the build.  The engines never
    use it; it exists to study the handlers on trees that reach ``b``
    copies, which natural instances almost never do.
    """
    u, v = edge
    if g.color(u, v) != 0:
        raise ValueError(f"edge {edge} is already colored")
    tree = ShiftTree(g, u, v, local_palette)
    root = tree.add(v, -1, 0)

    free = edge_free_colors(g, ColorOverlay(g), u, v, local_palette)
    if free and stop_on_useful:
        return UsefulPath(tree.path(root), free[0], root, tree)

    frontier: dict[int, ColorOverlay] = {root: ColorOverlay(g)}
    countable: dict[int, list[int]] = {}
    while True:
        if depth_limit is not None and tree.height >= depth_limit:
            raise InvariantViolation(
                f"shift tree for {edge} passed its depth budget {depth_limit} without stopping"
            )
        new_frontier: dict[int, ColorOverlay] = {}
        useful: tuple[int, int] | None = None
        hit: int | None = None
        created_any = False
        for i in tree.levels[-1]:
            if useful is not None:
                break
            ov = frontier.pop(i, None)
            if ov is None:
                continue
            x = tree.vertex[i]
            p = tree.parent_vertex(i)
            e_in = edge_key(p, x)
            for y, c in child_candidates(g, ov, p, x, local_palette):
                j = tree.add(y, i, c)
                created_any = True
                child_ov = ov.clone()
                child_ov.step(e_in, edge_key(x, y))
                free = edge_free_colors(g, child_ov, x, y, local_palette)
                if free and stop_on_useful:
                    # The first useful node in arena order wins, so the rest
                    # of the level is not needed.
                    useful = (j, free[0])
                    break
                if tree.active[j]:
                    new_frontier[j] = child_ov
                elif not (skip_root_return and y == v and x == u):
                    bucket = countable.setdefault(y, [])
                    bucket.append(j)
                    if hit is None and len(bucket) >= b:
                        hit = y
        if useful is not None:
            j, c = useful
            return UsefulPath(tree.path(j), c, j, tree)
        if hit is not None:
            return BCopies(hit, list(countable[hit]), tree)
        if not created_any or not new_frontier:
            return Exhausted(tree)
        frontier = new_frontier


@dataclass
class Skeleton:
    """Smallest subtree joining the root to every copy of one vertex."""

    vertex: int
    nodes: set[int]
    kids: dict[int, list[int]]
    leaves: list[int]


def skeleton(tree: ShiftTree, x: int, copies: list[int] | None = None) -> Skeleton:
    """Reduce ``tree`` to the root plus the paths to the given copies of ``x``
    (all copies when ``copies`` is None)."""
    targets = tree.copies(x) if copies is None else list(copies)
    nodes: set[int] = set()
    for t in targets:
        for j in tree.lineage(t):
            nodes.add(j)
    kids = {i: [j for j in tree.children[i] if j in nodes] for i in sorted(nodes)}
    leaves = [i for i in sorted(nodes) if not kids[i]]
    return Skeleton(x, nodes, kids, leaves)


def expand_skeleton(tree: ShiftTree, skel: Skeleton) -> dict[int, list[tuple[int, int]]]:
    """One more level below every skeleton leaf using the child rule,
    regardless of whether the leaf was expanded in the tree."""
    g = tree.graph
    out = {}
    for leaf in skel.leaves:
        ov = tree.overlay(leaf)
        out[leaf] = child_candidates(g, ov, tree.parent_vertex(leaf), tree.vertex[leaf], tree.local_palette)
    return out


def descendants_at(children: list[list[int]], v: int, d: int) -> int:
    """Number of descendants of ``v`` exactly ``d`` levels below it."""
    level = [v]
    for _ in range(d):
        level = [c for x in level for c in children[x]]
    return len(level)


def descendants_sum_bound(children: list[list[int]], d: int, chosen: list[int]) -> tuple[int, int]:
    """``(sum of descendants at distance d over chosen, d * (leaves - 1) + |chosen|)``.

    The first value never exceeds the second on any rooted tree.
    """
    leaves = sum(1 for kids in children if not kids)
    total = sum(descendants_at(children, v, d) for v in chosen)
    return total, d * (leaves - 1) + len(chosen)


def descendants_tight_tree(leaves: int, d: int) -> tuple[list[list[int]], list[int]]:
    """A tree and node set on which the descendants-sum bound is attained.

    A chain ``v_{d-1} -> ... -> v_0`` sits above a node ``v_0`` with
    ``leaves`` children, each of which continues as a path of ``d`` nodes.
    The chosen set is the chain, and each chain node has ``leaves``
    descendants at distance ``d``.  Node 0 is the root.
    """
    children: list[list[int]] = []

    def node() -> int:
        children.append([])
        return len(children) - 1

    chain = [node() for _ in range(d)]  # chain[0] is the root v_{d-1}
    for a, b in zip(chain, chain[1:]):
        children[a].append(b)
    for _ in range(leaves):
        prev = chain[-1]
        for _ in range(d):
            x = node()
            children[prev].append(x)
            prev = x
    return children, chain
