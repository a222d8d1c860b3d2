"""Adversarial instances: layered lower-bound graphs and matching separations.

A *layered* instance is two towers hanging from the endpoints of an
uncolored edge ``(u, v)``.  Below the root of a tower every layer is cut into
groups of ``alpha`` vertices and each group is joined completely to a fresh
set of children.  Edges leaving even layers of the ``u`` tower use one
palette and edges leaving odd layers use a disjoint one; the ``v`` tower uses
the same two palettes with the parities swapped, so every color appears next
to ``(u, v)``.  Changing that picture requires recoloring at least one edge
in every three consecutive layers.

A *separation* instance adds ``q`` perfect matchings with dedicated colors to
such a graph.  Any algorithm may finish with two recolorings by moving a
matching color onto ``(u, v)``, while a single shifted chain must walk all
the way down a tower.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ConfigError
from .graph import ColoredGraph, Edge, edge_key


@dataclass
class _Tower:
    root: int
    layers: list[list[int]] = field(default_factory=list)
    edges: list[tuple[int, int, int]] = field(default_factory=list)
    rising: dict[int, list[int]] = field(default_factory=dict)


def _tower_sizes(alpha: int, first: int, second: int, max_layer: int) -> list[int]:
    """Layer sizes of one tower (layer 0 is the root) without building it."""
    sizes = [1, first]
    carry_prev, carry_cur = 0, 0  # leftovers waiting for layer i and i + 1
    widths = (first, second)
    for i in range(1, max_layer):
        pending = carry_prev + sizes[i]
        groups, left = divmod(pending, alpha)
        sizes.append(groups * widths[i % 2])
        carry_prev, carry_cur = carry_cur, left
    return sizes[: max_layer + 1]


def _build_tower(
    root: int,
    alpha: int,
    widths: tuple[int, int],
    palettes: tuple[list[int], list[int]],
    depth: int,
    next_id: int,
) -> tuple[_Tower, int]:
    t = _Tower(root, [[root]])
    kids = list(range(next_id, next_id + widths[0]))
    next_id += widths[0]
    for k, y in enumerate(kids):
        t.edges.append((root, y, palettes[0][k]))
        t.rising[y] = [root]
    t.layers.append(kids)
    carry: dict[int, list[int]] = {}
    for i in range(1, depth):
        pending = carry.pop(i, []) + t.layers[i]
        width, pal = widths[i % 2], palettes[i % 2]
        groups, left = divmod(len(pending), alpha)
        new_layer: list[int] = []
        for gi in range(groups):
            group = pending[gi * alpha : (gi + 1) * alpha]
            kids = list(range(next_id, next_id + width))
            next_id += width
            for k, y in enumerate(kids):
                t.rising[y] = list(group)
                for j, x in enumerate(group):
                    t.edges.append((x, y, pal[(j + k) % width]))
            new_layer.extend(kids)
        if left:
            carry[i + 2] = pending[groups * alpha :]
        t.layers.append(new_layer)
    return t, next_id


@dataclass
class LayeredInstance:
    graph: ColoredGraph
    uncolored: Edge
    depth: int
    b0: int
    b1: int
    alpha: int
    layer: list[int]
    layer_sizes: list[int]
    palettes: tuple[list[int], list[int]]
    rising: dict[int, list[int]]

    @property
    def growth_lower_bound(self) -> int:
        return (self.b0 // self.alpha) * (self.b1 // self.alpha)

    def metadata(self) -> dict[str, object]:
        return {
            "kind": "lower-bound",
            "L": self.depth,
            "b0": self.b0,
            "b1": self.b1,
            "alpha": self.alpha,
            "floor": recourse_floor(self),
            "uncolored": f"{self.uncolored[0]},{self.uncolored[1]}",
        }


def gen_layered_instance(n: int, delta: int, extra: int, alpha: int | None = None) -> LayeredInstance:
    """Deepest layered instance that fits in ``n`` vertices.

    ``alpha`` defaults to ``(delta - extra) // 2``; the tower widths are
    ``b0 = delta - alpha`` and ``b1 = extra + alpha``.  Extra vertices stay
    isolated.
    """
    if delta < 3:
        raise ConfigError(f"max degree must be at least 3, got {delta}")
    if not 0 <= extra <= delta - 2:
        raise ConfigError(f"extra colors must lie in 0..delta-2, got {extra}")
    if alpha is None:
        alpha = (delta - extra) // 2
    if not 1 <= alpha or 2 * alpha > delta - extra:
        raise ConfigError(f"alpha must lie in 1..(delta-extra)/2, got {alpha}")
    b0, b1 = delta - alpha, extra + alpha

    depth = 0
    while True:
        nxt = depth + 1
        total = sum(_tower_sizes(alpha, b0, b1, nxt)) + sum(_tower_sizes(alpha, b1, b0, nxt))
        if total > n:
            break
        if nxt > 1 and _tower_sizes(alpha, b0, b1, nxt)[-1] == 0:
            break
        depth = nxt
    if depth < 1:
        raise ConfigError(f"n={n} is too small for a single layer (need {2 + b0 + b1})")

    p0 = list(range(1, b0 + 1))
    p1 = list(range(b0 + 1, b0 + b1 + 1))
    tu, next_id = _build_tower(0, alpha, (b0, b1), (p0, p1), depth, 2)
    tv, next_id = _build_tower(1, alpha, (b1, b0), (p1, p0), depth, next_id)

    g = ColoredGraph(n, delta, extra)
    g.insert_edge(0, 1)
    for a, b, c in tu.edges + tv.edges:
        g.insert_edge(a, b)
        g.assign_color(a, b, c)
    layer = [-1] * n
    for t in (tu, tv):
        for i, members in enumerate(t.layers):
            for x in members:
                layer[x] = i
    sizes = [len(a) + len(b) for a, b in zip(tu.layers, tv.layers)]
    rising = {**tu.rising, **tv.rising}
    return LayeredInstance(g, (0, 1), depth, b0, b1, alpha, layer, sizes, (p0, p1), rising)


def arboricity_forest_cover(inst: LayeredInstance) -> list[list[Edge]]:
    """``alpha`` forests covering the instance: forest ``j`` takes the
    ``j``-th rising edge of every vertex; the uncolored edge joins forest 0."""
    forests: list[list[Edge]] = [[] for _ in range(inst.alpha)]
    forests[0].append(edge_key(*inst.uncolored))
    for y in sorted(inst.rising):
        for j, x in enumerate(inst.rising[y]):
            forests[j].append(edge_key(x, y))
    return forests


def biclique_density_bound(inst: LayeredInstance) -> int:
    """Largest ``ceil(|E| / (|V| - 1))`` over the complete bipartite blocks,
    a lower bound on arboricity."""
    best = 1
    by_group: dict[tuple[int, ...], int] = {}
    for y, group in inst.rising.items():
        key = tuple(group)
        by_group[key] = by_group.get(key, 0) + 1
    for group, width in by_group.items():
        edges = len(group) * width
        best = max(best, -(-edges // (len(group) + width - 1)))
    return best


@dataclass
class SeparationInstance:
    graph: ColoredGraph
    uncolored: Edge
    q: int
    k: int
    matching_colors: list[int]
    embedded: LayeredInstance | None
    path: list[int] | None = None

    def metadata(self) -> dict[str, object]:
        meta: dict[str, object] = {"kind": "separation", "q": self.q, "k": self.k}
        if self.embedded is not None:
            meta["L"] = self.embedded.depth
        meta["floor"] = recourse_floor(self)
        meta["uncolored"] = f"{self.uncolored[0]},{self.uncolored[1]}"
        return meta


def gen_separation_instance(n: int, delta: int, extra: int, q: int) -> SeparationInstance:
    """``q`` dedicated-color matchings between ``V`` and copies ``U^1..U^q``
    plus a hard instance on ``V`` with max degree ``delta - q``.

    ``|V| = n // (q + 1)``.  When the embedded degree is 2 the hard instance
    is a two-colored path over all of ``V`` whose middle edge is uncolored.
    """
    if not 1 <= q <= delta - extra - 2:
        raise ConfigError(f"q must lie in 1..delta-extra-2, got {q}")
    k = n // (q + 1)
    inner = delta - q
    g = ColoredGraph(n, delta, extra)
    embedded = None
    path = None
    if inner == 2:
        if k < 4:
            raise ConfigError(f"need at least 4 path vertices, got {k}")
        path = list(range(k))
        mid = (k - 2) // 2
        for i in range(k - 1):
            g.insert_edge(i, i + 1)
        for i in range(k - 1):
            dist = abs(i - mid)
            if dist == 0:
                continue
            left = i < mid
            g.assign_color(i, i + 1, 1 + ((dist + (0 if left else 1)) % 2))
        uncolored = (mid, mid + 1)
    else:
        embedded = gen_layered_instance(k, inner, extra)
        for a, b, c in embedded.graph.edges():
            g.insert_edge(a, b)
            if c:
                g.assign_color(a, b, c)
        uncolored = embedded.uncolored
    matching_colors = [inner + extra + i for i in range(1, q + 1)]
    for i, col in enumerate(matching_colors, 1):
        for j in range(k):
            g.insert_edge(j, i * k + j)
            g.assign_color(j, i * k + j, col)
    return SeparationInstance(g, uncolored, q, k, matching_colors, embedded, path)


def matching_completion(inst: SeparationInstance) -> tuple[ColoredGraph, int]:
    """Color the uncolored edge with the first matching color after recoloring
    the two matching edges at its endpoints; returns the new graph and the
    number of recolored edges."""
    g = inst.graph.copy()
    u, v = inst.uncolored
    col = inst.matching_colors[0]
    partners = [g.holder(w, col) for w in (u, v)]
    for w, z in zip((u, v), partners):
        g.uncolor(w, z)
    g.assign_color(u, v, col)
    for w, z in zip((u, v), partners):
        g.assign_color(w, z, g.free_for_edge(w, z)[0])
    return g, 2


def recourse_floor(inst: LayeredInstance | SeparationInstance) -> int:
    """Certified lower bound on recourse.

    For a layered instance this holds for any algorithm; for a separation
    instance it bounds algorithms that shift along a single chain.
    """
    if isinstance(inst, LayeredInstance):
        return inst.depth // 3
    if inst.path is not None:
        u, _ = inst.uncolored
        return min(u, len(inst.path) - 2 - u)
    assert inst.embedded is not None
    return inst.embedded.depth // 3
