"""Instance builders shared by the test modules."""

from __future__ import annotations

import random

import networkx as nx

from shiftcolor import ColoredGraph
from shiftcolor.graph import ColorOverlay, Edge


def random_colored(n: int, delta: int, extra: int, rng: random.Random, density: float = 0.9) -> ColoredGraph:
    """Random graph with a random proper coloring.  Edges with no free color
    when they are drawn are skipped, so the result is fully colored."""
    g = ColoredGraph(n, delta, extra)
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    rng.shuffle(pairs)
    for a, b in pairs:
        if rng.random() > density or g.degree(a) >= delta or g.degree(b) >= delta:
            continue
        g.insert_edge(a, b)
        free = g.free_for_edge(a, b)
        if free:
            g.assign_color(a, b, rng.choice(free))
        else:
            g.delete_edge(a, b)
    return g


def blocked_instance(n: int, delta: int, extra: int, rng: random.Random, tries: int = 200) -> tuple[ColoredGraph, Edge] | None:
    """A colored graph plus one new uncolored edge whose endpoints share no
    free color, or None if none was found.

    The new edge joins two non-adjacent vertices below the degree cap;
    uncoloring an existing edge would not do, since its old color stays free.
    """
    for _ in range(tries):
        g = random_colored(n, delta, extra, rng)
        pairs = [
            (a, b) for a in range(n) for b in range(a + 1, n)
            if not g.has_edge(a, b) and g.degree(a) < delta and g.degree(b) < delta
        ]  # fmt: skip
        rng.shuffle(pairs)
        for a, b in pairs:
            if not g.free_for_edge(a, b):
                g.insert_edge(a, b)
                return g, (a, b)
    return None


def scratch_free(g: ColoredGraph, colors: dict[Edge, int], e: Edge) -> set[int]:
    """Colors free for ``e`` under ``colors``, recomputed from the edge list."""
    used = set()
    for f, c in colors.items():
        if f != e and c and set(f) & set(e):
            used.add(c)
    return set(range(1, g.palette + 1)) - used


def overlay_colors(g: ColoredGraph, ov: ColorOverlay) -> dict[Edge, int]:
    return {(a, b): ov.color(a, b) for a, b, _ in g.edges()}


def regular_colored(n: int, delta: int, extra: int, rng: random.Random) -> tuple[ColoredGraph, Edge]:
    """Random ``delta``-regular graph, randomly colored, with one edge left
    uncolored (any edge; it may or may not have a free color)."""

    while True:
        G = nx.random_regular_graph(delta, n, seed=rng.randrange(2**32))
        g = ColoredGraph(n, delta, extra)
        ok = True
        for a, b in G.edges():
            g.insert_edge(a, b)
            free = g.free_for_edge(a, b)
            if not free:
                ok = False
                break
            g.assign_color(a, b, rng.choice(free))
        if ok:
            a, b, _ = rng.choice(list(g.edges()))
            g.uncolor(a, b)
            return g, (a, b)
