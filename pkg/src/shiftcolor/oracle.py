"""Exact recourse baselines for small instances.

Both searches work on plain dictionaries built from the instance's edge list
and share nothing with the shift-tree machinery, so they can serve as an
independent check on the engines.

``min_recourse`` asks for the fewest colored edges that must change in any
proper extension of the coloring to the uncolored edge.
``min_shift_recourse`` restricts the extension to shifting along one chain
that starts at the uncolored edge and then coloring the last edge.
"""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass

from .errors import ConfigError, GraphError
from .graph import ColoredGraph, Edge, edge_key


@dataclass(frozen=True)
class OracleBudget:
    """Search caps.  Exceeding any of them turns the answer into a lower bound."""

    max_recourse: int = 64
    max_states: int = 5_000_000
    timeout: float = 600.0

    def __post_init__(self) -> None:
        if self.max_recourse < 1 or self.max_states < 1 or self.timeout <= 0:
            raise ConfigError(f"oracle budget fields must be positive: {self}")


@dataclass(frozen=True)
class Exact:
    value: int

    def __str__(self) -> str:
        return f"exact {self.value}"


@dataclass(frozen=True)
class AtLeast:
    value: int

    def __str__(self) -> str:
        return f"atleast {self.value}"


OracleResult = Exact | AtLeast


class _OutOfBudget(Exception):
    pass


class _Snapshot:
    """Frozen copy of an instance: colors by edge and holders by vertex."""

    def __init__(self, g: ColoredGraph, edge: Edge | None) -> None:
        self.palette = g.palette
        self.color: dict[Edge, int] = {}
        self.at: dict[int, dict[int, Edge]] = {w: {} for w in range(g.n)}
        self.nbrs: dict[int, list[int]] = {w: [] for w in range(g.n)}
        blank = []
        for a, b, c in g.edges():
            e = (a, b)
            self.color[e] = c
            self.nbrs[a].append(b)
            self.nbrs[b].append(a)
            if c:
                self.at[a][c] = e
                self.at[b][c] = e
            else:
                blank.append(e)
        if edge is None:
            if len(blank) != 1:
                raise GraphError(f"expected exactly one uncolored edge, found {len(blank)}")
            edge = blank[0]
        edge = edge_key(*edge)
        if edge not in self.color:
            raise GraphError(f"edge {edge} is not in the graph")
        others = [e for e in blank if e != edge]
        if self.color[edge] or others:
            raise GraphError(f"{edge} must be the only uncolored edge")
        self.edge = edge


class _Clock:
    def __init__(self, budget: OracleBudget) -> None:
        self.budget = budget
        self.states = 0
        self.deadline = time.monotonic() + budget.timeout

    def tick(self) -> None:
        self.states += 1
        if self.states > self.budget.max_states:
            raise _OutOfBudget
        if self.states & 1023 == 0 and time.monotonic() > self.deadline:
            raise _OutOfBudget


def _closure_search(s: _Snapshot, k: int, clock: _Clock) -> bool:
    """True if some proper extension changes at most ``k`` colored edges.

    Edges are given new colors one at a time.  An unassigned edge whose
    original color clashes with a new color at a shared vertex is *forced*:
    every solution containing the current assignment must change it too.
    The search branches on a forced edge with the fewest options, so it only
    ever visits conflict closures, and every minimal solution is one.
    """
    palette = range(1, s.palette + 1)
    new: dict[Edge, int] = {}
    new_at: dict[int, set[int]] = {}

    def options(f: Edge) -> list[int]:
        a, b = f
        taken_a = new_at.get(a, set())
        taken_b = new_at.get(b, set())
        out = []
        for c in palette:
            if c != s.color[f] and c not in taken_a and c not in taken_b:
                out.append(c)
        return out

    def forced() -> set[Edge]:
        out = set()
        for f, c in new.items():
            for w in f:
                h = s.at[w].get(c)
                if h is not None and h != f and h not in new:
                    out.add(h)
        return out

    def rec(count: int) -> bool:
        clock.tick()
        need = forced()
        if not need:
            return True
        if count + len(need) > k:
            return False
        best, best_opts = None, None
        for f in sorted(need):
            opts = options(f)
            if best_opts is None or len(opts) < len(best_opts):
                best, best_opts = f, opts
                if not opts:
                    return False
        assert best is not None and best_opts is not None
        for c in best_opts:
            new[best] = c
            new_at.setdefault(best[0], set()).add(c)
            new_at.setdefault(best[1], set()).add(c)
            ok = rec(count + 1)
            del new[best]
            new_at[best[0]].discard(c)
            new_at[best[1]].discard(c)
            if ok:
                return True
        return False

    e = s.edge
    for c in palette:
        new[e] = c
        new_at.setdefault(e[0], set()).add(c)
        new_at.setdefault(e[1], set()).add(c)
        ok = rec(0)
        del new[e]
        new_at[e[0]].discard(c)
        new_at[e[1]].discard(c)
        if ok:
            return True
    return False


def min_recourse(g: ColoredGraph, budget: OracleBudget | None = None, edge: Edge | None = None) -> OracleResult:
    """Fewest colored edges whose color must change to color the uncolored
    edge, over every proper coloring with the instance's palette.

    Iterative deepening on the number of changed edges.  When a cap is hit
    after all ``k' < k`` have been ruled out the answer is ``AtLeast(k)``.
    """
    budget = budget or OracleBudget()
    s = _Snapshot(g, edge)
    clock = _Clock(budget)
    k = 0
    try:
        while k <= budget.max_recourse:
            if _closure_search(s, k, clock):
                return Exact(k)
            k += 1
    except _OutOfBudget:
        pass
    return AtLeast(k)


def min_shift_recourse(g: ColoredGraph, budget: OracleBudget | None = None, edge: Edge | None = None) -> OracleResult:
    """Fewest recoloring events of a single shiftable chain that ends on an
    edge with a free color.

    A chain step moves the hole from ``f = (w, x)`` to an edge ``h = (w, y)``
    by giving ``f`` the color of ``h``; it is legal when that color is unused
    at ``x``.  Each step recolors one previously colored edge, so breadth
    first search by step count finds the optimum.  Chains may revisit edges
    and vertices; states are deduplicated on (hole, current coloring).
    """
    budget = budget or OracleBudget()
    s = _Snapshot(g, edge)
    clock = _Clock(budget)
    palette = s.palette

    def color_of(diff: dict[Edge, int], f: Edge) -> int:
        return diff.get(f, s.color[f])

    def used(diff: dict[Edge, int], w: int) -> set[int]:
        out = set()
        for z in s.nbrs[w]:
            c = color_of(diff, edge_key(w, z))
            if c:
                out.add(c)
        return out

    def has_free(diff: dict[Edge, int], f: Edge) -> bool:
        return len(used(diff, f[0]) | used(diff, f[1])) < palette

    start = (s.edge, frozenset())
    if has_free({}, s.edge):
        return Exact(0)
    seen = {start}
    layer = deque([start])
    depth = 0
    try:
        while layer and depth < budget.max_recourse:
            nxt: deque = deque()
            for hole, frozen in layer:
                diff = dict(frozen)
                for w, x in (hole, hole[::-1]):
                    at_x = used(diff, x)
                    for y in s.nbrs[w]:
                        h = edge_key(w, y)
                        if h == hole:
                            continue
                        c = color_of(diff, h)
                        if c in at_x:
                            continue
                        clock.tick()
                        step = dict(diff)
                        for f, val in ((hole, c), (h, 0)):
                            if val == s.color[f]:
                                step.pop(f, None)
                            else:
                                step[f] = val
                        state = (h, frozenset(step.items()))
                        if state in seen:
                            continue
                        seen.add(state)
                        if has_free(step, h):
                            return Exact(depth + 1)
                        nxt.append(state)
            layer = nxt
            depth += 1
    except _OutOfBudget:
        return AtLeast(depth + 1)
    if not layer:
        # no chain of any length works; the horizon is still a valid bound
        return AtLeast(budget.max_recourse + 1)
    return AtLeast(depth + 1)
