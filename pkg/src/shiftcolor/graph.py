"""Dynamic edge-colored graph with constant-time color lookups.

Colors are the integers ``1..palette`` where ``palette = delta + extra``; the
value ``0`` marks an uncolored edge.  Every vertex keeps two indexes that are
updated together with the edge colors:

* ``holder[v][c]``: the neighbour joined to ``v`` by the edge of color ``c``,
  or ``-1`` when ``c`` is free at ``v``;
* ``free[v]``: the set of colors not used by any edge at ``v``.

All mutating operations validate first and mutate second, so a rejected
update leaves the graph untouched.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import (
    ColorConflictError,
    DegreeCapError,
    GraphError,
    LoopError,
    MissingEdgeError,
    PaletteError,
    ParallelEdgeError,
    ShiftError,
)

Edge = tuple[int, int]

UNCOLORED = 0


def edge_key(a: int, b: int) -> Edge:
    """Normalized (smaller endpoint first) form of the edge ``{a, b}``."""
    return (a, b) if a < b else (b, a)


def shared_endpoint(e: Edge, f: Edge) -> int | None:
    """The unique common endpoint of two distinct edges, or None."""
    common = set(e) & set(f)
    if len(common) != 1:
        return None
    return common.pop()


@dataclass(frozen=True)
class ShiftPath:
    """A sequence of edges along which colors are shifted.

    Consecutive edges share exactly one endpoint.  Edges are distinct except
    that the last edge may repeat an earlier one, which lets a chain close on
    itself (for example when it comes back to the edge it started from).
    """

    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "edges", tuple(edge_key(*e) for e in self.edges))

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.edges)

    @property
    def first(self) -> Edge:
        return self.edges[0]

    @property
    def last(self) -> Edge:
        return self.edges[-1]

    def check_shape(self) -> None:
        if not self.edges:
            raise ShiftError("empty shift path")
        for e, f in zip(self.edges, self.edges[1:]):
            if shared_endpoint(e, f) is None:
                raise ShiftError(f"edges {e} and {f} do not share exactly one endpoint")
        body = self.edges[:-1]
        if len(set(body)) != len(body):
            raise ShiftError("shift path repeats an edge before its last position")


@dataclass(frozen=True)
class Update:
    """A single dynamic operation: ``kind`` is ``"insert"`` or ``"delete"``."""

    kind: str
    u: int
    v: int


@dataclass
class Violation:
    kind: str
    detail: str
    vertices: tuple[int, ...] = field(default_factory=tuple)

    def __str__(self) -> str:
        return f"{self.kind}: {self.detail}"


class ColoredGraph:
    """Simple graph on vertices ``0..n-1`` with max degree ``delta`` and a
    palette of ``delta + extra`` colors."""

    def __init__(self, n: int, delta: int, extra: int) -> None:
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        if delta < 1:
            raise GraphError(f"max degree must be at least 1, got {delta}")
        if extra < 0:
            raise GraphError(f"extra colors must be non-negative, got {extra}")
        self.n = n
        self.delta = delta
        self.extra = extra
        self.palette = delta + extra
        self._adj: list[dict[int, int]] = [{} for _ in range(n)]
        self._holder: list[list[int]] = [[-1] * (self.palette + 1) for _ in range(n)]
        full = range(1, self.palette + 1)
        self._free: list[set[int]] = [set(full) for _ in range(n)]
        self._uncolored: set[Edge] = set()
        self.m = 0

    # ------------------------------------------------------------------ queries

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range 0..{self.n - 1}")

    def has_edge(self, a: int, b: int) -> bool:
        return 0 <= a < self.n and b in self._adj[a]

    def color(self, a: int, b: int) -> int:
        try:
            return self._adj[a][b]
        except (KeyError, IndexError):
            raise MissingEdgeError(f"edge ({a}, {b}) is not in the graph") from None

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def neighbours(self, v: int) -> dict[int, int]:
        """Read-only view (do not mutate) of ``{neighbour: color}`` at ``v``."""
        return self._adj[v]

    def holder(self, v: int, c: int) -> int | None:
        """Neighbour of ``v`` across the edge colored ``c``, if any."""
        w = self._holder[v][c]
        return None if w < 0 else w

    def is_free(self, v: int, c: int) -> bool:
        return self._holder[v][c] < 0

    def available(self, v: int) -> frozenset[int]:
        """Colors that no edge at ``v`` uses."""
        return frozenset(self._free[v])

    def free_for_edge(self, a: int, b: int) -> list[int]:
        """Colors free at both endpoints, ascending."""
        fa, fb = self._free[a], self._free[b]
        if len(fa) > len(fb):
            fa, fb = fb, fa
        return sorted(c for c in fa if c in fb)

    def edges(self) -> Iterator[tuple[int, int, int]]:
        """Yield ``(a, b, color)`` with ``a < b`` in lexicographic order."""
        for a in range(self.n):
            for b in sorted(self._adj[a]):
                if a < b:
                    yield a, b, self._adj[a][b]

    def uncolored_edges(self) -> list[Edge]:
        return sorted(self._uncolored)

    def color_map(self) -> dict[Edge, int]:
        return {(a, b): c for a, b, c in self.edges()}

    def max_degree(self) -> int:
        return max((len(nb) for nb in self._adj), default=0)

    def copy(self) -> ColoredGraph:
        g = ColoredGraph.__new__(ColoredGraph)
        g.n, g.delta, g.extra, g.palette, g.m = self.n, self.delta, self.extra, self.palette, self.m
        g._adj = [dict(nb) for nb in self._adj]
        g._holder = [list(h) for h in self._holder]
        g._free = [set(f) for f in self._free]
        g._uncolored = set(self._uncolored)
        return g

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ColoredGraph):
            return NotImplemented
        return (
            (self.n, self.delta, self.extra) == (other.n, other.delta, other.extra)
            and self._adj == other._adj
        )

    def __repr__(self) -> str:
        return (
            f"ColoredGraph(n={self.n}, delta={self.delta}, extra={self.extra}, "
            f"m={self.m}, uncolored={len(self._uncolored)})"
        )

    # ---------------------------------------------------------------- mutation

    def insert_edge(self, a: int, b: int) -> None:
        """Add the uncolored edge ``{a, b}``."""
        self._check_vertex(a)
        self._check_vertex(b)
        if a == b:
            raise LoopError(f"self-loop at {a}")
        if b in self._adj[a]:
            raise ParallelEdgeError(f"edge ({a}, {b}) already present")
        for w in (a, b):
            if len(self._adj[w]) >= self.delta:
                raise DegreeCapError(f"vertex {w} already has degree {self.delta}")
        self._adj[a][b] = UNCOLORED
        self._adj[b][a] = UNCOLORED
        self._uncolored.add(edge_key(a, b))
        self.m += 1

    def delete_edge(self, a: int, b: int) -> int:
        """Remove ``{a, b}``; returns the color it had."""
        c = self.color(a, b)
        self._set(a, b, UNCOLORED)
        del self._adj[a][b]
        del self._adj[b][a]
        self._uncolored.discard(edge_key(a, b))
        self.m -= 1
        return c

    def assign_color(self, a: int, b: int, c: int) -> None:
        """Color the currently uncolored edge ``{a, b}`` with ``c``."""
        old = self.color(a, b)
        if old != UNCOLORED:
            raise ColorConflictError(f"edge ({a}, {b}) already has color {old}")
        if not 1 <= c <= self.palette:
            raise PaletteError(f"color {c} outside palette 1..{self.palette}")
        for w in (a, b):
            if self._holder[w][c] >= 0:
                raise ColorConflictError(f"color {c} is already used at vertex {w}")
        self._set(a, b, c)

    def uncolor(self, a: int, b: int) -> int:
        """Remove the color of ``{a, b}``; returns the previous color."""
        old = self.color(a, b)
        self._set(a, b, UNCOLORED)
        return old

    def _set(self, a: int, b: int, c: int) -> None:
        old = self._adj[a][b]
        if old == c:
            return
        if old:
            for w in (a, b):
                self._holder[w][old] = -1
                self._free[w].add(old)
        self._adj[a][b] = c
        self._adj[b][a] = c
        key = edge_key(a, b)
        if c:
            self._holder[a][c] = b
            self._holder[b][c] = a
            self._free[a].discard(c)
            self._free[b].discard(c)
            self._uncolored.discard(key)
        else:
            self._uncolored.add(key)

    def apply_update(self, update: Update) -> None:
        if update.kind == "insert":
            self.insert_edge(update.u, update.v)
        elif update.kind == "delete":
            self.delete_edge(update.u, update.v)
        else:
            raise GraphError(f"unknown update kind {update.kind!r}")

    def shift_along_path(self, path: ShiftPath | Sequence[Edge]) -> int:
        """Shift colors along ``path``: each edge takes the color of its
        successor and the last edge ends uncolored.

        The first edge must be uncolored.  Steps are applied one at a time
        and each intermediate coloring must be proper; if any step would
        create a conflict nothing is changed and :class:`ShiftError` is
        raised.  Returns the number of distinct edges that received a color,
        which is ``len(path) - 1``.
        """
        if not isinstance(path, ShiftPath):
            path = ShiftPath(tuple(path))
        path.check_shape()
        for a, b in path.edges:
            if not self.has_edge(a, b):
                raise ShiftError(f"edge ({a}, {b}) of the path is not in the graph")
        if self.color(*path.first) != UNCOLORED:
            raise ShiftError(f"first edge {path.first} of the path must be uncolored")
        overlay = ColorOverlay(self)
        for e, f in zip(path.edges, path.edges[1:]):
            overlay.step(e, f)
        for (a, b), c in overlay.changes():
            self._set(a, b, UNCOLORED)
        for (a, b), c in overlay.changes():
            if c:
                self._set(a, b, c)
        return len(path) - 1

    # ------------------------------------------------------------ verification

    def verify_proper(self, allow_uncolored: int = 0) -> list[Violation]:
        return verify_proper(self, allow_uncolored)


def verify_proper(g: ColoredGraph, allow_uncolored: int = 0) -> list[Violation]:
    """Recompute every invariant from the adjacency maps and report breaches.

    An empty list means the coloring is proper, at most ``allow_uncolored``
    edges are uncolored, and the per-vertex indexes agree with the edges.
    """
    out: list[Violation] = []
    uncolored = set()
    edge_count = 0
    full = set(range(1, g.palette + 1))
    for v in range(g.n):
        nb = g._adj[v]
        if v in nb:
            out.append(Violation("self-loop", f"loop at {v}", (v,)))
        if len(nb) > g.delta:
            out.append(Violation("degree", f"vertex {v} has degree {len(nb)} > {g.delta}", (v,)))
        seen: dict[int, int] = {}
        for w, c in nb.items():
            if g._adj[w].get(v) != c:
                out.append(Violation("asymmetric", f"edge ({v}, {w}) stored inconsistently", (v, w)))
            if v < w:
                edge_count += 1
                if c == UNCOLORED:
                    uncolored.add((v, w))
            if c == UNCOLORED:
                continue
            if not 1 <= c <= g.palette:
                out.append(Violation("palette", f"edge ({v}, {w}) has color {c}", (v, w)))
                continue
            if c in seen:
                out.append(
                    Violation("conflict", f"color {c} used twice at {v} by {seen[c]} and {w}", (v, seen[c], w))
                )
            seen[c] = w
        for c in range(1, g.palette + 1):
            expected = seen.get(c, -1)
            if g._holder[v][c] != expected:
                out.append(Violation("index", f"holder[{v}][{c}] is {g._holder[v][c]}, expected {expected}", (v,)))
        if g._free[v] != full - set(seen):
            out.append(Violation("index", f"free set of {v} is stale", (v,)))
    if edge_count != g.m:
        out.append(Violation("index", f"edge counter {g.m} but {edge_count} edges stored"))
    if uncolored != g._uncolored:
        out.append(Violation("index", "uncolored-edge set is stale"))
    if len(uncolored) > allow_uncolored:
        out.append(Violation("uncolored", f"{len(uncolored)} uncolored edges, allowed {allow_uncolored}"))
    return out


class ColorOverlay:
    """Copy-on-write view of the edge colors of a graph.

    Used to simulate shifts without touching the graph.  Only edges whose
    color differs from the underlying graph are stored, so views along short
    paths are cheap to create and clone.
    """

    __slots__ = ("g", "_changed", "_at")

    def __init__(self, g: ColoredGraph) -> None:
        self.g = g
        self._changed: dict[Edge, int] = {}
        self._at: dict[int, dict[int, int]] = {}

    def clone(self) -> ColorOverlay:
        o = ColorOverlay.__new__(ColorOverlay)
        o.g = self.g
        o._changed = dict(self._changed)
        o._at = {v: dict(d) for v, d in self._at.items()}
        return o

    def changes(self) -> Iterable[tuple[Edge, int]]:
        return self._changed.items()

    def color(self, a: int, b: int) -> int:
        at = self._at.get(a)
        if at is not None and b in at:
            return at[b]
        return self.g._adj[a][b]

    def set(self, a: int, b: int, c: int) -> None:
        key = edge_key(a, b)
        if self.g._adj[a][b] == c:
            self._changed.pop(key, None)
            for x, y in ((a, b), (b, a)):
                d = self._at.get(x)
                if d is not None:
                    d.pop(y, None)
            return
        self._changed[key] = c
        self._at.setdefault(a, {})[b] = c
        self._at.setdefault(b, {})[a] = c

    def holder(self, v: int, c: int) -> int | None:
        """Neighbour of ``v`` across the edge that currently has color ``c``."""
        at = self._at.get(v)
        if at:
            for w, col in at.items():
                if col == c:
                    return w
            w = self.g._holder[v][c]
            if w >= 0 and w not in at:
                return w
            return None
        w = self.g._holder[v][c]
        return None if w < 0 else w

    def free(self, v: int) -> set[int]:
        """Colors currently unused at ``v``."""
        base = self.g._free[v]
        at = self._at.get(v)
        if not at:
            return set(base)
        s = set(base)
        adj = self.g._adj[v]
        for w in at:
            old = adj[w]
            if old:
                s.add(old)
        for col in at.values():
            if col:
                s.discard(col)
        return s

    def free_for_edge(self, a: int, b: int) -> list[int]:
        fa = self.free(a)
        fa.intersection_update(self.free(b))
        return sorted(fa)

    def step(self, e: Edge, f: Edge) -> None:
        """``e`` takes the current color of ``f`` and ``f`` becomes uncolored.

        ``e`` must be uncolored and share exactly one endpoint with ``f``.
        Raises :class:`ShiftError` if the step would create a conflict.
        """
        w = shared_endpoint(e, f)
        if w is None:
            raise ShiftError(f"edges {e} and {f} do not share exactly one endpoint")
        if self.color(*e) != UNCOLORED:
            raise ShiftError(f"edge {e} is not uncolored when shifting into it")
        c = self.color(*f)
        if c == UNCOLORED:
            raise ShiftError(f"edge {f} has no color to shift")
        x = e[0] if e[1] == w else e[1]
        if self.holder(x, c) is not None:
            raise ShiftError(f"color {c} of {f} is already used at {x}")
        self.set(*f, UNCOLORED)
        self.set(*e, c)
