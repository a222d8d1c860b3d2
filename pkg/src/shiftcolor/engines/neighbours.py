"""Good and bad neighbouring edges.

Moving the color of ``e`` onto an adjacent edge ``e'`` (ignoring the far end
of ``e'``) either leaves ``e`` with some free color, in which case ``e'`` is
good, or it does not and ``e'`` is bad.  An edge whose whole neighbourhood
(together with ``e`` itself) uses every color is dangerous.
"""

from __future__ import annotations

from ..graph import ColoredGraph, Edge, edge_key, shared_endpoint


def _neighbour_colors(g: ColoredGraph, e: Edge, replace: Edge | None = None, with_color: int = 0) -> set[int]:
    a, b = e
    used = set()
    for w in (a, b):
        for z, c in g.neighbours(w).items():
            f = edge_key(w, z)
            if f == e:
                continue
            if f == replace:
                c = with_color
            if c:
                used.add(c)
    return used


def classify_neighbour(g: ColoredGraph, e: Edge, other: Edge) -> str:
    """``"good"`` or ``"bad"`` for an edge ``other`` sharing an endpoint with ``e``."""
    e, other = edge_key(*e), edge_key(*other)
    if shared_endpoint(e, other) is None:
        raise ValueError(f"{e} and {other} are not adjacent")
    used = _neighbour_colors(g, e, other, g.color(*e))
    return "good" if len(used) < g.palette else "bad"


def is_dangerous(g: ColoredGraph, e: Edge) -> bool:
    """True when every palette color appears on ``e`` or an adjacent edge."""
    e = edge_key(*e)
    used = _neighbour_colors(g, e)
    if g.color(*e):
        used.add(g.color(*e))
    return len(used) == g.palette


def bad_colors(g: ColoredGraph, e: Edge) -> set[int]:
    """Colors present at both endpoints of a dangerous edge ``e``.

    Exactly these colors make their neighbours bad: moving ``e``'s color onto
    an edge of such a color keeps the other copy around.
    """
    e = edge_key(*e)
    if not is_dangerous(g, e):
        return set()
    a, b = e
    at_a = {c for z, c in g.neighbours(a).items() if z != b and c}
    at_b = {c for z, c in g.neighbours(b).items() if z != a and c}
    return at_a & at_b


def bad_color_count_bound(g: ColoredGraph, e: Edge) -> int:
    """``(deg a - 1) + (deg b - 1) - (palette - 1)``: an upper bound on the
    number of bad colors of ``e = (a, b)``, attained when ``e`` is colored and
    dangerous."""
    a, b = e
    return (g.degree(a) - 1) + (g.degree(b) - 1) - (g.palette - 1)
