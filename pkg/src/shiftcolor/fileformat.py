"""Plain-text instance files.

Layout::

    n 12
    delta 4
    c 1
    # L=2
    edge 0 1 0
    edge 0 2 3

Header lines come first, then ``# key=value`` metadata comments, then one
``edge u v color`` line per edge (``u < v``, sorted, color ``0`` when
uncolored).  Other ``#`` lines are ignored on read.  Writing the result of a
read reproduces a canonical file byte for byte.
"""

from __future__ import annotations

from .errors import ColoringError, FormatError
from .graph import ColoredGraph


def write_instance(g: ColoredGraph, metadata: dict[str, object] | None = None) -> str:
    lines = [f"n {g.n}", f"delta {g.delta}", f"c {g.extra}"]
    for key, value in (metadata or {}).items():
        if "=" in key or "\n" in str(value):
            raise FormatError(f"metadata entry {key!r} cannot be written")
        lines.append(f"# {key}={value}")
    lines.extend(f"edge {a} {b} {c}" for a, b, c in g.edges())
    return "\n".join(lines) + "\n"


def read_instance(text: str) -> tuple[ColoredGraph, dict[str, str]]:
    """Parse an instance file; returns the graph and its metadata comments."""
    header: dict[str, int] = {}
    metadata: dict[str, str] = {}
    edges: list[tuple[int, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            key, sep, value = body.partition("=")
            if sep and key and " " not in key:
                metadata[key] = value
            continue
        parts = line.split()
        try:
            if parts[0] in ("n", "delta", "c") and len(parts) == 2:
                if edges:
                    raise FormatError(f"line {lineno}: header after edges")
                header[parts[0]] = int(parts[1])
            elif parts[0] == "edge" and len(parts) == 4:
                edges.append((int(parts[1]), int(parts[2]), int(parts[3])))
            else:
                raise FormatError(f"line {lineno}: cannot parse {raw!r}")
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer field in {raw!r}") from None
    missing = {"n", "delta", "c"} - header.keys()
    if missing:
        raise FormatError(f"missing header fields: {', '.join(sorted(missing))}")
    try:
        g = ColoredGraph(header["n"], header["delta"], header["c"])
        for a, b, _ in edges:
            g.insert_edge(a, b)
        for a, b, c in edges:
            if c:
                g.assign_color(a, b, c)
    except ColoringError as err:
        raise FormatError(f"invalid instance: {err}") from err
    return g, metadata
