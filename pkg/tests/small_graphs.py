"""Exhaustive engine runs over every small graph and every insertion order.

A depth-first search over colored states of a host graph visits every
insertion order of every subset of its edges, because the engine's output
depends only on the current colored graph.  States are deduplicated on the
coloring, so each distinct situation is checked once.

Running the search on the subgraph-maximal members of a family therefore
covers every member of the family (in the labeling it inherits from its
host); :func:`hosts` also checks that claim explicitly.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher
from networkx.generators.atlas import graph_atlas_g

from shiftcolor import ColoredGraph
from shiftcolor.engines import EngineConfig, insert_edge
from shiftcolor.oracle import Exact, min_recourse

N = 6


def arboricity(G: nx.Graph) -> int:
    """Nash-Williams: max over vertex subsets of ceil(m_S / (|S| - 1))."""
    best = 0
    nodes = list(G)
    for r in range(2, len(nodes) + 1):
        for S in itertools.combinations(nodes, r):
            m = G.subgraph(S).number_of_edges()
            best = max(best, -(-m // (r - 1)))
    return best


def family(max_deg: int, max_arb: int | None = None) -> list[nx.Graph]:
    """Atlas graphs on at most N vertices with at least one edge, max degree
    at most ``max_deg`` and (optionally) arboricity at most ``max_arb``,
    padded with isolated vertices to N vertices."""
    out = []
    for G in graph_atlas_g():
        if not 1 <= G.number_of_nodes() <= N or G.number_of_edges() == 0:
            continue
        if max(d for _, d in G.degree()) > max_deg:
            continue
        if max_arb is not None and arboricity(G) > max_arb:
            continue
        H = nx.Graph(G)
        H.add_nodes_from(range(N))
        out.append(H)
    return out


def hosts(members: list[nx.Graph], max_deg: int, max_arb: int | None = None) -> list[nx.Graph]:
    """Members to which no edge can be added without leaving the family,
    after checking that every member embeds into one of them."""

    def allowed(H: nx.Graph) -> bool:
        if max(d for _, d in H.degree()) > max_deg:
            return False
        return max_arb is None or arboricity(H) <= max_arb

    tops = []
    for H in members:
        grown = False
        for a, b in itertools.combinations(range(N), 2):
            if H.has_edge(a, b):
                continue
            H.add_edge(a, b)
            ok = allowed(H)
            H.remove_edge(a, b)
            if ok:
                grown = True
                break
        if not grown:
            tops.append(H)
    for H in members:
        if not any(GraphMatcher(T, H).subgraph_is_monomorphic() for T in tops):
            raise AssertionError(f"{sorted(H.edges())} is not covered by any host graph")
    return tops


@dataclass
class SearchStats:
    states: int = 0
    insertions: int = 0
    oracle_calls: int = 0
    failures: list[str] = field(default_factory=list)
    recourse: Counter = field(default_factory=Counter)


def _key(g: ColoredGraph, edges: list[tuple[int, int]]) -> tuple[int, ...]:
    adj = g._adj
    return tuple(adj[a].get(b, -1) for a, b in edges)


def explore(cfg: EngineConfig, host: nx.Graph, stats: SearchStats) -> None:
    """Check every reachable colored state of ``host`` under ``cfg``.

    Each insertion must leave a proper full coloring, report exactly the
    edges it changed, and recolor no fewer edges than the exact minimum.
    """
    edges = sorted(tuple(sorted(e)) for e in host.edges())
    start = ColoredGraph(N, cfg.delta, cfg.extra)
    seen = {_key(start, edges)}
    stack = [start]
    while stack:
        g = stack.pop()
        stats.states += 1
        for e in edges:
            if g.has_edge(*e):
                continue
            h = g.copy()
            before = h.color_map()
            rep = insert_edge(cfg, h, *e)
            stats.insertions += 1
            stats.recourse[rep.recolored] += 1
            after = h.color_map()
            changed = sum(1 for f, c in before.items() if after[f] != c)
            if changed != rep.recolored:
                stats.failures.append(f"{cfg} {e}: reported {rep.recolored}, changed {changed}")
            if rep.recolored:
                probe = g.copy()
                probe.insert_edge(*e)
                best = min_recourse(probe)
                stats.oracle_calls += 1
                if not isinstance(best, Exact) or rep.recolored < best.value:
                    stats.failures.append(f"{cfg} {e}: engine {rep.recolored} vs oracle {best}")
            key = _key(h, edges)
            if key in seen:
                continue
            seen.add(key)
            bad = h.verify_proper()
            if bad:
                stats.failures.append(f"{cfg} {e}: {bad[0]}")
            stack.append(h)


def suite() -> list[tuple[EngineConfig, list[nx.Graph]]]:
    """Engine configurations paired with the host graphs they run on."""
    deg4 = hosts(family(4), 4)
    deg3 = hosts(family(3), 3)
    forests = hosts(family(4, 1), 4, 1)
    arb2 = hosts(family(4, 2), 4, 2)
    return [
        (EngineConfig("delta-minus-2", 4, 2), deg4),
        (EngineConfig("large-palette", 4, 4), deg4),
        (EngineConfig("large-palette", 3, 3), deg3),
        (EngineConfig("no-handler", 4, 2, alpha=1, epsilon=1.0), forests),
        (EngineConfig("no-handler", 4, 2, alpha=1, epsilon=1.0, adaptive=True), forests),
        (EngineConfig("no-handler", 4, 4, alpha=2, epsilon=0.5), arb2),
    ]
