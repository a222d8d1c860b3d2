"""Seeded workloads, engine runs with per-operation metrics, and metric files.

Workload files are line based::

    # workload model=forest n=100 delta=4 ops=99 seed=1
    insert 3 17
    delete 3 17

Metrics are emitted as CSV (one row per operation and a trailing
``# aggregates ...`` comment) or as JSON with ``ops`` and ``aggregates``.
"""

from __future__ import annotations

import csv
import io
import json
import random
import time
from dataclasses import asdict, dataclass, field, fields

from .adversary import gen_layered_instance, gen_separation_instance
from .engines import EngineConfig, delete_edge, insert_edge
from .errors import ColoringError, FormatError, InvariantViolation, WorkloadError
from .graph import ColoredGraph, Edge, Update, edge_key

WorkloadOp = Update

MODELS = ("random-cap", "forest", "lower-bound-replay", "separation-replay")


@dataclass(frozen=True)
class WorkloadSpec:
    """What to generate.

    ``insert_prob`` steers random-cap (the rest are deletions) and
    ``delete_prob`` lets the forest model delete.  ``extra``, ``alpha`` and
    ``q`` parameterize the replayed instances, which always emit every edge
    of the instance and ignore ``ops``.
    """

    n: int
    delta: int
    ops: int
    model: str = "random-cap"
    extra: int = 0
    alpha: int | None = None
    q: int = 1
    insert_prob: float = 0.75
    delete_prob: float = 0.0

    def header(self, seed: int) -> str:
        return f"# workload model={self.model} n={self.n} delta={self.delta} ops={self.ops} seed={seed}"


class _Bag:
    """Set with O(1) add, remove and uniform sampling."""

    def __init__(self, items=()) -> None:
        self.items: list[int] = []
        self.pos: dict[int, int] = {}
        for x in items:
            self.add(x)

    def __len__(self) -> int:
        return len(self.items)

    def __contains__(self, x: int) -> bool:
        return x in self.pos

    def add(self, x: int) -> None:
        if x not in self.pos:
            self.pos[x] = len(self.items)
            self.items.append(x)

    def remove(self, x: int) -> None:
        i = self.pos.pop(x, None)
        if i is None:
            return
        last = self.items.pop()
        if i < len(self.items):
            self.items[i] = last
            self.pos[last] = i

    def sample(self, rng: random.Random) -> int:
        return self.items[rng.randrange(len(self.items))]


class _Simple:
    """Edge set with degrees, enough to generate legal operation streams."""

    def __init__(self, n: int, delta: int) -> None:
        self.delta = delta
        self.adj: list[set[int]] = [set() for _ in range(n)]
        self.edges = _EdgeBag()
        self.open = _Bag(range(n)) if delta > 0 else _Bag()

    def insert(self, a: int, b: int) -> None:
        self.adj[a].add(b)
        self.adj[b].add(a)
        self.edges.add(edge_key(a, b))
        for w in (a, b):
            if len(self.adj[w]) >= self.delta:
                self.open.remove(w)

    def delete(self, a: int, b: int) -> None:
        self.adj[a].discard(b)
        self.adj[b].discard(a)
        self.edges.remove(edge_key(a, b))
        self.open.add(a)
        self.open.add(b)


class _EdgeBag:
    def __init__(self) -> None:
        self.items: list[Edge] = []
        self.pos: dict[Edge, int] = {}

    def __len__(self) -> int:
        return len(self.items)

    def add(self, e: Edge) -> None:
        self.pos[e] = len(self.items)
        self.items.append(e)

    def remove(self, e: Edge) -> None:
        i = self.pos.pop(e)
        last = self.items.pop()
        if i < len(self.items):
            self.items[i] = last
            self.pos[last] = i

    def sample(self, rng: random.Random) -> Edge:
        return self.items[rng.randrange(len(self.items))]


def _random_cap(spec: WorkloadSpec, rng: random.Random) -> list[WorkloadOp]:
    g = _Simple(spec.n, spec.delta)
    out: list[WorkloadOp] = []
    for _ in range(spec.ops):
        pair = None
        if rng.random() < spec.insert_prob or not len(g.edges):
            for _ in range(64):
                if len(g.open) < 2:
                    break
                a, b = g.open.sample(rng), g.open.sample(rng)
                if a != b and b not in g.adj[a]:
                    pair = edge_key(a, b)
                    break
        if pair is not None:
            g.insert(*pair)
            out.append(WorkloadOp("insert", *pair))
        elif len(g.edges):
            e = g.edges.sample(rng)
            g.delete(*e)
            out.append(WorkloadOp("delete", *e))
        else:
            raise WorkloadError(f"no legal operation on n={spec.n}, delta={spec.delta}")
    return out


def _forest(spec: WorkloadSpec, rng: random.Random) -> list[WorkloadOp]:
    """Random forest under insertions and (optionally) deletions.

    Each vertex carries a component label.  Merging relabels the smaller
    side; a deletion gives the side containing the first endpoint a fresh
    label.
    """
    n = spec.n
    if spec.delta < 1 or n < 1:
        raise WorkloadError("the forest model needs n >= 1 and delta >= 1")
    if spec.delete_prob <= 0 and spec.ops > n - 1:
        raise WorkloadError(f"a forest on {n} vertices has at most {n - 1} edges; {spec.ops} inserts requested")
    g = _Simple(n, spec.delta)
    comp = list(range(n))
    members: dict[int, list[int]] = {i: [i] for i in range(n)}
    fresh = n
    out: list[WorkloadOp] = []

    def split(a: int) -> None:
        nonlocal fresh
        seen = {a}
        stack = [a]
        while stack:
            w = stack.pop()
            for z in g.adj[w]:
                if z not in seen:
                    seen.add(z)
                    stack.append(z)
        old = comp[a]
        members[old] = [w for w in members[old] if w not in seen]
        members[fresh] = sorted(seen)
        for w in seen:
            comp[w] = fresh
        fresh += 1

    for _ in range(spec.ops):
        want_delete = len(g.edges) and (len(members) == 1 or rng.random() < spec.delete_prob)
        pair = None
        if not want_delete:
            for _ in range(4 * n + 64):
                a, b = g.open.sample(rng), g.open.sample(rng)
                if comp[a] != comp[b]:
                    pair = edge_key(a, b)
                    break
        if pair is not None:
            a, b = pair
            g.insert(a, b)
            ca, cb = comp[a], comp[b]
            if len(members[ca]) < len(members[cb]):
                ca, cb = cb, ca
            for w in members[cb]:
                comp[w] = ca
            members[ca].extend(members.pop(cb))
            out.append(WorkloadOp("insert", a, b))
        elif len(g.edges) and (want_delete or spec.delete_prob > 0):
            a, b = g.edges.sample(rng)
            g.delete(a, b)
            split(a)
            out.append(WorkloadOp("delete", a, b))
        else:
            raise WorkloadError("forest model could not find a legal insertion")
    return out


def _replay(graph: ColoredGraph, uncolored: Edge) -> list[WorkloadOp]:
    last = edge_key(*uncolored)
    ops = [WorkloadOp("insert", a, b) for a, b, _ in graph.edges() if (a, b) != last]
    ops.append(WorkloadOp("insert", *last))
    return ops


def gen_workload(spec: WorkloadSpec, seed: int) -> list[WorkloadOp]:
    """Deterministic operation stream for ``spec`` and ``seed``."""
    if spec.model not in MODELS:
        raise WorkloadError(f"unknown workload model {spec.model!r}; choose from {', '.join(MODELS)}")
    if spec.n < 1 or spec.delta < 1 or spec.ops < 0:
        raise WorkloadError(f"invalid workload size n={spec.n}, delta={spec.delta}, ops={spec.ops}")
    rng = random.Random(seed)
    if spec.model == "random-cap":
        return _random_cap(spec, rng)
    if spec.model == "forest":
        return _forest(spec, rng)
    try:
        if spec.model == "lower-bound-replay":
            inst = gen_layered_instance(spec.n, spec.delta, spec.extra, spec.alpha)
        else:
            inst = gen_separation_instance(spec.n, spec.delta, spec.extra, spec.q)
    except ColoringError as err:
        raise WorkloadError(f"cannot build the replayed instance: {err}") from err
    return _replay(inst.graph, inst.uncolored)


def write_workload(ops: list[WorkloadOp], header: str = "# workload") -> str:
    lines = [header] + [f"{op.kind} {op.u} {op.v}" for op in ops]
    return "\n".join(lines) + "\n"


def read_workload(text: str) -> tuple[dict[str, str], list[WorkloadOp]]:
    """Parse a workload file into its header fields and operations."""
    header: dict[str, str] = {}
    ops: list[WorkloadOp] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            for tok in line[1:].split():
                key, sep, value = tok.partition("=")
                if sep:
                    header[key] = value
            continue
        parts = line.split()
        if len(parts) != 3 or parts[0] not in ("insert", "delete"):
            raise FormatError(f"line {lineno}: expected 'insert u v' or 'delete u v', got {raw!r}")
        try:
            ops.append(WorkloadOp(parts[0], int(parts[1]), int(parts[2])))
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer vertex in {raw!r}") from None
    return header, ops


@dataclass
class OpRecord:
    index: int
    kind: str
    u: int
    v: int
    recolored: int
    path_len: int
    tree_depth: int
    nanos: int


COLUMNS = [f.name for f in fields(OpRecord)]


@dataclass
class Metrics:
    records: list[OpRecord] = field(default_factory=list)
    violations: int = 0

    def aggregates(self) -> dict[str, float | int]:
        rec = [r.recolored for r in self.records]
        return {
            "ops": len(self.records),
            "max_recourse": max(rec, default=0),
            "mean_recourse": sum(rec) / len(rec) if rec else 0.0,
            "max_path_len": max((r.path_len for r in self.records), default=0),
            "max_depth": max((r.tree_depth for r in self.records), default=0),
            "total_recolorings": sum(rec),
            "violations": self.violations,
        }


def _changed(before: dict[Edge, int], after: dict[Edge, int], skip: Edge) -> int:
    return sum(1 for e, c in before.items() if e != skip and e in after and after[e] != c)


def run_workload(
    cfg: EngineConfig,
    ops: list[WorkloadOp],
    n: int,
    verify_every: int = 0,
    check_recourse: bool = False,
    graph: ColoredGraph | None = None,
) -> Metrics:
    """Replay ``ops`` through the engine on an ``n``-vertex graph.

    Every ``verify_every`` operations (and after the last one) the coloring
    is checked from scratch; with ``check_recourse`` every reported count is
    compared with a recount of changed edges.  Failures raise with the index
    of the offending operation.
    """
    g = graph if graph is not None else ColoredGraph(n, cfg.delta, cfg.extra)
    metrics = Metrics()
    for i, op in enumerate(ops):
        before = g.color_map() if check_recourse else None
        start = time.perf_counter_ns()
        try:
            if op.kind == "insert":
                report = insert_edge(cfg, g, op.u, op.v)
            elif op.kind == "delete":
                report = delete_edge(cfg, g, op.u, op.v)
            else:
                raise WorkloadError(f"unknown operation kind {op.kind!r}")
        except ColoringError as err:
            raise type(err)(f"op {i} ({op.kind} {op.u} {op.v}): {err}") from err
        nanos = time.perf_counter_ns() - start
        if before is not None:
            recount = _changed(before, g.color_map(), edge_key(op.u, op.v))
            if recount != report.recolored:
                raise InvariantViolation(f"op {i}: engine reported {report.recolored} recolored edges, recount gives {recount}")
        metrics.records.append(
            OpRecord(i, op.kind, op.u, op.v, report.recolored, report.path_len, report.tree_depth, nanos)
        )
        if verify_every and ((i + 1) % verify_every == 0 or i + 1 == len(ops)):
            bad = g.verify_proper()
            if bad:
                metrics.violations += len(bad)
                listed = "; ".join(str(v) for v in bad[:5])
                raise InvariantViolation(f"op {i}: coloring check failed with {len(bad)} violations: {listed}")
    return metrics


def emit_metrics(m: Metrics, fmt: str = "csv") -> bytes:
    if fmt == "json":
        doc = {"ops": [asdict(r) for r in m.records], "aggregates": m.aggregates()}
        return (json.dumps(doc, indent=1) + "\n").encode()
    if fmt != "csv":
        raise FormatError(f"unknown metrics format {fmt!r}")
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(COLUMNS)
    for r in m.records:
        w.writerow([getattr(r, c) for c in COLUMNS])
    if m.records:
        agg = " ".join(f"{k}={v}" for k, v in m.aggregates().items())
        buf.write(f"# aggregates {agg}\n")
    return buf.getvalue().encode()


def _record(row: dict) -> OpRecord:
    try:
        return OpRecord(**{c: (row[c] if c == "kind" else int(row[c])) for c in COLUMNS})
    except (KeyError, ValueError, TypeError) as err:
        raise FormatError(f"bad metrics row {row!r}: {err}") from None


def parse_metrics(data: bytes, fmt: str = "csv") -> Metrics:
    """Inverse of :func:`emit_metrics`; the violation count comes from the
    aggregates when present."""
    text = data.decode()
    m = Metrics()
    if fmt == "json":
        doc = json.loads(text)
        m.records = [_record(r) for r in doc.get("ops", [])]
        m.violations = int(doc.get("aggregates", {}).get("violations", 0))
        return m
    if fmt != "csv":
        raise FormatError(f"unknown metrics format {fmt!r}")
    lines = text.splitlines()
    body = [ln for ln in lines if not ln.startswith("#")]
    reader = csv.DictReader(body)
    if reader.fieldnames is None or list(reader.fieldnames) != COLUMNS:
        raise FormatError(f"metrics header must be {','.join(COLUMNS)}")
    m.records = [_record(r) for r in reader]
    for ln in lines:
        if ln.startswith("# aggregates"):
            for tok in ln.split()[2:]:
                key, _, value = tok.partition("=")
                if key == "violations":
                    m.violations = int(value)
    return m
