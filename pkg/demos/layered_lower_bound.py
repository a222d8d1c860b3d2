"""A layered instance where every extension must recolor many edges.

Builds the two mirrored towers for growing depth, asks the exact oracle for
the cheapest extension, and lets the handler-free engine insert the
missing edge for comparison.
"""

from __future__ import annotations

from shiftcolor import Update
from shiftcolor.adversary import gen_layered_instance, recourse_floor
from shiftcolor.engines import EngineConfig
from shiftcolor.harness import run_workload
from shiftcolor.oracle import min_recourse


def main() -> None:
    sizes = gen_layered_instance(10**5, 4, 1, 1).layer_sizes
    cfg = EngineConfig("no-handler", 4, 1)
    print("depth  edges  floor  oracle  engine")
    for depth in range(3, 10):
        inst = gen_layered_instance(sum(sizes[: depth + 1]), 4, 1, 1)
        best = min_recourse(inst.graph)
        g = inst.graph.copy()
        g.delete_edge(*inst.uncolored)
        m = run_workload(cfg, [Update("insert", *inst.uncolored)], g.n, graph=g)
        print(f"{depth:5d}  {inst.graph.m:5d}  {recourse_floor(inst):5d}  {str(best):>6s}  {m.records[0].recolored:6d}")


if __name__ == "__main__":
    main()
