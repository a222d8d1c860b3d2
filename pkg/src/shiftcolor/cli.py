"""``shiftcolor`` command line: workloads, engine runs, instances, oracles.

Output goes to ``--out`` or stdout.  When ``SHIFTCOLOR_OUT_DIR`` is set,
relative ``--out`` paths are resolved against it and a missing ``--out``
writes a default file name there.  Failures print one line
``error: <kind>: <message>`` on stderr and exit with status 1.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .adversary import gen_layered_instance, gen_separation_instance
from .engines import EngineConfig
from .errors import ColoringError, ConfigError
from .fileformat import read_instance, write_instance
from .harness import MODELS, WorkloadSpec, emit_metrics, gen_workload, read_workload, run_workload, write_workload
from .oracle import OracleBudget, min_recourse, min_shift_recourse

OUT_DIR_ENV = "SHIFTCOLOR_OUT_DIR"


def _b_value(text: str) -> int | str:
    if text == "auto":
        return text
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"--b takes 'auto' or an integer, got {text!r}") from None


def _write(args: argparse.Namespace, data: str | bytes, default_name: str) -> None:
    out_dir = os.environ.get(OUT_DIR_ENV)
    target = args.out
    if target is None and out_dir:
        target = default_name
    if target is None or target == "-":
        if isinstance(data, bytes):
            sys.stdout.buffer.write(data)
            sys.stdout.flush()
        else:
            sys.stdout.write(data)
        return
    path = Path(target)
    if out_dir and not path.is_absolute():
        path = Path(out_dir) / path
    path.parent.mkdir(parents=True, exist_ok=True)
    if isinstance(data, bytes):
        path.write_bytes(data)
    else:
        path.write_text(data)


def _config(args: argparse.Namespace) -> EngineConfig:
    return EngineConfig(
        args.engine,
        args.delta,
        args.c,
        b=args.b,
        adaptive=args.adaptive,
        alpha=args.alpha,
        epsilon=args.epsilon,
    )


def cmd_run(args: argparse.Namespace) -> int:
    if args.workload:
        header, ops = read_workload(Path(args.workload).read_text())
        n = args.n if args.n is not None else int(header.get("n", 0))
    else:
        if args.n is None:
            raise ConfigError("run needs --n or --workload")
        spec = WorkloadSpec(args.n, args.delta, args.ops, args.model, args.c, args.alpha, args.q,
                            delete_prob=args.delete_prob)
        ops = gen_workload(spec, args.seed)
        n = args.n
    metrics = run_workload(_config(args), ops, n, verify_every=args.verify_every, check_recourse=args.check_recourse)
    _write(args, emit_metrics(metrics, args.format), f"metrics.{args.format}")
    return 0


def cmd_gen_workload(args: argparse.Namespace) -> int:
    spec = WorkloadSpec(args.n, args.delta, args.ops, args.model, args.c, args.alpha, args.q,
                        delete_prob=args.delete_prob)
    ops = gen_workload(spec, args.seed)
    _write(args, write_workload(ops, spec.header(args.seed)), "workload.txt")
    return 0


def cmd_gen_instance(args: argparse.Namespace) -> int:
    if args.kind == "lower-bound":
        inst = gen_layered_instance(args.n, args.delta, args.c, args.alpha)
    else:
        inst = gen_separation_instance(args.n, args.delta, args.c, args.q)
    _write(args, write_instance(inst.graph, inst.metadata()), f"{args.kind}.txt")
    return 0


def cmd_oracle(args: argparse.Namespace) -> int:
    g, _ = read_instance(Path(args.instance).read_text())
    budget = OracleBudget(args.budget, args.max_states, args.timeout)
    solve = min_recourse if args.kind == "min" else min_shift_recourse
    _write(args, f"{solve(g, budget)}\n", f"oracle-{args.kind}.txt")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    g, _ = read_instance(Path(args.instance).read_text())
    bad = g.verify_proper(allow_uncolored=args.allow_uncolored)
    if not bad:
        _write(args, "ok\n", "verify.txt")
        return 0
    _write(args, "".join(f"violation {v}\n" for v in bad), "verify.txt")
    return 1


def _engine_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--engine", choices=["large-palette", "delta-minus-2", "no-handler"], default="large-palette")
    p.add_argument("--adaptive", action="store_true", help="keep every color within max endpoint degree + C")
    p.add_argument("--b", type=_b_value, default="auto", help="copy threshold for large-palette: auto or an integer")
    p.add_argument("--verify-every", type=int, default=0, metavar="K", help="check the whole coloring every K ops")
    p.add_argument("--check-recourse", action="store_true", help="recount changed edges after every op")
    p.add_argument("--format", choices=["csv", "json"], default="csv")


def _size_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int, help="vertex count")
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--c", type=int, default=0, help="extra colors beyond delta")
    p.add_argument("--alpha", type=int)
    p.add_argument("--epsilon", type=float)
    p.add_argument("--q", type=int, default=1)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="shiftcolor", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_out(p: argparse.ArgumentParser) -> None:
        p.add_argument("--out", help="output path ('-' for stdout)")

    p = sub.add_parser("run", help="replay a workload through an engine and emit metrics")
    _size_flags(p)
    _engine_flags(p)
    p.add_argument("--workload", help="workload file; otherwise one is generated")
    p.add_argument("--model", choices=MODELS, default="random-cap")
    p.add_argument("--ops", type=int, default=1000)
    p.add_argument("--delete-prob", type=float, default=0.0)
    p.add_argument("--seed", type=int, default=0)
    add_out(p)
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("gen-workload", help="write a seeded operation stream")
    _size_flags(p)
    p.add_argument("--model", choices=MODELS, default="random-cap")
    p.add_argument("--ops", type=int, default=1000)
    p.add_argument("--delete-prob", type=float, default=0.0)
    p.add_argument("--seed", type=int, default=0)
    add_out(p)
    p.set_defaults(func=cmd_gen_workload)

    p = sub.add_parser("gen-instance", help="write a hard instance file")
    p.add_argument("kind", choices=["lower-bound", "separation"])
    _size_flags(p)
    add_out(p)
    p.set_defaults(func=cmd_gen_instance)

    p = sub.add_parser("oracle", help="exact minimum recourse of an instance")
    p.add_argument("kind", choices=["min", "min-shift"])
    p.add_argument("instance")
    p.add_argument("--budget", type=int, default=64, help="largest recourse searched")
    p.add_argument("--max-states", type=int, default=5_000_000)
    p.add_argument("--timeout", type=float, default=600.0, help="seconds")
    add_out(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="check that an instance file is properly colored")
    p.add_argument("instance")
    p.add_argument("--allow-uncolored", type=int, default=1)
    add_out(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "n", 0) is None and args.command != "run":
        parser.error("--n is required")
    try:
        return args.func(args)
    except ColoringError as err:
        print(f"error: {err.kind}: {err}", file=sys.stderr)
    except OSError as err:
        print(f"error: io: {err}", file=sys.stderr)
    return 1


if __name__ == "__main__":
    sys.exit(main())
