"""Command-line surface: run, gen, verify, bench."""

from __future__ import annotations

import argparse
import csv
import gc
import sys

from .adversary import GENERATORS, gen_cycle_churn, gen_high_girth, gen_random
from .core import GraphError, Thresholds
from .streamio import StreamParseError, parse_stream, run_stream, serialize_stream


def _load_stream(path: str):
    with open(path, "r", encoding="utf-8") as f:
        return parse_stream(f.read())


def _cmd_run(args) -> int:
    stream = _load_stream(args.stream)
    trace_file = open(args.trace, "w", encoding="utf-8") if args.trace else None
    try:
        engine = run_stream(stream, trace_out=trace_file, check=args.check)
    except GraphError as exc:
        print(f"FAIL: {exc}", file=sys.stderr)
        return 1
    finally:
        if trace_file:
            trace_file.close()
    m = engine.metrics
    print(
        f"ok: {m.updates_applied} updates, max discrepancy "
        f"{m.max_discrepancy_ever}, max recourse {m.max_recourse_single_update}, "
        f"total recourse {m.total_recourse}"
    )
    return 0


def _cmd_gen(args) -> int:
    name = args.generator
    if name == "random":
        stream = gen_random(args.n, args.steps, args.p_delete, args.seed)
    elif name == "high_girth":
        stream = gen_high_girth(args.n, args.steps, args.seed)
    elif name == "cycle_churn":
        stream = gen_cycle_churn(args.n, args.steps, args.seed)
    else:
        print(f"unknown generator {name!r}", file=sys.stderr)
        return 2
    text = serialize_stream(stream)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_bench(args) -> int:
    rows = []
    for n in args.n_list:
        limits = Thresholds.for_size(n)
        for seed in range(args.seeds):
            if args.generator == "random":
                stream = gen_random(n, args.steps, args.p_delete, seed)
            elif args.generator == "high_girth":
                stream = gen_high_girth(n, args.steps, seed)
            else:
                stream = gen_cycle_churn(n, args.steps, seed)
            try:
                engine = run_stream(stream)
            except GraphError as exc:
                print(f"FAIL n={n} seed={seed}: {exc}", file=sys.stderr)
                return 1
            m = engine.metrics
            rows.append(
                {
                    "n": n,
                    "seed": seed,
                    "generator": args.generator,
                    "updates": m.updates_applied,
                    "max_discrepancy": m.max_discrepancy_ever,
                    "max_recourse": m.max_recourse_single_update,
                    "recourse_per_log2": round(
                        m.max_recourse_single_update / limits.log**2, 4
                    ),
                    "amortized_recourse": round(
                        m.total_recourse / max(1, m.updates_applied), 4
                    ),
                }
            )
    fields = list(rows[0]) if rows else []
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="") as f:
            w = csv.DictWriter(f, fieldnames=fields)
            w.writeheader()
            w.writerows(rows)
    for row in rows:
        print("  ".join(f"{k}={row[k]}" for k in fields))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="dynorient",
        description="Fully-dynamic low-discrepancy edge orientation harness",
    )
    sub = p.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="apply a stream file, emit a trace")
    run.add_argument("stream")
    run.add_argument("--trace", help="write JSON-lines trace to this path")
    run.add_argument(
        "--check", action="store_true", help="full oracle sweep after every update"
    )
    run.set_defaults(func=_cmd_run, check=False)

    ver = sub.add_parser("verify", help="run with the full oracle sweep enabled")
    ver.add_argument("stream")
    ver.set_defaults(func=_cmd_run, trace=None, check=True)

    gen = sub.add_parser("gen", help="generate a stream file")
    gen.add_argument("generator", choices=sorted(GENERATORS))
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--steps", type=int, required=True)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--p-delete", type=float, default=0.3)
    gen.add_argument("--out")
    gen.set_defaults(func=_cmd_gen)

    bench = sub.add_parser("bench", help="metrics table across sizes and seeds")
    bench.add_argument(
        "--n-list",
        type=lambda s: [int(x) for x in s.split(",")],
        default=[8, 16, 32, 64],
    )
    bench.add_argument("--steps", type=int, default=2000)
    bench.add_argument("--seeds", type=int, default=3)
    bench.add_argument("--generator", choices=sorted(GENERATORS), default="random")
    bench.add_argument("--p-delete", type=float, default=0.3)
    bench.add_argument("--csv")
    bench.set_defaults(func=_cmd_bench)
    return p


def main(argv=None) -> int:
    # batch process with no reference cycles; the collector only adds
    # large pauses once the live graph state grows
    gc.disable()
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except StreamParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
