"""Command-line harness: generate | exact | approx | dynamic."""

from __future__ import annotations

import argparse
import json
import logging
import random
import sys
import time
from pathlib import Path

from .dynamic import dynamic_init
from .evaluation import build_scenario, compute_accuracy, time_restart
from .graph import (
    GraphError,
    generate_dorogovtsev_mendes,
    is_connected,
    largest_component,
    read_edge_list,
    write_edge_list,
    write_scores,
)
from .static import brandes_exact, rk_scores

log = logging.getLogger("incbc")

EXIT_USAGE = 2
EXIT_INPUT = 3

BATCH_HEADER = "batch,update_seconds,restart_seconds,max_abs_err,mean_abs_err,max_rank_err"


class UsageError(Exception):
    pass


def _load(args):
    """Read the input graph, keeping only its largest component if needed."""
    g = read_edge_list(args.input, weighted=args.weighted)
    labels = None
    if not is_connected(g):
        h, labels = largest_component(g)
        log.warning("input is disconnected; keeping the largest component (%d of %d nodes)",
                    h.n, g.n)
        g = h
    if g.n < 2:
        raise GraphError("input graph needs at least two connected nodes")
    return g, labels


def _fmt(x) -> str:
    return "" if x is None else f"{x:.9f}"


def cmd_generate(args):
    if args.n < 3:
        raise UsageError("-n must be at least 3")
    g = generate_dorogovtsev_mendes(args.n, args.weighted, args.seed)
    write_edge_list(args.output, g)
    print(json.dumps({"nodes": g.n, "edges": g.m, "weighted": g.weighted}))


def cmd_exact(args):
    g, labels = _load(args)
    t0 = time.perf_counter()
    scores = brandes_exact(g)
    elapsed = time.perf_counter() - t0
    write_scores(args.output, scores, labels)
    print(json.dumps({"nodes": g.n, "edges": g.m, "seconds": round(elapsed, 6)}))


def cmd_approx(args):
    g, labels = _load(args)
    rng = random.Random(args.seed)
    t0 = time.perf_counter()
    scores = rk_scores(g, args.epsilon, args.delta, rng)
    elapsed = time.perf_counter() - t0
    write_scores(args.output, scores, labels)
    print(json.dumps({"nodes": g.n, "edges": g.m, "seconds": round(elapsed, 6)}))


def cmd_dynamic(args):
    if args.batch_size < 1 or args.batches < 1:
        raise UsageError("--batch-size and --batches must be positive")
    if not 0 < args.removal_fraction < 1:
        raise UsageError("--removal-fraction must lie in (0, 1)")
    if args.parallel:
        log.warning("--parallel is not supported in this build; running sequentially")
    g, labels = _load(args)
    scenario = build_scenario(g, args.removal_fraction, args.batch_size, args.batches,
                              seed=args.seed)
    state = dynamic_init(scenario.reduced, args.epsilon, args.delta, seed=args.seed)
    out = Path(args.output)
    rows = [BATCH_HEADER]
    check = state.graph.n <= args.oracle_ceiling
    for k, batch in enumerate(scenario.batches, 1):
        t0 = time.perf_counter()
        report = state.update_batch(batch)
        update_s = time.perf_counter() - t0
        restart_s = None
        if args.compare_restart:
            restart_s = time_restart(state.graph, args.epsilon, args.delta,
                                     seed=(args.seed or 0) * 1_000_003 + k)
        scores = state.scores.scores()
        acc = compute_accuracy(brandes_exact(state.graph), scores) if check else None
        if args.no_timing:
            update_s = None
            restart_s = None
        rows.append(",".join([
            str(k), _fmt(update_s), _fmt(restart_s),
            _fmt(acc.max_abs_error if acc else None),
            _fmt(acc.mean_abs_error if acc else None),
            _fmt(acc.max_rank_error if acc else None),
        ]))
        write_scores(out.with_name(f"{out.stem}_batch{k}_scores.csv"), scores, labels)
        summary = {
            "batch": k,
            "applied": len(report.applied),
            "resampled": len(report.resampled),
            "affected_nodes": report.stats.affected_nodes,
            "update_seconds": update_s,
            "restart_seconds": restart_s,
            "max_abs_err": acc.max_abs_error if acc else None,
            "mean_abs_err": acc.mean_abs_error if acc else None,
            "max_rank_err": acc.max_rank_error if acc else None,
        }
        print(json.dumps(summary))
    out.write_text("\n".join(rows) + "\n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="incbc", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write a Dorogovtsev-Mendes edge list")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--weighted", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", required=True)
    p.set_defaults(func=cmd_generate)

    def common(p, sampling=True):
        p.add_argument("--input", required=True)
        p.add_argument("--output", required=True)
        p.add_argument("--weighted", action="store_true")
        if sampling:
            p.add_argument("--epsilon", type=float, default=0.05)
            p.add_argument("--delta", type=float, default=0.1)
            p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("exact", help="exact betweenness")
    common(p, sampling=False)
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("approx", help="sampled betweenness on a static graph")
    common(p)
    p.set_defaults(func=cmd_approx)

    p = sub.add_parser("dynamic", help="replay removed edges in batches")
    common(p)
    p.add_argument("--removal-fraction", type=float, default=0.01)
    p.add_argument("--batch-size", type=int, default=8)
    p.add_argument("--batches", type=int, default=4)
    p.add_argument("--oracle-ceiling", type=int, default=2000)
    p.add_argument("--compare-restart", action="store_true")
    p.add_argument("--parallel", action="store_true")
    p.add_argument("--no-timing", action="store_true",
                   help="leave timing columns empty so reruns are byte-identical")
    p.set_defaults(func=cmd_dynamic)
    return parser


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)
    for name in ("epsilon", "delta"):
        val = getattr(args, name, None)
        if val is not None and not 0 < val < 1:
            parser.error(f"--{name} must lie in (0, 1)")
    try:
        args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except (GraphError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return 0


if __name__ == "__main__":
    sys.exit(main())
