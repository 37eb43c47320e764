"""Command-line entry point.

Exit codes: 0 success, 1 I/O or precondition error, 2 verification failure,
3 algorithm stuck or infeasible.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from .antiresolving import Flavor, anonymity_value, is_transformation
from .errors import (GraphError, InfeasibleError, PreconditionError, PruningMismatchError,
                     StuckError)
from .io import generate_random, load_graph, serialize_edge_list, write_edge_list
from .loss import compute_loss
from .transform_2ell import transform_2ell
from .transform_k1 import transform_k1

SCHEMA = 1

EXIT_OK, EXIT_ERROR, EXIT_VERIFY, EXIT_STUCK = 0, 1, 2, 3

log = logging.getLogger("antiresolve")


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _emit(obj, report_path=None, out=None) -> None:
    text = _dump(obj)
    (out or sys.stdout).write(text)
    if report_path:
        Path(report_path).write_text(text, encoding="utf-8")


def _threads(args) -> int:
    if args.threads is not None:
        return args.threads
    return int(os.environ.get("ANTIRESOLVE_THREADS", "1"))


def _labels(g, ids):
    return [g.label(v) for v in ids]


def cmd_analyze(args) -> int:
    g = load_graph(args.input)
    rep = anonymity_value(g, args.ell, Flavor(args.mode), threads=_threads(args))
    out = {"schema": SCHEMA, "input": args.input, "n": g.n, "m": g.m}
    out.update(rep.to_dict(g))
    if args.plot:
        from .plotting import plot_antiresolving_values
        plot_antiresolving_values(g, args.ell, args.plot, Flavor(args.mode))
        out["figure"] = str(args.plot)
    _emit(out, args.report)
    return EXIT_OK


def _finish_transform(args, g, g2, script, extra, k, ell, plot_k=None) -> int:
    check = is_transformation(g, g2, k, ell, Flavor.ADJACENCY)
    out = {"schema": SCHEMA, "command": args.command, "input": args.input, "n": g.n,
           "k": k, "ell": ell}
    out.update(extra)
    out["script"] = script.to_list()
    out["loss"] = compute_loss(g, g2).to_dict()
    out["verification"] = check.to_dict()
    out["status"] = "ok" if check.holds else "verification_failed"
    if check.holds and args.output:
        write_edge_list(g2, args.output)
        out["output"] = str(args.output)
    if args.plot:
        from .plotting import plot_degree_shift
        plot_degree_shift(g, g2, args.plot, k=plot_k, title=args.command)
        out["figure"] = str(args.plot)
    _emit(out, args.report)
    return EXIT_OK if check.holds else EXIT_VERIFY


def cmd_transform_k1(args) -> int:
    g = load_graph(args.input)
    try:
        g2, script, rep = transform_k1(g, args.k)
    except InfeasibleError as exc:
        _emit({"schema": SCHEMA, "command": args.command, "status": "infeasible",
               "error": str(exc), "vertex": exc.vertex, "phase": exc.phase}, args.report)
        return EXIT_STUCK
    return _finish_transform(args, g, g2, script, {"k1_report": rep.to_dict()},
                             args.k, 1, plot_k=args.k)


def cmd_transform_2ell(args) -> int:
    g = load_graph(args.input)
    try:
        g2, script, rep = transform_2ell(g, args.ell, prune_enabled=not args.no_prune,
                                         paranoid=args.paranoid, rescore=args.rescore)
    except StuckError as exc:
        _emit({"schema": SCHEMA, "command": args.command, "status": "stuck",
               "error": str(exc), "residual": [list(s) for s in exc.residual],
               "residual_labels": [_labels(g, s) for s in exc.residual],
               "script": exc.script.to_list() if exc.script else []}, args.report)
        return EXIT_STUCK
    except PruningMismatchError as exc:
        _emit({"schema": SCHEMA, "command": args.command, "status": "prune_mismatch",
               "error": str(exc)}, args.report)
        return EXIT_STUCK
    log.info("pruning skipped %.1f%% of re-break checks", 100 * rep.stats.skipped_fraction)
    return _finish_transform(args, g, g2, script, {"two_ell_report": rep.to_dict()}, 2, args.ell)


def cmd_verify(args) -> int:
    g1 = load_graph(args.original)
    g2 = load_graph(args.published)
    check = is_transformation(g1, g2, args.k, args.ell, Flavor(args.mode))
    out = {"schema": SCHEMA, "original": args.original, "published": args.published,
           "k": args.k, "ell": args.ell, "mode": args.mode}
    out.update(check.to_dict())
    _emit(out, args.report)
    return EXIT_OK if check.holds else EXIT_VERIFY


def cmd_gen(args) -> int:
    g = generate_random(args.n, args.p, args.seed)
    if args.output:
        write_edge_list(g, args.output)
    else:
        sys.stdout.write(serialize_edge_list(g))
    return EXIT_OK


def cmd_loss(args) -> int:
    g1 = load_graph(args.original)
    g2 = load_graph(args.published)
    out = {"schema": SCHEMA}
    out.update(compute_loss(g1, g2).to_dict())
    _emit(out, args.report)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="antiresolve",
                                description="Active-attack anonymity analysis and repair for graphs.")
    p.add_argument("--threads", type=int, default=None,
                   help="worker processes for subset enumeration (env ANTIRESOLVE_THREADS)")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_in(sp, name="--input"):
        sp.add_argument(name, required=True, help="edge-list path or fixture name")

    a = sub.add_parser("analyze", help="compute (k, ell)-(adjacency) anonymity")
    graph_in(a)
    a.add_argument("--ell", type=int, default=1)
    a.add_argument("--mode", choices=[f.value for f in Flavor], default="adjacency")
    a.add_argument("--report")
    a.add_argument("--plot", help="write a histogram of antiresolving values (PNG)")
    a.set_defaults(func=cmd_analyze)

    t1 = sub.add_parser("transform-k1", help="degree-window repair for one sybil")
    graph_in(t1)
    t1.add_argument("--k", type=int, required=True)
    t1.add_argument("--output")
    t1.add_argument("--report")
    t1.add_argument("--plot", help="write a before/after degree figure (PNG)")
    t1.set_defaults(func=cmd_transform_k1)

    t2 = sub.add_parser("transform-2ell", help="greedy edge addition for k=2, ell sybils")
    graph_in(t2)
    t2.add_argument("--ell", type=int, required=True)
    t2.add_argument("--no-prune", action="store_true")
    t2.add_argument("--paranoid", action="store_true",
                    help="run pruned and exhaustive re-break checks and compare")
    t2.add_argument("--rescore", action="store_true")
    t2.add_argument("--output")
    t2.add_argument("--report")
    t2.add_argument("--plot")
    t2.set_defaults(func=cmd_transform_2ell)

    v = sub.add_parser("verify", help="check a (k, ell) transformation")
    v.add_argument("--original", required=True)
    v.add_argument("--published", required=True)
    v.add_argument("--k", type=int, required=True)
    v.add_argument("--ell", type=int, default=1)
    v.add_argument("--mode", choices=[f.value for f in Flavor], default="adjacency")
    v.add_argument("--report")
    v.set_defaults(func=cmd_verify)

    gn = sub.add_parser("gen", help="write a seeded Erdos-Renyi edge list")
    gn.add_argument("--n", type=int, required=True)
    gn.add_argument("--p", type=float, required=True)
    gn.add_argument("--seed", type=int, default=0)
    gn.add_argument("--output")
    gn.set_defaults(func=cmd_gen)

    lo = sub.add_parser("loss", help="information loss between two graphs")
    lo.add_argument("--original", required=True)
    lo.add_argument("--published", required=True)
    lo.add_argument("--report")
    lo.set_defaults(func=cmd_loss)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    for name in ("k", "ell"):
        if getattr(args, name, 1) is not None and getattr(args, name, 1) < 1:
            print(f"error: --{name} must be >= 1", file=sys.stderr)
            return EXIT_ERROR
    try:
        return args.func(args)
    except (OSError, GraphError, PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
