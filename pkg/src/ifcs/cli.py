"""Command-line front door: query, gen-motif, sample, bench.

Exit codes: 0 success, 1 no community found, 2 input error, 3 embedding
budget exceeded.  ``IFCS_LOG`` selects the log level (debug/info/warning).
"""

import argparse
import csv
import logging
import os
import sys
import time

from .errors import BudgetExceededError, IfcsError
from .hin import load_graph, write_graph
from .motif import parse_motif, write_motif
from .report import metrics_for_result, result_to_dict, write_result
from .search import MODES, QueryParams, run_query
from .tools import generate_motifs, sample_vertices

log = logging.getLogger("ifcs.cli")

EXIT_OK = 0
EXIT_NO_COMMUNITY = 1
EXIT_INPUT_ERROR = 2
EXIT_BUDGET = 3

BENCH_COLUMNS = (
    "motif", "size", "mode", "visited_targets", "existence_checks",
    "instances_enumerated", "bound_computations", "components_pruned",
    "wall_time_ms",
)


def _setup_logging():
    level = os.environ.get("IFCS_LOG", "warning").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING),
                        format="%(levelname)s %(name)s: %(message)s")


def _load_inputs(args):
    with open(args.vertices, encoding="utf-8") as vf, \
            open(args.edges, encoding="utf-8") as ef:
        g = load_graph(vf, ef)
    motif = None
    if getattr(args, "motif", None):
        with open(args.motif, encoding="utf-8") as mf:
            motif = parse_motif(mf)
    return g, motif


def _open_out(path):
    if path in (None, "-"):
        return sys.stdout, False
    return open(path, "w", encoding="utf-8"), True


def cmd_query(args):
    g, motif = _load_inputs(args)
    params = QueryParams(k=args.k, budget=args.budget, threads=args.threads)
    result = run_query(g, motif, params, args.mode)
    metrics = None
    if args.metrics and result.communities:
        metrics = metrics_for_result(g, motif, result, budget=args.budget)
    doc = result_to_dict(g, result, args.motif, args.k, args.mode, metrics=metrics)
    stream, close = _open_out(args.out)
    try:
        write_result(doc, stream)
    finally:
        if close:
            stream.close()
    if not result.communities:
        log.info("no community of size >= %d found", args.k)
        return EXIT_NO_COMMUNITY
    return EXIT_OK


def cmd_gen_motif(args):
    g, _ = _load_inputs(args)
    motifs = generate_motifs(g, args.size, args.count, args.seed)
    os.makedirs(args.out, exist_ok=True)
    for i, motif in enumerate(motifs):
        path = os.path.join(args.out, "motif_%03d.tsv" % i)
        with open(path, "w", encoding="utf-8") as stream:
            write_motif(motif, stream)
        log.info("wrote %s", path)
    return EXIT_OK


def cmd_sample(args):
    g, _ = _load_inputs(args)
    keep, edges = sample_vertices(g, args.ratio, args.seed)
    os.makedirs(os.path.dirname(os.path.abspath(args.out_vertices)), exist_ok=True)
    with open(args.out_vertices, "w", encoding="utf-8") as vf:
        for v in keep:
            vf.write("%s\t%s\n" % (g.ext_ids[v], g.labels[g.vtype[v]]))
    with open(args.out_edges, "w", encoding="utf-8") as ef:
        for (u, v) in sorted(edges):
            ef.write("%s\t%s\n" % (g.ext_ids[u], g.ext_ids[v]))
    return EXIT_OK


def cmd_bench(args):
    g, _ = _load_inputs(args)
    rows = []
    for motif_path in args.motifs:
        with open(motif_path, encoding="utf-8") as mf:
            motif = parse_motif(mf)
        for mode in args.modes:
            params = QueryParams(k=args.k, budget=args.budget, threads=args.threads)
            row = {"motif": os.path.basename(motif_path),
                   "size": len(motif), "mode": mode}
            try:
                start = time.perf_counter()
                result = run_query(g, motif, params, mode)
                elapsed = (time.perf_counter() - start) * 1000.0
                stats = result.stats
                row.update(
                    visited_targets=stats.visited_targets,
                    existence_checks=stats.existence_checks,
                    instances_enumerated=stats.instances_enumerated,
                    bound_computations=stats.bound_computations,
                    components_pruned=stats.components_pruned,
                    wall_time_ms="%.3f" % elapsed)
            except BudgetExceededError:
                row.update(visited_targets="NA", existence_checks="NA",
                           instances_enumerated="NA", bound_computations="NA",
                           components_pruned="NA", wall_time_ms="inf")
            rows.append(row)

    aggregates = _aggregate_rows(rows)
    stream, close = _open_out(args.out)
    try:
        writer = csv.DictWriter(stream, fieldnames=BENCH_COLUMNS)
        writer.writeheader()
        for row in rows + aggregates:
            writer.writerow(row)
    finally:
        if close:
            stream.close()
    return EXIT_OK


def _aggregate_rows(rows):
    buckets = {}
    for row in rows:
        if row["wall_time_ms"] == "inf":
            continue
        buckets.setdefault((row["size"], row["mode"]), []).append(row)
    aggregates = []
    for (size, mode) in sorted(buckets):
        group = buckets[(size, mode)]
        agg = {"motif": "avg", "size": size, "mode": mode}
        for col in BENCH_COLUMNS[3:-1]:
            agg[col] = "%.2f" % (sum(r[col] for r in group) / len(group))
        agg["wall_time_ms"] = "%.3f" % (
            sum(float(r["wall_time_ms"]) for r in group) / len(group))
        aggregates.append(agg)
    return aggregates


def build_parser():
    parser = argparse.ArgumentParser(
        prog="ifcs",
        description="Individual fairest community search over typed directed graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, motif=True):
        p.add_argument("--vertices", required=True, help="vertex TSV: id<TAB>label")
        p.add_argument("--edges", required=True, help="edge TSV: src<TAB>dst")
        if motif:
            p.add_argument("--motif", required=True, help="motif TSV file")
        p.add_argument("--k", type=int, default=2, help="minimum community size")
        p.add_argument("--threads", type=int, default=1)
        p.add_argument("--budget", type=int, default=None,
                       help="per-anchor raw embedding cap")

    q = sub.add_parser("query", help="run one community search")
    common(q)
    q.add_argument("--mode", choices=MODES, default="fva-l")
    q.add_argument("--out", default="-", help="result JSON path (default stdout)")
    q.add_argument("--metrics", action="store_true",
                   help="append community quality metrics to the result")
    q.set_defaults(func=cmd_query)

    gm = sub.add_parser("gen-motif", help="sample motifs by random walk")
    common(gm, motif=False)
    gm.add_argument("--size", type=int, required=True, help="motif vertex count (3-7)")
    gm.add_argument("--count", type=int, default=1)
    gm.add_argument("--seed", type=int, default=0)
    gm.add_argument("--out", required=True, help="output directory")
    gm.set_defaults(func=cmd_gen_motif)

    sp = sub.add_parser("sample", help="uniform vertex sample with induced edges")
    common(sp, motif=False)
    sp.add_argument("--ratio", type=float, required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out-vertices", required=True)
    sp.add_argument("--out-edges", required=True)
    sp.set_defaults(func=cmd_sample)

    b = sub.add_parser("bench", help="run motif/mode grid, emit stats CSV")
    common(b, motif=False)
    b.add_argument("--motifs", nargs="+", required=True, help="motif TSV files")
    b.add_argument("--modes", nargs="+", choices=MODES, default=list(MODES))
    b.add_argument("--out", default="-", help="CSV path (default stdout)")
    b.set_defaults(func=cmd_bench)

    return parser


def main(argv=None):
    _setup_logging()
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_BUDGET
    except (IfcsError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
