"""Command-line entry point.

Exit codes: 0 success, 1 operational failure (I/O, malformed input),
2 usage error (bad flags or parameter combinations).
"""

import argparse
import logging
import sys
from pathlib import Path

from . import __version__
from .exceptions import GraphFormatError, UndefinedMetricError
from .experiments import (
    corpus_correlation,
    cov_vs_density,
    cov_vs_size,
    robustness_suite,
    robustness_table,
    stability_sweep,
    timing_benchmark,
)
from .experiments._common import provenance
from .experiments.corpus import CORPUS_COLUMNS
from .experiments.stability import COV_COLUMNS, SWEEP_COLUMNS
from .experiments.subsampling import REMOVAL_MODES, ROBUSTNESS_COLUMNS, TABLE_COLUMNS
from .experiments.timing import BENCH_COLUMNS
from .generators import GeneratorSpec, generate
from .io import format_value, read_edge_list, scan_corpus, write_csv, write_edge_list, write_json
from .metrics import METRIC_NAMES, metric_report
from .weighted import load_weighted_matrix, threshold_to_density

log = logging.getLogger("hetnorm")

DEFAULT_CEILING = 50_000

FAMILY_NAMES = {
    "quasi-star": "quasi_star",
    "qs": "quasi_star",
    "quasi-complete": "quasi_complete",
    "qc": "quasi_complete",
    "er": "erdos_renyi",
    "erdos-renyi": "erdos_renyi",
    "rgg": "random_geometric_weighted",
    "scale-free": "scale_free",
    "sf": "scale_free",
    "star": "star",
    "complete": "complete",
    "cycle": "cycle",
    "empty": "empty",
}


class UsageError(Exception):
    pass


def parse_int_list(text):
    """Parse ``"1..5,10,20"`` into ``[1, 2, 3, 4, 5, 10, 20]``."""
    out = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if ".." in part:
            lo, hi = part.split("..", 1)
            lo, hi = int(lo), int(hi)
            if hi < lo:
                raise argparse.ArgumentTypeError(f"empty range {part!r}")
            out.extend(range(lo, hi + 1))
        else:
            out.append(int(part))
    if not out:
        raise argparse.ArgumentTypeError("empty list")
    return out


def _int_list(text):
    try:
        return parse_int_list(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _str_list(text):
    return [t.strip() for t in text.split(",") if t.strip()]


# -- metric -----------------------------------------------------------------


def _format_table(report, names):
    rows = [(name, format_value(report.value(name)), report.status[name]) for name in names]
    widths = [max(len(r[i]) for r in rows + [("metric", "value", "status")]) for i in range(3)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(("metric", "value", "status"), widths)).rstrip()]
    for r in rows:
        lines.append("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
    return "\n".join(lines)


def cmd_metric(args):
    names = args.metrics or list(METRIC_NAMES)
    bad = [m for m in names if m not in METRIC_NAMES]
    if bad:
        raise UsageError(f"unknown metric(s): {', '.join(bad)}")
    if args.weighted:
        if args.density is None:
            raise UsageError("--weighted requires --density")
        g = threshold_to_density(load_weighted_matrix(args.input), args.density)
        labels = [str(i) for i in range(g.n)]
    else:
        if args.density is not None:
            raise UsageError("--density only applies with --weighted")
        parsed = read_edge_list(args.input)
        g, labels = parsed.graph, parsed.labels
        if parsed.n_duplicates or parsed.n_self_loops:
            print(
                f"note: dropped {parsed.n_duplicates} duplicate edge(s), {parsed.n_self_loops} self-loop(s)",
                file=sys.stderr,
            )
    report = metric_report(g)
    print(f"n={g.n} m={g.m}")
    print(_format_table(report, names))
    if args.csv:
        rows = [
            {"metric": name, "value": report.value(name), "status": report.status[name]} for name in names
        ]
        write_csv(rows, args.csv, ("metric", "value", "status"))
    if args.mapping:
        write_csv([{"node": i, "label": lab} for i, lab in enumerate(labels)], args.mapping, ("node", "label"))
    return 0


# -- generate ---------------------------------------------------------------


def cmd_generate(args):
    family = FAMILY_NAMES.get(args.family)
    if family is None:
        raise UsageError(f"unknown family {args.family!r}; choose from {', '.join(FAMILY_NAMES)}")
    params = {"n": args.n}
    if family == "quasi_star" and args.p is not None:
        if args.m is not None:
            raise UsageError("give either --m or --p, not both")
        if not 0 <= args.p <= max(args.n - 1, 0):
            raise UsageError("--p must lie in [0, n-1]")
        params["m"] = args.p * (2 * args.n - args.p - 1) // 2
    elif args.m is not None:
        params["m"] = args.m
    if args.q is not None:
        params["q"] = args.q
    if args.density is not None:
        params["density"] = args.density
    try:
        spec = GeneratorSpec(family, params, args.seed)
        g = generate(spec)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    comments = [f"family={family}"] + [f"{k}={v}" for k, v in sorted(params.items()) if k != "n"]
    if args.seed is not None:
        comments.append(f"seed={args.seed}")
    if args.out:
        write_edge_list(g, args.out, comments)
    else:
        for c in comments:
            print(f"# {c}")
        print(f"# n={g.n}")
        print("# labels=index")
        for i, j in g.edges:
            print(f"{i} {j}")
    return 0


# -- experiments ------------------------------------------------------------


def _outdir(path):
    p = Path(path)
    p.mkdir(parents=True, exist_ok=True)
    return p


def _require_seed(args):
    if args.seed is None:
        raise UsageError("--seed is required for this subcommand")


def cmd_sweep(args):
    _require_seed(args)
    matrices = [load_weighted_matrix(p) for p in args.matrix or ()]
    families = args.families
    if matrices and "matrix" not in families:
        families = families + ["matrix"]
    try:
        table = stability_sweep(
            families, args.sizes, args.percents, args.replicates, args.seed, matrices=matrices, threads=args.threads
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out = _outdir(args.out)
    write_csv(table.rows, out / "sweep.csv", SWEEP_COLUMNS)
    cov_s, cov_d = cov_vs_size(table), cov_vs_density(table)
    write_csv([c.__dict__ for c in cov_s.values()], out / "cov_size.csv", COV_COLUMNS)
    write_csv([c.__dict__ for c in cov_d.values()], out / "cov_density.csv", COV_COLUMNS)
    summary = provenance(
        args.seed,
        {
            "families": families,
            "sizes": args.sizes,
            "percents": args.percents,
            "replicates": args.replicates,
            "matrices": [str(p) for p in args.matrix or ()],
        },
    )
    summary["cov_vs_size"] = {f"{f}/{m}": c.cov for (f, m), c in cov_s.items()}
    summary["cov_vs_density"] = {f"{f}/{m}": c.cov for (f, m), c in cov_d.items()}
    write_json(summary, out / "summary.json")
    _print_cov(cov_s, cov_d)
    return 0


def _print_cov(cov_s, cov_d):
    print(f"{'family':<18}{'metric':<8}{'CoV(size)':>12}{'CoV(density)':>14}")
    for key, cs in cov_s.items():
        cd = cov_d[key]
        fmt = lambda x: "n/a" if x is None else f"{x:.4f}"  # noqa: E731
        print(f"{key[0]:<18}{key[1]:<8}{fmt(cs.cov):>12}{fmt(cd.cov):>14}")


def cmd_bench(args):
    _require_seed(args)
    if args.replicates < 1:
        raise UsageError("--replicates must be positive")
    too_big = [n for n in args.sizes if n > DEFAULT_CEILING]
    if too_big and not args.large:
        raise UsageError(f"sizes above {DEFAULT_CEILING} need --large: {too_big}")
    if any(n < 200 for n in args.sizes):
        raise UsageError("benchmark sizes must be at least 200")
    records = timing_benchmark(args.sizes, args.replicates, args.seed)
    out = _outdir(args.out)
    write_csv([r.as_row() for r in records], out / "bench.csv", BENCH_COLUMNS)
    graphs = {(r.n, r.m) for r in records}
    write_csv([{"n": n, "m": m} for n, m in sorted(graphs)], out / "bench_graphs.csv", ("n", "m"))
    summary = provenance(args.seed, {"sizes": args.sizes, "replicates": args.replicates})
    summary["records"] = [dict(r.as_row(), times=list(r.times)) for r in records]
    write_json(summary, out / "summary.json")
    for r in records:
        print(f"{r.metric:<6} n={r.n:<7} mean={r.mean_time:.6f}s")
    return 0


def _load_corpus(path):
    try:
        graphs, failures = scan_corpus(path)
    except (NotADirectoryError, ValueError) as exc:
        raise OSError(str(exc)) from None
    for stem, msg in failures:
        print(f"warning: skipped {stem}: {msg}", file=sys.stderr)
    return graphs, failures


def cmd_corpus(args):
    graphs, failures = _load_corpus(args.corpus)
    rep = corpus_correlation(graphs, threads=args.threads)
    out = _outdir(args.out)
    write_csv(rep.rows, out / "corpus.csv", CORPUS_COLUMNS)
    summary = provenance(args.seed, {"corpus": str(args.corpus)})
    summary["correlation"] = rep.summary()
    summary["failures"] = [{"id": s, "error": m} for s, m in failures]
    write_json(summary, out / "summary.json")
    fmt = lambda x: "undefined" if x is None else f"{x:.4f}"  # noqa: E731
    print(f"networks: {rep.n_networks}")
    print(f"v_bar vs average degree: r_s={fmt(rep.v_bar_r)} p={fmt(rep.v_bar_p)}")
    print(f"rho   vs average degree: r_s={fmt(rep.rho_r)} p={fmt(rep.rho_p)} (excluded {rep.rho_n_excluded})")
    return 0


def cmd_subsample(args):
    _require_seed(args)
    bad = [m for m in args.modes if m not in REMOVAL_MODES]
    if bad:
        raise UsageError(f"unknown removal mode(s): {', '.join(bad)}")
    if any(not 0 < p < 100 for p in args.percents):
        raise UsageError("percents must lie strictly between 0 and 100")
    if args.iterations < 1:
        raise UsageError("--iterations must be positive")
    graphs, failures = _load_corpus(args.corpus)
    records = robustness_suite(
        graphs, args.percents, args.iterations, args.seed, modes=args.modes, threads=args.threads
    )
    table = robustness_table(records)
    out = _outdir(args.out)
    write_csv([r.as_row() for r in records], out / "robustness.csv", ROBUSTNESS_COLUMNS)
    write_csv(table, out / "robustness_table.csv", TABLE_COLUMNS)
    summary = provenance(
        args.seed,
        {"corpus": str(args.corpus), "percents": args.percents, "iterations": args.iterations, "modes": args.modes},
    )
    summary["table"] = table
    summary["failures"] = [{"id": s, "error": m} for s, m in failures]
    summary["network_failures"] = [
        {"id": r.network_id, "mode": r.removal_mode, "percent": r.percent_removed, "reason": r.reason}
        for r in records
        if r.reason and r.metric_name == "v_bar"
    ]
    write_json(summary, out / "summary.json")
    for row in table:
        med = row["median_abs_difference"]
        print(
            f"{row['removal_mode']:<22}{row['metric_name']:<6}{row['percent_removed']:>4}%  "
            f"median |diff| = {'n/a' if med is None else f'{med:.4f}'}"
        )
    return 0


# -- parser -------------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(prog="hetnorm", description="Graph heterogeneity indices and experiments.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("metric", help="all heterogeneity indices for one graph")
    p.add_argument("input", help="edge-list file, or weighted CSV with --weighted")
    p.add_argument("--weighted", action="store_true", help="input is a weighted matrix CSV")
    p.add_argument("--density", type=float, help="threshold density for --weighted input")
    p.add_argument("--metrics", type=_str_list, help=f"comma-separated subset of {','.join(METRIC_NAMES)}")
    p.add_argument("--csv", help="also write the report as CSV")
    p.add_argument("--mapping", help="write the node-index to label mapping as CSV")
    p.set_defaults(func=cmd_metric)

    p = sub.add_parser("generate", help="write a generated graph as an edge list")
    p.add_argument("family", help=", ".join(FAMILY_NAMES))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, help="edge count (quasi-star, quasi-complete)")
    p.add_argument("--p", type=int, help="dominant nodes of a perfect quasi-star")
    p.add_argument("--q", type=float, help="edge probability (er)")
    p.add_argument("--density", type=float, help="threshold density (rgg)")
    p.add_argument("--seed", type=int, help="required for random families")
    p.add_argument("--out", help="output path (default: stdout)")
    p.set_defaults(func=cmd_generate)

    def experiment(name, help_text, needs_seed=True):
        q = sub.add_parser(name, help=help_text)
        q.add_argument("--seed", type=int, help="master seed" + (" (required)" if needs_seed else ""))
        q.add_argument("--out", default=f"{name}_out", help="output directory")
        q.add_argument("--threads", type=int, default=1, help="worker threads (output does not depend on it)")
        return q

    p = experiment("sweep", "density-sweep stability tables")
    p.add_argument("--families", type=_str_list, default=["qs", "qc", "er", "rgg"])
    p.add_argument("--sizes", type=_int_list, default=[16, 32, 64, 128])
    p.add_argument("--percents", type=_int_list, default=list(range(1, 100)))
    p.add_argument("--replicates", type=int, default=20)
    p.add_argument("--matrix", action="append", help="weighted matrix CSV for the matrix family (repeatable)")
    p.set_defaults(func=cmd_sweep)

    p = experiment("bench", "timing of v_bar, rho and J on scale-free graphs")
    p.add_argument("--sizes", type=_int_list, default=[5000, 10000, 50000])
    p.add_argument("--replicates", type=int, default=25)
    p.add_argument("--large", action="store_true", help=f"allow sizes above {DEFAULT_CEILING}")
    p.set_defaults(func=cmd_bench)

    p = experiment("corpus", "correlation with average degree across a corpus", needs_seed=False)
    p.add_argument("--corpus", required=True, help="directory of edge-list files")
    p.set_defaults(func=cmd_corpus)

    p = experiment("subsample", "robustness to node and edge subsampling")
    p.add_argument("--corpus", required=True, help="directory of edge-list files")
    p.add_argument("--percents", type=_int_list, default=[5, 10, 15, 20, 25])
    p.add_argument("--iterations", type=int, default=50)
    p.add_argument("--modes", type=_str_list, default=list(REMOVAL_MODES))
    p.set_defaults(func=cmd_subsample)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    if getattr(args, "threads", 1) < 1:
        parser.error("--threads must be at least 1")
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except (OSError, GraphFormatError, UndefinedMetricError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
