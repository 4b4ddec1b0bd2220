"""``nodekayles`` command-line front end.

Every command prints one JSON report on stdout.  Exit status: 0 success (or
every verified instance holds), 1 verification failure, 2 usage or parse
error, 3 size cap exceeded.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
import time
from importlib import resources
from contextlib import contextmanager
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import __version__, corpus, verify
from .errors import CapExceededError, ContractError, FamilySpecError, GraphParseError
from .generators import CLIQUE, INDEPENDENT, blowup, generate, parse_family
from .graph import DEFAULT_MAX_VERTICES, Graph
from .io import detect_format, parse_graph6, read_graphs, to_graph6, write_graph
from .kernel import kernelize
from .ksets import DEFAULT_ENUM_MAX_VERTICES, enumerate_ksets, ksets_via_dp
from .nimber import (
    DEFAULT_ORACLE_MAX_VERTICES,
    MemoTable,
    nimber,
    nimber_bruteforce,
    optimal_move,
)
from .structural import (
    DEFAULT_VC_MAX_VERTICES,
    minimum_vertex_cover,
    modular_decomposition,
    modular_width,
    nd_partition,
)

log = logging.getLogger("nodekayles")

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

CHECKS = ("vc-bound", "spider-count", "expansion", "kernel", "nimsum", "tree-quotient")


class Timer:
    """Accumulates wall-clock milliseconds per named phase."""

    def __init__(self):
        self.phases: dict[str, float] = {}

    @contextmanager
    def __call__(self, name):
        start = time.perf_counter()
        try:
            yield
        finally:
            elapsed = (time.perf_counter() - start) * 1000.0
            self.phases[name] = round(self.phases.get(name, 0.0) + elapsed, 3)


def make_report(command, source, results, timer) -> dict:
    return {
        "tool": "nodekayles",
        "version": __version__,
        "command": command,
        "input": source,
        "results": results,
        "timings_ms": timer.phases,
    }


def load_report_schema() -> dict:
    return json.loads(resources.files(__package__).joinpath("report.schema.json").read_text())


def emit(report) -> None:
    json.dump(report, sys.stdout, indent=2)
    sys.stdout.write("\n")


# input handling

def _add_input_args(p):
    p.add_argument("input", nargs="?", help="graph file (.g6 is graph6, anything else an edge list)")
    p.add_argument("--format", choices=("edgelist", "graph6"), help="override format detection")
    p.add_argument("--family", action="append", default=[],
                   help="generated instance, e.g. spider:3 or gnp:12:0.5:7 (repeatable)")
    p.add_argument("--g6", action="append", default=[], help="inline graph6 string (repeatable)")


def load_instances(args) -> tuple[dict, list[tuple[str, Graph]]]:
    instances = []
    source: dict = {}
    if args.input:
        fmt = args.format or detect_format(args.input)
        source.update(path=str(args.input), format=fmt)
        graphs = read_graphs(args.input, fmt)
        if len(graphs) == 1:
            instances.append((str(args.input), graphs[0]))
        else:
            instances += [(f"{args.input}:{i}", g) for i, g in enumerate(graphs)]
    if args.family:
        source["family"] = list(args.family)
        instances += [(spec, parse_family(spec)) for spec in args.family]
    if args.g6:
        source["graph6"] = list(args.g6)
        instances += [(s, parse_graph6(s)) for s in args.g6]
    return source, instances


def _single_or_many(rows):
    return rows[0] if len(rows) == 1 else {"instances": rows}


def _require(instances):
    if not instances:
        raise ContractError("no input graph given (pass a file, --family or --g6)")


# commands

def cmd_solve(args, timer):
    source, instances = load_instances(args)
    _require(instances)
    rows = []
    for label, g in instances:
        memo = MemoTable(g)
        with timer("solve"):
            value = nimber(g, memo, max_n=args.max_n)
        row = {"instance": label, "n": g.n, "m": g.m, "nimber": value,
               "first_player_wins": value > 0}
        if args.move:
            with timer("move"):
                row["optimal_move"] = optimal_move(g, memo, max_n=args.max_n)
        row["memo"] = {"entries": len(memo), "hits": memo.hits, "misses": memo.misses}
        if args.oracle:
            with timer("oracle"):
                oracle = nimber_bruteforce(g, max_n=args.oracle_max_n)
            row["oracle_nimber"] = oracle
            row["oracle_agrees"] = oracle == value
        rows.append(row)
    ok = all(r.get("oracle_agrees", True) for r in rows)
    return source, _single_or_many(rows), EXIT_OK if ok else EXIT_FAIL


def cmd_params(args, timer):
    source, instances = load_instances(args)
    _require(instances)
    rows = []
    for label, g in instances:
        with timer("vertex_cover"):
            cover = minimum_vertex_cover(g, max_n=args.vc_max_n)
        with timer("modular_decomposition"):
            tree = modular_decomposition(g) if g.n else None
            mw = modular_width(g)
        with timer("neighborhood_diversity"):
            nd = nd_partition(g)
        rows.append({
            "instance": label,
            "n": g.n,
            "m": g.m,
            "tau": len(cover),
            "vertex_cover": sorted(cover),
            "mw": mw,
            "nd": len(nd),
            "nd_classes": nd.to_dict(),
            "md_tree": tree.to_dict() if tree else None,
        })
    return source, _single_or_many(rows), EXIT_OK


def cmd_ksets(args, timer):
    source, instances = load_instances(args)
    _require(instances)
    rows = []
    ok = True
    for label, g in instances:
        with timer("enumerate"):
            family = enumerate_ksets(g, max_n=args.enum_max_n)
        row = {"instance": label, "n": g.n, "count": len(family)}
        if args.cross_check:
            with timer("dp"):
                dp = ksets_via_dp(g, max_n=args.enum_max_n)
            row["dp_count"] = len(dp)
            row["dp_agrees"] = dp == family
            ok = ok and row["dp_agrees"]
        if args.list:
            row["ksets"] = [sorted(s) for s in family]
        rows.append(row)
    return source, _single_or_many(rows), EXIT_OK if ok else EXIT_FAIL


def cmd_kernelize(args, timer):
    source, instances = load_instances(args)
    _require(instances)
    if args.output and len(instances) != 1:
        raise ContractError("--output needs exactly one input graph")
    rows = []
    ok = True
    for label, g in instances:
        with timer("kernelize"):
            h, trace = kernelize(g, until_fixpoint=args.fixpoint)
        nd = len(nd_partition(g))
        row = {"instance": label, "n": g.n, "nd": nd, "kernel_n": h.n, "kernel_m": h.m,
               "size_bound": 2 * nd, "kernel_graph6": to_graph6(h), "trace": trace.to_dict()}
        if args.check:
            with timer("check"):
                if g.n <= args.oracle_max_n:
                    a, b = nimber_bruteforce(g, max_n=args.oracle_max_n), nimber_bruteforce(h, max_n=args.oracle_max_n)
                else:
                    a, b = nimber(g, max_n=args.max_n), nimber(h, max_n=args.max_n)
            row.update(nimber=a, kernel_nimber=b, nim_preserved=a == b)
            ok = ok and a == b
        rows.append(row)
        if args.output:
            write_graph(h, args.output, args.out_format)
            row["output"] = str(args.output)
    return source, _single_or_many(rows), EXIT_OK if ok else EXIT_FAIL


def cmd_generate(args, timer):
    params = list(args.params)
    with timer("generate"):
        if args.family == "blowup":
            if not args.base or len(params) != 2:
                raise FamilySpecError("blowup needs SIZES KINDS positional params and --base")
            base = read_graphs(args.base)[0]
            sizes = [int(s) for s in params[0].split(",")]
            short = {"c": CLIQUE, "i": INDEPENDENT}
            kinds = [short.get(k, k) for k in params[1].split(",")]
            g = blowup(base, sizes, kinds)
        elif args.family == "complete_multipartite":
            g = generate(args.family, [int(s) for s in ",".join(params).split(",")])
        else:
            values = []
            for p in params:
                try:
                    values.append(int(p))
                except ValueError:
                    try:
                        values.append(float(p))
                    except ValueError:
                        raise FamilySpecError(f"parameter {p!r} is not a number") from None
            kwargs = {"seed": args.seed} if args.family in ("gnp", "random_tree") else {}
            if args.family in ("gnp", "random_tree") and args.seed is None:
                raise FamilySpecError(f"{args.family} needs --seed")
            g = generate(args.family, *values, **kwargs)
    fmt = args.out_format or detect_format(args.output)
    with timer("write"):
        write_graph(g, args.output, fmt)
    source = {"family": args.family, "params": params}
    if args.seed is not None:
        source["seed"] = args.seed
    return source, {"n": g.n, "m": g.m, "path": str(args.output), "format": fmt}, EXIT_OK


def _verify_sources(args):
    source, instances = load_instances(args)
    if args.exhaustive:
        source["exhaustive"] = args.exhaustive
        instances += [(to_graph6(g), g) for g in corpus.exhaustive(args.exhaustive)]
    if args.gnp_corpus:
        source["gnp_corpus"] = {"count": args.gnp_corpus, "max_n": args.corpus_max_n}
        instances += list(corpus.gnp_corpus(args.gnp_corpus, args.corpus_max_n))
    return source, instances


def cmd_verify(args, timer):
    check = args.check
    rows = []
    if check == "spider-count":
        source = {"k": [args.k_min, args.k_max]}
        with timer(check):
            for k in range(args.k_min, args.k_max + 1):
                rows.append({"instance": f"spider:{k}", **verify.spider_count(k)})
    elif check == "nimsum":
        source = {"pairs": args.pairs, "max_n": args.pair_max_n, "seed": args.seed}
        with timer(check):
            for label, g1, g2 in corpus.nimsum_pairs(args.pairs, args.pair_max_n, args.seed):
                rows.append({"instance": label, **verify.nimsum(g1, g2, args.oracle_max_n)})
    elif check == "tree-quotient":
        source = {"trees": args.trees, "max_n": args.tree_max_n, "seed": args.seed}
        with timer(check):
            for label, t in corpus.tree_corpus(args.trees, args.tree_max_n, args.seed):
                rows.append({"instance": label, **verify.tree_quotient(t)})
    else:
        source, instances = _verify_sources(args)
        _require(instances)
        fn = {
            "vc-bound": verify.vc_bound,
            "expansion": verify.expansion,
            "kernel": lambda g: verify.kernel(g, args.oracle_max_n),
        }[check]
        with timer(check):
            for label, g in instances:
                rows.append({"instance": label, **fn(g)})
    failed = sum(not r["holds"] for r in rows)
    results = {"check": check, "total": len(rows), "failed": failed, "all_hold": failed == 0,
               "instances": rows}
    return source, results, EXIT_OK if failed == 0 else EXIT_FAIL


def _bench_row(item):
    label, g, with_kernel, vc_max_n = item
    row = {"instance": label, "n": g.n, "m": g.m}
    try:
        row["tau"] = len(minimum_vertex_cover(g, max_n=vc_max_n)) if g.n <= vc_max_n else None
        row["mw"] = modular_width(g)
        row["nd"] = len(nd_partition(g))
        memo = MemoTable(g)
        start = time.perf_counter()
        row["nimber"] = nimber(g, memo)
        row["solve_ms"] = round((time.perf_counter() - start) * 1000.0, 3)
        row["memo_entries"] = len(memo)
        if with_kernel:
            start = time.perf_counter()
            h, _ = kernelize(g)
            kernel_nimber = nimber(h)
            row["kernel_solve_ms"] = round((time.perf_counter() - start) * 1000.0, 3)
            row["kernel_n"] = h.n
            row["kernel_nimber_agrees"] = kernel_nimber == row["nimber"]
        row["error"] = None
    except Exception as exc:  # per-instance failures are recorded, the run continues
        row["error"] = f"{type(exc).__name__}: {exc}"
    return row


BENCH_COLUMNS = ("instance", "n", "m", "tau", "mw", "nd", "kernel_n", "memo_entries", "nimber",
                 "solve_ms", "kernel_solve_ms", "kernel_nimber_agrees", "error")


def cmd_bench(args, timer):
    corpus_dir = Path(args.corpus)
    if not corpus_dir.is_dir():
        raise ContractError(f"{corpus_dir} is not a directory")
    items = []
    for path in sorted(p for p in corpus_dir.iterdir() if p.is_file() and p.suffix != ".csv"):
        try:
            graphs = read_graphs(path, args.format)
        except (GraphParseError, UnicodeDecodeError) as exc:
            log.warning("skipping %s: %s", path, exc)
            items.append((path.name, None, None, None))
            continue
        for i, g in enumerate(graphs):
            label = path.name if len(graphs) == 1 else f"{path.name}:{i}"
            items.append((label, g, args.kernel, args.vc_max_n))
    rows = []
    with timer("bench"):
        ok_items = [it for it in items if it[1] is not None]
        if args.jobs > 1:
            with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                computed = list(pool.map(_bench_row, ok_items))
        else:
            computed = [_bench_row(it) for it in ok_items]
        it = iter(computed)
        for item in items:
            rows.append(next(it) if item[1] is not None else
                        {"instance": item[0], "error": "unparseable input"})
    csv_path = Path(args.csv)
    with csv_path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.DictWriter(fh, fieldnames=BENCH_COLUMNS, extrasaction="ignore")
        writer.writeheader()
        writer.writerows(rows)
    results = {"rows": rows, "csv": str(csv_path)}
    return {"corpus": str(corpus_dir)}, results, EXIT_OK


# parser

class _Parser(argparse.ArgumentParser):
    """Usage errors also produce the JSON error object."""

    def error(self, message):
        self.print_usage(sys.stderr)
        _fail(UsageError(f"{self.prog}: {message}"), EXIT_USAGE)
        sys.exit(EXIT_USAGE)


class UsageError(Exception):
    pass


def _add_cap_args(p, suppress=False):
    # accepted before or after the subcommand; the subcommand copy only
    # overrides when actually given
    caps = (
        ("--max-n", DEFAULT_MAX_VERTICES, "vertex cap for the nimber DP"),
        ("--oracle-max-n", DEFAULT_ORACLE_MAX_VERTICES, "vertex cap for the brute-force oracle"),
        ("--enum-max-n", DEFAULT_ENUM_MAX_VERTICES, "vertex cap for K-set enumeration"),
        ("--vc-max-n", DEFAULT_VC_MAX_VERTICES, "vertex cap for exact vertex cover"),
    )
    for flag, default, text in caps:
        p.add_argument(flag, type=int, default=argparse.SUPPRESS if suppress else default,
                       help=f"{text} (default {default})")
    p.add_argument("-v", "--verbose", action="store_true",
                   default=argparse.SUPPRESS if suppress else False)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="nodekayles", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    _add_cap_args(parser)
    common = argparse.ArgumentParser(add_help=False)
    _add_cap_args(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", parents=[common], help="nimber, winner and optimal move")
    _add_input_args(p)
    p.add_argument("--oracle", action="store_true", help="cross-check with the brute-force oracle")
    p.add_argument("--move", action=argparse.BooleanOptionalAction, default=True,
                   help="report the smallest winning move (default on)")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("params", parents=[common], help="vertex cover number, modular-width, neighborhood diversity")
    _add_input_args(p)
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("ksets", parents=[common], help="enumerate and count K-sets")
    _add_input_args(p)
    p.add_argument("--list", action="store_true", help="include the K-sets themselves")
    p.add_argument("--cross-check", action="store_true", help="compare with the DP's memo keys")
    p.set_defaults(func=cmd_ksets)

    p = sub.add_parser("kernelize", parents=[common], help="nim-preserving kernel")
    _add_input_args(p)
    p.add_argument("-o", "--output", help="write the kernel graph here")
    p.add_argument("--out-format", choices=("edgelist", "graph6"))
    p.add_argument("--check", action="store_true", help="confirm nimber(kernel) == nimber(graph)")
    p.add_argument("--fixpoint", action="store_true", help="repeat passes until nothing changes")
    p.set_defaults(func=cmd_kernelize)

    p = sub.add_parser("verify", parents=[common], help="check the K-set bounds and structural properties on instances")
    p.add_argument("check", choices=CHECKS)
    _add_input_args(p)
    p.add_argument("--exhaustive", type=int, metavar="N", help="all labelled graphs on 1..N vertices")
    p.add_argument("--gnp-corpus", type=int, metavar="COUNT", help="the seeded G(n,p) corpus")
    p.add_argument("--corpus-max-n", type=int, default=14)
    p.add_argument("--k-min", type=int, default=2)
    p.add_argument("--k-max", type=int, default=5)
    p.add_argument("--pairs", type=int, default=200)
    p.add_argument("--pair-max-n", type=int, default=10)
    p.add_argument("--trees", type=int, default=100)
    p.add_argument("--tree-max-n", type=int, default=15)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("generate", parents=[common], help="write a generated graph")
    p.add_argument("family")
    p.add_argument("params", nargs="*")
    p.add_argument("--seed", type=int)
    p.add_argument("--base", help="base graph file for blowup")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--format", dest="out_format", choices=("edgelist", "graph6"))
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("bench", parents=[common], help="solve a corpus with and without kernelization")
    p.add_argument("corpus", help="directory of graph files")
    p.add_argument("--format", choices=("edgelist", "graph6"))
    p.add_argument("--kernel", action=argparse.BooleanOptionalAction, default=True)
    p.add_argument("--csv", default="bench.csv", help="CSV sidecar path (default %(default)s)")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s", stream=sys.stderr)
    command = list(sys.argv[1:] if argv is None else argv)
    timer = Timer()
    try:
        source, results, code = args.func(args, timer)
    except CapExceededError as exc:
        return _fail(exc, EXIT_CAP)
    except (GraphParseError, FamilySpecError, ContractError, OSError) as exc:
        return _fail(exc, EXIT_USAGE)
    emit(make_report(command, source, results, timer))
    return code


def _fail(exc, code):
    log.error("%s", exc)
    emit({"tool": "nodekayles", "version": __version__,
          "error": {"type": type(exc).__name__, "message": str(exc), "exit_code": code}})
    return code


if __name__ == "__main__":
    sys.exit(main())
