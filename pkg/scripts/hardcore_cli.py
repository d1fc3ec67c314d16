#!/usr/bin/env python3
"""
硬核模型工具命令行

子命令：poly / eval / ratio / bounds / sample / gen-regular / scan /
circulant-search / tightness / reduce / tree / lambertw

结果写 stdout（JSON lines 或 CSV），日志写 stderr。
退出码：0 成功，1 输入或运行错误，2 发现界被违反。
"""

import argparse
import json
import math
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

import pandas as pd

# 添加项目根目录到Python路径
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from config.settings import settings
from core.exceptions import BoundViolationError, HardCoreToolkitException, InvalidParameterError
from core.models import Fugacity
from modules.bounds import (
    lambert_w,
    tree_alpha,
    tree_logpartition,
    uniqueness_threshold,
)
from modules.graph_core import (
    Graph,
    from_graph6,
    lemma_reduction_threshold,
    min_degree_reduce,
    stats,
    to_graph6,
)
from modules.indpoly import evaluate, independence_polynomial
from modules.random_graphs import RegularGraphGenerator, TightnessExperiment
from modules.sampler import HardCoreSampler
from modules.scanner import (
    BoundVerifier,
    CirculantSearch,
    CirculantSearchConfig,
    RatioScanner,
    ScanConfig,
    atlas_corpus,
)
from utils.data_processor import DataProcessor
from utils.file_manager import FileManager
from utils.logger import setup_from_config

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_VIOLATION = 2

BOUND_COLUMNS = ["graph6", "n", "d", "lambda", "occupancy", "thm13", "kdd_upper",
                 "logP_per_n", "thm14_per_n", "clique_ok", "mm_ok"]
TIGHTNESS_COLUMNS = ["n", "d", "lambda", "seed", "occ_hat", "stderr", "tree_alpha", "thm13",
                     "gap_tree", "gap_thm13"]
RATIO_COLUMNS = ["graph6", "n", "max_degree", "alpha", "mean_size", "ratio", "lambda",
                 "conjecture_target", "below_target", "source"]

processor = DataProcessor()


class UsageError(Exception):
    """命令行用法错误"""


class CliParser(argparse.ArgumentParser):
    """用法错误时退出码为 1 而不是 argparse 默认的 2"""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        raise UsageError(message)


# ---------------------------------------------------------------- 输入输出

def parse_grid(text: str) -> List[Fugacity]:
    """逗号分隔的逸度网格，如 "1/4,1,4" """
    return [Fugacity.parse(part) for part in text.split(",") if part.strip()]


def parse_size_range(text: str) -> Tuple[int, int]:
    """ "3:5" 或 "4" """
    lo, _, hi = text.partition(":")
    try:
        return int(lo), int(hi or lo)
    except ValueError:
        raise InvalidParameterError(f"Size range must look like 3:5, got {text!r}")


def read_graphs(sources: Sequence[str], edge_list: bool = False) -> List[Tuple[str, Graph]]:
    """
    图参数：已存在的文件按 graph6 语料（或 --edge-list 时按边列表）读取，否则视为内联 graph6
    """
    file_manager = FileManager()
    graphs: List[Tuple[str, Graph]] = []
    for source in sources:
        path = Path(source)
        if path.is_file():
            if edge_list:
                g = file_manager.load_edge_list(path)
                graphs.append((to_graph6(g), g))
            else:
                graphs.extend((text, g) for _, text, g in file_manager.iter_graph6(path))
        else:
            g = from_graph6(source)
            graphs.append((to_graph6(g), g))
    return graphs


def emit(rows: Iterable[Dict[str, Any]], fmt: str, columns: Optional[Sequence[str]] = None) -> None:
    rows = [processor.to_plain(row) for row in rows]
    if fmt == "csv":
        frame = pd.DataFrame(rows, columns=columns)
        sys.stdout.write(frame.to_csv(index=False))
    else:
        for row in rows:
            sys.stdout.write(json.dumps(row, ensure_ascii=False) + "\n")
    sys.stdout.flush()


# ---------------------------------------------------------------- 子命令

def cmd_poly(args: argparse.Namespace) -> int:
    rows = []
    for graph6, g in read_graphs(args.graph, args.edge_list):
        p = independence_polynomial(g)
        row = {"graph6": graph6, **p.to_json_dict()}
        if args.format == "csv":
            row["coeffs"] = " ".join(row["coeffs"])
        rows.append(row)
    emit(rows, args.format, ["graph6", "n", "coeffs", "alpha"])
    return EXIT_OK


def cmd_eval(args: argparse.Namespace) -> int:
    lam = Fugacity.parse(args.lam, exact=not args.float)
    rows = []
    for graph6, g in read_graphs(args.graph, args.edge_list):
        result = evaluate(independence_polynomial(g), lam)
        rows.append({"graph6": graph6, "n": g.n, **processor.to_plain(result)})
    emit(rows, args.format)
    return EXIT_OK


def cmd_ratio(args: argparse.Namespace) -> int:
    scanner = RatioScanner()
    rows = []
    for graph6, g in read_graphs(args.graph, args.edge_list):
        if args.profile:
            profile = scanner.ratio_profile(g, parse_grid(args.profile))
            for lam, value in profile["ratios"]:
                rows.append({"graph6": graph6, "lambda": lam, "ratio": value,
                             "strictly_decreasing": profile["strictly_decreasing"]})
            continue
        lam = Fugacity.parse(args.lam).value
        p = independence_polynomial(g)
        mean = evaluate(p, lam).mean_size
        value = Fraction(p.alpha) / mean
        rows.append({"graph6": graph6, "alpha": p.alpha, "mean_size": mean, "lambda": lam,
                     "ratio": value, "ratio_float": float(value)})
    emit(rows, args.format)
    return EXIT_OK


def _bound_row(report) -> Dict[str, Any]:
    row = report.to_csv_row()
    row.update(
        triangle_free=report.triangle_free,
        regular=report.regular,
        kdd_equality=report.kdd_equality,
        kdd_log_upper=report.kdd_log_upper,
        applicable={"thm13": report.thm13_lower is not None, "thm14": report.thm14_per_n is not None,
                    "kdd": report.kdd_upper is not None, "clique": True, "moon_moser": True},
        slacks=report.slacks,
        violations=report.violations,
    )
    return row


def cmd_bounds(args: argparse.Namespace) -> int:
    corpus: List[Tuple[str, Graph]] = read_graphs(args.graph, args.edge_list)
    if args.atlas:
        corpus.extend(atlas_corpus(args.atlas))
    if not corpus:
        raise InvalidParameterError("No graphs given")
    grid = parse_grid(args.lambda_grid) if args.lambda_grid else None

    rows: List[Dict[str, Any]] = []
    verifier = BoundVerifier()
    _, summary = verifier.verify(corpus, grid, on_report=lambda r: rows.append(_bound_row(r)), keep_reports=False)
    emit(rows, args.format, BOUND_COLUMNS if args.format == "csv" else None)

    sys.stderr.write(json.dumps(processor.to_plain({
        "graphs_checked": summary.graphs_checked,
        "skipped": summary.skipped,
        "violations": summary.violations,
        "min_slack": summary.min_slack,
        "kdd_equality_cases": summary.kdd_equality_cases,
    })) + "\n")
    if summary.total_violations:
        raise BoundViolationError(f"{summary.total_violations} bound violations found",
                                  details={"violations": summary.violations})
    return EXIT_OK


def cmd_sample(args: argparse.Namespace) -> int:
    sampler = HardCoreSampler()
    lam = Fugacity.parse(args.lam).as_float()
    rows = []
    for graph6, g in read_graphs(args.graph, args.edge_list):
        if args.chains > 1:
            estimate = sampler.run_chains(g, lam, args.seed, args.chains, args.samples,
                                          burn_in=args.burn_in, thinning=args.thinning)
        else:
            estimate = sampler.estimate_occupancy(g, lam, args.seed, args.samples,
                                                  burn_in=args.burn_in, thinning=args.thinning)
        histogram = sampler.z_histogram(g, lam, args.seed, args.samples,
                                        burn_in=args.burn_in, thinning=args.thinning)
        row = {
            "graph6": graph6,
            "lambda": lam,
            "seed": args.seed,
            "samples": estimate.samples,
            "occupancy": estimate.occupancy,
            "stderr": estimate.stderr,
            "z_histogram": histogram.counts,
        }
        if args.identities:
            row["identities"] = sampler.identity_report(g, lam, args.seed, args.samples,
                                                        burn_in=args.burn_in, thinning=args.thinning)
        rows.append(row)
    emit(rows, args.format)
    return EXIT_OK


def cmd_gen_regular(args: argparse.Namespace) -> int:
    generator = RegularGraphGenerator()
    samples = []
    for seed in range(args.seed, args.seed + args.count):
        if args.girth:
            sample = generator.random_regular_high_girth(args.n, args.d, args.girth, seed, args.max_attempts)
        elif args.triangle_free:
            sample = generator.random_regular_triangle_free(args.n, args.d, seed, args.max_attempts)
        else:
            sample = generator.random_regular(args.n, args.d, seed, args.max_attempts)
        samples.append(sample)

    if args.format == "graph6":
        for sample in samples:
            sys.stdout.write(to_graph6(sample.graph) + "\n")
        sys.stdout.flush()
    else:
        emit(samples, args.format)
    return EXIT_OK


def _record_row(record) -> Dict[str, Any]:
    return {
        "graph6": record.graph6,
        "n": record.n,
        "max_degree": record.max_degree,
        "alpha": record.alpha,
        "mean_size": record.mean_size,
        "ratio": record.ratio,
        "ratio_float": float(record.ratio),
        "lambda": record.lam,
        "conjecture_target": record.conjecture_target,
        "below_target": record.below_target,
        "source": record.source,
    }


def _scan_filters(tokens: Sequence[str]) -> Dict[str, Any]:
    """--filter triangle-free | kr-free=R | min-degree=D | regular"""
    options: Dict[str, Any] = {}
    for token in tokens:
        name, _, value = token.partition("=")
        if name == "triangle-free" and not value:
            options["triangle_free"] = True
        elif name == "regular" and not value:
            options["regular_only"] = True
        elif name in ("kr-free", "min-degree") and value.isdigit():
            options[name.replace("-", "_")] = int(value)
        else:
            raise InvalidParameterError(f"Unknown scan filter {token!r}")
    return options


def cmd_scan(args: argparse.Namespace) -> int:
    circulant: Dict[str, Any] = {}
    if args.circulant_n is not None:
        lo, hi = parse_size_range(args.circulant_sizes) if args.circulant_sizes else (1, args.circulant_n // 2)
        circulant = {"circulant_n": args.circulant_n, "circulant_min_size": lo, "circulant_max_size": hi}
    config = ScanConfig.build(
        lam=args.lam,
        top_k=args.top_k or settings.SCAN_CONFIG["top_k"],
        batch_size=settings.SCAN_CONFIG["batch_size"],
        max_workers=args.workers or settings.CONCURRENCY_CONFIG["max_workers"],
        graph6_files=args.graph6_file,
        edge_list_files=args.edge_list_file,
        inline=args.inline,
        atlas=args.atlas,
        **circulant,
        **_scan_filters(args.filter),
    )
    records = RatioScanner().scan(config)
    emit([_record_row(r) for r in records], args.format, RATIO_COLUMNS if args.format == "csv" else None)
    return EXIT_OK


def cmd_circulant_search(args: argparse.Namespace) -> int:
    lo, hi = parse_size_range(args.sizes)
    config = CirculantSearchConfig.build(
        n=args.n,
        min_size=lo,
        max_size=hi,
        require_triangle_free=not args.allow_triangles,
        alpha_target=args.alpha_target,
        lam=args.lam,
        max_workers=args.workers or settings.CONCURRENCY_CONFIG["max_workers"],
    )
    records = CirculantSearch().search(config)
    emit([_record_row(r) for r in records], args.format, RATIO_COLUMNS if args.format == "csv" else None)
    return EXIT_OK


def cmd_tightness(args: argparse.Namespace) -> int:
    experiment = TightnessExperiment()
    grid = [lam.as_float() for lam in parse_grid(args.lambda_grid)] if args.lambda_grid else None
    seeds = range(args.seed, args.seed + args.repeats)
    rows = experiment.run(args.n, args.d, seeds, grid, samples=args.samples,
                          burn_in=args.burn_in, thinning=args.thinning)
    emit([row.to_csv_row() for row in rows], args.format, TIGHTNESS_COLUMNS)

    below = [row for row in rows if row.occ_hat < row.thm13 - 3 * row.stderr]
    summary = experiment.summarize(rows)
    sys.stderr.write(summary.to_string(index=False) + "\n")
    if below:
        raise BoundViolationError(f"{len(below)} rows fall below the occupancy lower bound by more than 3 SE")
    return EXIT_OK


def cmd_reduce(args: argparse.Namespace) -> int:
    rows = []
    for graph6, g in read_graphs(args.graph, args.edge_list):
        d = max(g.degrees(), default=0)
        threshold = lemma_reduction_threshold(d) if args.lemma else args.threshold
        if threshold is None:
            raise InvalidParameterError("reduce needs --threshold or --lemma")
        reduced = min_degree_reduce(g, threshold)
        rows.append({
            "graph6": graph6,
            "threshold": threshold,
            "n_before": g.n,
            "n_after": reduced.n,
            "min_degree_after": stats(reduced).min_degree if reduced.n else None,
            "reduced_graph6": to_graph6(reduced),
        })
    emit(rows, args.format)
    return EXIT_OK


def cmd_tree(args: argparse.Namespace) -> int:
    lam = Fugacity.parse(args.lam).as_float()
    fixed_point = tree_alpha(args.d, lam)
    emit([{
        "d": args.d,
        "lambda": lam,
        "alpha": fixed_point.alpha,
        "z": fixed_point.z,
        "tree_logpartition": tree_logpartition(args.d, lam),
        "uniqueness_threshold": uniqueness_threshold(args.d),
    }], args.format)
    return EXIT_OK


def cmd_lambertw(args: argparse.Namespace) -> int:
    w = lambert_w(args.z)
    emit([{"z": args.z, "w": w, "residual": abs(w * math.exp(w) - args.z)}], args.format)
    return EXIT_OK


# ---------------------------------------------------------------- 解析器

def build_parser() -> CliParser:
    common = CliParser(add_help=False)
    output = common.add_mutually_exclusive_group()
    output.add_argument("--json", dest="format", action="store_const", const="json", help="JSON lines output (default)")
    output.add_argument("--csv", dest="format", action="store_const", const="csv", help="CSV output")
    common.add_argument("--config", help="YAML file overriding settings sections")
    common.add_argument("--verbose", action="store_true", help="debug logging on stderr")
    common.set_defaults(format="json")

    graphs = CliParser(add_help=False)
    graphs.add_argument("graph", nargs="*", help="graph6 strings or graph6 files")
    graphs.add_argument("--edge-list", action="store_true", help="treat file arguments as edge lists")

    parser = CliParser(prog="hardcore", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", parser_class=CliParser)

    p = sub.add_parser("poly", parents=[common, graphs], help="independence polynomial coefficients")
    p.set_defaults(handler=cmd_poly)

    p = sub.add_parser("eval", parents=[common, graphs], help="P, P', P'', mean size, occupancy, variance")
    p.add_argument("--lambda", dest="lam", default="1")
    p.add_argument("--float", action="store_true", help="floating-point mode")
    p.set_defaults(handler=cmd_eval)

    p = sub.add_parser("ratio", parents=[common, graphs], help="exact alpha / mean independent set size")
    p.add_argument("--lambda", dest="lam", default=settings.SCAN_CONFIG["lambda"])
    p.add_argument("--profile", help="comma-separated lambda grid; reports ratio per lambda")
    p.set_defaults(handler=cmd_ratio)

    p = sub.add_parser("bounds", parents=[common, graphs], help="check every applicable bound")
    p.add_argument("--lambda-grid", help="comma-separated, e.g. 1/4,1,4")
    p.add_argument("--atlas", type=int, help="add all graphs with at most N <= 8 vertices")
    p.set_defaults(handler=cmd_bounds)

    p = sub.add_parser("sample", parents=[common, graphs], help="Glauber occupancy estimate")
    p.add_argument("--lambda", dest="lam", default="1")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("--burn-in", type=int)
    p.add_argument("--thinning", type=int)
    p.add_argument("--chains", type=int, default=1)
    p.add_argument("--identities", action="store_true", help="add the uncovered-neighbour identity residuals")
    p.set_defaults(handler=cmd_sample)

    p = sub.add_parser("gen-regular", parents=[common], help="random d-regular graphs (configuration model)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--count", type=int, default=1, help="graphs with seeds seed..seed+count-1")
    p.add_argument("--triangle-free", action="store_true")
    p.add_argument("--girth", type=int, help="condition on girth at least this value")
    p.add_argument("--max-attempts", type=int)
    p.add_argument("--graph6", dest="format", action="store_const", const="graph6", help="graph6 lines (default)")
    p.set_defaults(handler=cmd_gen_regular, format="graph6")

    p = sub.add_parser("scan", parents=[common], help="minimum-ratio scan over a corpus")
    p.add_argument("--graph6-file", action="append", default=[])
    p.add_argument("--edge-list-file", action="append", default=[])
    p.add_argument("--inline", action="append", default=[])
    p.add_argument("--atlas", type=int)
    p.add_argument("--circulant-n", type=int)
    p.add_argument("--circulant-sizes", help="connection-set size range, e.g. 1:3")
    p.add_argument("--filter", action="append", default=[],
                   help="triangle-free | kr-free=R | min-degree=D | regular (repeatable)")
    p.add_argument("--lambda", dest="lam", default=settings.SCAN_CONFIG["lambda"])
    p.add_argument("--top-k", type=int)
    p.add_argument("--workers", type=int)
    p.set_defaults(handler=cmd_scan)

    p = sub.add_parser("circulant-search", parents=[common], help="ratio search over circulant graphs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--sizes", default="1:1", help="connection-set size range, e.g. 3:5")
    p.add_argument("--alpha-target", type=int)
    p.add_argument("--allow-triangles", action="store_true")
    p.add_argument("--lambda", dest="lam", default="1")
    p.add_argument("--workers", type=int)
    p.set_defaults(handler=cmd_circulant_search)

    p = sub.add_parser("tightness", parents=[common], help="sampled occupancy vs tree fixed point")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--repeats", type=int, default=1, help="seeds seed..seed+repeats-1")
    p.add_argument("--lambda-grid")
    p.add_argument("--samples", type=int)
    p.add_argument("--burn-in", type=int)
    p.add_argument("--thinning", type=int)
    p.set_defaults(handler=cmd_tightness)

    p = sub.add_parser("reduce", parents=[common, graphs], help="greedy minimum-degree reduction")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--threshold", type=float)
    group.add_argument("--lemma", action="store_true", help="threshold d / (2 log d) from the max degree")
    p.set_defaults(handler=cmd_reduce)

    p = sub.add_parser("tree", parents=[common], help="occupancy of the infinite d-regular tree")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--lambda", dest="lam", default="1")
    p.set_defaults(handler=cmd_tree)

    p = sub.add_parser("lambertw", parents=[common], help="principal Lambert W")
    p.add_argument("--z", type=float, required=True)
    p.set_defaults(handler=cmd_lambertw)

    return parser


def cli_main(argv: Optional[Sequence[str]] = None) -> int:
    """命令行入口，返回退出码"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_INPUT_ERROR
    except SystemExit as e:
        # --help
        return e.code if isinstance(e.code, int) else EXIT_OK

    if not getattr(args, "handler", None):
        parser.print_usage(sys.stderr)
        return EXIT_INPUT_ERROR

    try:
        if args.config:
            settings.load_yaml(args.config)
        setup_from_config(settings.LOGGING_CONFIG, verbose=args.verbose)
        return args.handler(args)
    except BoundViolationError as e:
        sys.stderr.write(f"violation: {e.message}\n")
        return EXIT_VIOLATION
    except HardCoreToolkitException as e:
        sys.stderr.write(f"error: {e.message}\n")
        return EXIT_INPUT_ERROR


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
