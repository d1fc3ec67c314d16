"""
α(G)/ᾱ_G(λ) 比值扫描

流式处理语料，只保留比值最小的 top-k；排序键为 (比值, graph6)。
"""

import heapq
import logging
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from itertools import islice
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from core.base_module import BaseModule
from core.exceptions import GraphSizeError, PreconditionError
from core.models import Fugacity, IndPoly, RatioRecord
from modules.graph_core.graph import Graph
from modules.graph_core.structure import is_kr_free, is_triangle_free, stats
from modules.indpoly.evaluation import evaluate
from modules.indpoly.polynomial import IndependencePolynomialSolver
from .corpus import Item, load_corpus
from .scan_config import ScanConfig

logger = logging.getLogger(__name__)


def conjecture_target(g: Graph, p: IndPoly, lam: Fraction, kr_free: Optional[int] = None) -> Fraction:
    """
    记录所适用的最强目标值

    - 1 + α/(λn)：由团界积分得到，对所有图成立
    - λ = 1 且无三角形：4/3
    - λ = 1 且 K_r-free（r 由扫描配置给出）：1 + 1/r
    """
    target = 1 + Fraction(p.alpha) / (lam * g.n)
    if lam == 1:
        if is_triangle_free(g):
            target = max(target, Fraction(4, 3))
        if kr_free is not None and is_kr_free(g, kr_free):
            target = max(target, 1 + Fraction(1, kr_free))
    return target


def ratio_record(graph6: str, g: Graph, lam: Fraction, kr_free: Optional[int] = None,
                 solver: Optional[IndependencePolynomialSolver] = None,
                 source: Optional[str] = None) -> RatioRecord:
    """单图的精确比值记录"""
    if g.n == 0:
        raise PreconditionError("Ratio is undefined for the graph with no vertices")
    solver = solver or IndependencePolynomialSolver()
    p = solver.compute(g)
    mean = evaluate(p, lam).mean_size
    return RatioRecord(
        graph6=graph6,
        n=g.n,
        max_degree=max(g.degrees()),
        alpha=p.alpha,
        mean_size=mean,
        ratio=Fraction(p.alpha) / mean,
        lam=lam,
        conjecture_target=conjecture_target(g, p, lam, kr_free),
        source=source,
    )


def _records_for_batch(args: Tuple[List[Item], Fraction, Optional[int], Dict[str, Any]]) -> Tuple[List[RatioRecord], List[str]]:
    batch, lam, kr_free, solver_config = args
    solver = IndependencePolynomialSolver(solver_config)
    records, oversized = [], []
    for graph6, g in batch:
        try:
            records.append(ratio_record(graph6, g, lam, kr_free, solver))
        except GraphSizeError:
            oversized.append(graph6)
    return records, oversized


def passes_filters(g: Graph, config: ScanConfig) -> bool:
    """过滤条件的合取"""
    if g.n == 0:
        return False
    if config.triangle_free and not is_triangle_free(g):
        return False
    if config.kr_free is not None and not is_kr_free(g, config.kr_free):
        return False
    if config.min_degree is not None or config.regular_only:
        graph_stats = stats(g)
        if config.min_degree is not None and graph_stats.min_degree < config.min_degree:
            return False
        if config.regular_only and not graph_stats.is_regular:
            return False
    return True


class RatioScanner(BaseModule):
    """比值扫描器"""

    settings_section = "SCAN_CONFIG"

    def __init__(self, config: Dict[str, Any] = None, logger: logging.Logger = None):
        super().__init__(config, logger)
        self.solver_config = dict(self.get_setting("solver", {}))
        self.last_stats: Dict[str, int] = {}

    def process(self, input_data: ScanConfig, **kwargs) -> List[RatioRecord]:
        return self.scan(input_data, **kwargs)

    def scan(self, config: ScanConfig, corpus: Optional[Iterable[Item]] = None) -> List[RatioRecord]:
        """
        扫描语料，返回按 (比值, graph6) 升序的 top-k 记录

        Args:
            config: 扫描配置
            corpus: 显式语料；为 None 时按 config 中的来源读取

        Raises:
            PreconditionError: 过滤后语料为空
        """
        lam = config.fugacity
        items = corpus if corpus is not None else load_corpus(config)
        seen = kept = 0
        oversized: List[str] = []
        top: List[RatioRecord] = []

        def filtered() -> Iterable[Item]:
            nonlocal seen, kept
            for graph6, g in items:
                seen += 1
                if passes_filters(g, config):
                    kept += 1
                    yield graph6, g

        stream = iter(filtered())
        jobs = iter(lambda: list(islice(stream, config.batch_size)), [])
        args = ((batch, lam, config.kr_free, self.solver_config) for batch in jobs)

        self.logger.info(f"Scanning at lambda={lam} (top_k={config.top_k}, workers={config.max_workers})")
        if config.max_workers > 1:
            with ProcessPoolExecutor(max_workers=config.max_workers) as executor:
                # 每次只提交有限个批次，内存占用与语料长度无关
                while True:
                    window = list(islice(args, 2 * config.max_workers))
                    if not window:
                        break
                    for records, skipped in executor.map(_records_for_batch, window):
                        top = heapq.nsmallest(config.top_k, top + records, key=RatioRecord.sort_key)
                        oversized.extend(skipped)
        else:
            for batch_args in args:
                records, skipped = _records_for_batch(batch_args)
                top = heapq.nsmallest(config.top_k, top + records, key=RatioRecord.sort_key)
                oversized.extend(skipped)

        for graph6 in oversized:
            self.logger.warning(f"{graph6}: above the exact-mode cap, skipped")
        self.last_stats = {"seen": seen, "kept": kept, "oversized": len(oversized)}
        if kept == 0:
            raise PreconditionError("Corpus is empty after filters", details=self.last_stats)
        self.logger.info(f"Scanned {seen} graphs, {kept} passed filters; minimum ratio "
                         f"{float(top[0].ratio) if top else float('nan'):.6f}")
        return top

    def ratio_profile(self, g: Graph, lambda_grid: Sequence[Any]) -> Dict[str, Any]:
        """
        固定图在多个 λ 下的比值；ᾱ 对 λ 严格递增，故比值应严格递减

        Returns:
            {"ratios": [(λ, 比值)...], "strictly_decreasing": bool}
        """
        grid = sorted(Fugacity.coerce(lam).value for lam in lambda_grid)
        grid = [lam if isinstance(lam, Fraction) else Fraction(lam) for lam in grid]
        solver = IndependencePolynomialSolver(self.solver_config)
        p = solver.compute(g)
        ratios = [(lam, Fraction(p.alpha) / evaluate(p, lam).mean_size) for lam in grid]
        decreasing = all(a[1] > b[1] for a, b in zip(ratios, ratios[1:]))
        return {"ratios": ratios, "strictly_decreasing": decreasing}
