"""
批量界验证：语料 × λ 网格上的 BoundReport 流与汇总
"""

import logging
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from core.base_module import BaseModule
from core.exceptions import GraphSizeError
from core.models import BoundReport, Fugacity, VerificationSummary
from modules.bounds.report import build_bound_report
from modules.indpoly.polynomial import IndependencePolynomialSolver
from .corpus import Item


class BoundVerifier(BaseModule):
    """界验证器"""

    settings_section = "VERIFY_CONFIG"

    def __init__(self, config: Dict[str, Any] = None, logger: logging.Logger = None):
        super().__init__(config, logger)
        self.tolerance = self.get_setting("tolerance", 1e-9)
        self.lambda_grid = self.get_setting("lambda_grid", ["1/4", "1", "4"])
        self.solver = IndependencePolynomialSolver(self.get_setting("solver", {}))

    def process(self, input_data: Iterable[Item], **kwargs) -> Tuple[List[BoundReport], VerificationSummary]:
        return self.verify(input_data, **kwargs)

    def verify(self, corpus: Iterable[Item], lambda_grid: Optional[Sequence[Any]] = None,
               on_report: Optional[Callable[[BoundReport], None]] = None,
               keep_reports: bool = True) -> Tuple[List[BoundReport], VerificationSummary]:
        """
        对每个图、每个 λ 生成报告

        超过精确模式上限的图记入 summary.skipped，不中断。

        Args:
            corpus: (graph6, Graph) 流
            lambda_grid: 逸度网格，默认取配置
            on_report: 每份报告生成后的回调（用于流式输出）
            keep_reports: False 时只保留汇总
        """
        grid = [Fugacity.coerce(lam) for lam in (lambda_grid or self.lambda_grid)]
        summary = VerificationSummary()
        reports: List[BoundReport] = []

        for graph6, g in corpus:
            if g.n == 0:
                summary.skipped.append(graph6)
                continue
            try:
                p = self.solver.compute(g)
            except GraphSizeError as e:
                self.logger.info(f"{graph6}: skipped ({e.message})")
                summary.skipped.append(graph6)
                continue
            summary.graphs_checked += 1
            for lam in grid:
                report = build_bound_report(g, lam, graph_id=graph6, poly=p, tolerance=self.tolerance)
                summary.absorb(report)
                if on_report:
                    on_report(report)
                if keep_reports:
                    reports.append(report)

        self.logger.info(
            f"Verified {summary.graphs_checked} graphs x {len(grid)} lambdas: "
            f"{summary.total_violations} violations, {len(summary.skipped)} skipped"
        )
        return reports, summary
