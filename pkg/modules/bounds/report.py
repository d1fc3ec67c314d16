"""
单图单逸度的界检查报告

适用范围：
- thm13 / thm14：无三角形且最大度 d ≥ 1
- kdd_occupancy / kdd_logpartition：d-正则无三角形，且取等当且仅当图为 K_{d,d} 的不交并
- 团界与 Moon–Moser：所有非空图
"""

import logging
from fractions import Fraction
from typing import Optional, Union

from core.exceptions import PreconditionError
from core.models import BoundReport, Fugacity, IndPoly
from modules.graph_core.graph import Graph
from modules.graph_core.graph6 import to_graph6
from modules.graph_core.structure import components, stats
from modules.indpoly.evaluation import evaluate, log_partition
from modules.indpoly.polynomial import independence_polynomial
from .clique_bounds import clique_bound_check, moon_moser_check
from .occupancy_bounds import (
    kdd_logpartition,
    kdd_occupancy,
    logpartition_lower_bound_thm14,
    occupancy_lower_bound_thm13,
)

logger = logging.getLogger(__name__)


def is_kdd_union(g: Graph, d: int) -> bool:
    """d-正则无三角形图是否为 K_{d,d} 的不交并（每个分量恰有 2d 个顶点）"""
    return all(mask.bit_count() == 2 * d for mask in components(g))


def build_bound_report(
    g: Graph,
    lam: Union[Fugacity, Fraction, float, int, str],
    graph_id: Optional[str] = None,
    poly: Optional[IndPoly] = None,
    tolerance: Optional[float] = None,
) -> BoundReport:
    """
    计算 g 在 λ 处的精确量并逐条比较适用的界

    违反记录在 violations 中，不抛出异常。
    """
    if g.n == 0:
        raise PreconditionError("Bound report needs a graph with at least one vertex")
    if tolerance is None:
        from config.settings import settings
        tolerance = settings.VERIFY_CONFIG["tolerance"]

    fugacity = Fugacity.coerce(lam)
    p = poly if poly is not None else independence_polynomial(g)
    graph_stats = stats(g)
    d = graph_stats.max_degree
    result = evaluate(p, fugacity)
    occupancy = float(result.occupancy)
    log_p_per_n = log_partition(p, fugacity) / g.n

    report = BoundReport(
        graph_id=graph_id or to_graph6(g),
        n=g.n,
        max_degree=d,
        lam=fugacity.value,
        triangle_free=graph_stats.triangle_free,
        regular=graph_stats.is_regular,
        occupancy=occupancy,
        log_p_per_n=log_p_per_n,
    )

    def record(name: str, slack: float) -> None:
        report.slacks[name] = slack
        if slack < -tolerance:
            report.violations.append(name)

    if graph_stats.triangle_free and d >= 1:
        report.thm13_lower = occupancy_lower_bound_thm13(d, fugacity.value)
        record("thm13", occupancy - report.thm13_lower)
        report.thm14_per_n = logpartition_lower_bound_thm14(g.n, d, fugacity.value) / g.n
        record("thm14", log_p_per_n - report.thm14_per_n)

        if graph_stats.is_regular:
            upper = kdd_occupancy(d, fugacity.value)
            report.kdd_upper = float(upper)
            if result.exact:
                report.kdd_equality = result.occupancy == upper
            else:
                report.kdd_equality = abs(occupancy - report.kdd_upper) <= tolerance
            record("kdd", report.kdd_upper - occupancy)
            if report.kdd_equality != is_kdd_union(g, d):
                report.violations.append("kdd_equality")
            report.kdd_log_upper = kdd_logpartition(d, fugacity.value)
            record("kdd_log", report.kdd_log_upper - log_p_per_n)

    report.clique_bound_ok = clique_bound_check(p, g.n).ok
    if not report.clique_bound_ok:
        report.violations.append("clique")
    report.moon_moser_ok = moon_moser_check(p, g.n)
    if not report.moon_moser_ok:
        report.violations.append("moon_moser")

    if report.violations:
        logger.warning(f"{report.graph_id} at lambda={fugacity}: violations {report.violations}")
    else:
        logger.debug(f"{report.graph_id} at lambda={fugacity}: all applicable bounds hold")
    return report
