"""
环形图 C_n(S) 上的比值搜索

按乘子等价类枚举连接集，依次做无三角形过滤、α 预筛，最后才计算精确多项式。
环形图点传递，故 α(G) = 1 + α(G − N[0])，预筛只需在 n − deg − 1 个顶点上搜索。
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Dict, List, Optional, Tuple

from core.base_module import BaseModule
from core.models import RatioRecord
from modules.graph_core.constructors import circulant
from modules.graph_core.graph import Graph
from modules.graph_core.graph6 import to_graph6
from modules.graph_core.structure import independence_number_search, is_triangle_free
from .corpus import circulant_connection_sets, circulant_label
from .ratio_scanner import ratio_record
from .scan_config import CirculantSearchConfig

logger = logging.getLogger(__name__)


def circulant_degree(n: int, connections: Tuple[int, ...]) -> int:
    return sum(1 if 2 * s == n else 2 for s in connections)


def vertex_transitive_alpha(g: Graph) -> int:
    """点传递图的独立数：取定顶点 0 后在其非邻居上求解"""
    if g.n == 0:
        return 0
    rest = g.vertex_mask & ~(1 | g.adj[0])
    return 1 + independence_number_search(g.induced_subgraph(rest))


def _evaluate_candidate(args: Tuple[int, Tuple[int, ...], CirculantSearchConfig]) -> Optional[RatioRecord]:
    n, connections, config = args
    g = circulant(n, connections)
    if config.require_triangle_free and not is_triangle_free(g):
        return None
    if config.alpha_target is not None and vertex_transitive_alpha(g) != config.alpha_target:
        return None
    return ratio_record(to_graph6(g), g, config.fugacity, source=circulant_label(n, connections))


class CirculantSearch(BaseModule):
    """环形图搜索"""

    def __init__(self, config: Dict[str, Any] = None, logger: logging.Logger = None):
        super().__init__(config, logger)
        self.last_stats: Dict[str, int] = {}

    def process(self, input_data: CirculantSearchConfig, **kwargs) -> List[RatioRecord]:
        return self.search(input_data)

    def candidates(self, config: CirculantSearchConfig) -> List[Tuple[int, ...]]:
        """
        乘子约简后的连接集

        无三角形图中邻域是独立集，故要求 α = α_target 时度数超过 α_target 的集合直接跳过。
        """
        n = config.n
        max_size = min(config.max_size, n // 2)
        sets = []
        for connections in circulant_connection_sets(n, config.min_size, max_size):
            if (config.require_triangle_free and config.alpha_target is not None
                    and circulant_degree(n, connections) > config.alpha_target):
                continue
            sets.append(connections)
        return sets

    def search(self, config: CirculantSearchConfig) -> List[RatioRecord]:
        """
        返回全部匹配记录，按 (比值, graph6) 升序
        """
        sets = self.candidates(config)
        self.logger.info(f"n={config.n}: {len(sets)} connection sets after multiplier and degree reduction")
        jobs = [(config.n, connections, config) for connections in sets]

        if config.max_workers > 1 and len(jobs) > 1:
            with ProcessPoolExecutor(max_workers=config.max_workers) as executor:
                results = list(executor.map(_evaluate_candidate, jobs, chunksize=8))
        else:
            results = [_evaluate_candidate(job) for job in jobs]

        records = sorted((r for r in results if r is not None), key=RatioRecord.sort_key)
        self.last_stats = {"candidates": len(sets), "matches": len(records)}
        for record in records:
            self.logger.info(f"{record.source}: alpha={record.alpha} ratio={record.ratio} (~{float(record.ratio):.5f})")
        return records
