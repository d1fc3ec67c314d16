"""
基于 Glauber 链的占据率估计与未覆盖条件概率、Z 恒等式的经验检验
"""

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Dict, Iterator, List, Optional, Tuple

import numpy as np

from core.base_module import BaseModule
from core.exceptions import InvalidParameterError, PreconditionError
from core.models import FactCheckResult, OccupancyEstimate, ZHistogram
from modules.bounds.tree import uniqueness_threshold
from modules.graph_core.graph import Graph
from modules.graph_core.structure import is_triangle_free
from .glauber import HardCoreChain, make_rng

OBSERVER_STREAM = 1


def batch_means(values: np.ndarray, batch_count: int) -> Tuple[float, float]:
    """均值与 batch means 标准误"""
    mean = float(values.mean())
    batches = min(batch_count, len(values))
    if batches < 2:
        return mean, math.inf
    means = np.array([chunk.mean() for chunk in np.array_split(values, batches)])
    stderr = float(means.std(ddof=1) / math.sqrt(batches))
    return mean, max(stderr, float(np.finfo(float).eps))


def iterate_states(g: Graph, lam: float, seed: int, samples: int, burn_in: int,
                   thinning: int, chain_index: int = 0) -> Iterator[HardCoreChain]:
    """burn-in 之后每隔 thinning 步产出一次链（同一对象，调用方只读）"""
    chain = HardCoreChain(g, lam, make_rng(seed, chain_index))
    chain.run(burn_in)
    for _ in range(samples):
        chain.run(thinning)
        yield chain


def occupancy_trace(g: Graph, lam: float, seed: int, samples: int, burn_in: int,
                    thinning: int, chain_index: int = 0) -> np.ndarray:
    """单条链上 |I|/n 的样本序列"""
    n = g.n
    return np.fromiter(
        (chain.size / n for chain in iterate_states(g, lam, seed, samples, burn_in, thinning, chain_index)),
        dtype=float,
        count=samples,
    )


def _occupancy_trace_job(args: Tuple[Graph, float, int, int, int, int, int]) -> np.ndarray:
    return occupancy_trace(*args)


class HardCoreSampler(BaseModule):
    """硬核分布采样器"""

    settings_section = "SAMPLER_CONFIG"

    def __init__(self, config: Dict[str, Any] = None, logger: logging.Logger = None):
        super().__init__(config, logger)
        self.burn_in_factor = self.get_setting("burn_in_factor", 100)
        self.thinning_factor = self.get_setting("thinning_factor", 1)
        self.batch_count = self.get_setting("batch_count", 20)
        self.uniqueness_warning = self.get_setting("uniqueness_warning", True)
        self.max_workers = self.worker_count()

    def process(self, input_data: Graph, **kwargs) -> OccupancyEstimate:
        return self.estimate_occupancy(input_data, **kwargs)

    def default_burn_in(self, n: int) -> int:
        """factor · n · log n，n 很小时按 log n ≥ 1 计"""
        return max(1, math.ceil(self.burn_in_factor * n * max(1.0, math.log(max(n, 1)))))

    def default_thinning(self, n: int) -> int:
        return max(1, math.ceil(self.thinning_factor * n))

    def _prepare(self, g: Graph, lam: float, samples: int,
                 burn_in: Optional[int], thinning: Optional[int]) -> Tuple[float, int, int]:
        if g.n == 0:
            raise PreconditionError("Sampling needs a graph with at least one vertex")
        lam = float(lam)
        if not math.isfinite(lam) or lam <= 0:
            raise InvalidParameterError(f"Fugacity must be positive and finite, got {lam}")
        burn_in = self.default_burn_in(g.n) if burn_in is None else burn_in
        thinning = self.default_thinning(g.n) if thinning is None else thinning
        if samples < 1 or burn_in < 1 or thinning < 1:
            raise InvalidParameterError(
                f"samples, burn_in and thinning must be >= 1, got {samples}, {burn_in}, {thinning}"
            )
        self._check_regime(g, lam)
        return lam, burn_in, thinning

    def _check_regime(self, g: Graph, lam: float) -> None:
        if not self.uniqueness_warning:
            return
        d = max(g.degrees(), default=0)
        threshold = uniqueness_threshold(d)
        if lam > threshold:
            self.logger.warning(
                f"lambda={lam} exceeds the tree uniqueness threshold {threshold:.4g} for max degree {d}; "
                "mixing is out of warranty and standard errors may hide metastability"
            )

    def estimate_occupancy(self, g: Graph, lam: float, seed: int, samples: int,
                           burn_in: Optional[int] = None, thinning: Optional[int] = None) -> OccupancyEstimate:
        """
        占据率的时间平均估计

        Args:
            g: 图
            lam: 逸度
            seed: 随机种子
            samples: 记录的状态数
            burn_in: 预热步数，默认 burn_in_factor·n·log n
            thinning: 相邻记录间的步数，默认 thinning_factor·n
        """
        lam, burn_in, thinning = self._prepare(g, lam, samples, burn_in, thinning)
        values = occupancy_trace(g, lam, seed, samples, burn_in, thinning)
        mean, stderr = batch_means(values, self.batch_count)
        self.logger.debug(f"n={g.n} lambda={lam} seed={seed}: occupancy {mean:.6f} +- {stderr:.2g}")
        return OccupancyEstimate(
            occupancy=mean, stderr=stderr, samples=samples,
            burn_in=burn_in, thinning=thinning, seed=seed, lam=lam,
        )

    def run_chains(self, g: Graph, lam: float, seed: int, chains: int, samples: int,
                   burn_in: Optional[int] = None, thinning: Optional[int] = None) -> OccupancyEstimate:
        """
        多条独立链，按链序号汇总

        第 i 条链使用 SeedSequence(seed).spawn(chains)[i]；max_workers > 1 时走进程池。
        返回的 samples 为所有链的样本总数。
        """
        if chains < 1:
            raise InvalidParameterError(f"chains must be >= 1, got {chains}")
        lam, burn_in, thinning = self._prepare(g, lam, samples, burn_in, thinning)
        jobs = [(g, lam, seed, samples, burn_in, thinning, index) for index in range(chains)]

        if self.max_workers > 1 and chains > 1:
            with ProcessPoolExecutor(max_workers=min(self.max_workers, chains)) as executor:
                traces = list(executor.map(_occupancy_trace_job, jobs))
        else:
            traces = [_occupancy_trace_job(job) for job in jobs]

        per_chain = max(1, self.batch_count // chains)
        batch_values: List[float] = []
        for trace in traces:
            batches = min(per_chain, len(trace))
            batch_values.extend(chunk.mean() for chunk in np.array_split(trace, batches))
        mean = float(np.mean(np.concatenate(traces)))
        _, stderr = batch_means(np.array(batch_values), len(batch_values))
        self.logger.info(f"{chains} chains x {samples} samples: occupancy {mean:.6f} +- {stderr:.2g}")
        return OccupancyEstimate(
            occupancy=mean, stderr=stderr, samples=chains * samples,
            burn_in=burn_in, thinning=thinning, seed=seed, lam=lam,
        )

    def z_histogram(self, g: Graph, lam: float, seed: int, samples: int,
                    burn_in: Optional[int] = None, thinning: Optional[int] = None) -> ZHistogram:
        """每个记录状态中均匀取一个顶点，统计其未覆盖邻居数 Z"""
        lam, burn_in, thinning = self._prepare(g, lam, samples, burn_in, thinning)
        observer = make_rng(seed, 0, OBSERVER_STREAM)
        picks = observer.integers(0, g.n, size=samples).tolist()
        counts = [0] * (max(g.degrees(), default=0) + 1)
        for chain, v in zip(iterate_states(g, lam, seed, samples, burn_in, thinning), picks):
            counts[chain.uncovered_neighbors(v)] += 1
        return ZHistogram(counts=counts, sample_size=samples)

    def fact_checks(self, g: Graph, lam: float, seed: int, samples: int,
                    burn_in: Optional[int] = None, thinning: Optional[int] = None) -> FactCheckResult:
        """
        占据条件: Pr[v ∈ I | v 未覆盖] = λ/(1+λ)
        邻居条件: Pr[v 未覆盖 | Z_v = j] = (1+λ)^{−j}

        每个记录状态对所有顶点取平均。

        Raises:
            PreconditionError: 图含三角形（邻居条件不成立）
        """
        if not is_triangle_free(g):
            raise PreconditionError("fact_checks needs a triangle-free graph; the uncovered-neighbour law fails with triangles")
        lam, burn_in, thinning = self._prepare(g, lam, samples, burn_in, thinning)

        d = max(g.degrees(), default=0)
        uncovered_total = 0
        occupied_uncovered = 0
        z_seen = [0] * (d + 1)
        z_uncovered = [0] * (d + 1)
        for chain in iterate_states(g, lam, seed, samples, burn_in, thinning):
            counts = chain.occupied_neighbors
            for v in range(g.n):
                z = chain.uncovered_neighbors(v)
                z_seen[z] += 1
                if counts[v] == 0:
                    uncovered_total += 1
                    z_uncovered[z] += 1
                    if chain.occupied[v]:
                        occupied_uncovered += 1

        fact1_gap = abs(occupied_uncovered / uncovered_total - lam / (1 + lam)) if uncovered_total else math.nan
        fact2_gaps = {
            j: abs(z_uncovered[j] / z_seen[j] - (1 + lam) ** (-j))
            for j in range(d + 1) if z_seen[j]
        }
        return FactCheckResult(fact1_gap=fact1_gap, fact2_gaps=fact2_gaps, observations=samples * g.n)

    def identity_report(self, g: Graph, lam: float, seed: int, samples: int,
                        burn_in: Optional[int] = None, thinning: Optional[int] = None) -> Dict[str, Any]:
        """
        同一样本流上的两侧比较

        - eq24: 占据率 = λ/(1+λ)·E[(1+λ)^{−Z}]
        - eq25: λ/(1+λ)·E[Z]/d ≤ 占据率，正则图上取等
        """
        if not is_triangle_free(g):
            raise PreconditionError("identity_report needs a triangle-free graph")
        lam, burn_in, thinning = self._prepare(g, lam, samples, burn_in, thinning)

        n = g.n
        d = max(g.degrees(), default=0)
        weight = lam / (1 + lam)
        occupancy = np.empty(samples)
        uncovered_weight = np.empty(samples)
        mean_z = np.empty(samples)
        for s, chain in enumerate(iterate_states(g, lam, seed, samples, burn_in, thinning)):
            zs = np.array([chain.uncovered_neighbors(v) for v in range(n)], dtype=float)
            occupancy[s] = chain.size / n
            uncovered_weight[s] = weight * np.mean((1 + lam) ** (-zs))
            mean_z[s] = zs.mean()

        occ_mean, occ_se = batch_means(occupancy, self.batch_count)
        rhs_mean, _ = batch_means(uncovered_weight, self.batch_count)
        _, eq24_se = batch_means(occupancy - uncovered_weight, self.batch_count)
        report: Dict[str, Any] = {
            "occupancy": occ_mean,
            "stderr": occ_se,
            "eq24_rhs": rhs_mean,
            "eq24_residual": occ_mean - rhs_mean,
            "eq24_stderr": eq24_se,
            "eq25_lhs": None,
            "eq25_slack": None,
            "eq25_stderr": None,
        }
        if d >= 1:
            lhs_values = weight * mean_z / d
            lhs_mean, _ = batch_means(lhs_values, self.batch_count)
            _, eq25_se = batch_means(occupancy - lhs_values, self.batch_count)
            report.update(eq25_lhs=lhs_mean, eq25_slack=occ_mean - lhs_mean, eq25_stderr=eq25_se)
        return report
