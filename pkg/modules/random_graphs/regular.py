"""
随机 d-正则图：配置模型（stub 配对）+ 整体重启拒绝

条件化（无三角形 / 围长下界）在同一拒绝循环中完成，
接受的样本服从条件化后的均匀分布。
"""

import logging
from typing import Any, Callable, Dict, Optional

import numpy as np

from core.base_module import BaseModule
from core.exceptions import InvalidParameterError, RetryBudgetExceeded
from core.models import RegularSample
from modules.graph_core.graph import Graph
from modules.graph_core.structure import girth, is_triangle_free


def validate_regular_parameters(n: int, d: int) -> None:
    """
    Raises:
        InvalidParameterError: n·d 为奇数，或 d ≥ n，或参数为负
    """
    if n < 1 or d < 0:
        raise InvalidParameterError(f"Need n >= 1 and d >= 0, got n={n}, d={d}")
    if (n * d) % 2:
        raise InvalidParameterError(f"n*d must be even, got n={n}, d={d}", code="parity")
    if d >= n:
        raise InvalidParameterError(f"Degree d={d} must be below n={n}", code="degree")


def pair_stubs(n: int, d: int, rng: np.random.Generator) -> Optional[Graph]:
    """
    对 n·d 个半边做一次均匀完美匹配

    出现自环或重边时返回 None。
    """
    stubs = np.repeat(np.arange(n), d)
    rng.shuffle(stubs)
    pairs = np.sort(stubs.reshape(-1, 2), axis=1)
    if np.any(pairs[:, 0] == pairs[:, 1]):
        return None
    codes = pairs[:, 0] * n + pairs[:, 1]
    if np.unique(codes).size < codes.size:
        return None
    return Graph.from_edges(n, pairs.tolist())


class RegularGraphGenerator(BaseModule):
    """随机正则图生成器"""

    settings_section = "RANDOM_GRAPH_CONFIG"

    def __init__(self, config: Dict[str, Any] = None, logger: logging.Logger = None):
        super().__init__(config, logger)
        self.max_attempts = self.get_setting("max_attempts", 100_000)

    def process(self, input_data: Dict[str, Any], **kwargs) -> RegularSample:
        return self.random_regular_triangle_free(**input_data)

    def _sample(self, n: int, d: int, seed: int, max_attempts: Optional[int],
                accept: Optional[Callable[[Graph], Optional[str]]]) -> RegularSample:
        validate_regular_parameters(n, d)
        budget = self.max_attempts if max_attempts is None else max_attempts
        if budget < 1:
            raise InvalidParameterError(f"max_attempts must be >= 1, got {budget}")

        rng = np.random.Generator(np.random.PCG64(seed))
        rejections = {"simple": 0, "triangle": 0, "girth": 0}
        for attempt in range(1, budget + 1):
            graph = pair_stubs(n, d, rng)
            if graph is None:
                rejections["simple"] += 1
                continue
            reason = accept(graph) if accept else None
            if reason:
                rejections[reason] += 1
                continue
            self.logger.debug(f"n={n} d={d} seed={seed}: accepted after {attempt} attempts")
            return RegularSample(
                graph=graph, n=n, d=d, seed=seed, attempts=attempt,
                rejections_simple=rejections["simple"],
                rejections_triangle=rejections["triangle"],
                rejections_girth=rejections["girth"],
            )

        raise RetryBudgetExceeded(
            f"No acceptable {d}-regular graph on {n} vertices within {budget} attempts "
            f"(rejected: {rejections['simple']} non-simple, {rejections['triangle']} with triangles, "
            f"{rejections['girth']} short girth)",
            details={"n": n, "d": d, "seed": seed, "attempts": budget, **{f"rejections_{k}": v for k, v in rejections.items()}},
        )

    def random_regular(self, n: int, d: int, seed: int, max_attempts: Optional[int] = None) -> RegularSample:
        """简单 d-正则图上的均匀分布"""
        return self._sample(n, d, seed, max_attempts, None)

    def random_regular_triangle_free(self, n: int, d: int, seed: int,
                                     max_attempts: Optional[int] = None) -> RegularSample:
        """条件于无三角形"""
        return self._sample(
            n, d, seed, max_attempts,
            lambda g: None if is_triangle_free(g) else "triangle",
        )

    def random_regular_high_girth(self, n: int, d: int, min_girth: int, seed: int,
                                  max_attempts: Optional[int] = None) -> RegularSample:
        """条件于围长 ≥ min_girth；三角形单独计数"""
        if min_girth < 3:
            raise InvalidParameterError(f"min_girth must be >= 3, got {min_girth}")

        def accept(g: Graph) -> Optional[str]:
            if min_girth > 3 and not is_triangle_free(g):
                return "triangle"
            return None if girth(g) >= min_girth else "girth"

        return self._sample(n, d, seed, max_attempts, accept)
