"""
独立多项式的精确计算

主算法：在最大度顶点 v 上分支 P_G = P_{G-v} + λ·P_{G-N[v]}，
配合连通分量分解、孤立点剥离（每个孤立点贡献因子 1+λ）、
团分量直接给出 1 + kλ，以及按剩余顶点位集做键的 LRU 记忆化。
"""

import logging
from collections import OrderedDict
from math import comb
from typing import Dict, Any, List, Sequence, Tuple

from core.base_module import BaseModule
from core.exceptions import GraphSizeError
from core.models import IndPoly
from modules.graph_core.graph import Graph, iter_bits
from modules.graph_core.structure import component_masks

Coeffs = Tuple[int, ...]


def poly_add(a: Sequence[int], b: Sequence[int]) -> Coeffs:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for k, c in enumerate(b):
        out[k] += c
    return tuple(out)


def poly_shift(a: Sequence[int]) -> Coeffs:
    """乘以 λ"""
    return (0,) + tuple(a)


def poly_mul(a: Sequence[int], b: Sequence[int]) -> Coeffs:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


def binomial_poly(k: int) -> Coeffs:
    """(1+λ)^k 的系数"""
    return tuple(comb(k, j) for j in range(k + 1))


class IndependencePolynomialSolver(BaseModule):
    """独立多项式求解器"""

    settings_section = "EXACT_CONFIG"

    def __init__(self, config: Dict[str, Any] = None, logger: logging.Logger = None):
        super().__init__(config, logger)
        self.max_vertices = self.get_setting("max_vertices", 40)
        self.memo_max_entries = self.get_setting("memo_max_entries", 2_000_000)
        self.last_memo_size = 0
        self.last_evictions = 0

    def process(self, input_data: Graph, **kwargs) -> IndPoly:
        return self.compute(input_data)

    def compute(self, g: Graph) -> IndPoly:
        """
        计算图 g 的独立多项式

        Raises:
            GraphSizeError: 顶点数超过精确模式上限
        """
        if g.n > self.max_vertices:
            raise GraphSizeError(
                f"Graph has {g.n} vertices, above the exact-mode cap of {self.max_vertices}; "
                "use the Glauber sampler (`sample` subcommand) for graphs this large",
                details={"n": g.n, "cap": self.max_vertices},
            )

        adj = g.adj
        memo: "OrderedDict[int, Coeffs]" = OrderedDict()
        cap = self.memo_max_entries
        evictions = 0

        def solve(mask: int) -> Coeffs:
            nonlocal evictions
            if mask == 0:
                return (1,)
            cached = memo.get(mask)
            if cached is not None:
                memo.move_to_end(mask)
                return cached

            isolated = 0
            for v in iter_bits(mask):
                if not adj[v] & mask:
                    isolated |= 1 << v
            rest = mask & ~isolated

            if rest:
                parts = component_masks(adj, rest)
                if len(parts) > 1:
                    result: Coeffs = (1,)
                    for part in parts:
                        result = poly_mul(result, solve(part))
                else:
                    result = branch(rest)
            else:
                result = (1,)
            if isolated:
                result = poly_mul(result, binomial_poly(isolated.bit_count()))

            memo[mask] = result
            if len(memo) > cap:
                memo.popitem(last=False)
                evictions += 1
            return result

        def branch(mask: int) -> Coeffs:
            size = mask.bit_count()
            pivot, pivot_deg = -1, -1
            for v in iter_bits(mask):
                deg = (adj[v] & mask).bit_count()
                if deg > pivot_deg:
                    pivot, pivot_deg = v, deg
            if all((adj[v] & mask).bit_count() == size - 1 for v in iter_bits(mask)):
                return (1, size)
            without = solve(mask & ~(1 << pivot))
            closed = solve(mask & ~((1 << pivot) | adj[pivot]))
            return poly_add(without, poly_shift(closed))

        coeffs = solve(g.vertex_mask)
        self.last_memo_size = len(memo)
        self.last_evictions = evictions
        if evictions:
            self.logger.debug(f"Memo evicted {evictions} entries (cap {cap}) for n={g.n}")
        return IndPoly(coeffs=coeffs, n=g.n)


def independence_polynomial(g: Graph, max_vertices: int = None) -> IndPoly:
    """按全局配置计算独立多项式"""
    config = {} if max_vertices is None else {"max_vertices": max_vertices}
    return IndependencePolynomialSolver(config).compute(g)


def brute_force_counts(g: Graph, max_vertices: int = None) -> IndPoly:
    """
    穷举独立集计数（独立于主算法的对照实现）

    按字典序逐一扩展顶点子集，只沿独立子集前进。
    """
    if max_vertices is None:
        from config.settings import settings
        max_vertices = settings.EXACT_CONFIG["brute_force_max_vertices"]
    if g.n > max_vertices:
        raise GraphSizeError(
            f"Brute force limited to {max_vertices} vertices, got {g.n}",
            details={"n": g.n, "cap": max_vertices},
        )

    n = g.n
    adj = g.adj
    counts: List[int] = [0] * (n + 1)
    # 栈元素：(下一个可选顶点, 已禁止顶点位集, 当前大小)
    stack = [(0, 0, 0)]
    while stack:
        start, forbidden, size = stack.pop()
        counts[size] += 1
        for v in range(start, n):
            if not (forbidden >> v) & 1:
                stack.append((v + 1, forbidden | adj[v], size + 1))

    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return IndPoly(coeffs=tuple(counts), n=n)
