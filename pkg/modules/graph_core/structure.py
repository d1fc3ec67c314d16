"""
结构谓词：度数、无三角形、围长、团检测、贪心最小度约简、最大独立集规模
"""

import math
from collections import deque
from typing import Dict, List, Optional, Sequence, Union

from core.exceptions import InvalidParameterError
from core.models import GraphStats
from .graph import Graph, iter_bits, lsb_index


def component_masks(adj: Sequence[int], mask: int) -> List[int]:
    """位集 mask 诱导子图的连通分量（每个分量一个位集）"""
    components = []
    while mask:
        comp = mask & -mask
        frontier = comp
        while frontier:
            reach = 0
            for v in iter_bits(frontier):
                reach |= adj[v]
            frontier = reach & mask & ~comp
            comp |= frontier
        components.append(comp)
        mask &= ~comp
    return components


def components(g: Graph) -> List[int]:
    return component_masks(g.adj, g.vertex_mask)


def is_triangle_free(g: Graph) -> bool:
    adj = g.adj
    for u in range(g.n):
        row = adj[u]
        for v in iter_bits(row >> (u + 1)):
            if row & adj[u + 1 + v]:
                return False
    return True


def girth(g: Graph) -> Union[int, float]:
    """最短圈长度；森林返回 math.inf"""
    if not is_triangle_free(g):
        return 3
    best = math.inf
    n = g.n
    adj = g.adj
    for root in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in iter_bits(adj[u]):
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def _has_clique(adj: Sequence[int], candidates: int, k: int) -> bool:
    if k == 0:
        return True
    while candidates:
        if candidates.bit_count() < k:
            return False
        v = lsb_index(candidates)
        candidates &= ~(1 << v)
        # 只在更高编号的顶点中扩展，避免重复枚举
        if _has_clique(adj, candidates & adj[v], k - 1):
            return True
    return False


def is_kr_free(g: Graph, r: int) -> bool:
    """图中不含 r-团时返回 True"""
    if r < 2:
        raise InvalidParameterError(f"Clique size r must be >= 2, got {r}")
    return not _has_clique(g.adj, g.vertex_mask, r)


def stats(g: Graph) -> GraphStats:
    degrees = g.degrees()
    max_degree = max(degrees, default=0)
    min_degree = min(degrees, default=0)
    triangle_free = is_triangle_free(g)
    return GraphStats(
        n=g.n,
        edge_count=sum(degrees) // 2,
        max_degree=max_degree,
        min_degree=min_degree,
        is_regular=max_degree == min_degree,
        triangle_free=triangle_free,
        girth=girth(g) if triangle_free else 3,
    )


def min_degree_reduce(g: Graph, threshold: float) -> Graph:
    """
    贪心约简：反复删除编号最小的、度数 ≤ threshold 的顶点及其邻居

    Returns:
        剩余顶点的诱导子图（最小度 > threshold），重新编号
    """
    alive = g.vertex_mask
    adj = g.adj
    while True:
        victim: Optional[int] = None
        for v in iter_bits(alive):
            if (adj[v] & alive).bit_count() <= threshold:
                victim = v
                break
        if victim is None:
            break
        alive &= ~((1 << victim) | adj[victim])
    return g.induced_subgraph(alive)


def lemma_reduction_threshold(d: int) -> float:
    """最小度猜想论证中使用的约简阈值 d / (2 log d)"""
    if d < 2:
        raise InvalidParameterError(f"Reduction threshold needs d >= 2, got {d}")
    return d / (2 * math.log(d))


def independence_number_search(g: Graph) -> int:
    """
    位集分支限界求最大独立集规模 α(G)

    度 ≤ 1 的顶点总可以直接取入；分量分开求解；全为 2 度的分量是圈。
    """
    adj = g.adj
    memo: Dict[int, int] = {}

    def solve(mask: int) -> int:
        if mask == 0:
            return 0
        cached = memo.get(mask)
        if cached is not None:
            return cached
        start = mask
        taken = 0
        reduced = True
        while reduced and mask:
            reduced = False
            for v in iter_bits(mask):
                if (adj[v] & mask).bit_count() <= 1:
                    taken += 1
                    mask &= ~((1 << v) | adj[v])
                    reduced = True
                    break
        if mask == 0:
            memo[start] = taken
            return taken

        parts = component_masks(adj, mask)
        if len(parts) > 1:
            result = taken + sum(solve(part) for part in parts)
            memo[start] = result
            return result

        best_v, best_deg = -1, -1
        for v in iter_bits(mask):
            deg = (adj[v] & mask).bit_count()
            if deg > best_deg:
                best_v, best_deg = v, deg
        if best_deg == 2:
            result = taken + mask.bit_count() // 2
        else:
            without = solve(mask & ~(1 << best_v))
            with_v = 1 + solve(mask & ~((1 << best_v) | adj[best_v]))
            result = taken + max(without, with_v)
        memo[start] = result
        return result

    return solve(g.vertex_mask)
