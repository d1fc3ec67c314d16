"""
硬核分布的单点热浴 Glauber 动力学

每个顶点维护已占据邻居计数，一次更新 O(deg v)。
随机数按块从 numpy Generator（PCG64）抽取，同一种子逐比特可复现。
"""

from typing import List

import numpy as np

from modules.graph_core.graph import Graph

DRAW_BLOCK = 4096


def make_rng(seed: int, chain_index: int = 0, stream: int = 0) -> np.random.Generator:
    """
    (seed, chain_index, stream) 对应的随机流

    即 SeedSequence(seed).spawn(k)[chain_index] 的第 stream 个子流；
    stream 0 驱动链本身，其余供观测使用。
    """
    sequence = np.random.SeedSequence(seed, spawn_key=(chain_index, stream))
    return np.random.Generator(np.random.PCG64(sequence))


class HardCoreChain:
    """
    硬核模型马尔可夫链

    状态为独立集；occupied_neighbors[v] 为 v 的已占据邻居数，
    v 未被覆盖当且仅当该计数为 0。
    """

    def __init__(self, graph: Graph, lam: float, rng: np.random.Generator):
        self.graph = graph
        self.lam = float(lam)
        self.rng = rng
        self.steps = 0
        self.accept_probability = self.lam / (1 + self.lam)
        self.neighbors: List[List[int]] = [graph.neighbors(v) for v in range(graph.n)]
        self.occupied: List[bool] = [False] * graph.n
        self.occupied_neighbors: List[int] = [0] * graph.n
        self.size = 0
        self._vertices: List[int] = []
        self._uniforms: List[float] = []
        self._cursor = 0

    def _refill(self) -> None:
        self._vertices = self.rng.integers(0, self.graph.n, size=DRAW_BLOCK).tolist()
        self._uniforms = self.rng.random(DRAW_BLOCK).tolist()
        self._cursor = 0

    def step(self) -> None:
        if self.graph.n == 0:
            self.steps += 1
            return
        if self._cursor >= len(self._vertices):
            self._refill()
        v = self._vertices[self._cursor]
        u = self._uniforms[self._cursor]
        self._cursor += 1
        self.steps += 1

        target = not self.occupied_neighbors[v] and u < self.accept_probability
        if target == self.occupied[v]:
            return
        self.occupied[v] = target
        delta = 1 if target else -1
        self.size += delta
        for w in self.neighbors[v]:
            self.occupied_neighbors[w] += delta

    def run(self, steps: int) -> None:
        for _ in range(steps):
            self.step()

    @property
    def state(self) -> int:
        """当前独立集的位集"""
        mask = 0
        for v, on in enumerate(self.occupied):
            if on:
                mask |= 1 << v
        return mask

    def is_independent(self) -> bool:
        return all(not (on and self.occupied_neighbors[v]) for v, on in enumerate(self.occupied))

    def uncovered_neighbors(self, v: int) -> int:
        """v 的邻居中未被覆盖者的个数 Z_v"""
        counts = self.occupied_neighbors
        return sum(1 for w in self.neighbors[v] if counts[w] == 0)


def glauber_step(chain: HardCoreChain) -> HardCoreChain:
    """
    一步热浴更新：均匀选 v；有邻居被占据则 v 置空，否则以 λ/(1+λ) 概率占据
    """
    chain.step()
    return chain
