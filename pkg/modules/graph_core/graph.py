"""
图的位集表示
每个顶点的邻接关系存为一个 Python 整数位集，第 u 位为 1 表示与 u 相邻
"""

from typing import Iterable, Iterator, List, Tuple, Sequence

import networkx as nx

from core.exceptions import InvalidParameterError


def lsb_index(x: int) -> int:
    """最低位 1 的下标"""
    return (x & -x).bit_length() - 1


def iter_bits(mask: int) -> Iterator[int]:
    """按从小到大顺序遍历位集中的顶点"""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """
    简单无向图（不可变）

    不变量：邻接对称、无自环、所有 ≥ n 的位为 0。
    """

    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, adj: Sequence[int]):
        if n < 0:
            raise InvalidParameterError(f"Vertex count must be nonnegative, got {n}")
        if len(adj) != n:
            raise InvalidParameterError(f"Adjacency has {len(adj)} rows for n={n}")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise InvalidParameterError(f"Row {v} has bits outside 0..{n - 1}")
            if (row >> v) & 1:
                raise InvalidParameterError(f"Self-loop at vertex {v}")
            for u in iter_bits(row):
                if not (adj[u] >> v) & 1:
                    raise InvalidParameterError(f"Asymmetric adjacency between {v} and {u}")
        self.n = n
        self.adj: Tuple[int, ...] = tuple(adj)
        self._hash = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        """从边列表构造图，重复边被合并"""
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidParameterError(f"Edge ({u},{v}) out of bounds for n={n}")
            if u == v:
                raise InvalidParameterError(f"Self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    @classmethod
    def from_networkx(cls, nx_graph: nx.Graph) -> "Graph":
        """从 networkx 图转换，顶点按排序后的顺序重新编号为 0..n-1"""
        nodes = sorted(nx_graph.nodes())
        index = {node: i for i, node in enumerate(nodes)}
        edges = [(index[u], index[v]) for u, v in nx_graph.edges() if u != v]
        return cls.from_edges(len(nodes), edges)

    def to_networkx(self) -> nx.Graph:
        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(range(self.n))
        nx_graph.add_edges_from(self.edges())
        return nx_graph

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> List[int]:
        return [row.bit_count() for row in self.adj]

    def neighbors(self, v: int) -> List[int]:
        return list(iter_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def edges(self) -> List[Tuple[int, int]]:
        """按 (u, v), u < v 的字典序列出边"""
        result = []
        for u, row in enumerate(self.adj):
            for v in iter_bits(row >> (u + 1)):
                result.append((u, u + 1 + v))
        return result

    @property
    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def induced_subgraph(self, vertices: int) -> "Graph":
        """
        诱导子图，保留顶点按原编号顺序重新编号为 0..m-1

        Args:
            vertices: 保留顶点的位集
        """
        keep = list(iter_bits(vertices & self.vertex_mask))
        index = {v: i for i, v in enumerate(keep)}
        adj = []
        for v in keep:
            row = 0
            for u in iter_bits(self.adj[v] & vertices):
                row |= 1 << index[u]
            adj.append(row)
        return Graph(len(keep), adj)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.adj))
        return self._hash

    def __getstate__(self):
        return (self.n, self.adj)

    def __setstate__(self, state):
        self.n, self.adj = state
        self._hash = None

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count})"
