"""
经典图构造器
"""

from typing import Iterable, Dict, Any, Callable

from core.exceptions import InvalidParameterError
from .graph import Graph


def _check_nonnegative(**params: int) -> None:
    for name, value in params.items():
        if value < 0:
            raise InvalidParameterError(f"{name} must be nonnegative, got {value}")


def empty(n: int) -> Graph:
    _check_nonnegative(n=n)
    return Graph(n, [0] * n)


def complete(n: int) -> Graph:
    _check_nonnegative(n=n)
    full = (1 << n) - 1
    return Graph(n, [full & ~(1 << v) for v in range(n)])


def path(n: int) -> Graph:
    _check_nonnegative(n=n)
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    """n ≥ 3 的圈 C_n"""
    if n < 3:
        raise InvalidParameterError(f"Cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b}，左部为 0..a-1"""
    _check_nonnegative(a=a, b=b)
    edges = [(i, a + j) for i in range(a) for j in range(b)]
    return Graph.from_edges(a + b, edges)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """不交并，g2 的顶点平移 g1.n"""
    shift = g1.n
    return Graph(g1.n + g2.n, list(g1.adj) + [row << shift for row in g2.adj])


def circulant(n: int, connections: Iterable[int]) -> Graph:
    """
    循环图：顶点 i 与 i±s (mod n) 相邻

    Args:
        n: 顶点数（≥1）
        connections: 连接集，取值在 [1, n//2] 且互不相同
    """
    if n < 1:
        raise InvalidParameterError(f"Circulant needs n >= 1, got {n}")
    connections = list(connections)
    if len(set(connections)) != len(connections):
        raise InvalidParameterError(f"Connection values must be distinct: {connections}")
    for s in connections:
        if not 1 <= s <= n // 2:
            raise InvalidParameterError(f"Connection {s} outside [1, {n // 2}] for n={n}")
    edges = [(i, (i + s) % n) for i in range(n) for s in connections]
    return Graph.from_edges(n, edges)


def petersen() -> Graph:
    """Petersen 图：外圈 0..4，辐条 i–i+5，内部五角星"""
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((i, i + 5))
        edges.append((5 + i, 5 + (i + 2) % 5))
    return Graph.from_edges(10, edges)


_CLASSIC: Dict[str, Callable[..., Graph]] = {
    "empty": empty,
    "complete": complete,
    "path": path,
    "cycle": cycle,
    "complete_bipartite": complete_bipartite,
    "circulant": circulant,
    "petersen": petersen,
}


def classic(kind: str, *params: Any) -> Graph:
    """
    按名称构造经典图

    Args:
        kind: empty / complete / path / cycle / complete_bipartite / circulant / petersen
        params: 对应构造器的位置参数
    """
    builder = _CLASSIC.get(kind)
    if builder is None:
        raise InvalidParameterError(f"Unknown graph kind {kind!r}; expected one of {sorted(_CLASSIC)}")
    return builder(*params)
