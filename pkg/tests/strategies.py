"""
hypothesis 图生成策略
"""

from hypothesis import strategies as st

from modules.graph_core.graph import Graph


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 9) -> Graph:
    """上三角逐位抽取的随机简单图"""
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    present = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [pair for pair, on in zip(pairs, present) if on])


@st.composite
def triangle_free_graphs(draw, min_n: int = 1, max_n: int = 10) -> Graph:
    """逐条加边，跳过会形成三角形的边"""
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    order = draw(st.permutations(pairs)) if pairs else []
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    adj = [0] * n
    for (u, v), on in zip(order, keep):
        if on and not adj[u] & adj[v]:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    return Graph(n, adj)
