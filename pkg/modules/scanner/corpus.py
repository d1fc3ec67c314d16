"""
语料来源：graph6 文件、边列表文件、内联 graph6、networkx 图谱、环形图枚举

每个来源产出 (graph6, Graph)；graph6 为规范化编码，作为记录的标识。
"""

import logging
from itertools import combinations
from math import gcd
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

import networkx as nx

from core.exceptions import InvalidParameterError
from modules.graph_core.constructors import circulant
from modules.graph_core.graph import Graph
from modules.graph_core.graph6 import from_graph6, to_graph6
from utils.file_manager import FileManager
from .scan_config import ScanConfig

logger = logging.getLogger(__name__)

Item = Tuple[str, Graph]

ATLAS_MAX_VERTICES = 7
SMALL_MAX_VERTICES = 8


def graph6_corpus(path: str, file_manager: Optional[FileManager] = None) -> Iterator[Item]:
    """graph6 文件，坏行跳过并告警"""
    file_manager = file_manager or FileManager()
    for _, text, graph in file_manager.iter_graph6(path):
        yield text, graph


def edge_list_corpus(path: str, file_manager: Optional[FileManager] = None) -> Iterator[Item]:
    """单图边列表文件"""
    file_manager = file_manager or FileManager()
    graph = file_manager.load_edge_list(path)
    yield to_graph6(graph), graph


def inline_corpus(texts: Iterable[str]) -> Iterator[Item]:
    """命令行内联 graph6；格式错误直接上抛"""
    for text in texts:
        graph = from_graph6(text)
        yield to_graph6(graph), graph


def atlas_corpus(max_vertices: int) -> Iterator[Item]:
    """
    顶点数 1..max_vertices 的全部图（同构意义下各一个）

    1..7 个顶点直接取 networkx 图谱；8 个顶点由 7 顶点图谱单点扩展后去重得到，共 12346 个。
    """
    if not 1 <= max_vertices <= SMALL_MAX_VERTICES:
        raise InvalidParameterError(
            f"Small-graph corpora cover 1..{SMALL_MAX_VERTICES} vertices, got {max_vertices}"
        )
    top = []
    for nx_graph in nx.graph_atlas_g():
        n = nx_graph.number_of_nodes()
        if n == 0:
            continue
        if n > min(max_vertices, ATLAS_MAX_VERTICES):
            break
        graph = Graph.from_networkx(nx_graph)
        if n == ATLAS_MAX_VERTICES:
            top.append(graph)
        yield to_graph6(graph), graph
    if max_vertices == SMALL_MAX_VERTICES:
        yield from one_vertex_extensions(top)


def one_vertex_extensions(bases: Iterable[Graph], dedupe: bool = True) -> Iterator[Item]:
    """
    给每个基图加一个新顶点，邻域取遍旧顶点的全部子集

    基图取遍 n 个顶点的全部同构类时，结果覆盖 n + 1 个顶点的全部同构类。
    dedupe 时先按 WL 哈希分桶，桶内逐个做同构判定。
    """
    buckets: Dict[str, List[nx.Graph]] = {}
    produced = 0
    for base in bases:
        new_bit = 1 << base.n
        for mask in range(1 << base.n):
            adj = [row | new_bit if (mask >> v) & 1 else row for v, row in enumerate(base.adj)]
            adj.append(mask)
            graph = Graph(base.n + 1, adj)
            if dedupe:
                nx_graph = graph.to_networkx()
                bucket = buckets.setdefault(nx.weisfeiler_lehman_graph_hash(nx_graph), [])
                if any(nx.is_isomorphic(nx_graph, other) for other in bucket):
                    continue
                bucket.append(nx_graph)
            produced += 1
            yield to_graph6(graph), graph
    logger.debug(f"One-vertex extensions produced {produced} graphs")


def fold(x: int, n: int) -> int:
    """x mod n 映到 {0..⌊n/2⌋}"""
    x %= n
    return min(x, n - x)


def multiplier_canonical(connections: Tuple[int, ...], n: int) -> Tuple[int, ...]:
    """乘子等价类 {aS mod n : gcd(a, n) = 1} 中字典序最小的代表"""
    best = tuple(sorted(connections))
    for a in range(2, n):
        if gcd(a, n) != 1:
            continue
        image = tuple(sorted(fold(a * s, n) for s in connections))
        if image < best:
            best = image
    return best


def circulant_connection_sets(n: int, min_size: int, max_size: int) -> Iterator[Tuple[int, ...]]:
    """
    {1..⌊n/2⌋} 中大小在 [min_size, max_size] 的连接集，每个乘子等价类只产出代表元

    乘以单位元是 Z_n 的自同构，等价的连接集给出同构的图。
    """
    half = n // 2
    for size in range(min_size, min(max_size, half) + 1):
        kept = 0
        for connections in combinations(range(1, half + 1), size):
            if multiplier_canonical(connections, n) == connections:
                kept += 1
                yield connections
        logger.debug(f"n={n}: {kept} connection sets of size {size} after multiplier reduction")


def circulant_label(n: int, connections: Tuple[int, ...]) -> str:
    return f"C{n}({','.join(str(s) for s in connections)})"


def circulant_corpus(n: int, min_size: int, max_size: int) -> Iterator[Item]:
    for connections in circulant_connection_sets(n, min_size, max_size):
        graph = circulant(n, connections)
        yield to_graph6(graph), graph


def load_corpus(config: ScanConfig, file_manager: Optional[FileManager] = None) -> Iterator[Item]:
    """按配置顺序串联所有来源"""
    for path in config.graph6_files:
        yield from graph6_corpus(path, file_manager)
    for path in config.edge_list_files:
        yield from edge_list_corpus(path, file_manager)
    yield from inline_corpus(config.inline)
    if config.atlas is not None:
        yield from atlas_corpus(config.atlas)
    if config.circulant_n is not None:
        max_size = config.circulant_max_size or config.circulant_n // 2
        yield from circulant_corpus(config.circulant_n, config.circulant_min_size, max_size)
