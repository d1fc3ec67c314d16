"""
图核心模块
图表示、结构谓词、经典构造器与 graph6 编解码
"""

from .graph import Graph, iter_bits, lsb_index
from .graph6 import from_graph6, to_graph6, parse_edge_list
from .constructors import (
    classic,
    empty,
    complete,
    path,
    cycle,
    complete_bipartite,
    disjoint_union,
    circulant,
    petersen,
)
from .structure import (
    stats,
    is_triangle_free,
    girth,
    is_kr_free,
    min_degree_reduce,
    lemma_reduction_threshold,
    components,
    component_masks,
    independence_number_search,
)

__all__ = [
    'Graph',
    'iter_bits',
    'lsb_index',
    'from_graph6',
    'to_graph6',
    'parse_edge_list',
    'classic',
    'empty',
    'complete',
    'path',
    'cycle',
    'complete_bipartite',
    'disjoint_union',
    'circulant',
    'petersen',
    'stats',
    'is_triangle_free',
    'girth',
    'is_kr_free',
    'min_degree_reduce',
    'lemma_reduction_threshold',
    'components',
    'component_masks',
    'independence_number_search',
]
