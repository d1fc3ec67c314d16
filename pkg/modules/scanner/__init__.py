"""
扫描模块
比值扫描、环形图搜索与批量界验证
"""

from .scan_config import ScanConfig, CirculantSearchConfig
from .corpus import (
    graph6_corpus,
    edge_list_corpus,
    inline_corpus,
    atlas_corpus,
    one_vertex_extensions,
    circulant_corpus,
    circulant_connection_sets,
    multiplier_canonical,
    load_corpus,
)
from .ratio_scanner import RatioScanner, ratio_record, conjecture_target, passes_filters
from .circulant_search import CirculantSearch, vertex_transitive_alpha
from .bound_verifier import BoundVerifier

__all__ = [
    'ScanConfig',
    'CirculantSearchConfig',
    'graph6_corpus',
    'edge_list_corpus',
    'inline_corpus',
    'atlas_corpus',
    'one_vertex_extensions',
    'circulant_corpus',
    'circulant_connection_sets',
    'multiplier_canonical',
    'load_corpus',
    'RatioScanner',
    'ratio_record',
    'conjecture_target',
    'passes_filters',
    'CirculantSearch',
    'vertex_transitive_alpha',
    'BoundVerifier',
]
