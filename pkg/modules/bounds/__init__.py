"""
闭式界模块
Lambert W、占据率与配分函数界、树不动点、团界与批量报告
"""

from .lambert_w import lambert_w
from .occupancy_bounds import (
    occupancy_lower_bound_thm13,
    logpartition_lower_bound_thm14,
    kdd_occupancy,
    kdd_logpartition,
    shearer_f,
    corollary12_bound,
    corollary12_degree_bound,
    average_size_lower_bound,
)
from .tree import (
    tree_lambda,
    tree_alpha,
    tree_logpartition,
    uniqueness_threshold,
    tree_comparison_trend,
    small_fugacity_gap,
)
from .clique_bounds import (
    clique_bound_check,
    moon_moser_check,
    moon_moser_failures,
    integrated_clique_bound,
)
from .report import build_bound_report, is_kdd_union

__all__ = [
    'lambert_w',
    'occupancy_lower_bound_thm13',
    'logpartition_lower_bound_thm14',
    'kdd_occupancy',
    'kdd_logpartition',
    'shearer_f',
    'corollary12_bound',
    'corollary12_degree_bound',
    'average_size_lower_bound',
    'tree_lambda',
    'tree_alpha',
    'tree_logpartition',
    'uniqueness_threshold',
    'tree_comparison_trend',
    'small_fugacity_gap',
    'clique_bound_check',
    'moon_moser_check',
    'moon_moser_failures',
    'integrated_clique_bound',
    'build_bound_report',
    'is_kdd_union',
]
