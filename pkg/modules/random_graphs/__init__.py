"""
随机正则图模块
"""

from .regular import RegularGraphGenerator, pair_stubs, validate_regular_parameters
from .tightness import TightnessExperiment, to_frame

__all__ = [
    'RegularGraphGenerator',
    'pair_stubs',
    'validate_regular_parameters',
    'TightnessExperiment',
    'to_frame',
]
