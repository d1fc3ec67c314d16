"""
Glauber 采样模块
"""

from .glauber import HardCoreChain, glauber_step, make_rng
from .estimators import HardCoreSampler, batch_means, iterate_states, occupancy_trace

__all__ = [
    'HardCoreChain',
    'glauber_step',
    'make_rng',
    'HardCoreSampler',
    'batch_means',
    'iterate_states',
    'occupancy_trace',
]
