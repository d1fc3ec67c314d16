"""
Lambert W 函数主分支（z ≥ 0），Halley 迭代
"""

import logging
import math

from core.exceptions import InvalidParameterError

logger = logging.getLogger(__name__)

MAX_STEPS = 50


def _initial_guess(z: float) -> float:
    if z >= math.e:
        log_z = math.log(z)
        return log_z - math.log(log_z)
    if z < 0.25:
        return z * (1 - z)
    return math.log1p(z) * 0.8


def lambert_w(z: float) -> float:
    """
    求 w ≥ 0 使 w·e^w = z

    Raises:
        InvalidParameterError: z 为负或非有限
    """
    if isinstance(z, bool) or not math.isfinite(z):
        raise InvalidParameterError(f"lambert_w needs a finite argument, got {z}")
    if z < 0:
        raise InvalidParameterError(f"lambert_w is only defined here for z >= 0, got {z}")
    z = float(z)
    if z == 0:
        return 0.0

    w = _initial_guess(z)
    for _ in range(MAX_STEPS):
        ew = math.exp(w)
        f = w * ew - z
        fp = ew * (w + 1)
        step = f / (fp - (w + 2) * f / (2 * w + 2))
        w -= step
        if abs(step) < 1e-15 * (1 + abs(w)):
            break
    else:
        logger.debug(f"lambert_w({z}) hit the {MAX_STEPS}-step limit at w={w}")
    return w
