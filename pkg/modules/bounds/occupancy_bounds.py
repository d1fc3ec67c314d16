"""
占据率与配分函数的闭式界

- thm13: 无三角形、最大度 d 图的占据率下界
- thm14: 对应的 log P 下界
- kdd_occupancy / kdd_logpartition: d-正则无三角形图的上界（K_{d,d} 取等）
- corollary12: 无度数限制的 log P 下界
- shearer_f: Shearer 的平均独立集下界函数
"""

import math
from fractions import Fraction
from typing import Union

from core.exceptions import InvalidParameterError
from core.models import Corollary12Bound
from .lambert_w import lambert_w

Number = Union[Fraction, float, int]


def _check_degree(d: int) -> None:
    if isinstance(d, bool) or int(d) != d or d < 1:
        raise InvalidParameterError(f"Degree must be an integer >= 1, got {d}")


def _check_fugacity(lam: Number) -> float:
    value = float(lam)
    if not math.isfinite(value) or value <= 0:
        raise InvalidParameterError(f"Fugacity must be positive and finite, got {lam}")
    return value


def occupancy_lower_bound_thm13(d: int, lam: Number) -> float:
    """λ/(1+λ) · W(d·log(1+λ)) / (d·log(1+λ))"""
    _check_degree(d)
    lam_f = _check_fugacity(lam)
    x = d * math.log1p(lam_f)
    return lam_f / (1 + lam_f) * lambert_w(x) / x


def logpartition_lower_bound_thm14(n: int, d: int, lam: Number) -> float:
    """log P_G(λ) ≥ (W² + 2W)·n/(2d)，W = W(d·log(1+λ))"""
    _check_degree(d)
    lam_f = _check_fugacity(lam)
    w = lambert_w(d * math.log1p(lam_f))
    return (w * w + 2 * w) * n / (2 * d)


def kdd_occupancy(d: int, lam: Number) -> Number:
    """
    K_{d,d} 的占据率 λ(1+λ)^{d−1} / (2(1+λ)^d − 1)

    λ 为 Fraction/int 时结果精确。
    """
    _check_degree(d)
    _check_fugacity(lam)
    if isinstance(lam, int):
        lam = Fraction(lam)
    if isinstance(lam, Fraction):
        base = (1 + lam) ** (d - 1)
        return lam * base / (2 * base * (1 + lam) - 1)
    # 除以 (1+λ)^d 防止 d 很大时溢出
    shrink = (1 + lam) ** -d
    return lam / (1 + lam) / (2 - shrink)


def kdd_logpartition(d: int, lam: Number) -> float:
    """每顶点 log 配分函数上界 (1/(2d))·log(2(1+λ)^d − 1)"""
    _check_degree(d)
    lam_f = _check_fugacity(lam)
    log_base = d * math.log1p(lam_f)
    return (log_base + math.log(2 - math.exp(-log_base))) / (2 * d)


def shearer_f(d: float) -> float:
    """
    f(d) = (d·log d − d + 1)/(d − 1)²

    d = 1 处取连续极限 1/2；d 接近 1 时用级数避免抵消误差。
    """
    if not math.isfinite(d) or d < 1:
        raise InvalidParameterError(f"shearer_f needs d >= 1, got {d}")
    eps = d - 1
    if abs(eps) < 1e-4:
        return 0.5 - eps / 6 + eps * eps / 12
    return (d * math.log(d) - d + 1) / (eps * eps)


def corollary12_bound(n: int, lam: Number) -> Corollary12Bound:
    """
    任意 n 顶点无三角形图的 log P 下界及证明中的交叉度数 d*

    x = n·log(1+λ)/2 ≤ 1 时 log x ≤ 0，返回平凡界 log P ≥ 0，交叉度数记为 0。
    """
    if n < 1:
        raise InvalidParameterError(f"corollary12_bound needs n >= 1, got {n}")
    lam_f = _check_fugacity(lam)
    log1p_lam = math.log1p(lam_f)
    x = n * log1p_lam / 2
    if x <= 1:
        return Corollary12Bound(n=n, lam=lam_f, exponent=0.0, crossover_degree=0.0)
    log_x = math.log(x)
    return Corollary12Bound(
        n=n,
        lam=lam_f,
        exponent=0.5 * math.sqrt(x) * log_x,
        crossover_degree=0.5 * math.sqrt(n / (2 * log1p_lam)) * log_x,
    )


def corollary12_degree_bound(n: int, d: int, lam: Number) -> float:
    """
    max{d·log(1+λ), (n/(2d))·W(d·log(1+λ))²}

    前者来自最大度顶点的独立邻域，后者来自对数配分函数的下界。
    """
    _check_degree(d)
    lam_f = _check_fugacity(lam)
    x = d * math.log1p(lam_f)
    w = lambert_w(x)
    return max(x, n / (2 * d) * w * w)


def average_size_lower_bound(d: int) -> float:
    """
    平均独立集占据率下界：thm13 在 λ = 1/log d 处的取值

    占据率对 λ 单调递增，因此对所有 λ ≥ 1/log d 成立。
    """
    _check_degree(d)
    if d < 2:
        raise InvalidParameterError(f"average_size_lower_bound needs d >= 2, got {d}")
    return occupancy_lower_bound_thm13(d, 1 / math.log(d))
