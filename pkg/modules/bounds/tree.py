"""
无穷 d-正则树 T_d 上的平移不变硬核测度

α 与 λ 满足 λ = (α/(1−α))·((1−α)/(1−2α))^d；
求解时改用辅助变量 z = α·d/(1−2α)，方程 z(1+z/d)^{d−1} = λd 的左边对 z 严格递增。
"""

import math
from typing import Dict, Iterable, List

from core.exceptions import InvalidParameterError
from core.models import TreeFixedPoint
from modules.indpoly.evaluation import adaptive_simpson, quadrature_settings
from .lambert_w import lambert_w
from .occupancy_bounds import occupancy_lower_bound_thm13

MAX_STEPS = 200


def _check_tree_degree(d: int) -> None:
    if isinstance(d, bool) or int(d) != d or d < 2:
        raise InvalidParameterError(f"Tree degree must be an integer >= 2, got {d}")


def _check_lam(lam: float) -> float:
    value = float(lam)
    if not math.isfinite(value) or value <= 0:
        raise InvalidParameterError(f"Fugacity must be positive and finite, got {lam}")
    return value


def tree_lambda(d: int, alpha: float) -> float:
    """由占据率反推逸度"""
    _check_tree_degree(d)
    if not 0 < alpha < 0.5:
        raise InvalidParameterError(f"alpha must lie in (0, 1/2), got {alpha}")
    return alpha / (1 - alpha) * ((1 - alpha) / (1 - 2 * alpha)) ** d


def _solve_z(d: int, lam: float) -> float:
    if d == 2:
        # z² /2 + z − 2λ = 0
        return 4 * lam / (1 + math.sqrt(1 + 4 * lam))

    log_target = math.log(lam * d)

    def h(z: float) -> float:
        return math.log(z) + (d - 1) * math.log1p(z / d) - log_target

    def h_prime(z: float) -> float:
        return 1 / z + (d - 1) / (d + z)

    lo, hi = 0.0, d * lam
    z = min(max(lambert_w(lam * d), hi * 1e-12), hi)
    for _ in range(MAX_STEPS):
        value = h(z)
        if value == 0:
            return z
        if value > 0:
            hi = z
        else:
            lo = z
        candidate = z - value / h_prime(z)
        if not lo < candidate < hi:
            candidate = (lo + hi) / 2
        if abs(candidate - z) <= 1e-15 * z:
            return candidate
        z = candidate
    return z


def tree_alpha(d: int, lam: float) -> TreeFixedPoint:
    """T_d 上的占据率 α_{T_d}(λ)"""
    _check_tree_degree(d)
    lam_f = _check_lam(lam)
    z = _solve_z(d, lam_f)
    return TreeFixedPoint(d=d, lam=lam_f, alpha=z / (d + 2 * z), z=z)


def tree_logpartition(d: int, lam: float) -> float:
    """
    每顶点 log 配分函数基准 ∫₀^λ α_{T_d}(t)/t dt

    被积函数在 t → 0 时趋于 1。
    """
    _check_tree_degree(d)
    lam_f = _check_lam(lam)
    tolerance, max_depth = quadrature_settings()

    def integrand(t: float) -> float:
        if t == 0:
            return 1.0
        return tree_alpha(d, t).alpha / t

    return adaptive_simpson(integrand, 0.0, lam_f, tolerance, max_depth)


def uniqueness_threshold(d: int) -> float:
    """
    T_d 上 Gibbs 测度唯一性的临界逸度 (d−1)^{d−1}/(d−2)^d

    d ≤ 2 时没有相变，返回 inf。
    """
    if d <= 2:
        return math.inf
    return math.exp((d - 1) * math.log(d - 1) - d * math.log(d - 2))


def tree_comparison_trend(ds: Iterable[int] = (100, 1000, 10_000, 100_000)) -> List[Dict[str, float]]:
    """
    比较 α_{T_d}(1) 与 thm13(d, 1/log d)

    每行的 epsilon = ratio − 1 应随 d 递减。
    """
    rows = []
    for d in ds:
        tree = tree_alpha(d, 1.0).alpha
        bound = occupancy_lower_bound_thm13(d, 1 / math.log(d))
        rows.append({
            "d": d,
            "tree_alpha": tree,
            "thm13": bound,
            "ratio": tree / bound,
            "epsilon": tree / bound - 1,
        })
    return rows


def small_fugacity_gap(d: int, s: float) -> float:
    """λ = d^{−s} 时 thm13 与树占据率之差的绝对值"""
    _check_tree_degree(d)
    if s <= 0:
        raise InvalidParameterError(f"Exponent s must be positive, got {s}")
    lam = d ** (-s)
    return abs(tree_alpha(d, lam).alpha - occupancy_lower_bound_thm13(d, lam))
