"""
硬核模型量的求值：P、P'、P''、平均独立集大小、占据率、方差，
以及 α/ᾱ 比值和两个积分恒等式的数值残差
"""

import math
import sys
from fractions import Fraction
from typing import Callable, Tuple, Union

import numpy as np

from core.exceptions import InvalidParameterError, PreconditionError
from core.models import EvalResult, Fugacity, IndPoly
from modules.graph_core.graph import Graph
from .polynomial import independence_polynomial

LOG_FLOAT_MAX = math.log(sys.float_info.max)

FugacityLike = Union[Fugacity, Fraction, float, int, str]


def horner_with_derivatives(coeffs, x):
    """一次 Horner 扫描同时求 P(x)、P'(x)、P''(x)"""
    zero = x * 0
    p, dp, ddp = zero, zero, zero
    for c in reversed(coeffs):
        ddp = ddp * x + 2 * dp
        dp = dp * x + p
        p = p * x + c
    return p, dp, ddp


def evaluate(p: IndPoly, lam: FugacityLike) -> EvalResult:
    """
    在逸度 λ 处求值

    λ 为有理数时全部输出为精确 Fraction；λ 为浮点时，平均值与方差
    通过 log-sum-exp 计算，避免大系数乘大 λ 时溢出。P、P'、P'' 溢出时
    改由对数域还原，仍超出浮点范围的记为 inf。
    """
    fugacity = Fugacity.coerce(lam)
    x = fugacity.value
    if fugacity.exact:
        value, first, second = horner_with_derivatives(p.coeffs, x)
        mean = x * first / value
        second_moment = (x * first + x * x * second) / value
        variance = second_moment - mean * mean
        occupancy = mean / p.n if p.n else Fraction(0)
        return EvalResult(
            lam=x, p=value, p_prime=first, p_second=second,
            mean_size=mean, occupancy=occupancy, variance=variance, exact=True,
        )

    log_value, mean, variance = log_weight_moments(p, x)
    try:
        value, first, second = horner_with_derivatives([float(c) for c in p.coeffs], x)
    except OverflowError:
        value = first = second = math.inf
    if not (math.isfinite(value) and math.isfinite(first) and math.isfinite(second)):
        value, first, second = _derivatives_from_logs(log_value, mean, variance, x)
    occupancy = mean / p.n if p.n else 0.0
    return EvalResult(
        lam=x, p=value, p_prime=first, p_second=second,
        mean_size=mean, occupancy=occupancy, variance=variance, exact=False,
    )


def _exp_or_inf(log_value: float) -> float:
    return math.exp(log_value) if log_value < LOG_FLOAT_MAX else math.inf


def _derivatives_from_logs(log_value: float, mean: float, variance: float, x: float) -> Tuple[float, float, float]:
    """
    由 log P 与 |I| 的矩还原 P、P'、P''：xP' = E[K]·P，x²P'' = E[K(K−1)]·P

    超出浮点范围的量记为 inf，均值与方差不受影响。
    """
    falling = variance + mean * mean - mean
    first = _exp_or_inf(log_value + math.log(mean) - math.log(x)) if mean > 0 else 0.0
    second = _exp_or_inf(log_value + math.log(falling) - 2 * math.log(x)) if falling > 0 else 0.0
    return _exp_or_inf(log_value), first, second


def log_weight_moments(p: IndPoly, lam: float) -> Tuple[float, float, float]:
    """
    |I| 在硬核分布下的 (log P, 均值, 方差)，浮点

    权重 i_k λ^k 在对数域归一化，方差按中心化二阶矩求和。
    """
    if lam <= 0:
        raise InvalidParameterError(f"Fugacity must be positive, got {lam}")
    ks = np.arange(len(p.coeffs), dtype=float)
    log_terms = np.array([math.log(c) for c in p.coeffs]) + ks * math.log(lam)
    top = log_terms.max()
    weights = np.exp(log_terms - top)
    total = weights.sum()
    probs = weights / total
    mean = float(np.dot(ks, probs))
    variance = float(np.dot((ks - mean) ** 2, probs))
    return float(top + math.log(total)), mean, variance


def log_partition(p: IndPoly, lam: FugacityLike) -> float:
    """log P(λ)，浮点"""
    fugacity = Fugacity.coerce(lam)
    if fugacity.exact:
        value = horner_with_derivatives(p.coeffs, fugacity.value)[0]
        return math.log(value.numerator) - math.log(value.denominator)
    return log_weight_moments(p, fugacity.value)[0]


def independence_number(p: IndPoly) -> int:
    """α(G) 即多项式次数"""
    return p.alpha


def ratio_from_poly(p: IndPoly, lam: FugacityLike) -> Fraction:
    """精确比值 α(G) / ᾱ_G(λ)；浮点 λ 按其精确二进制值转换"""
    if p.n == 0:
        raise PreconditionError("Ratio is undefined for the graph with no vertices")
    value = Fugacity.coerce(lam).value
    exact_lam = value if isinstance(value, Fraction) else Fraction(value)
    mean = evaluate(p, exact_lam).mean_size
    return Fraction(p.alpha) / mean


def ratio(g: Graph, lam: FugacityLike = 1) -> Fraction:
    return ratio_from_poly(independence_polynomial(g), lam)


def adaptive_simpson(f: Callable[[float], float], a: float, b: float,
                     tolerance: float, max_depth: int) -> float:
    """自适应 Simpson 积分"""

    def simpson(fa, fm, fb, width):
        return width * (fa + 4 * fm + fb) / 6

    def recurse(a, b, fa, fm, fb, whole, tol, depth):
        m = (a + b) / 2
        lm, rm = (a + m) / 2, (m + b) / 2
        flm, frm = f(lm), f(rm)
        left = simpson(fa, flm, fm, m - a)
        right = simpson(fm, frm, fb, b - m)
        delta = left + right - whole
        if depth <= 0 or abs(delta) <= 15 * tol:
            return left + right + delta / 15
        return (recurse(a, m, fa, flm, fm, left, tol / 2, depth - 1)
                + recurse(m, b, fm, frm, fb, right, tol / 2, depth - 1))

    if b == a:
        return 0.0
    fa, fb, fm = f(a), f(b), f((a + b) / 2)
    return recurse(a, b, fa, fm, fb, simpson(fa, fm, fb, b - a), tolerance, max_depth)


def quadrature_settings() -> Tuple[float, int]:
    from config.settings import settings
    config = settings.QUADRATURE_CONFIG
    return config["tolerance"], config["max_depth"]


def integral_identity_residual(g: Graph, lam_max: float, grid: int = 16) -> float:
    """
    α(G) − [ᾱ(1) + ∫₁^{λ_max} Var_λ(|I|)/λ dλ]

    在 t = log λ 上积分（dλ/λ = dt），先均分 grid 段，每段自适应 Simpson。
    残差应为正，且随 λ_max 递减到 0。
    """
    if lam_max < 1:
        raise InvalidParameterError(f"lam_max must be >= 1, got {lam_max}")
    if grid < 1:
        raise InvalidParameterError(f"grid must be >= 1, got {grid}")
    p = independence_polynomial(g)
    tolerance, max_depth = quadrature_settings()

    def integrand(t: float) -> float:
        return log_weight_moments(p, math.exp(t))[2]

    upper = math.log(lam_max)
    edges = np.linspace(0.0, upper, grid + 1)
    integral = sum(
        adaptive_simpson(integrand, float(lo), float(hi), tolerance / grid, max_depth)
        for lo, hi in zip(edges[:-1], edges[1:])
    )
    mean_at_one = float(evaluate(p, Fraction(1)).mean_size)
    return p.alpha - (mean_at_one + integral)


def logpartition_identity_residual(g: Graph, lam: float, grid: int = 16) -> float:
    """
    (1/n)[log P(λ) − ∫₀^λ ᾱ(t)/t dt]，应为 0

    被积函数 ᾱ(t)/t = P'(t)/P(t) 在 t = 0 处取 i_1 = n。
    """
    if lam <= 0:
        raise InvalidParameterError(f"Fugacity must be positive, got {lam}")
    p = independence_polynomial(g)
    if p.n == 0:
        return 0.0
    tolerance, max_depth = quadrature_settings()
    float_coeffs = [float(c) for c in p.coeffs]

    def integrand(t: float) -> float:
        if t == 0:
            return float(p.n)
        value, first, _ = horner_with_derivatives(float_coeffs, t)
        return first / value

    edges = np.linspace(0.0, lam, grid + 1)
    integral = sum(
        adaptive_simpson(integrand, float(lo), float(hi), tolerance / grid, max_depth)
        for lo, hi in zip(edges[:-1], edges[1:])
    )
    return (log_partition(p, float(lam)) - integral) / p.n
