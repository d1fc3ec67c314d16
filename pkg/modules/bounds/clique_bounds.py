"""
以最大独立集大小 α 和顶点数 n 为参数的多项式不等式

Q(λ) = P − (λ/α)P′ − (1/n)P′ 的系数全非负，团的不交并取等；
Moon–Moser 不等式为其证明中的归纳步。
"""

from fractions import Fraction
from typing import List, Union

from core.exceptions import InvalidParameterError, PreconditionError
from core.models import CliqueBoundResult, IndPoly

Number = Union[Fraction, float, int]


def clique_bound_check(p: IndPoly, n: int) -> CliqueBoundResult:
    """
    Q[k−1] = i_{k−1} − ((k−1)/α)·i_{k−1} − (k/n)·i_k，k = 1..α+1，i_{α+1} = 0
    """
    if n < 1 or p.alpha < 1:
        raise PreconditionError("Clique bound needs a graph with at least one vertex")
    alpha = p.alpha
    coeffs = list(p.coeffs) + [0]
    q = [
        coeffs[k - 1] * (1 - Fraction(k - 1, alpha)) - Fraction(k, n) * coeffs[k]
        for k in range(1, alpha + 2)
    ]
    return CliqueBoundResult(
        ok=all(c >= 0 for c in q),
        q_coeffs=q,
        zero_indices=[k for k, c in enumerate(q) if c == 0],
    )


def moon_moser_failures(p: IndPoly, n: int) -> List[int]:
    """(k²·i_k/i_{k−1} − n)/(k²−1) ≤ i_{k+1}/i_k 不成立的 k，k = 2..α"""
    coeffs = list(p.coeffs) + [0]
    failures = []
    for k in range(2, p.alpha + 1):
        lhs = (Fraction(k * k * coeffs[k], coeffs[k - 1]) - n) / (k * k - 1)
        rhs = Fraction(coeffs[k + 1], coeffs[k])
        if lhs > rhs:
            failures.append(k)
    return failures


def moon_moser_check(p: IndPoly, n: int) -> bool:
    return not moon_moser_failures(p, n)


def integrated_clique_bound(n: int, alpha: int, lam: Number) -> Number:
    """P_G(λ) ≤ (1 + λn/α)^α；λ 为有理数时结果精确"""
    if not 1 <= alpha <= n:
        raise InvalidParameterError(f"Need 1 <= alpha <= n, got alpha={alpha}, n={n}")
    if lam <= 0:
        raise InvalidParameterError(f"Fugacity must be positive, got {lam}")
    if isinstance(lam, int):
        lam = Fraction(lam)
    return (1 + lam * n / alpha) ** alpha
