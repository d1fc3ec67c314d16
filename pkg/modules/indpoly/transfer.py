"""
环 C_n 的转移矩阵解析结果，用作精确求解器的对照

M = [[1, λ], [1, 0]]，P_{C_n}(λ) = tr(M^n)。
"""

import math
from fractions import Fraction
from typing import Tuple, Union

from core.exceptions import InvalidParameterError
from core.models import Fugacity

Matrix = Tuple[Tuple[Fraction, Fraction], Tuple[Fraction, Fraction]]


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    return (
        (a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]),
        (a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]),
    )


def cycle_partition_function(n: int, lam: Union[Fugacity, Fraction, int, str] = 1) -> Fraction:
    """P_{C_n}(λ) 的精确值，λ = 1 时为 Lucas 数 L_n"""
    if n < 3:
        raise InvalidParameterError(f"cycle needs n >= 3, got {n}")
    x = Fugacity.coerce(lam).value
    x = x if isinstance(x, Fraction) else Fraction(x)
    result: Matrix = ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)))
    base: Matrix = ((Fraction(1), x), (Fraction(1), Fraction(0)))
    k = n
    while k:
        if k & 1:
            result = _matmul(result, base)
        base = _matmul(base, base)
        k >>= 1
    return result[0][0] + result[1][1]


def cycle_occupancy(n: int, lam: float) -> float:
    """
    C_n 的占据率（浮点）

    特征值 μ± = (1 ± s)/2，s = √(1+4λ)，r = μ-/μ+；
    占据率 = λ(1 − r^{n−1}) / (s·μ+·(1 + r^n))。
    """
    if n < 3:
        raise InvalidParameterError(f"cycle needs n >= 3, got {n}")
    if lam <= 0:
        raise InvalidParameterError(f"Fugacity must be positive, got {lam}")
    s = math.sqrt(1 + 4 * lam)
    mu_plus = (1 + s) / 2
    r = ((1 - s) / 2) / mu_plus
    return lam * (1 - r ** (n - 1)) / (s * mu_plus * (1 + r ** n))
