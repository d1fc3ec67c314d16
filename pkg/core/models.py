"""
核心数据模型定义
定义系统中使用的所有数据结构
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Dict, Any, Optional, Tuple, Union, TYPE_CHECKING
import math

from .exceptions import InvalidParameterError

if TYPE_CHECKING:  # pragma: no cover
    from modules.graph_core.graph import Graph


Number = Union[Fraction, float, int]


@dataclass(frozen=True)
class Fugacity:
    """
    逸度参数 λ

    value 为 Fraction 时走精确有理数模式，为 float 时走浮点模式。
    """
    value: Union[Fraction, float]

    def __post_init__(self):
        if isinstance(self.value, bool) or not isinstance(self.value, (Fraction, float, int)):
            raise InvalidParameterError(f"Unsupported fugacity type: {type(self.value).__name__}")
        if isinstance(self.value, int):
            object.__setattr__(self, "value", Fraction(self.value))
        if isinstance(self.value, float) and not math.isfinite(self.value):
            raise InvalidParameterError(f"Fugacity must be finite, got {self.value}")
        if self.value <= 0:
            raise InvalidParameterError(f"Fugacity must be positive, got {self.value}")

    @property
    def exact(self) -> bool:
        return isinstance(self.value, Fraction)

    @classmethod
    def parse(cls, text: str, exact: bool = True) -> "Fugacity":
        """
        从文本解析逸度

        Args:
            text: 形如 "1"、"1/4"、"0.25" 的文本
            exact: False 时转换为浮点
        """
        try:
            value = Fraction(str(text).strip())
        except (ValueError, ZeroDivisionError):
            raise InvalidParameterError(f"Cannot parse fugacity: {text!r}")
        return cls(value if exact else float(value))

    @classmethod
    def coerce(cls, value: Union["Fugacity", Number, str]) -> "Fugacity":
        if isinstance(value, Fugacity):
            return value
        if isinstance(value, str):
            return cls.parse(value)
        return cls(value)

    def as_float(self) -> float:
        return float(self.value)

    def __str__(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class GraphStats:
    """图的结构统计"""
    n: int
    edge_count: int
    max_degree: int
    min_degree: int
    is_regular: bool
    triangle_free: bool
    girth: Union[int, float]  # 森林为 math.inf


@dataclass(frozen=True)
class IndPoly:
    """
    独立多项式 P_G(λ) 的系数向量

    coeffs[k] 为大小为 k 的独立集个数。
    """
    coeffs: Tuple[int, ...]
    n: int

    def __post_init__(self):
        if not self.coeffs or self.coeffs[0] != 1:
            raise InvalidParameterError("Independence polynomial must start with i_0 = 1")
        if len(self.coeffs) > 1 and self.coeffs[1] != self.n:
            raise InvalidParameterError(f"i_1 = {self.coeffs[1]} does not match n = {self.n}")
        if any(c <= 0 for c in self.coeffs):
            raise InvalidParameterError("All coefficients up to alpha must be positive")

    @property
    def alpha(self) -> int:
        return len(self.coeffs) - 1

    @property
    def total(self) -> int:
        """独立集总数 P(1)"""
        return sum(self.coeffs)

    def to_json_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "coeffs": [str(c) for c in self.coeffs],
            "alpha": self.alpha,
        }


@dataclass(frozen=True)
class EvalResult:
    """给定逸度下的硬核模型量"""
    lam: Number
    p: Number
    p_prime: Number
    p_second: Number
    mean_size: Number
    occupancy: Number
    variance: Number
    exact: bool


@dataclass(frozen=True)
class TreeFixedPoint:
    """无穷 d-正则树上平移不变硬核测度的占据率"""
    d: int
    lam: float
    alpha: float
    z: float


@dataclass(frozen=True)
class Corollary12Bound:
    """无度数限制的无三角形图配分函数下界"""
    n: int
    lam: float
    exponent: float
    crossover_degree: float


@dataclass
class CliqueBoundResult:
    """Q(λ) = P - (λ/α)P' - (1/n)P' 的系数检查结果"""
    ok: bool
    q_coeffs: List[Fraction] = field(default_factory=list)
    zero_indices: List[int] = field(default_factory=list)

    @property
    def identically_zero(self) -> bool:
        return all(c == 0 for c in self.q_coeffs)


@dataclass
class BoundReport:
    """单个图在单个逸度下的全部界检查记录"""
    graph_id: str
    n: int
    max_degree: int
    lam: Number
    triangle_free: bool
    regular: bool
    occupancy: float
    log_p_per_n: float
    thm13_lower: Optional[float] = None
    kdd_upper: Optional[float] = None
    kdd_equality: Optional[bool] = None
    thm14_per_n: Optional[float] = None
    kdd_log_upper: Optional[float] = None
    clique_bound_ok: bool = True
    moon_moser_ok: bool = True
    slacks: Dict[str, float] = field(default_factory=dict)
    violations: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_csv_row(self) -> Dict[str, Any]:
        return {
            "graph6": self.graph_id,
            "n": self.n,
            "d": self.max_degree,
            "lambda": str(self.lam),
            "occupancy": self.occupancy,
            "thm13": self.thm13_lower,
            "kdd_upper": self.kdd_upper,
            "logP_per_n": self.log_p_per_n,
            "thm14_per_n": self.thm14_per_n,
            "clique_ok": self.clique_bound_ok,
            "mm_ok": self.moon_moser_ok,
        }


@dataclass
class VerificationSummary:
    """批量界验证汇总"""
    graphs_checked: int = 0
    reports: int = 0
    skipped: List[str] = field(default_factory=list)
    violations: Dict[str, int] = field(default_factory=dict)
    min_slack: Dict[str, float] = field(default_factory=dict)
    kdd_equality_cases: List[str] = field(default_factory=list)

    @property
    def total_violations(self) -> int:
        return sum(self.violations.values())

    def absorb(self, report: BoundReport) -> None:
        self.reports += 1
        for name in report.violations:
            self.violations[name] = self.violations.get(name, 0) + 1
        for name, slack in report.slacks.items():
            current = self.min_slack.get(name)
            if current is None or slack < current:
                self.min_slack[name] = slack
        if report.kdd_equality and report.graph_id not in self.kdd_equality_cases:
            self.kdd_equality_cases.append(report.graph_id)


@dataclass
class ZHistogram:
    """随机顶点的未覆盖邻居数 Z 的经验分布"""
    counts: List[int]
    sample_size: int

    def mean(self) -> float:
        if self.sample_size == 0:
            return 0.0
        return sum(j * c for j, c in enumerate(self.counts)) / self.sample_size

    def expectation_of_power(self, base: float) -> float:
        """E[base^{-Z}]"""
        if self.sample_size == 0:
            return 0.0
        return sum(c * base ** (-j) for j, c in enumerate(self.counts)) / self.sample_size


@dataclass(frozen=True)
class OccupancyEstimate:
    """占据率的采样估计"""
    occupancy: float
    stderr: float
    samples: int
    burn_in: int
    thinning: int
    seed: int
    lam: float


@dataclass
class FactCheckResult:
    """未覆盖条件概率（占据条件与邻居条件）的经验偏差"""
    fact1_gap: float
    fact2_gaps: Dict[int, float] = field(default_factory=dict)
    observations: int = 0


@dataclass
class RegularSample:
    """随机正则图样本及拒绝统计"""
    graph: "Graph"
    n: int
    d: int
    seed: int
    attempts: int = 1
    rejections_simple: int = 0
    rejections_triangle: int = 0
    rejections_girth: int = 0


@dataclass(frozen=True)
class TightnessRow:
    """紧性实验表的一行"""
    n: int
    d: int
    lam: float
    seed: int
    occ_hat: float
    stderr: float
    tree_alpha: float
    thm13: float
    tree_logpartition: float

    @property
    def gap_tree(self) -> float:
        return self.occ_hat - self.tree_alpha

    @property
    def gap_thm13(self) -> float:
        return self.occ_hat - self.thm13

    def to_csv_row(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "d": self.d,
            "lambda": self.lam,
            "seed": self.seed,
            "occ_hat": self.occ_hat,
            "stderr": self.stderr,
            "tree_alpha": self.tree_alpha,
            "thm13": self.thm13,
            "gap_tree": self.gap_tree,
            "gap_thm13": self.gap_thm13,
        }


@dataclass(frozen=True)
class RatioRecord:
    """最大独立集与平均独立集大小之比的记录"""
    graph6: str
    n: int
    max_degree: int
    alpha: int
    mean_size: Fraction
    ratio: Fraction
    lam: Fraction
    conjecture_target: Optional[Fraction] = None
    source: Optional[str] = None  # 例如 "C35(1,7,11,16)"

    @property
    def below_target(self) -> bool:
        return self.conjecture_target is not None and self.ratio < self.conjecture_target

    def sort_key(self) -> Tuple[Fraction, str]:
        return (self.ratio, self.graph6)
