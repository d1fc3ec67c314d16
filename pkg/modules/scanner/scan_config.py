"""
扫描与环形图搜索的运行配置
"""

from fractions import Fraction
from typing import Any, List, Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from core.exceptions import ConfigurationError


def _parse_lambda(value: Any) -> str:
    try:
        lam = Fraction(str(value).strip())
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"lambda must be a rational number, got {value!r}")
    if lam <= 0:
        raise ValueError(f"lambda must be positive, got {value!r}")
    return str(lam)


class ScanConfig(BaseModel):
    """
    比值扫描配置

    过滤条件可组合；语料来源至少指定一个，按字段顺序依次读取。
    """
    model_config = ConfigDict(extra="forbid")

    lam: str = "1"
    triangle_free: bool = False
    kr_free: Optional[int] = Field(default=None, ge=2)
    min_degree: Optional[int] = Field(default=None, ge=0)
    regular_only: bool = False
    top_k: int = Field(default=20, ge=1)
    batch_size: int = Field(default=256, ge=1)
    max_workers: int = Field(default=1, ge=1)

    graph6_files: List[str] = Field(default_factory=list)
    edge_list_files: List[str] = Field(default_factory=list)
    inline: List[str] = Field(default_factory=list)
    atlas: Optional[int] = Field(default=None, ge=1, le=8)
    circulant_n: Optional[int] = Field(default=None, ge=3)
    circulant_min_size: int = Field(default=1, ge=1)
    circulant_max_size: Optional[int] = Field(default=None, ge=1)

    @field_validator("lam", mode="before")
    @classmethod
    def check_lambda(cls, value: Any) -> str:
        return _parse_lambda(value)

    @model_validator(mode="after")
    def check_sources(self) -> "ScanConfig":
        if not (self.graph6_files or self.edge_list_files or self.inline
                or self.atlas is not None or self.circulant_n is not None):
            raise ValueError("at least one corpus source is required")
        return self

    @property
    def fugacity(self) -> Fraction:
        return Fraction(self.lam)

    @classmethod
    def build(cls, **kwargs: Any) -> "ScanConfig":
        """构造并把校验错误转换为 ConfigurationError"""
        try:
            return cls(**kwargs)
        except ValidationError as e:
            raise ConfigurationError(f"Invalid scan configuration: {e}", details={"errors": e.errors()})


class CirculantSearchConfig(BaseModel):
    """环形图 C_n(S) 搜索配置，S ⊆ {1..⌊n/2⌋}"""
    model_config = ConfigDict(extra="forbid")

    n: int = Field(ge=3)
    min_size: int = Field(default=1, ge=1)
    max_size: int = Field(default=1, ge=1)
    require_triangle_free: bool = True
    alpha_target: Optional[int] = Field(default=None, ge=1)
    lam: str = "1"
    max_workers: int = Field(default=1, ge=1)

    @field_validator("lam", mode="before")
    @classmethod
    def check_lambda(cls, value: Any) -> str:
        return _parse_lambda(value)

    @model_validator(mode="after")
    def check_sizes(self) -> "CirculantSearchConfig":
        if self.max_size < self.min_size:
            raise ValueError(f"max_size {self.max_size} is below min_size {self.min_size}")
        if self.min_size > self.n // 2:
            raise ValueError(f"connection sets of size {self.min_size} do not fit in 1..{self.n // 2}")
        return self

    @property
    def fugacity(self) -> Fraction:
        return Fraction(self.lam)

    @classmethod
    def build(cls, **kwargs: Any) -> "CirculantSearchConfig":
        try:
            return cls(**kwargs)
        except ValidationError as e:
            raise ConfigurationError(f"Invalid circulant search configuration: {e}", details={"errors": e.errors()})
