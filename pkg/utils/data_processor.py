"""
数据处理工具
把结果记录转换为 JSON/CSV 可写的普通结构
"""

import dataclasses
import math
from fractions import Fraction
from itertools import islice
from typing import Any, Dict, Iterable, Iterator, List, Sequence
import logging

import numpy as np
import pandas as pd

from modules.graph_core.graph import Graph
from modules.graph_core.graph6 import to_graph6


def format_fraction(value: Fraction) -> str:
    """整数写成 "3"，其余写成 "p/q" """
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class DataProcessor:
    """数据处理工具类"""

    def __init__(self, logger: logging.Logger = None):
        self.logger = logger or logging.getLogger(__name__)

    def to_plain(self, obj: Any) -> Any:
        """
        递归转换为 JSON 兼容的值

        - Fraction → "p/q"
        - 非有限浮点 → "inf" / "-inf" / "nan"
        - Graph → graph6
        - dataclass → dict（按字段顺序）
        """
        if isinstance(obj, bool) or obj is None or isinstance(obj, (str, int)):
            return obj
        if isinstance(obj, Fraction):
            return format_fraction(obj)
        if isinstance(obj, (float, np.floating)):
            value = float(obj)
            return value if math.isfinite(value) else str(value)
        if isinstance(obj, np.integer):
            return int(obj)
        if isinstance(obj, Graph):
            return to_graph6(obj)
        if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
            return {f.name: self.to_plain(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
        if isinstance(obj, dict):
            return {str(self.to_plain(k)): self.to_plain(v) for k, v in obj.items()}
        if isinstance(obj, (list, tuple)):
            return [self.to_plain(item) for item in obj]
        return str(obj)

    def records_to_frame(self, rows: Sequence[Dict[str, Any]], columns: Sequence[str] = None) -> pd.DataFrame:
        """CSV 行字典 → DataFrame，Fraction 写成 "p/q" """
        plain = [{k: self.to_plain(v) for k, v in row.items()} for row in rows]
        return pd.DataFrame(plain, columns=columns)

    def batches(self, items: Iterable[Any], batch_size: int) -> Iterator[List[Any]]:
        """
        按批切分流

        Args:
            items: 任意可迭代对象（可以是惰性生成器）
            batch_size: 批次大小
        """
        if batch_size < 1:
            raise ValueError(f"batch_size must be >= 1, got {batch_size}")
        iterator = iter(items)
        while True:
            batch = list(islice(iterator, batch_size))
            if not batch:
                return
            yield batch
