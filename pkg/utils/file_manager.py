"""
文件管理工具
graph6 / 边列表语料的读取，JSON lines 与 CSV 结果的写出
"""

import json
from pathlib import Path
from typing import Any, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union
import logging

import pandas as pd

from core.exceptions import DataStorageError, GraphFormatError
from modules.graph_core.graph import Graph
from modules.graph_core.graph6 import from_graph6, parse_edge_list, to_graph6


class FileManager:
    """文件管理工具类"""

    def __init__(self, base_dir: Path = None, logger: logging.Logger = None):
        """
        初始化文件管理器

        Args:
            base_dir: 相对路径的基准目录
            logger: 日志器
        """
        self.base_dir = base_dir or Path.cwd()
        self.logger = logger or logging.getLogger(__name__)
        self.last_skipped: List[int] = []

    def _resolve(self, file_path: Union[str, Path]) -> Path:
        file_path = Path(file_path)
        if not file_path.is_absolute():
            file_path = self.base_dir / file_path
        return file_path

    def iter_graph6(self, file_path: Union[str, Path]) -> Iterator[Tuple[int, str, Graph]]:
        """
        逐行读取 graph6 语料

        无法解析的行记录警告（含行号）后跳过，行号收集在 last_skipped 中。

        Yields:
            (行号, 规范化的 graph6 文本, 图)
        """
        file_path = self._resolve(file_path)
        if not file_path.exists():
            raise DataStorageError(f"Corpus file not found: {file_path}")

        self.last_skipped = []
        try:
            with file_path.open('r', encoding='ascii', errors='replace') as f:
                for line_number, line in enumerate(f, start=1):
                    text = line.strip()
                    if not text or text == ">>graph6<<":
                        continue
                    try:
                        graph = from_graph6(text)
                    except GraphFormatError as e:
                        self.last_skipped.append(line_number)
                        self.logger.warning(f"{file_path.name}:{line_number}: skipping unreadable graph6 line ({e.message})")
                        continue
                    yield line_number, to_graph6(graph), graph
        except OSError as e:
            raise DataStorageError(f"Failed to read corpus {file_path}: {e}")

        if self.last_skipped:
            self.logger.warning(f"{file_path.name}: skipped {len(self.last_skipped)} unreadable lines")

    def load_edge_list(self, file_path: Union[str, Path]) -> Graph:
        """读取边列表文件；格式错误携带行号上抛"""
        return parse_edge_list(self.load_text(file_path))

    def write_graph6(self, graphs: Iterable[Graph], file_path: Union[str, Path]) -> int:
        """每行一个 graph6，返回写出的图数"""
        file_path = self._resolve(file_path)
        try:
            file_path.parent.mkdir(parents=True, exist_ok=True)
            count = 0
            with file_path.open('w', encoding='ascii') as f:
                for graph in graphs:
                    f.write(to_graph6(graph) + "\n")
                    count += 1
        except OSError as e:
            self.logger.error(f"Failed to write graph6 file {file_path}: {e}")
            raise DataStorageError(f"Failed to write graph6 file: {e}")
        self.logger.debug(f"Wrote {count} graphs to {file_path}")
        return count

    def save_jsonl(self, records: Iterable[Dict[str, Any]], file_path: Union[str, Path]) -> int:
        """
        保存 JSON lines

        Args:
            records: 已转换为普通字典的记录
            file_path: 文件路径
        """
        file_path = self._resolve(file_path)
        try:
            file_path.parent.mkdir(parents=True, exist_ok=True)
            count = 0
            with file_path.open('w', encoding='utf-8') as f:
                for record in records:
                    f.write(json.dumps(record, ensure_ascii=False) + "\n")
                    count += 1
        except (OSError, TypeError) as e:
            self.logger.error(f"Failed to save JSONL file {file_path}: {e}")
            raise DataStorageError(f"Failed to save JSONL file: {e}")
        self.logger.debug(f"Saved {count} records to {file_path}")
        return count

    def load_jsonl(self, file_path: Union[str, Path]) -> List[Dict[str, Any]]:
        file_path = self._resolve(file_path)
        try:
            with file_path.open('r', encoding='utf-8') as f:
                return [json.loads(line) for line in f if line.strip()]
        except (OSError, json.JSONDecodeError) as e:
            self.logger.error(f"Failed to load JSONL file {file_path}: {e}")
            raise DataStorageError(f"Failed to load JSONL file: {e}")

    def save_csv(self, rows: Sequence[Dict[str, Any]], file_path: Union[str, Path],
                 columns: Optional[Sequence[str]] = None) -> None:
        """用 pandas 写 CSV，列顺序由 columns 固定"""
        file_path = self._resolve(file_path)
        try:
            file_path.parent.mkdir(parents=True, exist_ok=True)
            pd.DataFrame(list(rows), columns=columns).to_csv(file_path, index=False)
        except OSError as e:
            self.logger.error(f"Failed to save CSV file {file_path}: {e}")
            raise DataStorageError(f"Failed to save CSV file: {e}")
        self.logger.debug(f"Saved CSV file: {file_path}")

    def load_csv(self, file_path: Union[str, Path]) -> pd.DataFrame:
        file_path = self._resolve(file_path)
        if not file_path.exists():
            raise DataStorageError(f"CSV file not found: {file_path}")
        try:
            return pd.read_csv(file_path)
        except (OSError, pd.errors.ParserError) as e:
            raise DataStorageError(f"Failed to load CSV file: {e}")

    def load_text(self, file_path: Union[str, Path]) -> str:
        """
        加载文本文件

        Args:
            file_path: 文件路径

        Returns:
            文本内容
        """
        file_path = self._resolve(file_path)
        if not file_path.exists():
            raise DataStorageError(f"File not found: {file_path}")
        try:
            with file_path.open('r', encoding='utf-8') as f:
                text = f.read()
        except (OSError, UnicodeDecodeError) as e:
            self.logger.error(f"Failed to load text file {file_path}: {e}")
            raise DataStorageError(f"Failed to load text file: {e}")
        self.logger.debug(f"Loaded text file: {file_path}")
        return text
