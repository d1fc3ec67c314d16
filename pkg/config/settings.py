"""
全局配置设置
包含所有模块的配置参数
"""

from pathlib import Path
from typing import Dict, Any, Optional, Union

import yaml

from core.exceptions import ConfigurationError


class Settings:
    """全局配置类"""

    def __init__(self):
        # 项目根目录
        self.ROOT_DIR = Path(__file__).parent.parent
        self.DATA_DIR = self.ROOT_DIR / "data"

        # 数据路径配置
        self.DATA_PATHS = {
            "corpora": self.DATA_DIR / "corpora",
        }

        # 精确计算配置
        self.EXACT_CONFIG = {
            "max_vertices": 40,
            "memo_max_entries": 2_000_000,
            "brute_force_max_vertices": 24,
        }

        # 数值积分配置（log λ 上的自适应 Simpson）
        self.QUADRATURE_CONFIG = {
            "tolerance": 1e-10,
            "max_depth": 50,
        }

        # Glauber 采样配置
        self.SAMPLER_CONFIG = {
            "burn_in_factor": 100,      # burn-in = factor * n * log n
            "thinning_factor": 1,       # thinning = factor * n
            "batch_count": 20,          # batch means 标准误
            "uniqueness_warning": True,
        }

        # 随机正则图配置
        self.RANDOM_GRAPH_CONFIG = {
            "max_attempts": 100_000,
        }

        # 紧性实验配置
        self.TIGHTNESS_CONFIG = {
            "tolerance": 0.01,
            "lambda_grid": ["1/4", "1/2", "1", "2"],
            "samples": 2000,
        }

        # 比值扫描配置
        self.SCAN_CONFIG = {
            "top_k": 20,
            "lambda": "1",
            "batch_size": 256,
        }

        # 界验证配置
        self.VERIFY_CONFIG = {
            "tolerance": 1e-9,
            "lambda_grid": ["1/4", "1", "4"],
        }

        # 日志配置
        self.LOGGING_CONFIG = {
            "level": "INFO",
            "format": "%(asctime)s - %(name)s - %(levelname)s - %(message)s",
            "file_path": None,
            "max_size": "10MB",
            "backup_count": 5
        }

        # 并发配置
        self.CONCURRENCY_CONFIG = {
            "max_workers": 4,
        }

    def get_data_path(self, data_type: str) -> Path:
        """获取数据存储路径"""
        return self.DATA_PATHS.get(data_type, self.DATA_DIR)

    def update_config(self, section: str, updates: Dict[str, Any]):
        """更新配置"""
        if hasattr(self, section):
            config = getattr(self, section)
            if isinstance(config, dict):
                config.update(updates)
            else:
                raise ConfigurationError(f"Config section {section} is not a dictionary")
        else:
            raise ConfigurationError(f"Config section {section} does not exist")

    def load_yaml(self, file_path: Union[str, Path]) -> None:
        """
        从YAML文件加载配置覆盖

        文件顶层键为配置段名（如 EXACT_CONFIG），值为要合并的字典。

        Args:
            file_path: YAML文件路径
        """
        file_path = Path(file_path)
        if not file_path.exists():
            raise ConfigurationError(f"Config file not found: {file_path}")

        try:
            with file_path.open('r', encoding='utf-8') as f:
                overrides = yaml.safe_load(f) or {}
        except yaml.YAMLError as e:
            raise ConfigurationError(f"Invalid YAML in {file_path}: {e}")

        if not isinstance(overrides, dict):
            raise ConfigurationError(f"Config file {file_path} must contain a mapping")

        for section, updates in overrides.items():
            if not isinstance(updates, dict):
                raise ConfigurationError(f"Config section {section} must be a mapping")
            self.update_config(section, updates)

    def snapshot(self, section: Optional[str] = None) -> Dict[str, Any]:
        """返回配置段的副本"""
        if section is None:
            return {
                name: dict(value) for name, value in vars(self).items()
                if name.endswith("_CONFIG") and isinstance(value, dict)
            }
        return dict(getattr(self, section))


# 创建全局配置实例
settings = Settings()
