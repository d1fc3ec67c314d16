"""
模块基类定义
所有计算模块的基类，提供配置解析、日志和生命周期
"""

from typing import Dict, Any, Optional
import logging

from .exceptions import HardCoreToolkitException


class BaseModule:
    """
    所有计算模块的基类

    配置优先级：构造时传入的 config > 全局 settings 中 `settings_section` 段的默认值。
    """

    settings_section: Optional[str] = None

    def __init__(self, config: Dict[str, Any] = None, logger: logging.Logger = None):
        """
        初始化基础模块

        Args:
            config: 模块配置
            logger: 日志器实例
        """
        self.config = config or {}
        self.logger = logger or logging.getLogger(self.__class__.__name__)
        self._initialized = False

    def initialize(self) -> None:
        """初始化模块"""
        try:
            self._setup()
            self._initialized = True
            self.logger.debug(f"{self.__class__.__name__} initialized")
        except HardCoreToolkitException:
            raise
        except Exception as e:
            self.logger.error(f"Failed to initialize {self.__class__.__name__}: {e}")
            raise HardCoreToolkitException(f"Module initialization failed: {e}")

    def _setup(self) -> None:
        """子类特定的设置逻辑"""
        pass

    def process(self, input_data: Any, **kwargs) -> Any:
        """
        处理输入数据的主要方法

        Args:
            input_data: 输入数据
            **kwargs: 额外的关键字参数

        Returns:
            处理后的数据
        """
        raise NotImplementedError(f"{self.__class__.__name__} does not implement process()")

    def get_setting(self, key: str, default: Any = None) -> Any:
        """
        读取配置项：先查模块配置，再查全局配置段

        Args:
            key: 配置键
            default: 两处都没有时的默认值
        """
        if key in self.config:
            return self.config[key]
        if self.settings_section:
            from config.settings import settings
            section = getattr(settings, self.settings_section, {})
            if key in section:
                return section[key]
        return default

    def get_status(self) -> Dict[str, Any]:
        """模块名、是否已初始化与当前配置"""
        return {
            "module_name": self.__class__.__name__,
            "initialized": self._initialized,
            "config": dict(self.config),
        }

    def worker_count(self) -> int:
        """进程数：模块配置的 max_workers，否则取 CONCURRENCY_CONFIG，至少为 1"""
        workers = self.config.get("max_workers")
        if workers is None:
            from config.settings import settings
            workers = settings.CONCURRENCY_CONFIG.get("max_workers", 1)
        return max(1, int(workers))

    def update_config(self, new_config: Dict[str, Any]) -> None:
        """更新模块配置"""
        self.config.update(new_config)
        self.logger.debug(f"Config updated for {self.__class__.__name__}")

    def cleanup(self) -> None:
        """清理资源"""
        self.logger.debug(f"Cleaning up {self.__class__.__name__}")

    def __enter__(self):
        """上下文管理器入口"""
        if not self._initialized:
            self.initialize()
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        """上下文管理器出口"""
        self.cleanup()
