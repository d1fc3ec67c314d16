"""
日志工具
控制台输出固定走 stderr，stdout 只留给 JSON/CSV 结果
"""

import logging
import logging.handlers
import sys
from pathlib import Path
from typing import Any, Dict, Optional, Union

LEVELS = {
    "DEBUG": logging.DEBUG,
    "INFO": logging.INFO,
    "WARNING": logging.WARNING,
    "ERROR": logging.ERROR,
    "CRITICAL": logging.CRITICAL,
}


def setup_logger(
    name: Optional[str],
    level: str = "INFO",
    log_file: Optional[Union[str, Path]] = None,
    format_string: str = None,
    max_size: str = "10MB",
    backup_count: int = 5
) -> logging.Logger:
    """
    设置和配置日志器

    Args:
        name: 日志器名称，None 表示根日志器
        level: 日志级别
        log_file: 日志文件路径（可选，按大小轮转）
        format_string: 日志格式字符串
        max_size: 单个日志文件最大大小，如 "10MB"
        backup_count: 备份文件数量

    Returns:
        配置好的日志器
    """
    logger = logging.getLogger(name)
    logger.setLevel(LEVELS.get(level.upper(), logging.INFO))

    # 重复调用只调整级别
    if logger.handlers:
        return logger

    formatter = logging.Formatter(format_string or "%(asctime)s - %(name)s - %(levelname)s - %(message)s")

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(formatter)
    logger.addHandler(console_handler)

    if log_file:
        log_file = Path(log_file)
        log_file.parent.mkdir(parents=True, exist_ok=True)
        file_handler = logging.handlers.RotatingFileHandler(
            log_file,
            maxBytes=_parse_size(max_size),
            backupCount=backup_count,
            encoding='utf-8'
        )
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)

    return logger


def setup_from_config(config: Dict[str, Any], verbose: bool = False) -> logging.Logger:
    """按 LOGGING_CONFIG 配置根日志器；verbose 时降到 DEBUG"""
    return setup_logger(
        name=None,
        level="DEBUG" if verbose else config.get("level", "INFO"),
        log_file=config.get("file_path"),
        format_string=config.get("format"),
        max_size=config.get("max_size", "10MB"),
        backup_count=config.get("backup_count", 5),
    )


def _parse_size(size_str: str) -> int:
    """
    解析文件大小字符串

    Args:
        size_str: 大小字符串，如 "10MB", "1GB"

    Returns:
        字节数
    """
    size_str = size_str.upper().strip()

    if size_str.endswith('KB'):
        return int(float(size_str[:-2]) * 1024)
    elif size_str.endswith('MB'):
        return int(float(size_str[:-2]) * 1024 * 1024)
    elif size_str.endswith('GB'):
        return int(float(size_str[:-2]) * 1024 * 1024 * 1024)
    else:
        return int(size_str)
