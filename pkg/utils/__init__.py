"""
工具类模块
日志、语料与结果文件读写、记录转换
"""

from .logger import setup_logger, setup_from_config
from .file_manager import FileManager
from .data_processor import DataProcessor, format_fraction

__all__ = [
    'setup_logger',
    'setup_from_config',
    'FileManager',
    'DataProcessor',
    'format_fraction',
]
