"""
配置模块
管理全局配置
"""

from .settings import settings

__all__ = ['settings']
