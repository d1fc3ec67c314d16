"""
自定义异常类定义
定义系统中使用的所有异常类型
"""


class HardCoreToolkitException(Exception):
    """基础异常类"""
    def __init__(self, message: str, code: str = None, details: dict = None):
        super().__init__(message)
        self.message = message
        self.code = code or self.__class__.__name__
        self.details = details or {}


class ConfigurationError(HardCoreToolkitException):
    """配置错误"""
    pass


class GraphFormatError(HardCoreToolkitException):
    """图编码解析错误（graph6 / 边列表）"""
    def __init__(self, message: str, offset: int = None, line_number: int = None, details: dict = None):
        details = dict(details or {})
        if offset is not None:
            details["offset"] = offset
        if line_number is not None:
            details["line_number"] = line_number
        super().__init__(message, details=details)
        self.offset = offset
        self.line_number = line_number


class GraphSizeError(HardCoreToolkitException):
    """图规模超过精确计算上限"""
    pass


class PreconditionError(HardCoreToolkitException):
    """操作前置条件不满足"""
    pass


class InvalidParameterError(HardCoreToolkitException, ValueError):
    """参数取值非法"""
    pass


class RetryBudgetExceeded(HardCoreToolkitException):
    """拒绝采样超过重试预算"""
    pass


class DataStorageError(HardCoreToolkitException):
    """数据存储错误"""
    pass


class BoundViolationError(HardCoreToolkitException):
    """发现定理界被违反"""
    pass
