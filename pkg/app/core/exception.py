import json
import logging
import sys
from typing import TextIO
from app.core.config import settings

logger = logging.getLogger(__name__)

# 进程退出码
EXIT_OK = 0
EXIT_GENERIC = 1
EXIT_INPUT = 2
EXIT_RESOURCE = 3
EXIT_INTERNAL = 4


class CustomException(Exception):
    """自定义异常基类"""
    def __init__(self, message: str, exit_code: int = EXIT_GENERIC):
        self.message = message
        self.exit_code = exit_code
        super().__init__(self.message)


class InputException(CustomException):
    """输入错误：矩阵格式、下标越界、维数不匹配等"""
    def __init__(self, message: str = "Invalid input"):
        super().__init__(message, exit_code=EXIT_INPUT)


class QualitativeNotEvaluableException(InputException):
    """需要精确数值的位置出现了只有符号的元素"""
    def __init__(self, message: str = "qualitative matrix not evaluable"):
        super().__init__(message)


class ResourceLimitException(CustomException):
    """超过配置的资源上限（消息中必须给出上限名称）"""
    def __init__(self, cap_name: str, cap_value: int, detail: str = ""):
        self.cap_name = cap_name
        self.cap_value = cap_value
        message = f"超过资源上限 {cap_name}={cap_value}"
        if detail:
            message = f"{message}: {detail}"
        super().__init__(message, exit_code=EXIT_RESOURCE)


class InvariantViolationException(CustomException):
    """内部不变量被破坏，属于缺陷而不是分析结果"""
    def __init__(self, message: str = "Internal invariant violated"):
        super().__init__(message, exit_code=EXIT_INTERNAL)


def _write_error(stream: TextIO, message: str, exit_code: int) -> None:
    """将错误信息以 JSON 形式写到错误流"""
    stream.write(json.dumps({
        "error": True,
        "message": message,
        "exit_code": exit_code,
    }, ensure_ascii=False))
    stream.write("\n")


def handle_exception(exc: BaseException, stream: TextIO | None = None) -> int:
    """
    统一异常处理
    记录日志、输出错误 JSON，并返回对应的退出码

    Args:
        exc: 捕获到的异常
        stream: 错误输出流，默认 stderr

    Returns:
        int: 进程退出码
    """
    stream = stream or sys.stderr

    if isinstance(exc, ResourceLimitException):
        logger.warning(f"ResourceLimitException: {exc.message}")
        _write_error(stream, exc.message, exc.exit_code)
        return exc.exit_code

    if isinstance(exc, InvariantViolationException):
        logger.error(f"InvariantViolation: {exc.message}", exc_info=settings.DEBUG)
        _write_error(stream, exc.message, exc.exit_code)
        return exc.exit_code

    if isinstance(exc, CustomException):
        logger.error(f"CustomException: {exc.message}")
        _write_error(stream, exc.message, exc.exit_code)
        return exc.exit_code

    # 通用异常（兜底），视为内部缺陷
    error_message = "Internal error"
    if settings.DEBUG:
        error_message = str(exc)
    logger.error(f"UnhandledException: {str(exc)}", exc_info=True)
    _write_error(stream, error_message, EXIT_INTERNAL)
    return EXIT_INTERNAL
