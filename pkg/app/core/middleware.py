import functools
import logging
import time
from typing import Any, Callable, TypeVar
from app.core.config import settings

# 配置日志
logger = logging.getLogger(__name__)
logger.setLevel(getattr(logging, settings.LOG_LEVEL))

F = TypeVar("F", bound=Callable[..., Any])


class StageTimer:
    """
    耗时记录
    记录一个流水线阶段的处理时间，用法: with StageTimer("jdsr"): ...
    """

    def __init__(self, stage: str):
        self.stage = stage
        self.start_time = 0.0
        self.elapsed = 0.0

    def __enter__(self) -> "StageTimer":
        self.start_time = time.perf_counter()
        logger.debug(f"Stage start: {self.stage}")
        return self

    def __exit__(self, exc_type, exc, tb) -> bool:
        self.elapsed = time.perf_counter() - self.start_time
        if exc_type is None:
            logger.info(f"Stage done: {self.stage} - Time: {self.elapsed:.4f}s")
        else:
            logger.info(f"Stage failed: {self.stage} - {exc_type.__name__} - Time: {self.elapsed:.4f}s")
        return False


def log_stage(stage: str) -> Callable[[F], F]:
    """
    日志输出装饰器
    为被装饰的函数记录进入、退出与耗时

    Args:
        stage: 阶段名称
    """
    def decorator(func: F) -> F:
        @functools.wraps(func)
        def wrapper(*args: Any, **kwargs: Any) -> Any:
            with StageTimer(stage):
                return func(*args, **kwargs)
        return wrapper  # type: ignore[return-value]
    return decorator
