# 作者：Xiaoqiang
# 微信公众号：XiaoqiangClub
# 创建时间：2026-10-19T09:17:36.845Z
# 文件描述：日志模块，所有子模块共用 default_logger，输出到 stderr
# 文件路径：xqcbordarange/core/logger.py

import logging
import sys
from typing import Optional, TextIO, Union

from .exceptions import ValidationError

LOG_FORMAT = "%(asctime)s [%(levelname)s] %(name)s: %(message)s"

LevelLike = Union[int, str]


def resolve_level(level: LevelLike) -> int:
    """
    把 "debug"、"WARNING" 之类的名称或整数统一成 logging 的级别值。

    :param level: 日志级别。
    :return: 整数级别。
    """
    if isinstance(level, int):
        return level
    value = logging.getLevelName(level.strip().upper())
    if not isinstance(value, int):
        raise ValidationError(f"❌ 未知的日志级别: {level}")
    return value


def get_logger(name: str, level: LevelLike = logging.INFO, stream: Optional[TextIO] = None) -> logging.Logger:
    """
    获取一个带 stderr handler 的 Logger，同名 Logger 只会挂一个 handler。

    :param name: Logger 的名称。
    :param level: 日志级别，整数或名称。
    :param stream: 输出流，默认 sys.stderr（stdout 留给命令行结果）。
    :return: Logger 实例。
    """
    logger = logging.getLogger(name)
    logger.setLevel(resolve_level(level))
    if not logger.handlers:
        handler = logging.StreamHandler(stream or sys.stderr)
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        logger.addHandler(handler)
    return logger


def set_level(level: LevelLike) -> None:
    """调整 default_logger 的级别，命令行的 --log-level 走这里。"""
    default_logger.setLevel(resolve_level(level))


default_logger = get_logger("xqcbordarange")
