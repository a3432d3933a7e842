# 作者：Xiaoqiang
# 微信公众号：XiaoqiangClub
# 创建时间：2026-10-19T10:02:11.502Z
# 文件描述：运行配置，支持从环境变量读取
# 文件路径：xqcbordarange/core/config.py

import os
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Any, Callable, Dict, Optional, Tuple

from .exceptions import ValidationError

ENV_PREFIX = "XQCBORDARANGE_"
DEFAULT_CACHE_PATH = Path.home() / ".cache" / "xqcbordarange" / "witnesses.json"


@dataclass(frozen=True)
class Settings:
    """
    全局配置。每个使用配置的函数也都接受显式的关键字参数覆盖。
    """
    cache_path: Path = DEFAULT_CACHE_PATH
    exhaustive_budget: int = 10 ** 9
    enumerate_budget: int = 10 ** 6
    search_restarts: int = 10 ** 6
    search_time_limit: Optional[float] = None
    workers: int = 1

    @classmethod
    def from_env(cls, environ: Optional[Dict[str, str]] = None) -> "Settings":
        """
        从环境变量构建配置。

        :param environ: 环境变量字典，默认为 os.environ。
        :return: Settings 实例。
        """
        env = os.environ if environ is None else environ
        # 字段名 -> (环境变量后缀, 解析函数)
        parsers: Dict[str, Tuple[str, Callable[[str], Any]]] = {
            "cache_path": ("CACHE", lambda v: Path(v).expanduser()),
            "exhaustive_budget": ("EXHAUSTIVE_BUDGET", _positive_int),
            "enumerate_budget": ("ENUMERATE_BUDGET", _positive_int),
            "search_restarts": ("SEARCH_RESTARTS", _positive_int),
            "search_time_limit": ("SEARCH_TIME_LIMIT", _positive_float),
            "workers": ("WORKERS", _positive_int),
        }
        overrides: Dict[str, Any] = {}
        for field_name, (suffix, parse) in parsers.items():
            name = ENV_PREFIX + suffix
            raw = env.get(name)
            if raw is None or raw == "":
                continue
            try:
                overrides[field_name] = parse(raw)
            except ValueError:
                raise ValidationError(f"❌ 环境变量 {name} 的值非法: {raw!r}")
        return cls(**overrides)

    def with_overrides(self, **kwargs: Any) -> "Settings":
        """
        返回替换了部分字段的新配置，值为 None 的参数会被忽略。

        :param kwargs: 需要覆盖的字段。
        :return: 新的 Settings 实例。
        """
        return replace(self, **{k: v for k, v in kwargs.items() if v is not None})


def _positive_int(raw: str) -> int:
    value = int(raw)
    if value < 1:
        raise ValueError(raw)
    return value


def _positive_float(raw: str) -> float:
    value = float(raw)
    if value <= 0:
        raise ValueError(raw)
    return value


def get_settings() -> Settings:
    """
    读取当前环境下的配置。

    :return: Settings 实例。
    """
    return Settings.from_env()
