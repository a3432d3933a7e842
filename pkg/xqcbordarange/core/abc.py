# 作者：Xiaoqiang
# 微信公众号：XiaoqiangClub
# 创建时间：2026-10-19T09:33:48.026Z
# 文件描述：定义见证构造请求与见证搜索器的抽象基类
# 文件路径：xqcbordarange/core/abc.py

from abc import ABC, abstractmethod
from typing import TYPE_CHECKING, Any

if TYPE_CHECKING:
    from ..model.profile import LevelPattern, Profile


class WitnessRequest(ABC):
    """
    所有见证构造请求的基类。一个请求描述要实现的层级模式，并知道如何构造它。
    """

    @abstractmethod
    def target(self) -> "LevelPattern":
        """
        该请求要实现的层级模式。

        :return: 目标 LevelPattern。
        """
        raise NotImplementedError

    @abstractmethod
    def build(self, **kwargs: Any) -> "Profile":
        """
        构造一个 n=3 的见证组合，返回前必须已通过自检。

        :param kwargs: 构造器所需的关键字参数。
        :return: 见证 Profile。
        """
        raise NotImplementedError


class WitnessSearcher(ABC):
    """
    所有见证搜索器的基类。
    """

    @abstractmethod
    def search(self, pattern: "LevelPattern", n: int, **kwargs: Any) -> "Profile":
        """
        搜索实现给定模式的偏好组合。

        :param pattern: 目标层级模式。
        :param n: 投票人数。
        :param kwargs: 搜索器所需的关键字参数。
        :return: 已验证的见证 Profile，找不到时抛出 WitnessNotFound。
        """
        raise NotImplementedError
