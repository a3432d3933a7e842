# 作者：Xiaoqiang
# 微信公众号：XiaoqiangClub
# 创建时间：2026-10-19T12:31:26.845Z
# 文件描述：基础见证请求与统一的构造入口
# 文件路径：xqcbordarange/constructions/router.py

from dataclasses import dataclass
from typing import Any, Union

from ..core.abc import WitnessRequest
from ..core.exceptions import ConstructionError, ValidationError
from ..core.logger import default_logger
from ..model.profile import LevelPattern, Profile
from .appendix import appendix_witness
from .check import ensure_pattern
from .sequences import (
    construct_seq_I,
    construct_seq_II,
    construct_seq_III,
    construct_seq_IV,
    seq_four_target,
    seq_one_target,
    seq_three_target,
    seq_two_target,
)
from .twolevel import construct_two_level


@dataclass(frozen=True)
class TwoLevel(WitnessRequest):
    s1: int
    s2: int

    def __post_init__(self) -> None:
        if self.s1 < 1 or self.s2 < 1 or self.s1 % 2 == 0 or self.s2 % 2 == 0:
            raise ValidationError(f"❌ TwoLevel 要求 s1、s2 为正奇数，实际为 ({self.s1}, {self.s2})")

    def target(self) -> LevelPattern:
        return LevelPattern.of(2 * self.s1, 2 * self.s2)

    def build(self, **kwargs: Any) -> Profile:
        return construct_two_level(self.s1, self.s2)


@dataclass(frozen=True)
class SeqI(WitnessRequest):
    fours: int

    def __post_init__(self) -> None:
        _require(self, 0)

    def target(self) -> LevelPattern:
        return seq_one_target(self.fours)

    def build(self, **kwargs: Any) -> Profile:
        return construct_seq_I(self.fours)


@dataclass(frozen=True)
class SeqII(WitnessRequest):
    fours: int

    def __post_init__(self) -> None:
        _require(self, 1)

    def target(self) -> LevelPattern:
        return seq_two_target(self.fours)

    def build(self, **kwargs: Any) -> Profile:
        return construct_seq_II(self.fours)


@dataclass(frozen=True)
class SeqIII(WitnessRequest):
    fours: int

    def __post_init__(self) -> None:
        _require(self, 1)

    def target(self) -> LevelPattern:
        return seq_three_target(self.fours)

    def build(self, **kwargs: Any) -> Profile:
        return construct_seq_III(self.fours)


@dataclass(frozen=True)
class SeqIV(WitnessRequest):
    fours: int

    def __post_init__(self) -> None:
        _require(self, 2)

    def target(self) -> LevelPattern:
        return seq_four_target(self.fours)

    def build(self, **kwargs: Any) -> Profile:
        return construct_seq_IV(self.fours)


@dataclass(frozen=True)
class Appendix(WitnessRequest):
    pattern: LevelPattern

    def target(self) -> LevelPattern:
        return self.pattern

    def build(self, **kwargs: Any) -> Profile:
        return appendix_witness(self.pattern)


BaseWitnessRequest = Union[TwoLevel, SeqI, SeqII, SeqIII, SeqIV, Appendix]


def _require(request: Any, minimum: int) -> None:
    if request.fours < minimum:
        raise ValidationError(f"❌ {type(request).__name__} 要求 fours ≥ {minimum}，实际为 {request.fours}")


def construct_base(req: WitnessRequest) -> Profile:
    """
    按请求类型分派到对应的构造器，并确认结果是 n=3 且模式等于请求的目标。

    :param req: 基础见证请求。
    :return: 已验证的 Profile。
    """
    u = req.build()
    if u.n != 3:
        default_logger.error(f"🔥 {req} 返回了 n={u.n} 的组合")
        raise ConstructionError(f"{req} 返回了 n={u.n} 的组合")
    return ensure_pattern(u, req.target(), repr(req))
