# 作者：Xiaoqiang
# 微信公众号：XiaoqiangClub
# 创建时间：2026-10-19T11:02:37.904Z
# 文件描述：按已知规则判定层级模式是否在奇数 n 的 Borda 值域内
# 文件路径：xqcbordarange/classifier/rules.py

import re
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from ..core.exceptions import InvalidPattern, OddLevelPresent
from ..model.profile import LevelPattern

ALL_ODD_N = "all odd n ≥ 3"
NO_ODD_N = "no odd n"
UNDETERMINED = "undetermined"

# 恰好两个 2、至少一个 4，首尾各至多多出一个 4
_LEMMA_SHAPE = re.compile(r"^4?24*24?$")


class Verdict(str, Enum):
    IN_RANGE = "InRange"
    NOT_IN_RANGE = "NotInRange"
    UNKNOWN = "Unknown"


class Rule(str, Enum):
    ODD_LEVEL = "OddLevel"
    THEOREM3 = "Theorem3"
    LEMMA4 = "Lemma4"
    NEW_LEMMA = "NewLemma"
    NEW_THEOREM = "NewTheorem"


@dataclass(frozen=True)
class PowerDecomposition:
    """
    m_i = 2^k * s_i，k 是能整除所有 m_i 的最大 2 的幂次。
    """
    k: int
    s: Tuple[int, ...]

    @property
    def s_sum(self) -> int:
        return sum(self.s)

    @property
    def all_s_odd(self) -> bool:
        return all(x % 2 == 1 for x in self.s)


@dataclass(frozen=True)
class Classification:
    """
    判定结果：verdict 与触发的规则，以及适用的 n。
    """
    pattern: LevelPattern
    verdict: Verdict
    rule: Optional[Rule]
    decomposition: Optional[PowerDecomposition] = None

    @property
    def applicable_n(self) -> str:
        if self.verdict is Verdict.IN_RANGE:
            return ALL_ODD_N
        if self.verdict is Verdict.NOT_IN_RANGE:
            return NO_ODD_N
        return UNDETERMINED

    def __post_init__(self) -> None:
        assert (self.rule is Rule.THEOREM3) == (self.verdict is Verdict.NOT_IN_RANGE)
        assert (self.rule is None) == (self.verdict is Verdict.UNKNOWN)


def power_decomposition(p: LevelPattern) -> PowerDecomposition:
    """
    计算 2 的幂分解。

    :param p: 每一层大小都是偶数的层级模式。
    :return: PowerDecomposition。
    """
    if any(size % 2 for size in p.sizes):
        raise OddLevelPresent(f"❌ 模式 {p} 含有奇数大小的层级")
    k = min((size & -size).bit_length() - 1 for size in p.sizes)
    return PowerDecomposition(k=k, s=tuple(size >> k for size in p.sizes))


def is_lemma_shape(p: LevelPattern) -> bool:
    """
    是否为 (2,4..4,2)、(4,2,4..4,2)、(2,4..4,2,4)、(4,2,4..4,2,4) 四种形状之一
    （恰好两个 2，至少一个 4）。
    """
    if not set(p.sizes) <= {2, 4} or 4 not in p.sizes:
        return False
    return bool(_LEMMA_SHAPE.match("".join(str(s) for s in p.sizes)))


def is_two_four_pattern(p: LevelPattern) -> bool:
    """层级大小只有 2 和 4，且 2 的个数为不小于 2 的偶数。"""
    twos = p.sizes.count(2)
    return set(p.sizes) <= {2, 4} and twos >= 2 and twos % 2 == 0


def classify(p: LevelPattern) -> Classification:
    """
    按固定优先级判定：奇数层 → Theorem3 → Lemma4 → {2,4} 模式 → 未知。

    :param p: 层级模式，总数 m ≥ 2。
    :return: Classification。
    """
    if p.m < 2:
        raise InvalidPattern(f"❌ 备选项总数必须 ≥ 2，模式 {p} 只有 {p.m} 个")

    if any(size % 2 for size in p.sizes):
        return Classification(p, Verdict.IN_RANGE, Rule.ODD_LEVEL)

    decomposition = power_decomposition(p)
    if decomposition.s_sum % 2 == 1:
        return Classification(p, Verdict.NOT_IN_RANGE, Rule.THEOREM3, decomposition)

    if decomposition.all_s_odd:
        # T 个奇数之和为偶数，T 必为偶数
        assert p.levels % 2 == 0
        return Classification(p, Verdict.IN_RANGE, Rule.LEMMA4, decomposition)

    if is_two_four_pattern(p) and 4 in p.sizes:
        rule = Rule.NEW_LEMMA if is_lemma_shape(p) else Rule.NEW_THEOREM
        return Classification(p, Verdict.IN_RANGE, rule, decomposition)

    return Classification(p, Verdict.UNKNOWN, None, decomposition)
