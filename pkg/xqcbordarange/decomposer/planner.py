# 作者：Xiaoqiang
# 微信公众号：XiaoqiangClub
# 创建时间：2026-10-19T15:10:44.271Z
# 文件描述：把 {2,4} 模式拆成可构造的块
# 文件路径：xqcbordarange/decomposer/planner.py

from dataclasses import dataclass
from typing import Any, List, Optional, Sequence, Tuple

from ..classifier.rules import is_two_four_pattern
from ..constructions.router import SeqI, SeqII, SeqIII, SeqIV, TwoLevel, construct_base
from ..core.abc import WitnessRequest
from ..core.config import Settings
from ..core.exceptions import NotDecomposable
from ..model.profile import LevelPattern, Profile, catenate_all
from ..oracle.cache import WitnessCache, four_four_witness


@dataclass(frozen=True)
class FourBlock(WitnessRequest):
    """由 pairs 个 (4,4) 见证拼接而成的 (4,...,4)，共 2*pairs 层。"""
    pairs: int

    def __post_init__(self) -> None:
        if self.pairs < 1:
            raise NotDecomposable(f"❌ FourBlock 要求 pairs ≥ 1，实际为 {self.pairs}")

    def target(self) -> LevelPattern:
        return LevelPattern((4,) * (2 * self.pairs))

    def build(self, cache: Optional[WitnessCache] = None, settings: Optional[Settings] = None,
              **kwargs: Any) -> Profile:
        witness = four_four_witness(cache, settings=settings)
        return catenate_all([witness] * self.pairs, witness.n)


@dataclass(frozen=True)
class DecompositionPlan:
    pattern: LevelPattern
    blocks: Tuple[WitnessRequest, ...]

    def __post_init__(self) -> None:
        combined: Tuple[int, ...] = ()
        for block in self.blocks:
            combined += block.target().sizes
        if combined != self.pattern.sizes:
            raise NotDecomposable(f"❌ 分块结果 {combined} 与模式 ({self.pattern}) 不一致")

    def __iter__(self):
        return iter(self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)


def _head_block(head: Sequence[int]) -> WitnessRequest:
    """
    头部只有四种形状：(2,4..4,2)、(4,2,4..4,2)、(2,4..4,2,4)、(4,2,4..4,2,4)。
    """
    lead = head[0] == 4
    tail = head[-1] == 4
    middle = len(head) - 2 - lead - tail
    if not lead and not tail:
        return TwoLevel(1, 1) if middle == 0 else SeqI(middle)
    if lead and not tail:
        return SeqII(middle + 1)
    if tail and not lead:
        return SeqIII(middle + 1)
    return SeqIV(middle + 2)


def plan_decomposition(p: LevelPattern) -> DecompositionPlan:
    """
    贪心地从左到右拆分：剥掉开头最长的偶数段 4；取到第二个 2 为止作为头部；
    余下部分若仍含 2 则继续拆；若是奇数长度的全 4 段，则把一个 4 并入头部；
    偶数长度的全 4 段成为 FourBlock。

    :param p: 只含 2 和 4、2 的个数为不小于 2 的偶数的模式。
    :return: DecompositionPlan。
    """
    if not is_two_four_pattern(p):
        raise NotDecomposable(f"❌ 模式 ({p}) 不是只含 2 和 4 且含偶数个 2 的模式")

    blocks: List[WitnessRequest] = []
    rest = list(p.sizes)
    while rest:
        if 2 not in rest:
            blocks.append(FourBlock(len(rest) // 2))
            break
        leading = rest.index(2)
        if leading >= 2:
            blocks.append(FourBlock(leading // 2))
            rest = rest[2 * (leading // 2):]
        second = rest.index(2, rest.index(2) + 1)
        head, rest = rest[:second + 1], rest[second + 1:]
        if rest and 2 not in rest and len(rest) % 2 == 1:
            head, rest = head + [4], rest[1:]
        blocks.append(_head_block(head))
    return DecompositionPlan(pattern=p, blocks=tuple(blocks))


def build_block(block: WitnessRequest, cache: Optional[WitnessCache] = None,
                settings: Optional[Settings] = None) -> Profile:
    """构造计划中的一块，n=3。"""
    if isinstance(block, FourBlock):
        return block.build(cache=cache, settings=settings)
    return construct_base(block)
