# 作者：Xiaoqiang
# 微信公众号：XiaoqiangClub
# 创建时间：2026-10-19T12:05:44.390Z
# 文件描述：四族序列 (2,4..4,2)、(4,2,4..4,2)、(2,4..4,2,4)、(4,2,4..4,2,4) 的 n=3 构造
# 文件路径：xqcbordarange/constructions/sequences.py

"""
每族都从两层组合 v 出发，只改写投票人 1：v 中投票人 1 的排名分为前后两半
（各 S = s1+s2 个备选项），每半里先是较好一层的 s1 个，再是较差一层的 s2 个。
改写在两组内部按同一个相对顺序重排，两半完全相同；投票人 2、3 保持不变。

fours 为偶数 2k 时 s1 = s2 = 2k+1；为奇数 2k+1 时 s1 = 2k+3，s2 = 2k+1。
"""

from typing import Callable, List, Sequence, Tuple

from ..core.exceptions import ConstructionError, ValidationError
from ..core.logger import default_logger
from ..model.profile import (
    LevelPattern,
    Profile,
    Ranking,
    borda_scores,
    invert_profile,
    pattern_of,
)
from .appendix import appendix_witness
from .check import ensure_pattern
from .twolevel import construct_two_level

Ordering = Callable[[int], List[int]]


def black_order_seq_one(size: int) -> List[int]:
    """较好一组，第一族：[size, 1,2 ... 的成对倒序]，例如 5 → [5, 3, 4, 1, 2]。"""
    order = [size]
    for j in range((size - 1) // 2, 0, -1):
        order += [2 * j - 1, 2 * j]
    return order


def black_order_seq_two(size: int) -> List[int]:
    """较好一组，第二族：[size-1, size, size-2] 之后成对倒序，例如 5 → [4, 5, 3, 1, 2]。"""
    order = [size - 1, size, size - 2]
    for j in range((size - 3) // 2, 0, -1):
        order += [2 * j - 1, 2 * j]
    return order


def blue_order_seq_one(size: int) -> List[int]:
    """较差一组，第一族：例如 5 → [4, 5, 2, 3, 1]。"""
    order: List[int] = []
    for j in range((size - 1) // 2, 0, -1):
        order += [2 * j, 2 * j + 1]
    return order + [1]


def blue_order_seq_four(size: int) -> List[int]:
    """较差一组，第四族：例如 5 → [4, 5, 3, 1, 2]。"""
    order: List[int] = []
    for j in range((size - 1) // 2, 1, -1):
        order += [2 * j, 2 * j + 1]
    return order + [3, 1, 2]


def base_sizes(fours: int) -> Tuple[int, int]:
    """
    序列构造所用两层组合的 (s1, s2)。

    :param fours: 目标模式中 4 的个数。
    :return: (s1, s2)。
    """
    if fours % 2 == 0:
        return fours + 1, fours + 1
    return fours + 2, fours


def _with_voter_one(base: Profile, half: Sequence[int]) -> Profile:
    total = base.m // 2
    first = tuple(half) + tuple(x + total for x in half)
    return Profile(m=base.m, n=base.n, rankings=(Ranking(first),) + base.rankings[1:])


def _rewrite(fours: int, black: Ordering, blue: Ordering, target: LevelPattern, label: str) -> Profile:
    """
    按给定的组内顺序改写投票人 1，必要时把 x_1、x_2 下移到得分恰好改善 1 的较差组备选项之后。
    """
    s1, s2 = base_sizes(fours)
    total = s1 + s2
    base = construct_two_level(s1, s2)
    half = [b - 1 for b in black(s1)] + [s1 + c - 1 for c in blue(s2)]
    u = _with_voter_one(base, half)
    if pattern_of(u) == target:
        return u

    before, after = borda_scores(base), borda_scores(u)
    improved = [x for x in range(s1, total) if after[x] - before[x] == -1]
    if not improved:
        return ensure_pattern(u, target, label)

    # x_1、x_2 的编号是 0、1
    rest = [x for x in half if x not in (0, 1)]
    anchor = max(rest.index(x) for x in improved) + 1
    bound = target.levels + 1
    downward = [anchor + 2 * i for i in range(bound) if anchor + 2 * i <= len(rest)]
    upward = [anchor - 2 * i for i in range(1, bound) if anchor - 2 * i >= 0]
    candidates = [(p, "向下") for p in downward] + [(p, "向上") for p in upward]
    for position, direction in candidates:
        trial = _with_voter_one(base, rest[:position] + [0, 1] + rest[position:])
        if pattern_of(trial) == target:
            default_logger.debug(f"🔍 {label}: x_1、x_2 {direction}放在第 {position + 1} 位")
            return trial

    default_logger.error(f"🔥 {label}: 找不到 x_1、x_2 的合适位置")
    raise ConstructionError(f"{label}: 找不到 x_1、x_2 的合适位置")


def _check_fours(fours: int, minimum: int, label: str) -> None:
    if fours < minimum:
        raise ValidationError(f"❌ {label} 要求 fours ≥ {minimum}，实际为 {fours}")


def seq_one_target(fours: int) -> LevelPattern:
    return LevelPattern((2,) + (4,) * fours + (2,))


def seq_two_target(fours: int) -> LevelPattern:
    return LevelPattern((4, 2) + (4,) * (fours - 1) + (2,))


def seq_three_target(fours: int) -> LevelPattern:
    return seq_two_target(fours).reversed()


def seq_four_target(fours: int) -> LevelPattern:
    return LevelPattern((4, 2) + (4,) * (fours - 2) + (2, 4))


def construct_seq_I(fours: int) -> Profile:
    """
    (2, 4 x fours, 2) 的见证组合。fours=0 即两层组合 v(1,1)。

    :param fours: 中间 4 的个数，≥ 0。
    :return: n=3 的 Profile。
    """
    _check_fours(fours, 0, "第一族")
    if fours == 0:
        return construct_two_level(1, 1)
    label = f"第一族 fours={fours}"
    u = _rewrite(fours, black_order_seq_one, blue_order_seq_one, seq_one_target(fours), label)
    return ensure_pattern(u, seq_one_target(fours), label)


def construct_seq_II(fours: int) -> Profile:
    """
    (4, 2, 4 x (fours-1), 2) 的见证组合。fours 为 1、2 时直接取附录组合。

    :param fours: 4 的总个数，≥ 1。
    :return: n=3 的 Profile。
    """
    _check_fours(fours, 1, "第二族")
    target = seq_two_target(fours)
    if fours <= 2:
        return appendix_witness(target)
    label = f"第二族 fours={fours}"
    u = _rewrite(fours, black_order_seq_two, blue_order_seq_one, target, label)
    return ensure_pattern(u, target, label)


def construct_seq_III(fours: int) -> Profile:
    """第三族是第二族整体反转。"""
    _check_fours(fours, 1, "第三族")
    return ensure_pattern(invert_profile(construct_seq_II(fours)), seq_three_target(fours), f"第三族 fours={fours}")


def construct_seq_IV(fours: int) -> Profile:
    """
    (4, 2, 4 x (fours-2), 2, 4) 的见证组合。fours 为 2、3 时直接取附录组合。

    :param fours: 4 的总个数，≥ 2。
    :return: n=3 的 Profile。
    """
    _check_fours(fours, 2, "第四族")
    target = seq_four_target(fours)
    if fours <= 3:
        return appendix_witness(target)
    label = f"第四族 fours={fours}"
    u = _rewrite(fours, black_order_seq_two, blue_order_seq_four, target, label)
    return ensure_pattern(u, target, label)
