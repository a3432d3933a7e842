# 作者：Xiaoqiang
# 微信公众号：XiaoqiangClub
# 创建时间：2026-10-19T11:24:15.663Z
# 文件描述：两层基础组合 v：n=3，模式 (2*s1, 2*s2)，s1、s2 为奇数
# 文件路径：xqcbordarange/constructions/twolevel.py

from typing import List, Tuple

from ..core.exceptions import ConstructionError, ValidationError
from ..core.logger import default_logger
from ..model.profile import LevelPattern, Profile, Ranking, borda_scores, weak_order_of
from .check import ensure_pattern


def _check_sizes(s1: int, s2: int) -> None:
    if s1 < 1 or s2 < 1 or s1 % 2 == 0 or s2 % 2 == 0:
        raise ValidationError(f"❌ s1、s2 必须是正奇数，实际为 ({s1}, {s2})")


def two_level_groups(s1: int, s2: int) -> Tuple[List[int], List[int]]:
    """
    两层组合中的两组备选项。记 S = s1 + s2，前一组是 x_1..x_{s1} 与
    x_{S+1}..x_{S+s1}（分数较低，为更好的一层），后一组是其余备选项。

    :param s1: 正奇数。
    :param s2: 正奇数。
    :return: (较好一层的编号列表, 较差一层的编号列表)。
    """
    _check_sizes(s1, s2)
    total = s1 + s2
    better = list(range(0, s1)) + list(range(total, total + s1))
    worse = list(range(s1, total)) + list(range(total + s1, 2 * total))
    return better, worse


def two_level_scores(s1: int, s2: int) -> Tuple[int, int]:
    """
    两层的分数（闭式）。较好一层为 5S/2 + (s1+3)/2，较差一层多 S/2。

    :return: (较好一层分数, 较差一层分数)。
    """
    _check_sizes(s1, s2)
    total = s1 + s2
    better = (5 * total) // 2 + (s1 + 3) // 2
    return better, better + total // 2


def _voter_two(s1: int, s2: int) -> List[int]:
    total = s1 + s2

    def x(i: int) -> int:
        return i - 1

    return (
        [x(total + j) for j in range(s1 - 1, 0, -2)]
        + [x(total + s1 + j) for j in range(s2, 0, -2)]
        + [x(j) for j in range(s1 - 1, 0, -2)]
        + [x(s1 + j) for j in range(s2, 0, -2)]
        + [x(i) for i in range(2 * total - 1, 0, -2)]
    )


def _voter_three(s1: int, s2: int) -> List[int]:
    total = s1 + s2

    def x(i: int) -> int:
        return i - 1

    return (
        [x(total + j) for j in range(s1, 0, -2)]
        + [x(total + s1 + j) for j in range(s2 - 1, 0, -2)]
        + [x(j) for j in range(s1, 0, -2)]
        + [x(s1 + j) for j in range(s2 - 1, 0, -2)]
        + [x(i) for i in range(2 * total, 0, -2)]
    )


def construct_two_level(s1: int, s2: int) -> Profile:
    """
    构造两层基础组合 v。投票人 1 为恒等排名，投票人 2、3 按奇偶下标分块倒序排列。

    :param s1: 正奇数。
    :param s2: 正奇数。
    :return: n=3、m=2(s1+s2) 的组合，模式为 (2*s1, 2*s2)。
    """
    _check_sizes(s1, s2)
    total = s1 + s2
    m = 2 * total
    u = Profile(
        m=m,
        n=3,
        rankings=(
            Ranking(tuple(range(m))),
            Ranking(tuple(_voter_two(s1, s2))),
            Ranking(tuple(_voter_three(s1, s2))),
        ),
    )
    label = f"两层组合 v({s1},{s2})"
    ensure_pattern(u, LevelPattern.of(2 * s1, 2 * s2), label)

    # 闭式分数与两层分组也要一致
    scores = borda_scores(u)
    better, worse = two_level_groups(s1, s2)
    expected = two_level_scores(s1, s2)
    order = weak_order_of(u)
    if (order.levels[0] != frozenset(better) or order.levels[1] != frozenset(worse)
            or order.level_scores != expected or scores[better[0]] != expected[0]):
        default_logger.error(f"🔥 {label} 的层级或分数与闭式不符: {order.level_scores}")
        raise ConstructionError(f"{label} 的层级或分数与闭式不符")
    return u
