# 作者：Xiaoqiang
# 微信公众号：XiaoqiangClub
# 创建时间：2026-10-19T10:14:05.771Z
# 文件描述：排名、偏好组合、Borda 计分、弱序与层级模式，以及三个组合算子（反转、拼接、奇数人数扩展）
# 文件路径：xqcbordarange/model/profile.py

from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, Iterator, List, Sequence, Tuple

from ..core.exceptions import (
    ConstructionError,
    InvalidPattern,
    InvalidProfile,
    ParityError,
    VoterCountMismatch,
)
from ..core.logger import default_logger


@dataclass(frozen=True)
class Ranking:
    """
    一个投票人的严格排名，order[0] 排第 1（最好），备选项编号从 0 开始。
    """
    order: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "order", tuple(int(x) for x in self.order))
        if sorted(self.order) != list(range(len(self.order))):
            raise InvalidProfile(f"❌ 排名不是 0..{len(self.order) - 1} 的置换: {list(self.order)}")

    @cached_property
    def _positions(self) -> Tuple[int, ...]:
        positions = [0] * len(self.order)
        for position, alternative in enumerate(self.order):
            positions[alternative] = position + 1
        return tuple(positions)

    def rank_of(self, alternative: int) -> int:
        """
        备选项在该排名中的名次（1 为最好）。

        :param alternative: 备选项编号。
        :return: 名次，取值 1..m。
        """
        return self._positions[alternative]

    def reversed(self) -> "Ranking":
        return Ranking(tuple(reversed(self.order)))

    def __len__(self) -> int:
        return len(self.order)

    def __iter__(self) -> Iterator[int]:
        return iter(self.order)


@dataclass(frozen=True)
class Profile:
    """
    n 个严格排名组成的偏好组合，不可变。

    m = 0 的空组合只作为拼接的单位元存在；m = 1 不被接受。
    """
    m: int
    n: int
    rankings: Tuple[Ranking, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "rankings", tuple(
            r if isinstance(r, Ranking) else Ranking(tuple(r)) for r in self.rankings))
        if self.n < 1:
            raise InvalidProfile(f"❌ 投票人数必须 ≥ 1，实际为 {self.n}")
        if self.m == 1 or self.m < 0:
            raise InvalidProfile(f"❌ 备选项数必须 ≥ 2（或为空组合 0），实际为 {self.m}")
        if len(self.rankings) != self.n:
            raise InvalidProfile(f"❌ 声明 n={self.n}，但给出了 {len(self.rankings)} 个排名")
        for index, ranking in enumerate(self.rankings):
            if len(ranking) != self.m:
                raise InvalidProfile(
                    f"❌ 第 {index + 1} 个排名长度为 {len(ranking)}，与 m={self.m} 不一致")

    @classmethod
    def from_lists(cls, rankings: Sequence[Sequence[int]]) -> "Profile":
        """
        由排名列表构建偏好组合，m 和 n 从数据推断。

        :param rankings: 每个投票人的排名（从最好到最差的备选项编号）。
        :return: Profile 实例。
        """
        if not rankings:
            raise InvalidProfile("❌ 至少需要一个投票人")
        return cls(m=len(rankings[0]), n=len(rankings), rankings=tuple(Ranking(tuple(r)) for r in rankings))

    @classmethod
    def empty(cls, n: int) -> "Profile":
        """拼接的单位元：n 个投票人、0 个备选项。"""
        return cls(m=0, n=n, rankings=tuple(Ranking(()) for _ in range(n)))

    def to_lists(self) -> List[List[int]]:
        return [list(r.order) for r in self.rankings]

    def sort_key(self) -> Tuple[Tuple[int, ...], ...]:
        """字典序比较用的键。"""
        return tuple(r.order for r in self.rankings)


@dataclass(frozen=True)
class ScoreVector:
    """
    每个备选项的 Borda 分数（名次之和），scores[x] 即备选项 x 的分数，越低越好。
    """
    scores: Tuple[int, ...]

    def __getitem__(self, alternative: int) -> int:
        return self.scores[alternative]

    def __len__(self) -> int:
        return len(self.scores)

    def as_dict(self) -> Dict[int, int]:
        return dict(enumerate(self.scores))


@dataclass(frozen=True)
class LevelPattern:
    """
    层级模式 (m_1, ..., m_T)：从最好到最差每一层的备选项个数。
    """
    sizes: Tuple[int, ...]

    def __post_init__(self) -> None:
        try:
            sizes = tuple(int(s) for s in self.sizes)
        except (TypeError, ValueError):
            raise InvalidPattern(f"❌ 层级模式必须由整数组成: {self.sizes!r}")
        if not sizes:
            raise InvalidPattern("❌ 层级模式不能为空")
        if any(s < 1 for s in sizes):
            raise InvalidPattern(f"❌ 层级大小必须 ≥ 1: {list(sizes)}")
        object.__setattr__(self, "sizes", sizes)

    @classmethod
    def of(cls, *sizes: int) -> "LevelPattern":
        return cls(tuple(sizes))

    @property
    def m(self) -> int:
        """备选项总数。"""
        return sum(self.sizes)

    @property
    def levels(self) -> int:
        """层数 T。"""
        return len(self.sizes)

    def reversed(self) -> "LevelPattern":
        return LevelPattern(tuple(reversed(self.sizes)))

    def __add__(self, other: "LevelPattern") -> "LevelPattern":
        return LevelPattern(self.sizes + other.sizes)

    def __iter__(self) -> Iterator[int]:
        return iter(self.sizes)

    def __len__(self) -> int:
        return len(self.sizes)

    def __str__(self) -> str:
        return ",".join(str(s) for s in self.sizes)


@dataclass(frozen=True)
class WeakOrder:
    """
    Borda 弱序：按分数从低（好）到高（差）排列的层级，以及每层的共同分数。
    """
    levels: Tuple[FrozenSet[int], ...]
    level_scores: Tuple[int, ...] = field(default=())

    @property
    def pattern(self) -> LevelPattern:
        return LevelPattern(tuple(len(level) for level in self.levels))

    def sorted_levels(self) -> List[List[int]]:
        """每层的备选项按编号排序，便于输出和比较。"""
        return [sorted(level) for level in self.levels]


def borda_scores(u: Profile) -> ScoreVector:
    """
    计算每个备选项的 Borda 分数：所有投票人给出的名次之和。

    :param u: 偏好组合。
    :return: ScoreVector。
    """
    scores = [0] * u.m
    for ranking in u.rankings:
        for position, alternative in enumerate(ranking.order, start=1):
            scores[alternative] += position
    return ScoreVector(tuple(scores))


def weak_order_from_scores(scores: ScoreVector) -> WeakOrder:
    """
    按分数分组得到弱序，分数低的层级在前。

    :param scores: 分数向量。
    :return: WeakOrder。
    """
    groups: Dict[int, List[int]] = {}
    for alternative, score in enumerate(scores.scores):
        groups.setdefault(score, []).append(alternative)
    ordered = sorted(groups)
    return WeakOrder(
        levels=tuple(frozenset(groups[s]) for s in ordered),
        level_scores=tuple(ordered),
    )


def weak_order_of(u: Profile) -> WeakOrder:
    """
    偏好组合诱导的 Borda 弱序。

    :param u: 偏好组合。
    :return: WeakOrder，最好的层级在前。
    """
    return weak_order_from_scores(borda_scores(u))


def pattern_of(u: Profile) -> LevelPattern:
    """
    偏好组合的层级模式。空组合没有层级，不能调用。

    :param u: 偏好组合。
    :return: LevelPattern。
    """
    return weak_order_of(u).pattern


def invert_profile(u: Profile) -> Profile:
    """
    反转每个投票人的排名。分数满足 S'(x) = n(m+1) - S(x)，模式随之反转。

    :param u: 偏好组合。
    :return: 新的 Profile。
    """
    return Profile(m=u.m, n=u.n, rankings=tuple(r.reversed() for r in u.rankings))


def catenate(top: Profile, bottom: Profile) -> Profile:
    """
    拼接两个偏好组合：每个投票人都把 top 的备选项排在 bottom 的备选项之上，
    bottom 的编号整体加上 top.m。结果的模式是两者模式的串联。

    :param top: 排在上方的组合。
    :param bottom: 排在下方的组合。
    :return: 新的 Profile。
    """
    if top.n != bottom.n:
        raise VoterCountMismatch(f"❌ 投票人数不一致: {top.n} != {bottom.n}")
    offset = top.m
    rankings = tuple(
        Ranking(t.order + tuple(x + offset for x in b.order))
        for t, b in zip(top.rankings, bottom.rankings)
    )
    return Profile(m=top.m + bottom.m, n=top.n, rankings=rankings)


def catenate_all(profiles: Iterable[Profile], n: int) -> Profile:
    """
    依次拼接多个偏好组合。

    :param profiles: 从上到下的组合序列。
    :param n: 投票人数，用于构造空的起点。
    :return: 新的 Profile。
    """
    result = Profile.empty(n)
    for p in profiles:
        result = catenate(result, p)
    return result


def extend_to_odd_n(u: Profile, target_n: int) -> Profile:
    """
    追加 (target_n - n)/2 对互逆排名（恒等排名及其反转），把奇数人数扩展到 target_n。
    每追加一对，所有分数增加 m+1，层级集合与顺序不变。

    :param u: 投票人数为奇数的偏好组合。
    :param target_n: 目标投票人数，奇数且 ≥ u.n。
    :return: 新的 Profile。
    """
    if u.n % 2 == 0:
        raise ParityError(f"❌ 只能扩展奇数人数的组合，当前 n={u.n}")
    if target_n % 2 == 0 or target_n < u.n:
        raise ParityError(f"❌ 目标人数必须是 ≥ {u.n} 的奇数，实际为 {target_n}")
    if target_n == u.n:
        return u

    pairs = (target_n - u.n) // 2
    identity = Ranking(tuple(range(u.m)))
    padding = (identity, identity.reversed()) * pairs
    extended = Profile(m=u.m, n=target_n, rankings=u.rankings + padding)

    # 重新计分自检
    before, after = borda_scores(u), borda_scores(extended)
    shift = pairs * (u.m + 1)
    if any(a != b + shift for a, b in zip(after.scores, before.scores)):
        default_logger.error(f"🔥 扩展到 n={target_n} 后分数偏移不等于 {shift}")
        raise ConstructionError(f"扩展到 n={target_n} 后自检失败")
    return extended
