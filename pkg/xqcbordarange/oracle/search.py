# 作者：Xiaoqiang
# 微信公众号：XiaoqiangClub
# 创建时间：2026-10-19T13:58:20.114Z
# 文件描述：单个模式的见证搜索：分数可行性预筛、穷举搜索与局部搜索
# 文件路径：xqcbordarange/oracle/search.py

import math
import random
import time
from typing import Any, List, Optional

from ..core.abc import WitnessSearcher
from ..core.config import Settings, get_settings
from ..core.exceptions import ConstructionError, InvalidPattern, ParityError, WitnessNotFound
from ..core.logger import default_logger
from ..model.profile import LevelPattern, Profile, Ranking, pattern_of
from .enumerate import encode_pattern, scan_space, witness_from_indices

DEFAULT_PATIENCE = 2000


def score_feasible(p: LevelPattern, n: int) -> bool:
    """
    必要条件：存在整数 S_1 < ... < S_T，n ≤ S_i ≤ nm，且 Σ m_i S_i = n·m(m+1)/2。

    令 S_i = n + (i-1) + d_i，d 单调不减，问题化为用后缀和 c_j = m_j + ... + m_T
    作为硬币凑出余量 R，且硬币总数不超过 D = nm - n - T + 1。

    :param p: 层级模式。
    :param n: 投票人数。
    :return: 是否可行。
    """
    m, levels = p.m, p.levels
    remainder = n * m * (m + 1) // 2 - sum(size * (n + i) for i, size in enumerate(p.sizes))
    limit = n * m - n - levels + 1
    if remainder < 0 or limit < 0:
        return False
    coins = [sum(p.sizes[j:]) for j in range(levels)]
    fewest = [0] + [math.inf] * remainder
    for value in range(1, remainder + 1):
        for coin in coins:
            if coin <= value and fewest[value - coin] + 1 < fewest[value]:
                fewest[value] = fewest[value - coin] + 1
    return fewest[remainder] <= limit


def pattern_cost(scores: List[int], sizes: List[int]) -> int:
    """
    局部搜索的整数目标：排序后按模式切块，每块 |b|·Σs² - (Σs)²（块内方差的倍数），
    相邻块边界上分数相等再各加 1。为 0 当且仅当分数恰好实现该模式。
    """
    ordered = sorted(scores)
    cost, start = 0, 0
    for index, size in enumerate(sizes):
        block = ordered[start:start + size]
        total = sum(block)
        cost += size * sum(s * s for s in block) - total * total
        if index and ordered[start - 1] == ordered[start]:
            cost += 1
        start += size
    return cost


class ExhaustiveSearcher(WitnessSearcher):
    """
    在固定投票人 1 的约简空间里穷举，返回字典序最小的见证组合。
    """

    def __init__(self, workers: int = 1):
        self.workers = workers
        self.logger = default_logger

    def search(self, pattern: LevelPattern, n: int, **kwargs: Any) -> Profile:
        m = pattern.m
        code = encode_pattern(pattern)
        tally = scan_space(m, n, True, self.workers, stop_code=code)
        if code not in tally:
            self.logger.info(f"🔍 穷举完毕，({pattern}) 在 n={n} 下不存在")
            raise WitnessNotFound(f"({pattern}) 在 n={n} 下无见证", exhaustive=True)
        _, prefix, last = tally[code]
        witness = witness_from_indices(m, n, True, prefix, last)
        self.logger.info(f"🎉 穷举找到 ({pattern}) 的见证")
        return witness


class LocalSearcher(WitnessSearcher):
    """
    随机重启的局部搜索：投票人 1 固定，其余投票人做相邻交换，目标不变差即接受。
    """

    def __init__(self, seed: int = 0, restarts: int = 10 ** 6, time_limit: Optional[float] = None,
                 patience: int = DEFAULT_PATIENCE):
        """
        :param seed: 随机种子。
        :param restarts: 最多重启次数。
        :param time_limit: 时间上限（秒），None 表示不限。
        :param patience: 连续多少步没有严格改进就重启。
        """
        self.seed = seed
        self.restarts = restarts
        self.time_limit = time_limit
        self.patience = patience
        self.logger = default_logger

    def search(self, pattern: LevelPattern, n: int, **kwargs: Any) -> Profile:
        m, sizes = pattern.m, list(pattern.sizes)
        rng = random.Random(self.seed)
        deadline = None if self.time_limit is None else time.monotonic() + self.time_limit

        for restart in range(self.restarts):
            voters = [list(range(m))]
            for _ in range(n - 1):
                order = list(range(m))
                rng.shuffle(order)
                voters.append(order)
            scores = [0] * m
            for order in voters:
                for position, x in enumerate(order, start=1):
                    scores[x] += position
            cost = pattern_cost(scores, sizes)
            best, stale = cost, 0

            while cost and stale < self.patience:
                voter = rng.randrange(1, n)
                j = rng.randrange(m - 1)
                order = voters[voter]
                a, b = order[j], order[j + 1]
                # a 下移一位，b 上移一位
                scores[a] += 1
                scores[b] -= 1
                new_cost = pattern_cost(scores, sizes)
                if new_cost <= cost:
                    order[j], order[j + 1] = b, a
                    cost = new_cost
                else:
                    scores[a] -= 1
                    scores[b] += 1
                if cost < best:
                    best, stale = cost, 0
                else:
                    stale += 1

            if cost == 0:
                witness = Profile(m=m, n=n, rankings=tuple(Ranking(tuple(o)) for o in voters))
                self.logger.info(f"🎉 局部搜索在第 {restart + 1} 次重启找到 ({pattern}) 的见证")
                return witness
            if deadline is not None and time.monotonic() > deadline:
                break

        self.logger.warning(f"⚠️ 局部搜索没有找到 ({pattern}) 的见证")
        raise WitnessNotFound(f"局部搜索没有找到 ({pattern}) 的见证", exhaustive=False)


def search_witness(p: LevelPattern, n: int, budget: Optional[int] = None, *, seed: int = 0,
                   time_limit: Optional[float] = None, workers: Optional[int] = None,
                   settings: Optional[Settings] = None) -> Profile:
    """
    搜索实现模式 p 的 n 人组合。先做分数可行性预筛；候选数 (m!)^(n-1) 不超过预算时穷举，
    否则局部搜索。

    :param p: 目标模式。
    :param n: 投票人数，正奇数。
    :param budget: 穷举候选数上限，默认取配置中的 exhaustive_budget。
    :param seed: 局部搜索的随机种子。
    :param time_limit: 局部搜索的时间上限（秒）。
    :param workers: 穷举时的并行进程数。
    :param settings: 配置。
    :return: 已验证的 Profile。
    """
    settings = settings or get_settings()
    if n < 1 or n % 2 == 0:
        raise ParityError(f"❌ n 必须是正奇数，实际为 {n}")
    if p.m < 2:
        raise InvalidPattern(f"❌ 备选项总数必须 ≥ 2，模式 ({p}) 只有 {p.m} 个")

    if not score_feasible(p, n):
        default_logger.info(f"🔍 ({p}) 在 n={n} 下没有可行的分数组合")
        raise WitnessNotFound(f"({p}) 在 n={n} 下没有可行的分数组合", exhaustive=True)

    budget = budget or settings.exhaustive_budget
    candidates = math.factorial(p.m) ** (n - 1)
    if candidates <= budget:
        searcher: WitnessSearcher = ExhaustiveSearcher(workers or settings.workers)
    else:
        searcher = LocalSearcher(seed=seed, restarts=settings.search_restarts,
                                 time_limit=time_limit or settings.search_time_limit)
    default_logger.info(f"🔍 搜索 ({p})，n={n}，使用 {type(searcher).__name__}")
    witness = searcher.search(p, n)

    if pattern_of(witness) != p:
        default_logger.error(f"🔥 搜索结果未通过验证: ({p})")
        raise ConstructionError(f"搜索结果未通过验证: ({p})")
    return witness
