# 作者：Xiaoqiang
# 微信公众号：XiaoqiangClub
# 创建时间：2026-10-19T16:07:43.259Z
# 文件描述：提供统一的同步和异步函数，作为模块的顶层 API。
# 文件路径：xqcbordarange/api.py

from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Optional, Sequence, Union

from .classifier.rules import Classification
from .classifier.rules import classify as _classify
from .core.config import Settings, get_settings
from .core.utils import read_file, read_file_async
from .decomposer.realize import realize, realize_async
from .model.codec import loads_profile, parse_pattern
from .model.profile import LevelPattern, Profile, ScoreVector, WeakOrder, borda_scores, weak_order_from_scores
from .oracle.cache import WitnessCache
from .oracle.crosscheck import CrossCheckReport
from .oracle.crosscheck import cross_check as _cross_check
from .oracle.enumerate import EnumerationMode, RangeAtlas, enumerate_range
from .oracle.search import search_witness

PatternLike = Union[str, LevelPattern, Sequence[int]]


def as_pattern(pattern: PatternLike) -> LevelPattern:
    """
    把文本、LevelPattern 或整数序列统一转为 LevelPattern。
    """
    if isinstance(pattern, LevelPattern):
        return pattern
    if isinstance(pattern, str):
        return parse_pattern(pattern)
    return LevelPattern(tuple(pattern))


def _settings(cache_path: Optional[Union[str, Path]] = None, **overrides: Any) -> Settings:
    return get_settings().with_overrides(
        cache_path=Path(cache_path).expanduser() if cache_path else None, **overrides)


@dataclass(frozen=True)
class VerificationReport:
    """偏好组合的计分结果，以及与期望模式的比较。"""
    profile: Profile
    scores: ScoreVector
    weak_order: WeakOrder
    expected: Optional[LevelPattern] = None

    @property
    def pattern(self) -> LevelPattern:
        return self.weak_order.pattern

    @property
    def matches(self) -> bool:
        return self.expected is None or self.expected == self.pattern

    def to_dict(self) -> Dict[str, Any]:
        return {
            "m": self.profile.m,
            "n": self.profile.n,
            "scores": list(self.scores.scores),
            "levels": self.weak_order.sorted_levels(),
            "level_scores": list(self.weak_order.level_scores),
            "pattern": str(self.pattern),
            "expected": str(self.expected) if self.expected else None,
            "matches": self.matches,
        }


# --- 分类与构造 ---
def classify(pattern: PatternLike) -> Classification:
    """
    判定模式是否在奇数 n 的 Borda 值域内。

    :param pattern: 层级模式，如 "2,4,4,2"。
    :return: Classification。
    """
    return _classify(as_pattern(pattern))


def construct(pattern: PatternLike, n: int = 3, cache_path: Optional[Union[str, Path]] = None,
              cache: Optional[WitnessCache] = None) -> Profile:
    """
    构造实现模式的 n 人见证组合。

    :param pattern: 层级模式。
    :param n: 投票人数，≥ 3 的奇数。
    :param cache_path: 见证缓存路径，默认取配置。
    :param cache: 已载入的见证缓存，优先于 cache_path。
    :return: 已验证的 Profile。
    """
    settings = _settings(cache_path)
    if cache is None:
        cache = WitnessCache(settings.cache_path).load()
    return realize(as_pattern(pattern), n, cache=cache, settings=settings)


async def construct_async(pattern: PatternLike, n: int = 3, cache_path: Optional[Union[str, Path]] = None,
                          cache: Optional[WitnessCache] = None) -> Profile:
    """
    异步构造见证组合，参数同 construct。
    """
    settings = _settings(cache_path)
    if cache is None:
        cache = await WitnessCache(settings.cache_path).load_async()
    return await realize_async(as_pattern(pattern), n, cache=cache, settings=settings)


# --- 验证 ---
def verify_profile(profile: Profile, expect: Optional[PatternLike] = None) -> VerificationReport:
    """
    计分并与期望模式比较。

    :param profile: 偏好组合。
    :param expect: 期望的模式，可选。
    :return: VerificationReport。
    """
    scores = borda_scores(profile)
    return VerificationReport(
        profile=profile,
        scores=scores,
        weak_order=weak_order_from_scores(scores),
        expected=as_pattern(expect) if expect is not None else None,
    )


def verify_file(file_path: str, expect: Optional[PatternLike] = None) -> VerificationReport:
    """
    读取偏好组合 JSON 文件并验证。

    :param file_path: 文件路径。
    :param expect: 期望的模式，可选。
    :return: VerificationReport。
    """
    return verify_profile(loads_profile(read_file(file_path)), expect)


async def verify_file_async(file_path: str, expect: Optional[PatternLike] = None) -> VerificationReport:
    """
    异步读取偏好组合 JSON 文件并验证。
    """
    return verify_profile(loads_profile(await read_file_async(file_path)), expect)


# --- 穷举与搜索 ---
def enumerate_atlas(m: int, n: int, mode: str = "exhaustive", trials: int = 10000, seed: int = 0,
                    workers: Optional[int] = None, budget: Optional[int] = None,
                    export: Optional[str] = None) -> RangeAtlas:
    """
    计算 (m, n) 下的模式图谱。

    :param m: 备选项数。
    :param n: 投票人数，奇数。
    :param mode: "exhaustive" 或 "sampled"。
    :param trials: 抽样次数，仅抽样模式有效。
    :param seed: 抽样种子。
    :param workers: 并行进程数。
    :param budget: 穷举预算。
    :param export: 导出路径（.csv 或 .json），可选。
    :return: RangeAtlas。
    """
    enumeration = EnumerationMode.sampled(trials, seed) if mode == "sampled" else EnumerationMode(mode)
    atlas = enumerate_range(m, n, enumeration, budget=budget, workers=workers)
    if export:
        atlas.export(export)
    return atlas


def search(pattern: PatternLike, n: int = 3, budget: Optional[int] = None, seed: int = 0,
           time_limit: Optional[float] = None, workers: Optional[int] = None) -> Profile:
    """
    搜索实现模式的见证组合。找不到时抛出 WitnessNotFound。

    :param pattern: 层级模式。
    :param n: 投票人数，奇数。
    :param budget: 穷举预算。
    :param seed: 局部搜索种子。
    :param time_limit: 局部搜索时间上限（秒）。
    :param workers: 并行进程数。
    :return: 已验证的 Profile。
    """
    return search_witness(as_pattern(pattern), n, budget, seed=seed, time_limit=time_limit, workers=workers)


def cross_check(max_m: int, n: int = 3, budget: Optional[int] = None,
                workers: Optional[int] = None) -> CrossCheckReport:
    """
    用穷举图谱核对分类器。

    :param max_m: 最大备选项数。
    :param n: 投票人数，奇数。
    :return: CrossCheckReport。
    """
    return _cross_check(max_m, n, budget=budget, workers=workers)
