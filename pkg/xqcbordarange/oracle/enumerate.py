# 作者：Xiaoqiang
# 微信公众号：XiaoqiangClub
# 创建时间：2026-10-19T13:10:52.617Z
# 文件描述：小规模 (m, n) 下 Borda 值域的穷举与抽样
# 文件路径：xqcbordarange/oracle/enumerate.py

"""
穷举时固定投票人 1 为恒等排名（中性：对备选项重新编号不改变模式），
n > 3 时再按匿名性只枚举投票人 2..n 的非降索引组合。

每一批里，最后一个投票人的所有置换一次性向量化计分：分数排序后相邻不等的位置
构成一个位掩码，即模式编码。
"""

import csv
import io
import itertools
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from ..core.config import Settings, get_settings
from ..core.exceptions import BudgetExceeded, ConstructionError, ParityError, ValidationError
from ..core.logger import default_logger
from ..core.utils import canonical_json, write_file_atomic
from ..model.codec import profile_to_dict
from ..model.profile import LevelPattern, Profile, Ranking, pattern_of

Prefix = Tuple[int, ...]
# 模式编码 -> [出现次数, 最小见证的前缀, 最小见证的末位索引]
Tally = Dict[int, List]

SAMPLE_BATCH = 1 << 16


@dataclass(frozen=True)
class EnumerationMode:
    """
    exhaustive：穷举；sampled：随机抽取 trials 个组合（固定 seed 可复现）。
    """
    kind: str = "exhaustive"
    trials: int = 0
    seed: int = 0

    def __post_init__(self) -> None:
        if self.kind not in ("exhaustive", "sampled"):
            raise ValidationError(f"❌ 未知的枚举模式: {self.kind}")
        if self.kind == "sampled" and self.trials < 1:
            raise ValidationError("❌ 抽样模式需要 trials ≥ 1")

    @classmethod
    def exhaustive(cls) -> "EnumerationMode":
        return cls("exhaustive")

    @classmethod
    def sampled(cls, trials: int, seed: int = 0) -> "EnumerationMode":
        return cls("sampled", trials, seed)

    def __str__(self) -> str:
        return self.kind if self.kind == "exhaustive" else f"sampled{{trials={self.trials}}}"


@dataclass
class RangeAtlas:
    """
    已实现模式的图谱：每个模式一个见证组合，以及该模式在被枚举空间中出现的次数。
    """
    m: int
    n: int
    mode: EnumerationMode
    achieved: Dict[LevelPattern, Profile] = field(default_factory=dict)
    counts: Dict[LevelPattern, int] = field(default_factory=dict)
    fix_first_voter: bool = True

    def __contains__(self, pattern: LevelPattern) -> bool:
        return pattern in self.achieved

    def patterns(self) -> List[LevelPattern]:
        return sorted(self.achieved, key=lambda p: p.sizes)

    def to_dict(self) -> Dict:
        return {
            "m": self.m,
            "n": self.n,
            "mode": str(self.mode),
            "fix_first_voter": self.fix_first_voter,
            "patterns": [
                {"pattern": str(p), "count": self.counts[p], "witness": profile_to_dict(self.achieved[p])}
                for p in self.patterns()
            ],
        }

    def to_json(self) -> str:
        return canonical_json(self.to_dict())

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["pattern", "count_of_witnesses", "min_witness_json"])
        for p in self.patterns():
            writer.writerow([str(p), self.counts[p], canonical_json(profile_to_dict(self.achieved[p]))])
        return buffer.getvalue()

    def export(self, file_path: str) -> None:
        """
        导出到文件，扩展名为 .csv 时写 CSV，否则写 JSON。

        :param file_path: 目标路径。
        """
        content = self.to_csv() if file_path.lower().endswith(".csv") else self.to_json()
        write_file_atomic(file_path, content)
        default_logger.info(f"🎉 图谱已导出: {file_path}")


def compositions(m: int) -> Iterator[LevelPattern]:
    """
    m 的全部有序拆分，即总数为 m 的所有层级模式（共 2^(m-1) 个）。
    """
    for cuts in range(1 << (m - 1)):
        yield decode_pattern(cuts, m)


def decode_pattern(code: int, m: int) -> LevelPattern:
    """
    把位掩码还原为模式：第 i 位为 1 表示排序后第 i 与 i+1 个分数不同。
    """
    sizes, run = [], 1
    for i in range(m - 1):
        if code >> i & 1:
            sizes.append(run)
            run = 1
        else:
            run += 1
    sizes.append(run)
    return LevelPattern(tuple(sizes))


def encode_pattern(pattern: LevelPattern) -> int:
    code, position = 0, 0
    for size in pattern.sizes[:-1]:
        position += size
        code |= 1 << (position - 1)
    return code


@lru_cache(maxsize=8)
def rank_table(m: int) -> Tuple[np.ndarray, np.ndarray]:
    """
    m 个备选项的全部置换（字典序）及其名次矩阵 R[p, x] = x 在置换 p 中的名次。
    """
    perms = np.array(list(itertools.permutations(range(m))), dtype=np.int64).reshape(-1, m)
    ranks = np.argsort(perms, axis=1) + 1
    return perms, ranks


def _codes(scores: np.ndarray, weights: np.ndarray) -> np.ndarray:
    ordered = np.sort(scores, axis=1)
    breaks = ordered[:, 1:] != ordered[:, :-1]
    return breaks.astype(np.int64) @ weights


def _plan_space(m: int, n: int, fix_first_voter: bool) -> Tuple[List[Prefix], bool, int]:
    """
    返回前缀列表、是否按匿名性剪枝、以及理论候选数。
    最后一个自由投票人不在前缀中，而是整批向量化。
    """
    factorial = math.factorial(m)
    free = n - 1 if fix_first_voter else n
    candidates = factorial ** free
    if free == 0:
        return [], False, 1
    anonymous = fix_first_voter and n > 3
    if anonymous:
        prefixes = list(itertools.combinations_with_replacement(range(factorial), free - 1))
    else:
        prefixes = list(itertools.product(range(factorial), repeat=free - 1))
    return prefixes, anonymous, candidates


def scan_prefixes(m: int, n: int, fix_first_voter: bool, anonymous: bool,
                  prefixes: Sequence[Prefix], stop_code: Optional[int] = None) -> Tally:
    """
    扫描一段前缀。给出 stop_code 时，找到第一个该模式的组合就返回。

    :return: 模式编码到 [次数, 前缀, 末位索引] 的映射。
    """
    _, ranks = rank_table(m)
    weights = 1 << np.arange(m - 1, dtype=np.int64)
    base = np.arange(1, m + 1, dtype=np.int64) if fix_first_voter else np.zeros(m, dtype=np.int64)
    tally: Tally = {}
    for prefix in prefixes:
        start = prefix[-1] if anonymous and prefix else 0
        row = base + ranks[list(prefix)].sum(axis=0)
        codes = _codes(row + ranks[start:], weights)
        if stop_code is not None:
            hits = np.flatnonzero(codes == stop_code)
            if hits.size:
                return {stop_code: [1, prefix, start + int(hits[0])]}
            continue
        unique, first, count = np.unique(codes, return_index=True, return_counts=True)
        for code, index, c in zip(unique.tolist(), first.tolist(), count.tolist()):
            entry = tally.get(code)
            if entry is None:
                tally[code] = [c, prefix, start + index]
            else:
                entry[0] += c
    return tally


def _merge(tallies: Sequence[Tally]) -> Tally:
    merged: Tally = {}
    for tally in tallies:
        for code, (count, prefix, last) in tally.items():
            entry = merged.get(code)
            if entry is None:
                merged[code] = [count, prefix, last]
            else:
                entry[0] += count
                if (prefix, last) < (entry[1], entry[2]):
                    entry[1], entry[2] = prefix, last
    return merged


def _chunks(items: Sequence[Prefix], parts: int) -> List[Sequence[Prefix]]:
    size = max(1, math.ceil(len(items) / parts))
    return [items[i:i + size] for i in range(0, len(items), size)]


def scan_space(m: int, n: int, fix_first_voter: bool = True, workers: int = 1,
               stop_code: Optional[int] = None) -> Tally:
    """
    扫描整个（约简后的）组合空间，workers > 1 时按前缀分块并行，合并结果与串行一致。
    """
    prefixes, anonymous, _ = _plan_space(m, n, fix_first_voter)
    if n - (1 if fix_first_voter else 0) == 0:
        # 只有恒等排名一个组合
        code = int(_codes(np.arange(1, m + 1, dtype=np.int64)[None, :], 1 << np.arange(m - 1, dtype=np.int64))[0])
        return {code: [1, (), -1]}
    if workers <= 1 or len(prefixes) < 2:
        return scan_prefixes(m, n, fix_first_voter, anonymous, prefixes, stop_code)

    chunks = _chunks(prefixes, workers * 4)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        tallies = list(pool.map(scan_prefixes, itertools.repeat(m), itertools.repeat(n),
                                itertools.repeat(fix_first_voter), itertools.repeat(anonymous),
                                chunks, itertools.repeat(stop_code)))
    return _merge(tallies)


def witness_from_indices(m: int, n: int, fix_first_voter: bool, prefix: Prefix, last: int) -> Profile:
    """把枚举空间中的索引还原为偏好组合。"""
    perms, _ = rank_table(m)
    rankings = [Ranking(tuple(range(m)))] if fix_first_voter else []
    rankings += [Ranking(tuple(perms[i].tolist())) for i in prefix]
    if last >= 0:
        rankings.append(Ranking(tuple(perms[last].tolist())))
    return Profile(m=m, n=n, rankings=tuple(rankings))


def _check_arguments(m: int, n: int) -> None:
    if m < 2:
        raise ValidationError(f"❌ m 必须 ≥ 2，实际为 {m}")
    if n < 1 or n % 2 == 0:
        raise ParityError(f"❌ n 必须是正奇数，实际为 {n}")


def _build_atlas(m: int, n: int, mode: EnumerationMode, fix_first_voter: bool,
                 witnesses: Dict[int, Tuple[int, Profile]]) -> RangeAtlas:
    atlas = RangeAtlas(m=m, n=n, mode=mode, fix_first_voter=fix_first_voter)
    for code in sorted(witnesses):
        count, witness = witnesses[code]
        pattern = decode_pattern(code, m)
        if pattern_of(witness) != pattern:
            default_logger.error(f"🔥 见证组合的模式与编码 ({pattern}) 不符")
            raise ConstructionError(f"见证组合的模式与编码 ({pattern}) 不符")
        atlas.achieved[pattern] = witness
        atlas.counts[pattern] = count
    return atlas


def _enumerate_sampled(m: int, n: int, mode: EnumerationMode) -> Dict[int, Tuple[int, Profile]]:
    perms, ranks = rank_table(m)
    weights = 1 << np.arange(m - 1, dtype=np.int64)
    base = np.arange(1, m + 1, dtype=np.int64)
    rng = np.random.default_rng(mode.seed)
    found: Dict[int, List] = {}
    remaining = mode.trials
    while remaining > 0:
        batch = min(SAMPLE_BATCH, remaining)
        remaining -= batch
        picks = rng.integers(0, len(perms), size=(batch, n - 1))
        scores = base + ranks[picks].sum(axis=1) if n > 1 else np.tile(base, (batch, 1))
        codes = _codes(scores, weights)
        unique, first, count = np.unique(codes, return_index=True, return_counts=True)
        for code, index, c in zip(unique.tolist(), first.tolist(), count.tolist()):
            if code in found:
                found[code][0] += c
            else:
                found[code] = [c, tuple(picks[index].tolist())]
    return {
        code: (count, witness_from_indices(m, n, True, picks_row[:-1], picks_row[-1] if picks_row else -1))
        for code, (count, picks_row) in found.items()
    }


def enumerate_range(m: int, n: int, mode: Optional[EnumerationMode] = None, *,
                    fix_first_voter: bool = True, budget: Optional[int] = None,
                    workers: Optional[int] = None, settings: Optional[Settings] = None) -> RangeAtlas:
    """
    计算 (m, n) 下 Borda 规则能实现的全部模式。

    :param m: 备选项数，≥ 2。
    :param n: 投票人数，奇数。
    :param mode: 枚举模式，默认穷举。
    :param fix_first_voter: 是否固定投票人 1 为恒等排名。
    :param budget: 穷举候选数上限，默认取配置中的 enumerate_budget。
    :param workers: 并行进程数，默认取配置。
    :param settings: 配置。
    :return: RangeAtlas。
    """
    _check_arguments(m, n)
    settings = settings or get_settings()
    mode = mode or EnumerationMode.exhaustive()
    budget = budget or settings.enumerate_budget
    workers = workers or settings.workers

    if mode.kind == "sampled":
        default_logger.info(f"🔍 抽样枚举 m={m}, n={n}, trials={mode.trials}, seed={mode.seed}")
        return _build_atlas(m, n, mode, True, _enumerate_sampled(m, n, mode))

    _, _, candidates = _plan_space(m, n, fix_first_voter)
    if candidates > budget:
        raise BudgetExceeded(f"❌ 穷举 m={m}, n={n} 超出预算", candidates, budget)

    default_logger.info(f"🔍 穷举 m={m}, n={n}，候选数 {candidates}")
    tally = scan_space(m, n, fix_first_voter, workers)
    witnesses = {
        code: (count, witness_from_indices(m, n, fix_first_voter, prefix, last))
        for code, (count, prefix, last) in tally.items()
    }
    atlas = _build_atlas(m, n, mode, fix_first_voter, witnesses)
    default_logger.info(f"🎉 m={m}, n={n} 共实现 {len(atlas.achieved)} 种模式")
    return atlas
