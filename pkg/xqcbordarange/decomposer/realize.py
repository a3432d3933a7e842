# 作者：Xiaoqiang
# 微信公众号：XiaoqiangClub
# 创建时间：2026-10-19T15:38:19.502Z
# 文件描述：按分块计划构造见证组合、拼接并扩展到奇数 n
# 文件路径：xqcbordarange/decomposer/realize.py

import asyncio
from typing import List, Optional, Sequence, Tuple

from ..classifier.rules import Rule, Verdict, classify, is_two_four_pattern
from ..constructions.check import ensure_pattern
from ..constructions.router import TwoLevel
from ..core.abc import WitnessRequest
from ..core.config import Settings, get_settings
from ..core.exceptions import ConstructionError, NotInRangeError, ParityError, UnsupportedConstruction
from ..core.logger import default_logger
from ..model.profile import LevelPattern, Profile, borda_scores, catenate_all, extend_to_odd_n
from ..oracle.cache import WitnessCache
from .planner import FourBlock, build_block, plan_decomposition


def plan_blocks(p: LevelPattern) -> Tuple[WitnessRequest, ...]:
    """
    选出构造 p 所需的块。{2,4} 模式走分块计划；Lemma 4 模式按相邻两层配对，
    每对是 (2a, 2b)（a、b 为奇数）或 (4, 4)。

    :param p: 层级模式。
    :return: 从上到下的块。
    """
    verdict = classify(p)
    if verdict.verdict is Verdict.NOT_IN_RANGE:
        raise NotInRangeError(f"❌ ({p}) 不在 Borda 值域内（Theorem 3）")
    if is_two_four_pattern(p):
        return plan_decomposition(p).blocks
    if verdict.rule is Rule.LEMMA4:
        blocks: List[WitnessRequest] = []
        sizes = p.sizes
        for a, b in zip(sizes[0::2], sizes[1::2]):
            if a % 4 == 2 and b % 4 == 2:
                blocks.append(TwoLevel(a // 2, b // 2))
            elif a == b == 4:
                blocks.append(FourBlock(1))
            else:
                raise UnsupportedConstruction(f"❌ ({p}) 中的 ({a},{b}) 没有可用的构造")
        return tuple(blocks)
    rule = verdict.rule.value if verdict.rule else "Unknown"
    raise UnsupportedConstruction(f"❌ ({p}) 判定为 {rule}，没有可用的构造")


def _check_n(n: int) -> None:
    if n < 3 or n % 2 == 0:
        raise ParityError(f"❌ n 必须是 ≥ 3 的奇数，实际为 {n}")


def _assemble(p: LevelPattern, n: int, parts: Sequence[Profile]) -> Profile:
    """拼接、检查块之间分数严格分离，再扩展到 n。"""
    u = catenate_all(parts, 3)
    scores = borda_scores(u)
    offset = 0
    previous_max = None
    for part in parts:
        block = scores.scores[offset:offset + part.m]
        if previous_max is not None and previous_max >= min(block):
            default_logger.error(f"🔥 ({p}) 拼接后块之间分数没有分离")
            raise ConstructionError(f"({p}) 拼接后块之间分数没有分离")
        previous_max = max(block)
        offset += part.m
    return ensure_pattern(extend_to_odd_n(u, n), p, f"realize({p}, n={n})")


def realize(p: LevelPattern, n: int = 3, *, cache: Optional[WitnessCache] = None,
            settings: Optional[Settings] = None) -> Profile:
    """
    构造实现 p 的 n 人组合：逐块构造 n=3 见证，按顺序拼接，再用互逆排名对扩展到 n。

    :param p: 层级模式。
    :param n: 投票人数，≥ 3 的奇数。
    :param cache: (4,4) 见证的缓存。
    :param settings: 配置。
    :return: 已验证的 Profile。
    """
    blocks = plan_blocks(p)
    _check_n(n)
    default_logger.debug(f"🔍 ({p}) 的分块: {blocks}")
    parts = [build_block(block, cache=cache, settings=settings) for block in blocks]
    u = _assemble(p, n, parts)
    default_logger.info(f"🎉 已构造 ({p}) 的见证，m={u.m}, n={u.n}")
    return u


async def realize_async(p: LevelPattern, n: int = 3, *, cache: Optional[WitnessCache] = None,
                        settings: Optional[Settings] = None) -> Profile:
    """
    realize 的异步版本：各块在线程中并发构造，按计划顺序拼接。
    """
    blocks = plan_blocks(p)
    _check_n(n)
    if cache is None and any(isinstance(b, FourBlock) for b in blocks):
        # 先载入一次缓存，各线程共用
        cache = await WitnessCache((settings or get_settings()).cache_path).load_async()
    parts = await asyncio.gather(*(
        asyncio.to_thread(build_block, block, cache, settings) for block in blocks
    ))
    u = _assemble(p, n, list(parts))
    default_logger.info(f"🎉 已构造 ({p}) 的见证，m={u.m}, n={u.n}")
    return u
