# 作者：Xiaoqiang
# 微信公众号：XiaoqiangClub
# 创建时间：2026-10-19T18:20:37.085Z
# 文件描述：分块规划与端到端构造的测试
# 文件路径：tests/test_decomposer.py

import asyncio
import itertools

import pytest
from hypothesis import given, settings

from xqcbordarange.constructions import SeqI, SeqII, SeqIII, SeqIV, TwoLevel
from xqcbordarange.core.exceptions import NotDecomposable, NotInRangeError, ParityError, UnsupportedConstruction
from xqcbordarange.decomposer import FourBlock, plan_blocks, plan_decomposition, realize, realize_async
from xqcbordarange.model.profile import LevelPattern, pattern_of, weak_order_of

from .strategies import two_four_patterns


def _two_four_patterns_up_to(levels: int):
    for length in range(2, levels + 1):
        for sizes in itertools.product((2, 4), repeat=length):
            twos = sizes.count(2)
            if twos >= 2 and twos % 2 == 0:
                yield LevelPattern(sizes)


# --- 规划 ---
@pytest.mark.parametrize("sizes, blocks", [
    ((2, 2), [TwoLevel(1, 1)]),
    ((2, 4, 4, 2), [SeqI(2)]),
    ((4, 2, 2), [SeqII(1)]),
    ((2, 2, 4), [SeqIII(1)]),
    ((4, 2, 4, 2, 4), [SeqIV(3)]),
    ((2, 2, 2, 2), [TwoLevel(1, 1), TwoLevel(1, 1)]),
    ((4, 4, 4, 2, 2), [FourBlock(1), SeqII(1)]),
    ((2, 2, 4, 4), [TwoLevel(1, 1), FourBlock(1)]),
    ((4, 4, 2, 4, 2, 4, 4, 4), [FourBlock(1), SeqIII(2), FourBlock(1)]),
    ((2, 4, 2, 2, 4, 2), [SeqI(1), SeqI(1)]),
])
def test_plan_known_patterns(sizes, blocks):
    assert list(plan_decomposition(LevelPattern(sizes))) == blocks


@pytest.mark.parametrize("sizes", [(2, 4, 2, 2), (4, 4), (2, 6, 2), (2,)])
def test_plan_rejects_non_two_four_patterns(sizes):
    with pytest.raises(NotDecomposable):
        plan_decomposition(LevelPattern(sizes))


def test_four_block_requires_a_pair():
    with pytest.raises(NotDecomposable):
        FourBlock(0)


@settings(max_examples=1000, deadline=None)
@given(two_four_patterns(max_levels=12))
def test_plan_covers_pattern_exactly(p):
    plan = plan_decomposition(p)
    combined = tuple(size for block in plan for size in block.target().sizes)
    assert combined == p.sizes
    for block in plan:
        if not isinstance(block, FourBlock):
            assert 2 in block.target().sizes


# --- 构造 ---
def test_realize_two_four_four_two(seeded_cache):
    u = realize(LevelPattern.of(2, 4, 4, 2), 3, cache=seeded_cache)
    assert (u.m, u.n) == (12, 3)
    assert pattern_of(u) == LevelPattern.of(2, 4, 4, 2)


def test_realize_every_small_two_four_pattern(seeded_cache):
    patterns = list(_two_four_patterns_up_to(7))
    assert len(patterns) == 120
    for p in patterns:
        assert pattern_of(realize(p, 3, cache=seeded_cache)) == p


@pytest.mark.parametrize("sizes", [(4, 4, 2, 4, 2, 4, 4, 4), (2, 2, 4, 4), (4, 4, 4, 4, 2, 2)])
def test_realize_with_four_blocks(seeded_cache, sizes):
    p = LevelPattern(sizes)
    assert pattern_of(realize(p, 3, cache=seeded_cache)) == p


@pytest.mark.parametrize("n", [3, 5, 7])
def test_realize_keeps_levels_for_every_odd_n(seeded_cache, n):
    p = LevelPattern.of(4, 2, 4, 4, 2)
    u = realize(p, n, cache=seeded_cache)
    assert u.n == n
    assert weak_order_of(u).levels == weak_order_of(realize(p, 3, cache=seeded_cache)).levels


@pytest.mark.parametrize("sizes, blocks", [
    ((2, 6), (TwoLevel(1, 3),)),
    ((6, 2, 2, 10), (TwoLevel(3, 1), TwoLevel(1, 5))),
    ((4, 4, 4, 4), (FourBlock(1), FourBlock(1))),
])
def test_lemma_four_pairs(seeded_cache, sizes, blocks):
    p = LevelPattern(sizes)
    assert plan_blocks(p) == blocks
    assert pattern_of(realize(p, 3, cache=seeded_cache)) == p


def test_odd_level_pattern_is_unsupported():
    with pytest.raises(UnsupportedConstruction):
        realize(LevelPattern.of(3, 5))


def test_lemma_four_pair_without_construction_is_unsupported():
    # (12, 20) 按 Lemma 4 在值域内，但 (12, 20) 这一对既不是 (2a, 2b) 也不是 (4, 4)
    with pytest.raises(UnsupportedConstruction):
        realize(LevelPattern.of(12, 20))


def test_unknown_pattern_is_unsupported():
    with pytest.raises(UnsupportedConstruction):
        realize(LevelPattern.of(8, 4, 4))


@pytest.mark.parametrize("sizes", [(2, 4), (4,), (2, 2, 2)])
def test_not_in_range_patterns_are_refused(sizes):
    with pytest.raises(NotInRangeError):
        realize(LevelPattern(sizes))


@pytest.mark.parametrize("n", [1, 2, 4, -3])
def test_realize_rejects_bad_n(n):
    with pytest.raises(ParityError):
        realize(LevelPattern.of(2, 2), n)


def test_realize_async_matches_sync(seeded_cache):
    p = LevelPattern.of(4, 4, 2, 4, 2, 4, 4, 4)
    u = asyncio.run(realize_async(p, 5, cache=seeded_cache))
    assert u == realize(p, 5, cache=seeded_cache)
    assert pattern_of(u) == p


def test_realize_async_loads_default_cache(seeded_cache, monkeypatch):
    monkeypatch.setenv("XQCBORDARANGE_CACHE", str(seeded_cache.path))
    p = LevelPattern.of(2, 2, 4, 4)
    assert pattern_of(asyncio.run(realize_async(p))) == p
