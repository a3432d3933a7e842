# 作者：Xiaoqiang
# 微信公众号：XiaoqiangClub
# 创建时间：2026-10-19T18:41:15.770Z
# 文件描述：穷举、抽样、搜索、缓存与交叉核对的测试
# 文件路径：tests/test_oracle.py

import asyncio
import json
import logging

import pytest

from xqcbordarange.classifier.rules import Verdict, classify
from xqcbordarange.core.config import Settings
from xqcbordarange.core.exceptions import (
    BudgetExceeded,
    ConstructionError,
    InvalidPattern,
    ParityError,
    ValidationError,
    WitnessNotFound,
)
from xqcbordarange.model.codec import profile_to_dict
from xqcbordarange.model.profile import LevelPattern, pattern_of
from xqcbordarange.oracle import (
    EnumerationMode,
    Provenance,
    WitnessCache,
    compositions,
    cross_check,
    decode_pattern,
    encode_pattern,
    enumerate_range,
    four_four_witness,
    pattern_cost,
    score_feasible,
    search_witness,
)
from xqcbordarange.oracle.search import LocalSearcher


def _all_except(m: int, *missing) -> set:
    return set(compositions(m)) - {LevelPattern(sizes) for sizes in missing}


# --- 模式编码 ---
def test_compositions_count_and_codes():
    for m in range(1, 8):
        patterns = list(compositions(m))
        assert len(patterns) == 2 ** (m - 1)
        assert len(set(patterns)) == len(patterns)
        assert all(decode_pattern(encode_pattern(p), m) == p for p in patterns)
    assert encode_pattern(LevelPattern.of(2, 2)) == 0b010


# --- 穷举 ---
def test_enumerate_m2():
    atlas = enumerate_range(2, 3)
    assert set(atlas.patterns()) == {LevelPattern.of(1, 1)}
    assert LevelPattern.of(2) not in atlas


def test_enumerate_m3_reaches_every_composition():
    atlas = enumerate_range(3, 3)
    assert set(atlas.patterns()) == set(compositions(3))
    assert sum(atlas.counts.values()) == 36


def test_enumerate_m4_misses_only_single_level():
    atlas = enumerate_range(4, 3)
    assert set(atlas.patterns()) == _all_except(4, (4,))
    assert sum(atlas.counts.values()) == 24 ** 2


def test_atlas_witnesses_are_verified_and_fix_voter_one():
    atlas = enumerate_range(4, 3)
    for p, witness in atlas.achieved.items():
        assert pattern_of(witness) == p
        assert witness.rankings[0].order == (0, 1, 2, 3)


@pytest.mark.parametrize("m", [2, 3, 4])
def test_fixing_voter_one_does_not_change_range(m):
    reduced = enumerate_range(m, 3)
    full = enumerate_range(m, 3, fix_first_voter=False)
    assert set(reduced.patterns()) == set(full.patterns())
    assert full.fix_first_voter is False


def test_anonymous_reduction_for_five_voters():
    reduced = enumerate_range(3, 5)
    full = enumerate_range(3, 5, fix_first_voter=False)
    assert set(reduced.patterns()) == set(full.patterns())


def test_parallel_scan_matches_serial():
    serial = enumerate_range(4, 3, workers=1)
    parallel = enumerate_range(4, 3, workers=2)
    assert serial.counts == parallel.counts
    assert serial.achieved == parallel.achieved


def test_sampled_is_subset_of_exhaustive():
    exhaustive = enumerate_range(5, 3)
    sampled = enumerate_range(5, 3, EnumerationMode.sampled(2000, seed=7))
    assert set(sampled.patterns()) <= set(exhaustive.patterns())
    assert sum(sampled.counts.values()) == 2000
    again = enumerate_range(5, 3, EnumerationMode.sampled(2000, seed=7))
    assert again.achieved == sampled.achieved


def test_enumerate_budget_exceeded():
    with pytest.raises(BudgetExceeded) as info:
        enumerate_range(6, 3, budget=10)
    assert info.value.candidates == 720 ** 2
    assert "518400 > 10" in str(info.value)


@pytest.mark.parametrize("m, n, error", [(1, 3, ValidationError), (3, 2, ParityError), (3, 0, ParityError)])
def test_enumerate_rejects_bad_arguments(m, n, error):
    with pytest.raises(error):
        enumerate_range(m, n)


def test_enumeration_mode_validation():
    with pytest.raises(ValidationError):
        EnumerationMode("random")
    with pytest.raises(ValidationError):
        EnumerationMode.sampled(0)
    assert str(EnumerationMode.sampled(5)) == "sampled{trials=5}"


def test_atlas_export(tmp_path):
    atlas = enumerate_range(3, 3)
    csv_path, json_path = tmp_path / "atlas.csv", tmp_path / "atlas.json"
    atlas.export(str(csv_path))
    atlas.export(str(json_path))
    rows = csv_path.read_text(encoding="utf-8").splitlines()
    assert rows[0] == "pattern,count_of_witnesses,min_witness_json"
    assert len(rows) == 5
    data = json.loads(json_path.read_text(encoding="utf-8"))
    assert data["mode"] == "exhaustive"
    assert {row["pattern"] for row in data["patterns"]} == {"1,1,1", "1,2", "2,1", "3"}


@pytest.mark.slow
def test_enumerate_m6_matches_classifier():
    atlas = enumerate_range(6, 3)
    for p in compositions(6):
        expected = classify(p).verdict is Verdict.IN_RANGE
        assert (p in atlas) == expected


# --- 搜索 ---
def test_score_feasible():
    assert score_feasible(LevelPattern.of(4, 4), 3)
    assert score_feasible(LevelPattern.of(1, 1), 3)
    assert not score_feasible(LevelPattern.of(2, 4), 3)
    assert not score_feasible(LevelPattern.of(4), 3)
    assert not score_feasible(LevelPattern.of(2), 3)


def test_pattern_cost():
    assert pattern_cost([7, 7, 8, 8], [2, 2]) == 0
    assert pattern_cost([8, 7, 8, 7], [2, 2]) == 0
    # 第二块方差 + 边界上的相等
    assert pattern_cost([7, 7, 7, 9], [2, 2]) == 5


@pytest.mark.parametrize("sizes", [(1, 1), (2, 2), (1, 2), (1, 1, 1)])
def test_search_finds_small_witnesses(sizes):
    p = LevelPattern(sizes)
    u = search_witness(p, 3)
    assert u.n == 3
    assert pattern_of(u) == p
    assert u.rankings[0].order == tuple(range(p.m))


def test_search_is_deterministic():
    p = LevelPattern.of(2, 2)
    assert search_witness(p, 3) == search_witness(p, 3)


def test_search_proves_two_four_impossible():
    with pytest.raises(WitnessNotFound) as info:
        search_witness(LevelPattern.of(2, 4), 3)
    assert info.value.exhaustive is True
    assert str(info.value).startswith("Not Found (exhaustive)")


def test_search_exhaustive_without_prefilter_shortcut():
    # (1,1,2) 的分数预筛能通过，由穷举确认
    p = LevelPattern.of(1, 1, 2)
    assert score_feasible(p, 3)
    assert pattern_of(search_witness(p, 3)) == p


def test_local_search_small_pattern():
    p = LevelPattern.of(2, 2)
    u = LocalSearcher(seed=3, restarts=1000).search(p, 3)
    assert pattern_of(u) == p


def test_local_search_gives_up():
    with pytest.raises(WitnessNotFound) as info:
        LocalSearcher(seed=0, restarts=2, patience=5).search(LevelPattern.of(2), 3)
    assert info.value.exhaustive is False


@pytest.mark.parametrize("n, error", [(2, ParityError), (0, ParityError)])
def test_search_rejects_even_n(n, error):
    with pytest.raises(error):
        search_witness(LevelPattern.of(2, 2), n)


def test_search_rejects_single_alternative():
    with pytest.raises(InvalidPattern):
        search_witness(LevelPattern.of(1), 3)


@pytest.mark.slow
def test_search_four_four_with_local_search():
    u = search_witness(LevelPattern.of(4, 4), 3, seed=0)
    assert pattern_of(u) == LevelPattern.of(4, 4)


# --- 缓存 ---
def test_cache_round_trip(cache_path, four_four):
    cache = WitnessCache(cache_path)
    cache.put(LevelPattern.of(4, 4), 3, four_four, Provenance.FIXTURE)
    assert (LevelPattern.of(4, 4), 3) in cache
    loaded = WitnessCache(cache_path).load()
    assert len(loaded) == 1
    assert loaded.get(LevelPattern.of(4, 4), 3) == four_four
    assert loaded.entries["4,4@3"].provenance is Provenance.FIXTURE
    assert loaded.get(LevelPattern.of(4, 4), 5) is None


def test_cache_refuses_wrong_witness(cache_path, two_two):
    with pytest.raises(ConstructionError):
        WitnessCache(cache_path).put(LevelPattern.of(4, 4), 3, two_two)
    assert not cache_path.exists()


def test_cache_drops_corrupt_entries(cache_path, four_four, two_two, caplog):
    bad_witness = profile_to_dict(two_two)
    cache_path.write_text(json.dumps({
        "version": 1,
        "entries": {
            "4,4@3": {"provenance": "fixture", "profile": profile_to_dict(four_four)},
            "2,2@5": {"provenance": "searched", "profile": bad_witness},
            "4,4,x@3": {"provenance": "searched", "profile": bad_witness},
            "2,2@3": {"provenance": "nowhere", "profile": bad_witness},
        },
    }), encoding="utf-8")
    with caplog.at_level(logging.WARNING, logger="xqcbordarange"):
        cache = WitnessCache(cache_path).load()
    assert list(cache.entries) == ["4,4@3"]
    warnings = [r for r in caplog.records if r.levelno == logging.WARNING]
    assert len(warnings) == 3


def test_cache_ignores_unreadable_file(cache_path, caplog):
    cache_path.write_text("{ not json", encoding="utf-8")
    with caplog.at_level(logging.WARNING, logger="xqcbordarange"):
        cache = WitnessCache(cache_path).load()
    assert len(cache) == 0
    assert "缓存文件损坏" in caplog.text


def test_cache_missing_file_is_empty(cache_path):
    assert len(WitnessCache(cache_path).load()) == 0


def test_cache_load_async(seeded_cache, four_four):
    cache = asyncio.run(WitnessCache(seeded_cache.path).load_async())
    assert cache.get(LevelPattern.of(4, 4), 3) == four_four


def test_four_four_witness_prefers_cache(seeded_cache, four_four):
    assert four_four_witness(seeded_cache) == four_four


def test_four_four_witness_reads_configured_cache(seeded_cache, four_four):
    settings = Settings(cache_path=seeded_cache.path)
    assert four_four_witness(settings=settings) == four_four


# --- 交叉核对 ---
def test_cross_check_m2():
    report = cross_check(2, 3)
    assert report.contradictions == []
    assert report.not_in_range == [LevelPattern.of(2)]
    assert len(report.checks) == 2


def test_cross_check_m4():
    report = cross_check(4, 3)
    assert report.contradictions == []
    assert set(report.not_in_range) == {LevelPattern.of(2), LevelPattern.of(4)}
    assert report.unknown == []
    data = report.to_dict()
    assert data["checked"] == 2 + 4 + 8
    assert data["contradictions"] == []


def test_cross_check_agrees_with_classifier_on_every_pattern():
    report = cross_check(4, 3)
    for check in report.checks:
        assert check.found == (classify(check.pattern).verdict is Verdict.IN_RANGE)


def test_cross_check_rejects_small_max_m():
    with pytest.raises(ValidationError):
        cross_check(1, 3)


@pytest.mark.parametrize("n", [1, 4, -3])
def test_cross_check_needs_odd_n_of_at_least_three(n):
    with pytest.raises(ParityError):
        cross_check(3, n)


def test_single_voter_atlas_is_only_strict_orders():
    atlas = enumerate_range(3, 1)
    assert set(atlas.patterns()) == {LevelPattern.of(1, 1, 1)}


@pytest.mark.slow
def test_cross_check_m6():
    report = cross_check(6, 3)
    assert report.contradictions == []
    for sizes in [(2, 4), (4, 2), (6,), (2, 2, 2)]:
        assert LevelPattern(sizes) in report.not_in_range
        assert LevelPattern(sizes) not in report.atlases[6]