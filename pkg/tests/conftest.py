# 作者：Xiaoqiang
# 微信公众号：XiaoqiangClub
# 创建时间：2026-10-19T17:10:31.904Z
# 文件描述：共享的测试夹具
# 文件路径：tests/conftest.py

import pytest

from xqcbordarange.model.profile import LevelPattern, Profile
from xqcbordarange.oracle.cache import Provenance, WitnessCache

# 手工找到的 (4,4) 见证：编号 4..7 得 13 分，0..3 得 14 分
FOUR_FOUR_RANKINGS = [
    [0, 1, 2, 3, 4, 5, 6, 7],
    [7, 3, 6, 2, 5, 1, 4, 0],
    [4, 5, 6, 7, 0, 1, 2, 3],
]

# 得分 (7,7,8,8) 的 (2,2) 见证
TWO_TWO_RANKINGS = [[0, 1, 2, 3], [2, 3, 0, 1], [1, 3, 0, 2]]


@pytest.fixture(autouse=True, scope="session")
def isolated_cache_env(tmp_path_factory):
    """默认缓存路径指向临时目录，测试不会触碰用户的缓存。"""
    patch = pytest.MonkeyPatch()
    patch.setenv("XQCBORDARANGE_CACHE", str(tmp_path_factory.mktemp("cache") / "default-witnesses.json"))
    yield
    patch.undo()


@pytest.fixture
def four_four() -> Profile:
    return Profile.from_lists(FOUR_FOUR_RANKINGS)


@pytest.fixture
def two_two() -> Profile:
    return Profile.from_lists(TWO_TWO_RANKINGS)


@pytest.fixture
def cache_path(tmp_path):
    return tmp_path / "witnesses.json"


@pytest.fixture
def seeded_cache(cache_path, four_four) -> WitnessCache:
    cache = WitnessCache(cache_path)
    cache.put(LevelPattern.of(4, 4), 3, four_four, Provenance.FIXTURE)
    return cache
