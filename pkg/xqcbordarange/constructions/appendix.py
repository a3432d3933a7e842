# 作者：Xiaoqiang
# 微信公众号：XiaoqiangClub
# 创建时间：2026-10-19T11:41:09.227Z
# 文件描述：附录表中的五个显式见证组合，随包发布为 JSON 数据
# 文件路径：xqcbordarange/constructions/appendix.py

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib.resources import files
from typing import Dict, List, Tuple

from ..core.exceptions import ConstructionError, NotInTable
from ..core.logger import default_logger
from ..model.codec import parse_pattern, profile_from_dict
from ..model.profile import LevelPattern, Profile, invert_profile, weak_order_of

FIXTURE_RESOURCE = "fixtures/appendix.json"


@dataclass(frozen=True)
class AppendixFixture:
    pattern: LevelPattern
    profile: Profile
    levels: Tuple[Tuple[int, ...], ...]
    level_scores: Tuple[int, ...]


def _verify(fixture: AppendixFixture) -> None:
    order = weak_order_of(fixture.profile)
    if order.sorted_levels() != [list(level) for level in fixture.levels] \
            or order.level_scores != fixture.level_scores:
        default_logger.error(f"🔥 附录组合 ({fixture.pattern}) 的层级与记录不符: {order.sorted_levels()}")
        raise ConstructionError(f"附录组合 ({fixture.pattern}) 的层级与记录不符")


@lru_cache(maxsize=None)
def load_fixtures() -> Dict[LevelPattern, AppendixFixture]:
    """
    读取并校验附录数据。每个组合都重新计分，层级集合与分数必须与记录完全一致。

    :return: 模式到 AppendixFixture 的映射。
    """
    raw = json.loads(files(__package__).joinpath(FIXTURE_RESOURCE).read_text(encoding="utf-8"))
    entries = {entry["pattern"]: entry for entry in raw["fixtures"]}
    fixtures: Dict[LevelPattern, AppendixFixture] = {}
    for text, entry in entries.items():
        if "inverse_of" in entry:
            profile = invert_profile(profile_from_dict(entries[entry["inverse_of"]]["profile"]))
        else:
            profile = profile_from_dict(entry["profile"])
        fixture = AppendixFixture(
            pattern=parse_pattern(text),
            profile=profile,
            levels=tuple(tuple(sorted(level)) for level in entry["levels"]),
            level_scores=tuple(entry["level_scores"]),
        )
        _verify(fixture)
        fixtures[fixture.pattern] = fixture
    default_logger.debug(f"🔍 已载入 {len(fixtures)} 个附录组合")
    return fixtures


def appendix_patterns() -> List[LevelPattern]:
    return list(load_fixtures())


def appendix_witness(p: LevelPattern) -> Profile:
    """
    返回附录中给定模式的见证组合。(2,2,4) 是 (4,2,2) 的反转。

    :param p: 附录中的模式之一。
    :return: n=3 的 Profile。
    """
    fixture = load_fixtures().get(p)
    if fixture is None:
        raise NotInTable(f"❌ 附录中没有模式 ({p})")
    return fixture.profile
