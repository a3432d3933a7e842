# 作者：Xiaoqiang
# 微信公众号：XiaoqiangClub
# 创建时间：2026-10-19T10:40:52.018Z
# 文件描述：层级模式文本与偏好组合 JSON 的解析和序列化
# 文件路径：xqcbordarange/model/codec.py

import json
import re
from typing import Any, Dict, Union

from ..core.exceptions import InvalidPattern, ProfileFormatError
from ..core.utils import canonical_json
from .profile import LevelPattern, Profile, Ranking

_PATTERN_ITEM = re.compile(r"^\s*\d+\s*$")


def parse_pattern(text: str) -> LevelPattern:
    """
    解析逗号分隔的层级模式，例如 "2,4,4,2"。允许空白，只接受正整数。

    :param text: 模式文本。
    :return: LevelPattern。
    """
    items = text.split(",")
    if not all(_PATTERN_ITEM.match(item) for item in items):
        raise InvalidPattern(f"❌ 无法解析层级模式: {text!r}")
    return LevelPattern(tuple(int(item) for item in items))


def format_pattern(pattern: LevelPattern) -> str:
    return str(pattern)


def profile_to_dict(u: Profile) -> Dict[str, Any]:
    return {"m": u.m, "n": u.n, "rankings": u.to_lists()}


def profile_from_dict(data: Any) -> Profile:
    """
    按 {"m", "n", "rankings"} 格式构建偏好组合。

    :param data: 已解码的 JSON 对象。
    :return: Profile。
    """
    if not isinstance(data, dict) or set(data) != {"m", "n", "rankings"}:
        raise ProfileFormatError("❌ 偏好组合 JSON 必须恰好包含 m、n、rankings 三个键")
    m, n, rankings = data["m"], data["n"], data["rankings"]
    if not _is_int(m) or not _is_int(n):
        raise ProfileFormatError("❌ m 和 n 必须是整数")
    if not isinstance(rankings, list) or not all(
            isinstance(r, list) and all(_is_int(x) for x in r) for r in rankings):
        raise ProfileFormatError("❌ rankings 必须是整数列表的列表")
    return Profile(m=m, n=n, rankings=tuple(Ranking(tuple(r)) for r in rankings))


def dumps_profile(u: Profile) -> str:
    """
    规范 JSON 序列化，同一组合总是得到同一字节串。

    :param u: 偏好组合。
    :return: JSON 文本。
    """
    return canonical_json(profile_to_dict(u))


def loads_profile(text: Union[str, bytes]) -> Profile:
    """
    从 JSON 文本解析偏好组合。

    :param text: JSON 文本。
    :return: Profile。
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ProfileFormatError(f"❌ JSON 解析失败: {e}")
    return profile_from_dict(data)


def _is_int(value: Any) -> bool:
    # bool 是 int 的子类
    return isinstance(value, int) and not isinstance(value, bool)
