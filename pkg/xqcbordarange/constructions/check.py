# 作者：Xiaoqiang
# 微信公众号：XiaoqiangClub
# 创建时间：2026-10-19T11:20:48.550Z
# 文件描述：构造器共用的自检
# 文件路径：xqcbordarange/constructions/check.py

from ..core.exceptions import ConstructionError
from ..core.logger import default_logger
from ..model.profile import LevelPattern, Profile, pattern_of


def ensure_pattern(u: Profile, target: LevelPattern, label: str) -> Profile:
    """
    重新计分，确认组合的模式等于目标模式，否则记录日志并抛出 ConstructionError。

    :param u: 构造得到的组合。
    :param target: 目标模式。
    :param label: 构造器名称，用于日志。
    :return: 通过自检的组合本身。
    """
    actual = pattern_of(u)
    if actual != target:
        default_logger.error(f"🔥 {label} 自检失败: 期望 ({target})，实际 ({actual})")
        raise ConstructionError(f"{label} 自检失败: 期望 ({target})，实际 ({actual})")
    return u
