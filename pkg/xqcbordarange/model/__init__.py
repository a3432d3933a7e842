# 作者：Xiaoqiang
# 微信公众号：XiaoqiangClub
# 创建时间：2026-10-19T10:13:40.120Z
# 文件描述：model 包的初始化文件
# 文件路径：xqcbordarange/model/__init__.py

from .profile import (
    LevelPattern,
    Profile,
    Ranking,
    ScoreVector,
    WeakOrder,
    borda_scores,
    catenate,
    catenate_all,
    extend_to_odd_n,
    invert_profile,
    pattern_of,
    weak_order_from_scores,
    weak_order_of,
)
from .codec import (
    dumps_profile,
    format_pattern,
    loads_profile,
    parse_pattern,
    profile_from_dict,
    profile_to_dict,
)
