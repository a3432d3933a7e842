# 作者：Xiaoqiang
# 微信公众号：XiaoqiangClub
# 创建时间：2026-10-19T16:58:34.481Z
# 文件描述：xqcbordarange 包的初始化文件，暴露公共 API。
# 文件路径：xqcbordarange/__init__.py

from .core.exceptions import (
    BordaRangeError,
    BudgetExceeded,
    ConstructionError,
    FileAccessError,
    InvalidPattern,
    InvalidProfile,
    NotDecomposable,
    NotInRangeError,
    NotInTable,
    OddLevelPresent,
    ParityError,
    ProfileFormatError,
    UnsupportedConstruction,
    ValidationError,
    VoterCountMismatch,
    WitnessNotFound,
)
from .api import (
    VerificationReport,
    as_pattern,
    classify,
    construct,
    construct_async,
    cross_check,
    enumerate_atlas,
    search,
    verify_file,
    verify_file_async,
    verify_profile,
)
from .model import (
    LevelPattern,
    Profile,
    Ranking,
    borda_scores,
    catenate,
    dumps_profile,
    extend_to_odd_n,
    invert_profile,
    loads_profile,
    parse_pattern,
    pattern_of,
    weak_order_of,
)
from .core.config import Settings, get_settings
from .core.utils import read_file, read_file_async

__all__ = [
    # 分类、构造与验证
    "classify",
    "construct",
    "construct_async",
    "verify_profile",
    "verify_file",
    "verify_file_async",
    "VerificationReport",

    # 穷举与搜索
    "enumerate_atlas",
    "search",
    "cross_check",

    # 数据模型
    "LevelPattern",
    "Profile",
    "Ranking",
    "as_pattern",
    "parse_pattern",
    "borda_scores",
    "weak_order_of",
    "pattern_of",
    "invert_profile",
    "catenate",
    "extend_to_odd_n",
    "dumps_profile",
    "loads_profile",

    # 配置与文件读取工具
    "Settings",
    "get_settings",
    "read_file",
    "read_file_async",

    # 异常
    "BordaRangeError",
    "ValidationError",
    "InvalidPattern",
    "InvalidProfile",
    "ProfileFormatError",
    "VoterCountMismatch",
    "ParityError",
    "OddLevelPresent",
    "NotInRangeError",
    "UnsupportedConstruction",
    "NotDecomposable",
    "NotInTable",
    "ConstructionError",
    "BudgetExceeded",
    "WitnessNotFound",
    "FileAccessError",
]
