# 作者：Xiaoqiang
# 微信公众号：XiaoqiangClub
# 创建时间：2026-10-19T11:02:10.311Z
# 文件描述：classifier 包的初始化文件
# 文件路径：xqcbordarange/classifier/__init__.py

from .rules import (
    ALL_ODD_N,
    NO_ODD_N,
    UNDETERMINED,
    Classification,
    PowerDecomposition,
    Rule,
    Verdict,
    classify,
    is_lemma_shape,
    is_two_four_pattern,
    power_decomposition,
)
