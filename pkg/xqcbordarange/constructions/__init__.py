# 作者：Xiaoqiang
# 微信公众号：XiaoqiangClub
# 创建时间：2026-10-19T11:20:02.954Z
# 文件描述：constructions 包的初始化文件
# 文件路径：xqcbordarange/constructions/__init__.py

from .appendix import appendix_patterns, appendix_witness, load_fixtures
from .router import (
    Appendix,
    BaseWitnessRequest,
    SeqI,
    SeqII,
    SeqIII,
    SeqIV,
    TwoLevel,
    construct_base,
)
from .sequences import (
    base_sizes,
    black_order_seq_one,
    black_order_seq_two,
    blue_order_seq_four,
    blue_order_seq_one,
    construct_seq_I,
    construct_seq_II,
    construct_seq_III,
    construct_seq_IV,
)
from .twolevel import construct_two_level, two_level_groups, two_level_scores
