# 作者：Xiaoqiang
# 微信公众号：XiaoqiangClub
# 创建时间：2026-10-19T13:10:11.580Z
# 文件描述：oracle 包的初始化文件
# 文件路径：xqcbordarange/oracle/__init__.py

from .cache import CacheEntry, Provenance, WitnessCache, cache_key, four_four_witness
from .crosscheck import CrossCheckReport, PatternCheck, cross_check
from .enumerate import EnumerationMode, RangeAtlas, compositions, decode_pattern, encode_pattern, enumerate_range
from .search import ExhaustiveSearcher, LocalSearcher, pattern_cost, score_feasible, search_witness
