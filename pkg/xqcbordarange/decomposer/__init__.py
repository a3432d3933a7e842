# 作者：Xiaoqiang
# 微信公众号：XiaoqiangClub
# 创建时间：2026-10-19T15:10:02.688Z
# 文件描述：decomposer 包的初始化文件
# 文件路径：xqcbordarange/decomposer/__init__.py

from .planner import DecompositionPlan, FourBlock, build_block, plan_decomposition
from .realize import plan_blocks, realize, realize_async
