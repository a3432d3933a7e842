# 作者：Xiaoqiang
# 微信公众号：XiaoqiangClub
# 创建时间：2026-10-19T17:10:02.118Z
# 文件描述：tests 包的初始化文件
# 文件路径：tests/__init__.py
