# 作者：Xiaoqiang
# 微信公众号：XiaoqiangClub
# 创建时间：2026-10-19T09:04:51.302Z
# 文件描述：core 包的初始化文件
# 文件路径：xqcbordarange/core/__init__.py
