# 作者：Xiaoqiang
# 微信公众号：XiaoqiangClub
# 创建时间：2026-10-19T09:12:09.571Z
# 文件描述：定义模块的自定义异常
# 文件路径：xqcbordarange/core/exceptions.py

from typing import Optional


class BordaRangeError(Exception):
    """基础异常类，所有其他异常都继承自此类。"""
    pass


class ValidationError(BordaRangeError):
    """当输入数据验证失败时引发的异常。"""
    pass


class InvalidPattern(ValidationError):
    """层级模式非法：为空、含有小于 1 的层级，或文本无法解析。"""
    pass


class InvalidProfile(ValidationError):
    """偏好组合非法：排名不是置换、长度不一致等。"""
    pass


class ProfileFormatError(ValidationError):
    """偏好组合 JSON 不符合约定格式。"""
    pass


class VoterCountMismatch(ValidationError):
    """拼接两个偏好组合时投票人数不一致。"""
    pass


class ParityError(ValidationError):
    """投票人数的奇偶性或大小不满足要求。"""
    pass


class OddLevelPresent(ValidationError):
    """模式中存在奇数大小的层级，无法做 2 的幂分解。"""
    pass


class NotInRangeError(BordaRangeError):
    """模式不在 Borda 规则的值域内（Theorem 3）。"""
    pass


class UnsupportedConstruction(BordaRangeError):
    """模式可以分类，但本库没有对应的构造。"""
    pass


class NotDecomposable(BordaRangeError):
    """模式不满足分块规划的前提条件。"""
    pass


class NotInTable(BordaRangeError):
    """附录表中没有该模式。"""
    pass


class ConstructionError(BordaRangeError):
    """构造器自检失败，说明构造实现有误。"""
    pass


class BudgetExceeded(BordaRangeError):
    """当穷举规模超过预算时引发的异常。"""

    def __init__(self, message: str, candidates: Optional[int] = None, budget: Optional[int] = None):
        """
        初始化 BudgetExceeded 异常。

        :param message: 错误信息。
        :param candidates: 需要穷举的候选数量。
        :param budget: 允许的最大候选数量。
        """
        super().__init__(message)
        self.candidates = candidates
        self.budget = budget

    def __str__(self) -> str:
        if self.candidates is not None and self.budget is not None:
            return f"Budget Exceeded {self.candidates} > {self.budget}: {super().__str__()}"
        return super().__str__()


class WitnessNotFound(BordaRangeError):
    """搜索没有找到见证组合。"""

    def __init__(self, message: str, exhaustive: bool = False):
        """
        初始化 WitnessNotFound 异常。

        :param message: 错误信息。
        :param exhaustive: 是否为穷举结论（True 表示已证明不存在）。
        """
        super().__init__(message)
        self.exhaustive = exhaustive

    def __str__(self) -> str:
        if self.exhaustive:
            return f"Not Found (exhaustive): {super().__str__()}"
        return super().__str__()


class FileAccessError(BordaRangeError):
    """读写文件失败。"""
    pass
