# 作者：Xiaoqiang
# 微信公众号：XiaoqiangClub
# 创建时间：2026-10-19T14:52:33.006Z
# 文件描述：用穷举图谱核对分类器的结论
# 文件路径：xqcbordarange/oracle/crosscheck.py

from dataclasses import dataclass, field
from typing import Dict, List, Optional

from ..classifier.rules import Classification, Verdict, classify
from ..core.config import Settings
from ..core.exceptions import ParityError, ValidationError
from ..core.logger import default_logger
from ..model.profile import LevelPattern
from .enumerate import RangeAtlas, compositions, enumerate_range


@dataclass(frozen=True)
class PatternCheck:
    classification: Classification
    found: bool

    @property
    def pattern(self) -> LevelPattern:
        return self.classification.pattern

    @property
    def contradicts(self) -> bool:
        verdict = self.classification.verdict
        return (verdict is Verdict.NOT_IN_RANGE and self.found) or (verdict is Verdict.IN_RANGE and not self.found)


@dataclass
class CrossCheckReport:
    max_m: int
    n: int
    checks: List[PatternCheck] = field(default_factory=list)
    atlases: Dict[int, RangeAtlas] = field(default_factory=dict)

    @property
    def contradictions(self) -> List[PatternCheck]:
        return [c for c in self.checks if c.contradicts]

    @property
    def unknown(self) -> List[PatternCheck]:
        return [c for c in self.checks if c.classification.verdict is Verdict.UNKNOWN]

    @property
    def not_in_range(self) -> List[LevelPattern]:
        return [c.pattern for c in self.checks if c.classification.verdict is Verdict.NOT_IN_RANGE]

    def to_dict(self) -> Dict:
        def row(c: PatternCheck) -> Dict:
            rule = c.classification.rule
            return {
                "pattern": str(c.pattern),
                "verdict": c.classification.verdict.value,
                "rule": rule.value if rule else None,
                "found": c.found,
            }

        return {
            "max_m": self.max_m,
            "n": self.n,
            "checked": len(self.checks),
            "contradictions": [row(c) for c in self.contradictions],
            "not_in_range": [str(p) for p in self.not_in_range],
            "unknown": [row(c) for c in self.unknown],
        }


def cross_check(max_m: int, n: int, *, budget: Optional[int] = None, workers: Optional[int] = None,
                settings: Optional[Settings] = None) -> CrossCheckReport:
    """
    对总数 2..max_m 的每个模式比较分类结论与穷举图谱。

    :param max_m: 最大备选项数，≥ 2。
    :param n: 投票人数，≥ 3 的奇数。
    :param budget: 穷举预算。
    :param workers: 并行进程数。
    :param settings: 配置。
    :return: CrossCheckReport，contradictions 应为空。
    """
    if max_m < 2:
        raise ValidationError(f"❌ max_m 必须 ≥ 2，实际为 {max_m}")
    if n < 3 or n % 2 == 0:
        raise ParityError(f"❌ 分类结论只针对 ≥ 3 的奇数 n，实际为 {n}")
    report = CrossCheckReport(max_m=max_m, n=n)
    for m in range(2, max_m + 1):
        atlas = enumerate_range(m, n, budget=budget, workers=workers, settings=settings)
        report.atlases[m] = atlas
        for pattern in compositions(m):
            report.checks.append(PatternCheck(classify(pattern), pattern in atlas))

    if report.contradictions:
        default_logger.error(f"🔥 发现 {len(report.contradictions)} 处矛盾: "
                             f"{[str(c.pattern) for c in report.contradictions]}")
    else:
        default_logger.info(f"🎉 核对 {len(report.checks)} 个模式，没有矛盾")
    return report
