# 作者：Xiaoqiang
# 微信公众号：XiaoqiangClub
# 创建时间：2026-10-19T16:40:12.733Z
# 文件描述：命令行入口：classify、construct、verify、enumerate、cross-check、search
# 文件路径：xqcbordarange/cli.py

"""
退出码：0 成功或肯定结论；1 否定结论（不在值域内、验证失败、找不到见证、存在矛盾）；
2 用法或输入输出错误；3 构造失败（自检不通过，或 (4,4) 见证搜索放弃）。
"""

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence

from .api import verify_profile
from .classifier.rules import ALL_ODD_N, Verdict, classify
from .core.config import get_settings
from .core.exceptions import (
    BordaRangeError,
    BudgetExceeded,
    ConstructionError,
    FileAccessError,
    NotInRangeError,
    UnsupportedConstruction,
    ValidationError,
    WitnessNotFound,
)
from .core.logger import set_level
from .core.utils import canonical_json, read_file, write_file_atomic
from .decomposer.realize import realize
from .model.codec import dumps_profile, loads_profile, parse_pattern
from .model.profile import Profile, pattern_of
from .oracle.cache import WitnessCache
from .oracle.crosscheck import cross_check
from .oracle.enumerate import EnumerationMode, enumerate_range
from .oracle.search import search_witness

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3

_VERDICT_TEXT = {
    Verdict.IN_RANGE: "IN_RANGE",
    Verdict.NOT_IN_RANGE: "NOT_IN_RANGE",
    Verdict.UNKNOWN: "UNKNOWN",
}

# 命令行输出使用更短的写法
_N_TEXT = {ALL_ODD_N: "all odd ≥ 3"}


@dataclass
class CommandResult:
    exit_code: int
    stdout: str = ""
    stderr: str = ""


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise _UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _odd(text: str) -> int:
    value = int(text)
    if value < 1 or value % 2 == 0:
        raise argparse.ArgumentTypeError(f"必须是正奇数: {text}")
    return value


def _odd_at_least_three(text: str) -> int:
    value = _odd(text)
    if value < 3:
        raise argparse.ArgumentTypeError(f"必须是 ≥ 3 的奇数: {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="xqcborda", description="Borda 值域模式的判定、构造与验证")
    parser.add_argument("--cache", type=Path, default=None, help="见证缓存文件路径")
    parser.add_argument("--log-level", default="WARNING", help="日志级别，默认 WARNING")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", help="判定模式是否在值域内")
    p.add_argument("pattern")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("construct", help="构造见证组合")
    p.add_argument("pattern")
    p.add_argument("--n", type=_odd_at_least_three, required=True)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--out", default=None, help="把组合 JSON 写入文件")

    p = sub.add_parser("verify", help="验证组合文件")
    p.add_argument("profile_file")
    p.add_argument("--expect", default=None)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("enumerate", help="穷举或抽样 (m, n) 的值域")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=_odd, required=True)
    p.add_argument("--mode", choices=("exhaustive", "sampled"), default="exhaustive")
    p.add_argument("--trials", type=int, default=10000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--export", default=None, help="导出为 .csv 或 .json")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("cross-check", help="用穷举结果核对分类器")
    p.add_argument("--max-m", type=int, required=True)
    p.add_argument("--n", type=_odd_at_least_three, required=True)
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("search", help="搜索见证组合")
    p.add_argument("pattern")
    p.add_argument("--n", type=_odd_at_least_three, required=True)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--time-limit", type=float, default=None)
    p.add_argument("--format", choices=("json", "text"), default="json")
    return parser


def _profile_text(u: Profile) -> str:
    lines = [f"m={u.m} n={u.n}"]
    lines += [" ".join(str(x) for x in ranking) for ranking in u.to_lists()]
    return "\n".join(lines)


def _emit_profile(u: Profile, fmt: str) -> str:
    return dumps_profile(u) if fmt == "json" else _profile_text(u)


def _cmd_classify(args: argparse.Namespace) -> CommandResult:
    c = classify(parse_pattern(args.pattern))
    rule = c.rule.value if c.rule else "None"
    n_text = _N_TEXT.get(c.applicable_n, c.applicable_n)
    if args.format == "json":
        out = canonical_json({"pattern": str(c.pattern), "verdict": c.verdict.value,
                              "rule": c.rule.value if c.rule else None, "n": n_text})
    else:
        out = f"{_VERDICT_TEXT[c.verdict]} rule={rule} n={n_text}"
    code = EXIT_NEGATIVE if c.verdict is Verdict.NOT_IN_RANGE else EXIT_OK
    return CommandResult(code, out)


def _cmd_construct(args: argparse.Namespace) -> CommandResult:
    pattern = parse_pattern(args.pattern)
    settings = args.settings
    try:
        u = realize(pattern, args.n, cache=WitnessCache(settings.cache_path).load(), settings=settings)
    except NotInRangeError:
        return CommandResult(EXIT_NEGATIVE, "", "NOT_IN_RANGE (Theorem 3)")
    except UnsupportedConstruction as e:
        return CommandResult(EXIT_USAGE, "", f"UNSUPPORTED ({e})")
    except WitnessNotFound as e:
        return CommandResult(EXIT_INTERNAL, "", f"WITNESS_NOT_FOUND ({e})")

    # 输出前再验证一次
    again = loads_profile(dumps_profile(u))
    if again != u or pattern_of(again) != pattern:
        raise ConstructionError(f"({pattern}) 的输出复核失败")
    if args.out:
        write_file_atomic(args.out, dumps_profile(u))
        return CommandResult(EXIT_OK, f"OK pattern={pattern} m={u.m} n={u.n} out={args.out}")
    return CommandResult(EXIT_OK, _emit_profile(u, args.format))


def _cmd_verify(args: argparse.Namespace) -> CommandResult:
    report = verify_profile(loads_profile(read_file(args.profile_file)), args.expect)
    code = EXIT_OK if report.matches else EXIT_NEGATIVE
    if args.format == "json":
        return CommandResult(code, canonical_json(report.to_dict()))
    lines = [
        f"scores=({','.join(str(s) for s in report.scores.scores)})",
        f"pattern=({report.pattern})",
        "levels=" + " | ".join(" ".join(str(x) for x in level) for level in report.weak_order.sorted_levels()),
        "OK" if report.matches else f"MISMATCH expected=({report.expected})",
    ]
    return CommandResult(code, "\n".join(lines))


def _cmd_enumerate(args: argparse.Namespace) -> CommandResult:
    mode = EnumerationMode.sampled(args.trials, args.seed) if args.mode == "sampled" else EnumerationMode.exhaustive()
    atlas = enumerate_range(args.m, args.n, mode, workers=args.workers, settings=args.settings)
    if args.export:
        atlas.export(args.export)
    if args.format == "json":
        return CommandResult(EXIT_OK, atlas.to_json())
    lines = [f"m={atlas.m} n={atlas.n} mode={atlas.mode} patterns={len(atlas.achieved)}"]
    lines += [f"{p} {atlas.counts[p]}" for p in atlas.patterns()]
    return CommandResult(EXIT_OK, "\n".join(lines))


def _cmd_cross_check(args: argparse.Namespace) -> CommandResult:
    report = cross_check(args.max_m, args.n, workers=args.workers, settings=args.settings)
    code = EXIT_NEGATIVE if report.contradictions else EXIT_OK
    if args.format == "json":
        return CommandResult(code, canonical_json(report.to_dict()))
    lines = [
        f"checked={len(report.checks)} contradictions={len(report.contradictions)}",
        "not_in_range=" + " ".join(f"({p})" for p in report.not_in_range),
    ]
    lines += [f"CONTRADICTION ({c.pattern}) verdict={c.classification.verdict.value} found={c.found}"
              for c in report.contradictions]
    lines += [f"UNKNOWN ({c.pattern}) found={c.found}" for c in report.unknown]
    return CommandResult(code, "\n".join(lines))


def _cmd_search(args: argparse.Namespace) -> CommandResult:
    pattern = parse_pattern(args.pattern)
    try:
        u = search_witness(pattern, args.n, args.budget, seed=args.seed, time_limit=args.time_limit,
                           settings=args.settings)
    except WitnessNotFound as e:
        return CommandResult(EXIT_NEGATIVE, f"NOT_FOUND exhaustive={str(e.exhaustive).lower()}")
    return CommandResult(EXIT_OK, _emit_profile(u, args.format))


_COMMANDS: Dict[str, Callable[[argparse.Namespace], CommandResult]] = {
    "classify": _cmd_classify,
    "construct": _cmd_construct,
    "verify": _cmd_verify,
    "enumerate": _cmd_enumerate,
    "cross-check": _cmd_cross_check,
    "search": _cmd_search,
}


def run(argv: Optional[Sequence[str]] = None) -> CommandResult:
    """
    执行一条命令，返回退出码与输出，不直接打印。

    :param argv: 命令行参数（不含程序名）。
    :return: CommandResult。
    """
    try:
        args = build_parser().parse_args(list(argv) if argv is not None else None)
        set_level(args.log_level)
        args.settings = get_settings().with_overrides(cache_path=args.cache)
        return _COMMANDS[args.command](args)
    except _UsageError as e:
        return CommandResult(EXIT_USAGE, "", str(e))
    except ConstructionError as e:
        return CommandResult(EXIT_INTERNAL, "", f"CONSTRUCTION_ERROR ({e})")
    except (ValidationError, FileAccessError, BudgetExceeded) as e:
        return CommandResult(EXIT_USAGE, "", f"ERROR ({e})")
    except BordaRangeError as e:
        return CommandResult(EXIT_USAGE, "", f"ERROR ({type(e).__name__}: {e})")


def main(argv: Optional[List[str]] = None) -> None:
    result = run(argv)
    if result.stdout:
        print(result.stdout)
    if result.stderr:
        print(result.stderr, file=sys.stderr)
    sys.exit(result.exit_code)


if __name__ == "__main__":
    main()
