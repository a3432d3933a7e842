# 作者：Xiaoqiang
# 微信公众号：XiaoqiangClub
# 创建时间：2026-10-19T19:03:48.211Z
# 文件描述：命令行入口测试
# 文件路径：tests/test_cli.py

import json

import pytest

from xqcbordarange import cli
from xqcbordarange.cli import EXIT_INTERNAL, EXIT_NEGATIVE, EXIT_OK, EXIT_USAGE, main, run
from xqcbordarange.core.exceptions import ConstructionError, NotDecomposable, WitnessNotFound
from xqcbordarange.decomposer import planner
from xqcbordarange.model.codec import dumps_profile, loads_profile
from xqcbordarange.model.profile import LevelPattern, pattern_of

from .conftest import TWO_TWO_RANKINGS


@pytest.fixture
def cli_cache(seeded_cache):
    return ["--cache", str(seeded_cache.path)]


@pytest.fixture
def two_two_file(tmp_path, two_two):
    path = tmp_path / "two_two.json"
    path.write_text(dumps_profile(two_two), encoding="utf-8")
    return path


# --- classify ---
@pytest.mark.parametrize("pattern, exit_code, stdout", [
    ("2,4,4,2", EXIT_OK, "IN_RANGE rule=NewLemma n=all odd ≥ 3"),
    ("2,4", EXIT_NEGATIVE, "NOT_IN_RANGE rule=Theorem3 n=no odd n"),
    ("8,4,4", EXIT_OK, "UNKNOWN rule=None n=undetermined"),
    ("3,5", EXIT_OK, "IN_RANGE rule=OddLevel n=all odd ≥ 3"),
])
def test_classify(pattern, exit_code, stdout):
    result = run(["classify", pattern])
    assert result.exit_code == exit_code
    assert result.stdout == stdout


def test_classify_json():
    result = run(["classify", "12,20", "--format", "json"])
    assert json.loads(result.stdout) == {
        "pattern": "12,20", "verdict": "InRange", "rule": "Lemma4", "n": "all odd ≥ 3",
    }


@pytest.mark.parametrize("argv", [
    ["classify", "2,,4"],
    ["classify", "0,2"],
    ["classify", "1"],
    ["frobnicate"],
    [],
    ["construct", "2,2"],
    ["construct", "2,2", "--n", "4"],
    ["--log-level", "LOUD", "classify", "2,2"],
])
def test_usage_errors(argv):
    result = run(argv)
    assert result.exit_code == EXIT_USAGE
    assert result.stdout == ""
    assert result.stderr


# --- construct / verify ---
def test_construct_then_verify(tmp_path, cli_cache):
    out = tmp_path / "w.json"
    result = run(cli_cache + ["construct", "4,4,2,4,2,4,4,4", "--n", "5", "--out", str(out)])
    assert result.exit_code == EXIT_OK
    assert result.stdout == f"OK pattern=4,4,2,4,2,4,4,4 m=28 n=5 out={out}"

    u = loads_profile(out.read_text(encoding="utf-8"))
    assert pattern_of(u) == LevelPattern.of(4, 4, 2, 4, 2, 4, 4, 4)

    check = run(["verify", str(out), "--expect", "4,4,2,4,2,4,4,4"])
    assert check.exit_code == EXIT_OK
    assert check.stdout.splitlines()[-1] == "OK"


def test_construct_prints_json(cli_cache):
    result = run(cli_cache + ["construct", "2,4,4,2", "--n", "3"])
    assert result.exit_code == EXIT_OK
    u = loads_profile(result.stdout)
    assert (u.m, u.n) == (12, 3)
    assert pattern_of(u) == LevelPattern.of(2, 4, 4, 2)


def test_construct_text_format(cli_cache):
    result = run(cli_cache + ["construct", "2,2", "--n", "3", "--format", "text"])
    assert result.stdout.splitlines() == ["m=4 n=3", "0 1 2 3", "3 1 2 0", "2 0 3 1"]


def test_construct_not_in_range():
    result = run(["construct", "2,4", "--n", "3"])
    assert result.exit_code == EXIT_NEGATIVE
    assert result.stderr == "NOT_IN_RANGE (Theorem 3)"


@pytest.mark.parametrize("pattern", ["3,5", "8,4,4", "12,20"])
def test_construct_unsupported(pattern):
    result = run(["construct", pattern, "--n", "3"])
    assert result.exit_code == EXIT_USAGE
    assert result.stderr.startswith("UNSUPPORTED (")


def test_construct_reports_construction_errors(monkeypatch, cli_cache):
    def broken(*args, **kwargs):
        raise ConstructionError("自检失败")

    monkeypatch.setattr(cli, "realize", broken)
    result = run(cli_cache + ["construct", "2,2", "--n", "3"])
    assert result.exit_code == EXIT_INTERNAL
    assert "自检失败" in result.stderr


def test_construct_reports_four_four_search_giving_up(monkeypatch, tmp_path):
    def give_up(*args, **kwargs):
        raise WitnessNotFound("local search gave up")

    monkeypatch.setattr(planner, "four_four_witness", give_up)
    result = run(["--cache", str(tmp_path / "empty.json"), "construct", "4,4", "--n", "3"])
    assert result.exit_code == EXIT_INTERNAL
    assert result.stdout == ""
    assert result.stderr == "WITNESS_NOT_FOUND (local search gave up)"


def test_other_library_errors_map_to_usage(monkeypatch, cli_cache):
    def refuse(*args, **kwargs):
        raise NotDecomposable("拆不开")

    monkeypatch.setattr(cli, "realize", refuse)
    result = run(cli_cache + ["construct", "2,2", "--n", "3"])
    assert result.exit_code == EXIT_USAGE
    assert result.stderr == "ERROR (NotDecomposable: 拆不开)"


@pytest.mark.parametrize("argv", [
    ["construct", "2,2", "--n", "1"],
    ["search", "2,2", "--n", "1"],
    ["cross-check", "--max-m", "3", "--n", "1"],
])
def test_single_voter_rejected_where_verdicts_apply(argv):
    result = run(argv)
    assert result.exit_code == EXIT_USAGE
    assert "≥ 3" in result.stderr


def test_enumerate_single_voter():
    result = run(["enumerate", "--m", "3", "--n", "1"])
    assert result.exit_code == EXIT_OK
    assert result.stdout.splitlines() == ["m=3 n=1 mode=exhaustive patterns=1", "1,1,1 1"]


def test_verify_text(two_two_file):
    result = run(["verify", str(two_two_file)])
    assert result.exit_code == EXIT_OK
    assert result.stdout.splitlines() == [
        "scores=(7,7,8,8)",
        "pattern=(2,2)",
        "levels=0 1 | 2 3",
        "OK",
    ]


def test_verify_mismatch(two_two_file):
    result = run(["verify", str(two_two_file), "--expect", "1,3"])
    assert result.exit_code == EXIT_NEGATIVE
    assert result.stdout.splitlines()[-1] == "MISMATCH expected=(1,3)"


def test_verify_json(two_two_file):
    data = json.loads(run(["verify", str(two_two_file), "--format", "json"]).stdout)
    assert data["scores"] == [7, 7, 8, 8]
    assert data["levels"] == [[0, 1], [2, 3]]
    assert data["matches"] is True


def test_verify_bad_inputs(tmp_path):
    missing = run(["verify", str(tmp_path / "nope.json")])
    assert missing.exit_code == EXIT_USAGE

    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"m": 4, "n": 3, "rankings": TWO_TWO_RANKINGS[:2]}), encoding="utf-8")
    assert run(["verify", str(bad)]).exit_code == EXIT_USAGE


# --- search / enumerate / cross-check ---
def test_search_not_found():
    result = run(["search", "2,4", "--n", "3"])
    assert result.exit_code == EXIT_NEGATIVE
    assert result.stdout == "NOT_FOUND exhaustive=true"


def test_search_found():
    result = run(["search", "2,2", "--n", "3"])
    assert result.exit_code == EXIT_OK
    assert pattern_of(loads_profile(result.stdout)) == LevelPattern.of(2, 2)


def test_enumerate_text():
    result = run(["enumerate", "--m", "3", "--n", "3"])
    assert result.exit_code == EXIT_OK
    lines = result.stdout.splitlines()
    assert lines[0] == "m=3 n=3 mode=exhaustive patterns=4"
    assert sorted(line.split()[0] for line in lines[1:]) == ["1,1,1", "1,2", "2,1", "3"]


def test_enumerate_export(tmp_path):
    out = tmp_path / "atlas.csv"
    result = run(["enumerate", "--m", "2", "--n", "3", "--export", str(out)])
    assert result.exit_code == EXIT_OK
    assert out.read_text(encoding="utf-8").splitlines()[0] == "pattern,count_of_witnesses,min_witness_json"


def test_enumerate_over_budget(monkeypatch):
    monkeypatch.setenv("XQCBORDARANGE_ENUMERATE_BUDGET", "100")
    result = run(["enumerate", "--m", "4", "--n", "3"])
    assert result.exit_code == EXIT_USAGE
    assert "Budget Exceeded" in result.stderr


def test_enumerate_sampled_json():
    result = run(["enumerate", "--m", "4", "--n", "3", "--mode", "sampled", "--trials", "50", "--format", "json"])
    data = json.loads(result.stdout)
    assert data["mode"] == "sampled{trials=50}"
    assert "4" not in {row["pattern"] for row in data["patterns"]}


def test_cross_check():
    result = run(["cross-check", "--max-m", "4", "--n", "3"])
    assert result.exit_code == EXIT_OK
    lines = result.stdout.splitlines()
    assert lines[0] == "checked=14 contradictions=0"
    assert lines[1] == "not_in_range=(2) (4)"


def test_main_prints_and_exits(capsys):
    with pytest.raises(SystemExit) as info:
        main(["classify", "2,4"])
    assert info.value.code == EXIT_NEGATIVE
    assert capsys.readouterr().out.strip() == "NOT_IN_RANGE rule=Theorem3 n=no odd n"
