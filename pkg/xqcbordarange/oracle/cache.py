# 作者：Xiaoqiang
# 微信公众号：XiaoqiangClub
# 创建时间：2026-10-19T14:30:07.942Z
# 文件描述：持久化的见证缓存，以 (模式, n) 为键，载入时逐条重新验证
# 文件路径：xqcbordarange/oracle/cache.py

import json
import os
import threading
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Dict, Optional, Tuple, Union

from ..core.config import Settings, get_settings
from ..core.exceptions import BordaRangeError, ConstructionError
from ..core.logger import default_logger
from ..core.utils import canonical_json, read_file, read_file_async, write_file_atomic
from ..model.codec import parse_pattern, profile_from_dict, profile_to_dict
from ..model.profile import LevelPattern, Profile, pattern_of
from .search import search_witness

CACHE_VERSION = 1
FOUR_FOUR = LevelPattern.of(4, 4)


class Provenance(str, Enum):
    CONSTRUCTED = "constructed"
    SEARCHED = "searched"
    FIXTURE = "fixture"


@dataclass(frozen=True)
class CacheEntry:
    profile: Profile
    provenance: Provenance


def cache_key(pattern: LevelPattern, n: int) -> str:
    return f"{pattern}@{n}"


def parse_cache_key(key: str) -> Tuple[LevelPattern, int]:
    pattern_text, _, n_text = key.partition("@")
    return parse_pattern(pattern_text), int(n_text)


class WitnessCache:
    """
    见证缓存。文件格式：{"version": 1, "entries": {"4,4@3": {"provenance": ..., "profile": ...}}}。
    每次写入都原子替换整个文件。
    """

    def __init__(self, path: Union[str, Path]):
        """
        :param path: 缓存文件路径，不存在时视为空缓存。
        """
        self.path = Path(path)
        self.entries: Dict[str, CacheEntry] = {}
        self.logger = default_logger
        self._lock = threading.Lock()

    @classmethod
    def from_settings(cls, settings: Optional[Settings] = None) -> "WitnessCache":
        settings = settings or get_settings()
        return cls(settings.cache_path).load()

    def _parse(self, text: str) -> None:
        try:
            data = json.loads(text)
            raw_entries = data["entries"]
            if not isinstance(raw_entries, dict):
                raise TypeError("entries")
        except (ValueError, KeyError, TypeError) as e:
            self.logger.warning(f"⚠️ 缓存文件损坏，已忽略: {self.path} ({e})")
            self.entries = {}
            return

        entries: Dict[str, CacheEntry] = {}
        for key, raw in raw_entries.items():
            try:
                pattern, n = parse_cache_key(key)
                profile = profile_from_dict(raw["profile"])
                provenance = Provenance(raw["provenance"])
            except (BordaRangeError, ValueError, KeyError, TypeError) as e:
                self.logger.warning(f"⚠️ 丢弃无法解析的缓存条目 {key}: {e}")
                continue
            if profile.n != n or pattern_of(profile) != pattern:
                self.logger.warning(f"⚠️ 丢弃未通过验证的缓存条目 {key}")
                continue
            entries[key] = CacheEntry(profile, provenance)
        self.entries = entries
        self.logger.debug(f"🔍 已载入 {len(entries)} 条缓存: {self.path}")

    def load(self) -> "WitnessCache":
        """
        从文件同步载入，逐条验证，坏条目记录警告后丢弃。

        :return: 自身。
        """
        if self.path.exists():
            self._parse(read_file(str(self.path)))
        return self

    async def load_async(self) -> "WitnessCache":
        """
        从文件异步载入（aiofiles）。

        :return: 自身。
        """
        if self.path.exists():
            self._parse(await read_file_async(str(self.path)))
        return self

    def get(self, pattern: LevelPattern, n: int) -> Optional[Profile]:
        entry = self.entries.get(cache_key(pattern, n))
        return entry.profile if entry else None

    def put(self, pattern: LevelPattern, n: int, profile: Profile,
            provenance: Provenance = Provenance.SEARCHED) -> None:
        """
        验证后写入一条并立即持久化。

        :param pattern: 模式。
        :param n: 投票人数。
        :param profile: 见证组合。
        :param provenance: 来源。
        """
        if profile.n != n or pattern_of(profile) != pattern:
            self.logger.error(f"🔥 拒绝写入未通过验证的见证 ({pattern})@{n}")
            raise ConstructionError(f"拒绝写入未通过验证的见证 ({pattern})@{n}")
        with self._lock:
            self.entries[cache_key(pattern, n)] = CacheEntry(profile, provenance)
            self._save()
        self.logger.info(f"🎉 已缓存 ({pattern})@{n} 的见证（{provenance.value}）")

    def _save(self) -> None:
        data = {
            "version": CACHE_VERSION,
            "entries": {
                key: {"provenance": entry.provenance.value, "profile": profile_to_dict(entry.profile)}
                for key, entry in self.entries.items()
            },
        }
        write_file_atomic(os.fspath(self.path), canonical_json(data))

    def __contains__(self, key: Tuple[LevelPattern, int]) -> bool:
        return cache_key(*key) in self.entries

    def __len__(self) -> int:
        return len(self.entries)


def four_four_witness(cache: Optional[WitnessCache] = None, *, seed: int = 0,
                      settings: Optional[Settings] = None) -> Profile:
    """
    (4,4) 的 n=3 见证组合：优先读缓存，否则搜索一次并写入缓存。

    :param cache: 见证缓存，默认按配置路径载入。
    :param seed: 搜索的随机种子。
    :param settings: 配置。
    :return: 已验证的 Profile。
    """
    cache = cache if cache is not None else WitnessCache.from_settings(settings)
    witness = cache.get(FOUR_FOUR, 3)
    if witness is not None:
        return witness
    default_logger.info("🔍 缓存中没有 (4,4) 的见证，开始搜索")
    witness = search_witness(FOUR_FOUR, 3, seed=seed, settings=settings)
    cache.put(FOUR_FOUR, 3, witness, Provenance.SEARCHED)
    return witness
