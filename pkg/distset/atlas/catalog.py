#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
DistSet - 分类目录持久化

目录为 JSON-lines 文件, 每行一个记录:
    {"type": "header", ...}  运行参数 (维数, 模式, 种子层级, 工具版本)
    {"type": "entry", ...}   一个 AtlasEntry
    {"type": "level", ...}   层级完成标记 (n, mode, 条目数)

文件按层级追加写入; 只有带完成标记的层级在恢复运行时被重新加载。
"""

import json
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Tuple

from distset.core.exceptions import CatalogError
from distset.core.types import TOOL_VERSION, AtlasEntry, Mode
from distset.utils.logging_utils import get_logger

logger = get_logger("atlas.catalog")

HEADER = "header"
ENTRY = "entry"
LEVEL = "level"


def _dumps(record: Dict[str, Any]) -> str:
    return json.dumps(record, sort_keys=True, ensure_ascii=False)


class CatalogWriter:
    """目录写入器, 逐层追加"""

    def __init__(self, path: Path, dim: int, mode: str, seed_n: int, append: bool = False):
        self.path = Path(path)
        self.dim = dim
        self.mode = mode
        self.seed_n = seed_n
        self.path.parent.mkdir(parents=True, exist_ok=True)
        if append and self.path.exists():
            header = CatalogReader(self.path).header
            if header.get("dim") != dim:
                raise CatalogError(
                    f"目录维数 {header.get('dim')} 与当前运行维数 {dim} 不一致",
                    path=str(self.path),
                )
            logger.info(f"追加写入已有目录: {self.path}")
        else:
            self.path.write_text(_dumps(self.header_record()) + "\n", encoding="utf-8")

    def header_record(self) -> Dict[str, Any]:
        return {
            "type": HEADER,
            "dim": self.dim,
            "mode": self.mode,
            "seed_n": self.seed_n,
            "tool_version": TOOL_VERSION,
        }

    def write_level(self, n: int, mode: Mode, entries: Iterable[AtlasEntry]) -> None:
        """写入一个完整层级, 条目按 class_key 排序"""
        ordered = sorted(entries, key=lambda e: e.class_key)
        lines = [_dumps({"type": ENTRY, **entry.to_dict()}) for entry in ordered]
        lines.append(_dumps({"type": LEVEL, "n": n, "mode": mode.value, "entries": len(ordered)}))
        with self.path.open("a", encoding="utf-8", newline="\n") as handle:
            handle.write("\n".join(lines) + "\n")
        logger.debug(f"目录写入层级 n={n} ({mode.value}), {len(ordered)} 条", extra={"n": n})

    def completed_levels(self) -> Dict[Mode, List[int]]:
        return CatalogReader(self.path).completed_levels()


class CatalogReader:
    """目录读取器"""

    def __init__(self, path: Path):
        self.path = Path(path)
        if not self.path.exists():
            raise CatalogError(f"目录文件不存在: {self.path}", path=str(self.path))
        self.header: Dict[str, Any] = {}
        self._entries: Dict[Tuple[Mode, int], List[AtlasEntry]] = {}
        self._levels: Dict[Tuple[Mode, int], int] = {}
        self._load()

    def _load(self) -> None:
        pending: Dict[Tuple[Mode, int], List[AtlasEntry]] = {}
        with self.path.open("r", encoding="utf-8") as handle:
            for number, line in enumerate(handle, start=1):
                line = line.strip()
                if not line:
                    continue
                try:
                    record = json.loads(line)
                except json.JSONDecodeError as e:
                    raise CatalogError(f"第 {number} 行不是合法 JSON: {e}", path=str(self.path))
                kind = record.pop("type", None)
                if kind == HEADER:
                    self.header = record
                elif kind == ENTRY:
                    entry = AtlasEntry.from_dict(record)
                    pending.setdefault((entry.mode, entry.n), []).append(entry)
                elif kind == LEVEL:
                    key = (Mode(record["mode"]), int(record["n"]))
                    entries = pending.pop(key, [])
                    if len(entries) != record["entries"]:
                        raise CatalogError(
                            f"层级 n={key[1]} ({key[0].value}) 条目数不符", path=str(self.path)
                        )
                    self._entries[key] = entries
                    self._levels[key] = len(entries)
                else:
                    raise CatalogError(f"第 {number} 行记录类型未知: {kind}", path=str(self.path))
        if not self.header:
            raise CatalogError("目录缺少头记录", path=str(self.path))
        if pending:
            logger.warning(f"目录中有 {len(pending)} 个未完成层级, 已忽略")

    @property
    def dim(self) -> int:
        return int(self.header["dim"])

    def completed_levels(self) -> Dict[Mode, List[int]]:
        result: Dict[Mode, List[int]] = {}
        for mode, n in sorted(self._levels, key=lambda k: (k[0].value, k[1])):
            result.setdefault(mode, []).append(n)
        return result

    def level(self, mode: Mode, n: int) -> Optional[List[AtlasEntry]]:
        return self._entries.get((mode, n))

    def entries(self, mode: Optional[Mode] = None) -> List[AtlasEntry]:
        """全部已完成条目, 按 (n, class_key) 排序"""
        selected = [
            entry
            for (m, _), entries in self._entries.items()
            if mode is None or m is mode
            for entry in entries
        ]
        return sorted(selected, key=lambda e: (e.n, e.mode.value, e.class_key))


__all__ = ["CatalogWriter", "CatalogReader"]
