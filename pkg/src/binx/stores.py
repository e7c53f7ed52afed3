"""Disk-backed stores for saved custom methods and palettes.

Each store is one JSON document replaced atomically on write; reads always
see a complete snapshot. Writes are serialized with a lock (last write wins
on a name).
"""

from __future__ import annotations

import json
import os
import tempfile
import threading
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Any

from .errors import DuplicateName, InvalidExtents
from .result import check_extents


@dataclass(frozen=True)
class CustomMethod:
    name: str
    extents: tuple[float, ...]
    provenance: dict[str, Any] = field(default_factory=dict)
    created_at: str = ""

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "extents": list(self.extents),
            "provenance": self.provenance,
            "createdAt": self.created_at,
        }


def _utcnow() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


class _JsonDocumentStore:
    """One JSON file of records under a top-level key, written atomically."""

    def __init__(self, path: str | Path, key: str) -> None:
        self.path = Path(path)
        self.key = key
        self._lock = threading.Lock()

    def _load(self) -> list[dict[str, Any]]:
        if not self.path.exists():
            return []
        with open(self.path, encoding="utf-8") as fh:
            return json.load(fh).get(self.key, [])

    def _write(self, records: list[dict[str, Any]]) -> None:
        self.path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=self.path.parent, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                json.dump({self.key: records}, fh, indent=2)
                fh.write("\n")
            os.replace(tmp, self.path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise


class CustomMethodStore(_JsonDocumentStore):
    def __init__(self, path: str | Path) -> None:
        super().__init__(path, "methods")

    def list(self) -> list[CustomMethod]:
        return [
            CustomMethod(
                name=r["name"],
                extents=tuple(r["extents"]),
                provenance=r.get("provenance", {}),
                created_at=r.get("createdAt", ""),
            )
            for r in self._load()
        ]

    def names(self) -> tuple[str, ...]:
        return tuple(r["name"] for r in self._load())

    def get(self, name: str) -> CustomMethod | None:
        for method in self.list():
            if method.name == name:
                return method
        return None

    def save(
        self,
        name: str,
        extents: Any,
        provenance: dict[str, Any] | None = None,
    ) -> CustomMethod:
        if not name or not str(name).strip():
            raise InvalidExtents("custom method name must be non-empty")
        try:
            ext = check_extents(extents)
        except Exception as exc:
            raise InvalidExtents(f"invalid extents: {exc}") from exc
        method = CustomMethod(
            name=str(name),
            extents=ext,
            provenance=provenance or {},
            created_at=_utcnow(),
        )
        with self._lock:
            records = self._load()
            if any(r["name"] == method.name for r in records):
                raise DuplicateName(f"custom method {method.name!r} already exists")
            records.append(method.to_json_dict())
            self._write(records)
        return method

    def delete(self, name: str) -> bool:
        with self._lock:
            records = self._load()
            kept = [r for r in records if r["name"] != name]
            if len(kept) == len(records):
                return False
            self._write(kept)
            return True


class CustomPaletteStore(_JsonDocumentStore):
    def __init__(self, path: str | Path) -> None:
        super().__init__(path, "palettes")

    def list(self) -> list[dict[str, Any]]:
        return self._load()

    def get(self, name: str) -> dict[str, Any] | None:
        for record in self._load():
            if record["name"] == name:
                return record
        return None

    def save(self, record: dict[str, Any]) -> dict[str, Any]:
        with self._lock:
            records = self._load()
            if any(r["name"] == record["name"] for r in records):
                raise DuplicateName(f"palette {record['name']!r} already exists")
            records.append(record)
            self._write(records)
        return record

    def delete(self, name: str) -> bool:
        with self._lock:
            records = self._load()
            kept = [r for r in records if r["name"] != name]
            if len(kept) == len(records):
                return False
            self._write(kept)
            return True
