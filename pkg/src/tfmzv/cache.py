"""Append-only JSON Lines store for interpolated values.

One record per line: ``{"p": 5, "index": [1, 2], "tcoeffs": [1]}``.  Lookup
key is ``(p, index)``.  Malformed lines are skipped and counted.
"""

from __future__ import annotations

import json
import logging
import os
from dataclasses import dataclass, field
from pathlib import Path

from .fp import smallest_factor

log = logging.getLogger(__name__)

CACHE_ENV = "FMZV_CACHE_DIR"
CACHE_FILE = "tvalues.jsonl"

Key = tuple[int, tuple[int, ...]]


class CacheError(OSError):
    pass


class RecordingDict(dict):
    """A dict that remembers keys written after construction."""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.fresh: list = []

    def __setitem__(self, key, value):
        if key not in self:
            self.fresh.append(key)
        super().__setitem__(key, value)

    def drain(self) -> list:
        out = [(k, self[k]) for k in self.fresh]
        self.fresh = []
        return out


def _parse_record(line: str) -> tuple[Key, tuple[int, ...]]:
    rec = json.loads(line)
    if not isinstance(rec, dict) or set(rec) != {"p", "index", "tcoeffs"}:
        raise ValueError("expected keys p, index, tcoeffs")
    p, index, coeffs = rec["p"], rec["index"], rec["tcoeffs"]
    if not isinstance(p, int) or isinstance(p, bool) or p < 3 or smallest_factor(p) is not None:
        raise ValueError(f"bad prime {p!r}")
    if not isinstance(index, list) or not index or not all(isinstance(x, int) and x >= 1 for x in index):
        raise ValueError(f"bad index {index!r}")
    if not isinstance(coeffs, list) or not all(isinstance(c, int) and 0 <= c < p for c in coeffs):
        raise ValueError(f"bad coefficients {coeffs!r}")
    if len(coeffs) > len(index) or (coeffs and coeffs[-1] == 0):
        raise ValueError("coefficient list is not canonical")
    return (p, tuple(index)), tuple(coeffs)


def format_record(p: int, index, coeffs) -> str:
    return json.dumps({"p": p, "index": list(index), "tcoeffs": list(coeffs)}, separators=(",", ":"))


@dataclass
class EvalCache:
    """In-memory view of the store plus the path it was read from."""

    path: Path | None = None
    values: dict[Key, tuple[int, ...]] = field(default_factory=dict)
    malformed: list[int] = field(default_factory=list)  # line numbers
    written: int = 0

    @classmethod
    def open(cls, directory: str | os.PathLike | None) -> EvalCache:
        if directory is None:
            return cls()
        d = Path(directory)
        try:
            d.mkdir(parents=True, exist_ok=True)
        except OSError as exc:
            raise CacheError(f"cannot create cache directory {d}: {exc}") from exc
        if not os.access(d, os.W_OK):
            raise CacheError(f"cache directory {d} is not writable")
        cache = cls(path=d / CACHE_FILE)
        cache._load()
        return cache

    def _load(self) -> None:
        if self.path is None or not self.path.exists():
            return
        with self.path.open(encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, 1):
                if not line.strip():
                    continue
                try:
                    key, coeffs = _parse_record(line)
                except (ValueError, TypeError) as exc:
                    self.malformed.append(lineno)
                    log.warning("%s:%d: skipping malformed cache record (%s)", self.path, lineno, exc)
                    continue
                old = self.values.get(key)
                if old is not None and old != coeffs:
                    self.malformed.append(lineno)
                    log.warning("%s:%d: conflicting record for %s ignored", self.path, lineno, key)
                    continue
                self.values[key] = coeffs

    def for_prime(self, p: int) -> dict[tuple[int, ...], tuple[int, ...]]:
        return {idx: c for (q, idx), c in self.values.items() if q == p}

    def get(self, p: int, index) -> tuple[int, ...] | None:
        return self.values.get((p, tuple(index)))

    def add(self, records) -> list[tuple[Key, tuple[int, ...]]]:
        """Merge ``((p, index), coeffs)`` pairs; return the ones that were new."""
        new = []
        for key, coeffs in records:
            key = (key[0], tuple(key[1]))
            if key not in self.values:
                self.values[key] = tuple(coeffs)
                new.append((key, tuple(coeffs)))
        return new

    def append(self, records) -> int:
        """Persist new records (single writer); returns how many lines were written."""
        new = self.add(records)
        if self.path is None or not new:
            return 0
        with self.path.open("a", encoding="utf-8") as fh:
            for (p, index), coeffs in new:
                fh.write(format_record(p, index, coeffs) + "\n")
        self.written += len(new)
        return len(new)


def cache_dir_from(flag: str | None) -> str | None:
    return flag if flag else os.environ.get(CACHE_ENV) or None


__all__ = ["CACHE_ENV", "CACHE_FILE", "CacheError", "EvalCache", "RecordingDict", "cache_dir_from", "format_record"]
