"""Canonical JSON serialization shared by the CLI and the HTTP service.

One formatting policy (compact separators, no ASCII escaping, NaN rejected)
so the same object always serializes to the same bytes regardless of which
interface produced it.
"""
from __future__ import annotations

import json
from pathlib import Path

import numpy as np

__all__ = ["to_json", "write_json", "read_json"]


def _convert(obj):
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    raise TypeError(f"not JSON serializable: {type(obj).__name__}")


def to_json(obj) -> str:
    return json.dumps(
        obj, separators=(",", ":"), ensure_ascii=False, allow_nan=False, default=_convert
    )


def write_json(path: str | Path, obj) -> None:
    Path(path).write_text(to_json(obj), encoding="utf-8")


def read_json(path: str | Path):
    return json.loads(Path(path).read_text(encoding="utf-8"))
