"""Content-addressed on-disk cache for serialized structures."""

from __future__ import annotations

import hashlib
import json
import logging
import os
import tempfile
import warnings
from pathlib import Path
from typing import Callable, Optional

log = logging.getLogger(__name__)

ENV_VAR = "COXLAT_CACHE"


def default_dir() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return Path(base) / "coxlat"


def cache_key(inputs: dict) -> str:
    canonical = json.dumps(inputs, sort_keys=True, separators=(",", ":"), ensure_ascii=False)
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def atomic_write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".tmp-", suffix=path.suffix)
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


class Cache:
    """Entries are JSON files ``<sha256>.json`` holding the inputs, the value
    text and the value's own digest, so truncation is detected on load."""

    def __init__(self, directory: Optional[os.PathLike] = None):
        self.directory = Path(directory) if directory is not None else default_dir()
        self.hits = 0
        self.misses = 0

    def path_for(self, inputs: dict) -> Path:
        return self.directory / f"{cache_key(inputs)}.json"

    def load(self, inputs: dict) -> Optional[str]:
        path = self.path_for(inputs)
        if not path.exists():
            return None
        try:
            entry = json.loads(path.read_text(encoding="utf-8"))
            value = entry["value"]
            if entry["inputs"] != inputs or hashlib.sha256(value.encode("utf-8")).hexdigest() != entry["digest"]:
                raise ValueError("digest mismatch")
        except (ValueError, KeyError, TypeError, OSError) as exc:
            msg = f"discarding corrupt cache entry {path.name}: {exc}"
            log.warning(msg)
            warnings.warn(msg, RuntimeWarning, stacklevel=2)
            try:
                path.unlink()
            except OSError:
                pass
            return None
        return value

    def store(self, inputs: dict, value: str) -> None:
        entry = {"inputs": inputs, "value": value, "digest": hashlib.sha256(value.encode("utf-8")).hexdigest()}
        atomic_write(self.path_for(inputs), json.dumps(entry, sort_keys=True, ensure_ascii=False))

    def get_or_compute(self, inputs: dict, compute: Callable[[], str]) -> str:
        hit = self.load(inputs)
        if hit is not None:
            self.hits += 1
            return hit
        self.misses += 1
        value = compute()
        self.store(inputs, value)
        return value
