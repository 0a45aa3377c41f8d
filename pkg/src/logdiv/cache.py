"""Content-addressed result cache on disk.

Entries are JSON files named by the SHA-256 of their canonical key.  Any
number of processes may read; writers take an exclusive ``fcntl`` lock on
the directory's lock file and replace entries atomically.  A corrupt or
mismatched entry is reported, ignored and overwritten.
"""

from __future__ import annotations

import contextlib
import fcntl
import hashlib
import json
import os
import tempfile
import warnings
from pathlib import Path

__all__ = ["ResultCache", "default_cache_dir", "cache_key"]

ENV_VAR = "LOGDIV_CACHE_DIR"


def default_cache_dir() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return Path(base) / "logdiv"


def _canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def cache_key(material: dict) -> str:
    return hashlib.sha256(_canonical(material).encode()).hexdigest()


class ResultCache:
    """Store ``value`` (JSON data) under a key dict."""

    def __init__(self, directory: str | os.PathLike | None = None):
        self.directory = Path(directory) if directory is not None else default_cache_dir()

    def _path(self, digest: str) -> Path:
        return self.directory / digest[:2] / f"{digest}.json"

    @contextlib.contextmanager
    def _locked(self):
        self.directory.mkdir(parents=True, exist_ok=True)
        with open(self.directory / ".lock", "a+") as fh:
            fcntl.flock(fh, fcntl.LOCK_EX)
            try:
                yield
            finally:
                fcntl.flock(fh, fcntl.LOCK_UN)

    def lookup(self, material: dict):
        """Cached value or ``None``."""
        digest = cache_key(material)
        path = self._path(digest)
        if not path.exists():
            return None
        try:
            entry = json.loads(path.read_text())
            if entry["key"] != json.loads(_canonical(material)):
                raise ValueError("key mismatch")
            return entry["value"]
        except (OSError, ValueError, KeyError, TypeError) as exc:
            warnings.warn(f"corrupt cache entry {path.name} ignored: {exc}", stacklevel=2)
            return None

    def store(self, material: dict, value) -> Path:
        digest = cache_key(material)
        path = self._path(digest)
        data = _canonical({"key": material, "value": value})
        with self._locked():
            path.parent.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
            with os.fdopen(fd, "w") as fh:
                fh.write(data)
            os.replace(tmp, path)
        return path
