"""On-disk cache of certified denominator polynomials.

Entries are JSON files ``qk-<k>.json`` holding a key, the serialized
polynomial payload, and a checksum of the canonical payload encoding.
Writes go through a temporary file and an atomic rename; unreadable or
tampered entries are silently ignored and rebuilt.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from dataclasses import dataclass
from pathlib import Path

from .denominator import CertifiedPoly, PrecisionSchedule, build_qk

ENV_CACHE_DIR = "DIMER_CACHE"
DEFAULT_CACHE_DIR = "cache"


@dataclass(frozen=True)
class CacheEntry:
    key: str
    payload: dict
    checksum: str

    @classmethod
    def for_poly(cls, certified: CertifiedPoly) -> "CacheEntry":
        payload = certified.to_payload()
        return cls(f"qk-{certified.k}", payload, _payload_checksum(payload))

    def verify(self) -> bool:
        return self.checksum == _payload_checksum(self.payload)


def _payload_checksum(payload: dict) -> str:
    canonical = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode()).hexdigest()


def resolve_cache_dir(explicit: str | None) -> Path:
    if explicit:
        return Path(explicit)
    return Path(os.environ.get(ENV_CACHE_DIR) or DEFAULT_CACHE_DIR)


def entry_path(cache_dir: Path, k: int) -> Path:
    return cache_dir / f"qk-{k}.json"


def load_cached(cache_dir: Path, k: int) -> CertifiedPoly | None:
    path = entry_path(cache_dir, k)
    try:
        doc = json.loads(path.read_text())
        entry = CacheEntry(doc["key"], doc["payload"], doc["checksum"])
        if entry.key != f"qk-{k}" or not entry.verify():
            return None
        certified = CertifiedPoly.from_payload(entry.payload)
        if certified.k != k:
            return None
        return certified
    except (OSError, ValueError, KeyError, TypeError):
        return None


def store(cache_dir: Path, certified: CertifiedPoly) -> None:
    cache_dir.mkdir(parents=True, exist_ok=True)
    entry = CacheEntry.for_poly(certified)
    doc = {"key": entry.key, "payload": entry.payload, "checksum": entry.checksum}
    fd, tmp = tempfile.mkstemp(dir=cache_dir, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(doc, fh, sort_keys=True)
        os.replace(tmp, entry_path(cache_dir, certified.k))
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def load_or_build(k: int, cache_dir: Path, schedule: PrecisionSchedule | None = None) -> CertifiedPoly:
    """Cache hits must be byte-identical to a cold build, so the cache is
    bypassed whenever a custom schedule is requested."""
    if schedule is None:
        cached = load_cached(cache_dir, k)
        if cached is not None:
            return cached
    certified = build_qk(k, schedule)
    store(cache_dir, certified)
    return certified
