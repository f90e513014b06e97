"""Iso-class keyed caches.

A cache stores at most one value per key; two threads racing on the same
key compute equal values, so the first write wins and the rest are
dropped.  Setting ``MATROID_HOPF_MEMO=off`` bypasses every cache.
"""

from __future__ import annotations

import os
import threading


def memo_enabled() -> bool:
    return os.environ.get("MATROID_HOPF_MEMO", "on").lower() not in ("off", "0", "false", "no")


class Memo:
    def __init__(self, name: str = ""):
        self.name = name
        self._data: dict = {}
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def get_or_compute(self, key, compute):
        if not memo_enabled():
            return compute()
        with self._lock:
            if key in self._data:
                self.hits += 1
                return self._data[key]
        value = compute()
        with self._lock:
            self.misses += 1
            return self._data.setdefault(key, value)

    def clear(self) -> None:
        with self._lock:
            self._data.clear()
            self.hits = self.misses = 0

    def __len__(self) -> int:
        return len(self._data)
