"""In-process memo of containment answers.

Keys are the labelled adjacency of host and pattern plus the declared
symmetry, so a cached witness always refers to the caller's own labels.
Answers are deterministic; concurrent inserts of one key are harmless.
"""

from __future__ import annotations

import threading
from collections import OrderedDict
from typing import Any

from turanlab.config.settings import settings


class QueryCache:
    """Bounded LRU map from query key to witness (or ``None`` for absent)."""

    def __init__(self, max_size: int, enabled: bool = True) -> None:
        self.max_size = max_size
        self.enabled = enabled and max_size > 0
        self._entries: OrderedDict[Any, Any] = OrderedDict()
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def get(self, key: Any) -> tuple[bool, Any]:
        if not self.enabled:
            return False, None
        with self._lock:
            if key in self._entries:
                self._entries.move_to_end(key)
                self.hits += 1
                return True, self._entries[key]
            self.misses += 1
            return False, None

    def put(self, key: Any, value: Any) -> None:
        if not self.enabled:
            return
        with self._lock:
            self._entries[key] = value
            self._entries.move_to_end(key)
            while len(self._entries) > self.max_size:
                self._entries.popitem(last=False)

    def clear(self) -> None:
        with self._lock:
            self._entries.clear()
            self.hits = 0
            self.misses = 0

    def __len__(self) -> int:
        return len(self._entries)


query_cache = QueryCache(
    max_size=settings.containment.query_cache_size,
    enabled=settings.containment.query_cache_enabled,
)


__all__ = ["QueryCache", "query_cache"]
