"""Object-key interning cache.

Repeated keys dominate tabular documents: a 10,000-row grid with 4 columns
decodes the same 4 key strings 40,000 times. The cache hands back one
canonical str object per distinct key so rows share identities (and their
cached hashes), bounded by an LRU of 2,048 entries. Only ASCII keys of at
most 64 bytes take the interned path; longer or non-ASCII keys bypass the
cache untouched.

Caches are confined to the thread that created them; ``thread_cache()``
returns this thread's instance.
"""

from __future__ import annotations

import threading
from collections import OrderedDict

CAPACITY = 2048
MAX_KEY_BYTES = 64


class InternCache:
    __slots__ = ("_entries", "hits", "misses", "bypasses")

    def __init__(self):
        self._entries: OrderedDict[str, str] = OrderedDict()
        self.hits = 0
        self.misses = 0
        self.bypasses = 0

    def __len__(self):
        return len(self._entries)

    def lookup(self, key: str) -> str:
        # ASCII keys have len(key) == byte length
        if not key.isascii() or len(key) > MAX_KEY_BYTES:
            self.bypasses += 1
            return key
        entries = self._entries
        cached = entries.get(key)
        if cached is not None:
            entries.move_to_end(key)
            self.hits += 1
            return cached
        if len(entries) >= CAPACITY:
            entries.popitem(last=False)
        entries[key] = key
        self.misses += 1
        return key


_local = threading.local()


def thread_cache() -> InternCache:
    cache = getattr(_local, "cache", None)
    if cache is None:
        cache = _local.cache = InternCache()
    return cache


def reset_thread_cache():
    _local.cache = InternCache()
