# seqlib/cache.py
import logging
import threading
from collections import OrderedDict

from django.conf import settings

logger = logging.getLogger(__name__)


class SeqCache:
    """
    Write-once memo keyed by tuples such as ('E', p, n).

    Entries are grouped by the prime in the second key slot and only the
    groups of the max_primes most recently filled primes are kept; an evicted
    key is simply computed again. Readers never lock. Concurrent fills of one
    key may both compute, but the first stored value wins and every caller
    receives it.
    """

    def __init__(self, max_primes=None):
        self._max_primes = max_primes
        self._groups = OrderedDict()
        self._lock = threading.Lock()

    @property
    def max_primes(self) -> int:
        if self._max_primes is not None:
            return self._max_primes
        try:
            return settings.SUPERCONG.get('SEQ_CACHE_PRIMES') or 8
        except Exception:
            return 8

    @staticmethod
    def _group(key):
        if isinstance(key, tuple) and len(key) > 1:
            return key[1]
        return None

    def __contains__(self, key):
        return key in self._groups.get(self._group(key), ())

    def __len__(self):
        return sum(len(entries) for entries in list(self._groups.values()))

    def primes(self):
        return list(self._groups)

    def get(self, key, default=None):
        return self._groups.get(self._group(key), {}).get(key, default)

    def put(self, key, value):
        group = self._group(key)
        with self._lock:
            entries = self._groups.get(group)
            if entries is None:
                entries = self._groups[group] = {}
                while len(self._groups) > max(1, self.max_primes):
                    evicted, _ = self._groups.popitem(last=False)
                    logger.debug(f"SeqCache evicted tables for p={evicted}")
            else:
                self._groups.move_to_end(group)
            return entries.setdefault(key, value)

    def fill(self, key, compute):
        """
        Returns the cached value for key, computing and storing it if absent.

        Args:
            key: Hashable cache key
            compute: Zero-argument callable producing the value
        """
        cached = self.get(key, _MISSING)
        if cached is not _MISSING:
            return cached
        value = compute()
        logger.debug(f"SeqCache filled {key!r}")
        return self.put(key, value)

    def clear(self):
        with self._lock:
            self._groups.clear()


_MISSING = object()

SEQ_CACHE = SeqCache()
