"""Thread-local operation counters used by the linearity tests.

The counters are advisory instrumentation: algorithms report how many
elementary steps (edge scans, queue pops) they performed, and the test
suite checks that the totals grow linearly in n + m. Counting is always
on; the cost is one dictionary update per whole operation call.
"""

from __future__ import annotations

import threading

_local = threading.local()


def _store() -> dict:
    store = getattr(_local, "counts", None)
    if store is None:
        store = {}
        _local.counts = store
    return store


def reset() -> None:
    """Zero every counter for the calling thread."""
    _local.counts = {}


def bump(name: str, amount: int = 1) -> None:
    """Add ``amount`` to counter ``name``."""
    store = _store()
    store[name] = store.get(name, 0) + amount


def get(name: str) -> int:
    """Current value of counter ``name`` (0 if never bumped)."""
    return _store().get(name, 0)


def snapshot() -> dict[str, int]:
    """Copy of all counters for the calling thread."""
    return dict(_store())
