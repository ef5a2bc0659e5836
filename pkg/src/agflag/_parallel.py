from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get("AGFLAG_THREADS", "1")))
    except ValueError:
        return 1


def pmap(fn, items) -> list:
    """Ordered map; fans out to AGFLAG_THREADS worker processes when > 1."""
    items = list(items)
    workers = min(worker_count(), len(items))
    if workers <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(fn, items, chunksize=max(1, len(items) // (4 * workers))))
