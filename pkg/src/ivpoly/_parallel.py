"""Schedule-independent search for the first failing item."""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor


def _scan(predicate, items, offset):
    for i, item in enumerate(items):
        if not predicate(item):
            return offset + i
    return None


def first_failure(predicate, items, jobs: int = 1):
    """Index and item of the first element failing ``predicate``, else None.

    With jobs > 1 the sequence is cut into contiguous chunks scanned in
    worker processes; the smallest failing index wins, so the answer does
    not depend on scheduling.  ``predicate`` must be picklable then.
    """
    if jobs <= 1:
        for i, item in enumerate(items):
            if not predicate(item):
                return i, item
        return None
    items = list(items)
    if not items:
        return None
    size = -(-len(items) // jobs)
    chunks = [(items[k : k + size], k) for k in range(0, len(items), size)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        hits = [h for h in pool.map(_scan, [predicate] * len(chunks), *zip(*chunks)) if h is not None]
    if not hits:
        return None
    idx = min(hits)
    return idx, items[idx]
