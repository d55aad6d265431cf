"""Shared plumbing for the experiment suites."""

from concurrent.futures import ThreadPoolExecutor
from datetime import datetime, timezone


def pmap(fn, items, threads=1):
    """Ordered map, optionally over a thread pool.

    Output order always follows ``items``, so aggregation downstream does not
    depend on scheduling.
    """
    items = list(items)
    if threads is None or threads <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def provenance(master_seed, params):
    """Provenance block for JSON summaries (the only place timestamps go)."""
    from .. import __version__

    return {
        "library": "hetnorm",
        "version": __version__,
        "master_seed": master_seed,
        "parameters": params,
        "created": datetime.now(timezone.utc).isoformat(timespec="seconds"),
    }
