"""Order-preserving parallel map; results never depend on the worker count."""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor


def pmap(func, items, jobs: int = 1, chunksize: int = 8) -> list:
    items = list(items)
    if jobs <= 1 or len(items) < 2:
        return [func(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(func, items, chunksize=chunksize))
