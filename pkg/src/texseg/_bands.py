import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np


def resolve_workers(workers):
    if workers is None:
        return os.cpu_count() or 1
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    return int(workers)


def map_row_bands(compute, height, workers=1):
    """Evaluate ``compute(y0, y1)`` over disjoint row bands and stack the results.

    ``compute`` must return the output rows ``y0:y1`` and may not depend on
    how rows are grouped; every per-pixel value is then identical for any
    worker count.
    """
    workers = min(resolve_workers(workers), height)
    if workers == 1:
        return compute(0, height)
    edges = np.linspace(0, height, workers + 1).round().astype(int)
    bands = [(int(a), int(b)) for a, b in zip(edges[:-1], edges[1:]) if b > a]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(lambda band: compute(*band), bands))
    return np.concatenate(parts, axis=0)
