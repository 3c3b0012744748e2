"""Histograms, thresholds and display scaling for per-pixel float maps."""

import csv
import io
import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "Histogram",
    "histogram",
    "percentile_threshold",
    "threshold_segment",
    "rescale_for_display",
    "BLACK",
    "WHITE",
]

BLACK = 0
WHITE = 255


def _finite_map(values):
    m = np.asarray(values, dtype=np.float64)
    if m.size == 0:
        raise ValueError("empty map")
    if not np.all(np.isfinite(m)):
        raise ValueError("map contains non-finite values")
    return m


@dataclass(frozen=True)
class Histogram:
    lo: float
    hi: float
    counts: np.ndarray

    @property
    def bin_count(self):
        return len(self.counts)

    @property
    def edges(self):
        return np.linspace(self.lo, self.hi, self.bin_count + 1)

    def to_csv(self):
        """``bin_lo,bin_hi,count`` rows, values printed with 17 significant digits."""
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["bin_lo", "bin_hi", "count"])
        edges = self.edges
        for k, n in enumerate(self.counts):
            writer.writerow([f"{edges[k]:.17g}", f"{edges[k + 1]:.17g}", int(n)])
        return buf.getvalue()


def histogram(values, bins=64):
    """Equal-width histogram spanning the map's own min and max.

    The maximum lands in the last bin; a constant map puts every pixel in
    bin 0.
    """
    if bins < 1:
        raise ValueError(f"bins must be >= 1, got {bins}")
    m = _finite_map(values).ravel()
    lo, hi = float(m.min()), float(m.max())
    if hi > lo:
        idx = np.floor((m - lo) / (hi - lo) * bins).astype(np.int64)
        idx = np.minimum(idx, bins - 1)
    else:
        idx = np.zeros(m.size, dtype=np.int64)
    return Histogram(lo, hi, np.bincount(idx, minlength=bins))


def percentile_threshold(values, p):
    """Nearest-rank percentile: the smallest value with at least ``p``% of the map at or below it."""
    if not 0 <= p <= 100:
        raise ValueError(f"percentile must be in [0, 100], got {p}")
    m = np.sort(_finite_map(values).ravel())
    rank = math.ceil(p * m.size / 100)
    return float(m[max(rank, 1) - 1])


def threshold_segment(values, h):
    """Black (0) where the value exceeds ``h``, white (255) elsewhere."""
    m = _finite_map(values)
    return np.where(m > h, BLACK, WHITE).astype(np.uint8)


def rescale_for_display(values):
    """Linear min-max stretch onto [0, 255], halves rounded up.

    A constant map has no range to stretch and renders as mid-gray 128.
    """
    m = _finite_map(values)
    lo, hi = m.min(), m.max()
    if hi == lo:
        return np.full(m.shape, 128, dtype=np.uint8)
    scaled = np.floor((m - lo) / (hi - lo) * 255.0 + 0.5)
    return np.clip(scaled, 0, 255).astype(np.uint8)
