"""Local fractal-dimension estimators.

Three per-pixel operators, each returning a float map with the source
image's shape:

* box counting over a 17x17 window (:func:`box_dimension_map`),
* Hurst rescaled-range slope over a 37-pixel octagon
  (:func:`hurst_dimension_map`),
* the two-window Method of Range (:func:`range_dimension_map`).

Neighbors outside the image are edge-clamped. The map functions split
rows across ``workers`` threads; per-pixel values do not depend on the
split.
"""

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from ._bands import map_row_bands
from .raster import as_gray_image, clamped_window, pad_clamped, window_pixel

__all__ = [
    "FitLine",
    "fit_line",
    "BoxCountSeries",
    "BOX_SCALES",
    "BOX_WINDOW",
    "box_count_window",
    "box_dimension",
    "box_dimension_map",
    "HURST_CLASSES",
    "HURST_DISTANCES",
    "HurstProfile",
    "hurst_profile",
    "hurst_dimension",
    "hurst_dimension_map",
    "RangePair",
    "range_pair",
    "range_dimension",
    "range_dimension_map",
    "RANGE_MAX",
]


class FitLine(NamedTuple):
    slope: float
    intercept: float


def fit_line(xs, ys):
    """Ordinary least-squares line ``y = slope * x + intercept``.

    ``ys`` may carry leading axes (shape ``(..., n)``); every series is
    fitted against the same abscissae and the result holds arrays. The
    sums run point by point, so a series gets the same bits whether it
    is fitted alone or inside a stack.
    """
    xs = np.asarray(xs, dtype=np.float64)
    ys = np.asarray(ys, dtype=np.float64)
    n = xs.shape[0]
    if xs.ndim != 1 or ys.shape[-1] != n:
        raise ValueError("xs must be 1-D and match the last axis of ys")
    if n < 2:
        raise ValueError("need at least two points to fit a line")
    x_mean = sum(float(x) for x in xs) / n
    dx = [float(x) - x_mean for x in xs]
    sxx = sum(d * d for d in dx)
    if sxx == 0.0:
        raise ValueError("all abscissae are identical")
    y_mean = ys[..., 0].copy()
    for k in range(1, n):
        y_mean = y_mean + ys[..., k]
    y_mean = y_mean / n
    sxy = dx[0] * (ys[..., 0] - y_mean)
    for k in range(1, n):
        sxy = sxy + dx[k] * (ys[..., k] - y_mean)
    slope = sxy / sxx
    intercept = y_mean - slope * x_mean
    if slope.ndim == 0:
        return FitLine(float(slope), float(intercept))
    return FitLine(slope, intercept)


# ---------------------------------------------------------------- box counting

BOX_WINDOW = 17
# five scales, every cell at least two pixels wide in a 17-pixel window
BOX_SCALES = (2, 3, 4, 6, 8)


@dataclass(frozen=True)
class BoxCountSeries:
    cells: tuple  # cells per axis, c = 1/epsilon
    counts: tuple  # N(epsilon)

    @property
    def epsilons(self):
        return tuple(1.0 / c for c in self.cells)


def _cell_bounds(side, c):
    # round(i * side / c), halves rounded up, in exact integer arithmetic
    return [(2 * i * side + c) // (2 * c) for i in range(c + 1)]


def _box_index(g, c):
    return np.asarray(g, dtype=np.int64) * c // 256


def box_count_window(window, scales=BOX_SCALES):
    """Count gray-level boxes needed to cover a square window at each scale.

    At scale ``c`` the window is cut into ``c x c`` cells and the gray range
    [0, 256) into ``c`` boxes; a cell whose extreme gray levels fall in
    boxes ``k`` and ``l`` contributes ``l - k + 1``.
    """
    win = np.asarray(window)
    side = win.shape[0]
    if win.ndim != 2 or win.shape[1] != side:
        raise ValueError(f"window must be square, got shape {win.shape}")
    counts = []
    for c in scales:
        if not 1 <= c <= side:
            raise ValueError(f"scale {c} does not fit a {side}-pixel window")
        b = _cell_bounds(side, c)
        total = 0
        for i in range(c):
            for j in range(c):
                cell = win[b[i] : b[i + 1], b[j] : b[j + 1]]
                total += int(_box_index(cell.max(), c) - _box_index(cell.min(), c)) + 1
        counts.append(total)
    return BoxCountSeries(tuple(scales), tuple(counts))


def _box_slope(counts, scales):
    return fit_line(np.log(np.asarray(scales, dtype=np.float64)),
                    np.log(np.asarray(counts, dtype=np.float64))).slope


def box_dimension(window, scales=BOX_SCALES):
    """Slope of ``ln N`` against ``ln(1/epsilon)``: 2 for flat, 3 for full spread."""
    return _box_slope(box_count_window(window, scales).counts, scales)


def _sliding(a, h, w, reduce):
    rows = reduce(sliding_window_view(a, h, axis=0), axis=-1)
    return reduce(sliding_window_view(rows, w, axis=1), axis=-1)


def box_dimension_map(image, window=BOX_WINDOW, scales=BOX_SCALES, workers=1):
    """Box-counting dimension of the centered ``window`` around every pixel."""
    img = as_gray_image(image)
    if window < 3 or window % 2 == 0:
        raise ValueError(f"window must be odd and >= 3, got {window}")
    for c in scales:
        if not 1 <= c <= window:
            raise ValueError(f"scale {c} does not fit a {window}-pixel window")
    h, w = img.shape
    padded = pad_clamped(img, window // 2).astype(np.int64)

    def compute(y0, y1):
        sub = padded[y0 : y1 + window - 1]
        extremes = {}

        def cell_extremes(ch, cw):
            if (ch, cw) not in extremes:
                extremes[ch, cw] = (_sliding(sub, ch, cw, np.max),
                                    _sliding(sub, ch, cw, np.min))
            return extremes[ch, cw]

        counts = np.zeros((y1 - y0, w, len(scales)), dtype=np.int64)
        for k, c in enumerate(scales):
            b = _cell_bounds(window, c)
            total = counts[..., k]
            for i in range(c):
                for j in range(c):
                    hi, lo = cell_extremes(b[i + 1] - b[i], b[j + 1] - b[j])
                    top = hi[b[i] : b[i] + y1 - y0, b[j] : b[j] + w]
                    bot = lo[b[i] : b[i] + y1 - y0, b[j] : b[j] + w]
                    total += top * c // 256 - bot * c // 256 + 1
        return _box_slope(counts, scales)

    return map_row_bands(compute, h, workers)


# ---------------------------------------------------------------- Hurst


def _octagon_classes():
    # offsets within squared radius 10, grouped by squared distance
    classes = {}
    for dy in range(-3, 4):
        for dx in range(-3, 4):
            d2 = dx * dx + dy * dy
            if d2 <= 10:
                classes.setdefault(d2, []).append((dx, dy))
    return [(d2, tuple(classes[d2])) for d2 in sorted(classes)]


# (squared distance, ((dx, dy), ...)) for classes a..h; 37 offsets in all
HURST_CLASSES = tuple(_octagon_classes())
HURST_DISTANCES = tuple(math.sqrt(d2) for d2, _ in HURST_CLASSES[1:])
_LOG_DISTANCES = np.log(np.array(HURST_DISTANCES))


@dataclass(frozen=True)
class HurstProfile:
    distances: tuple
    ranges: tuple  # brightest minus darkest over all pixels within each distance


def hurst_profile(image, cx, cy):
    """Cumulative brightness ranges around column ``cx``, row ``cy``."""
    img = np.asarray(image)
    hi, lo = -1, 256
    ranges = []
    for d2, offsets in HURST_CLASSES:
        for dx, dy in offsets:
            v = window_pixel(img, cx, cy, dx, dy)
            hi, lo = max(hi, v), min(lo, v)
        if d2 > 0:
            ranges.append(hi - lo)
    return HurstProfile(HURST_DISTANCES, tuple(ranges))


def hurst_dimension(profile):
    """Slope of ``ln r_d`` against ``ln d``.

    Accepts a :class:`HurstProfile` or an array of ranges with shape
    ``(..., 7)``. A flat neighborhood (all ranges zero) gives 0; isolated
    zero ranges are raised to half a gray level before taking logs.
    """
    ranges = profile.ranges if isinstance(profile, HurstProfile) else profile
    r = np.asarray(ranges, dtype=np.float64)
    flat = np.all(r == 0, axis=-1)
    r = np.where(r == 0, 0.5, r)
    slope = fit_line(_LOG_DISTANCES, np.log(r)).slope
    result = np.where(flat, 0.0, slope)
    return float(result) if result.ndim == 0 else result


def hurst_dimension_map(image, workers=1):
    """Hurst dimension over the octagonal neighborhood of every pixel."""
    img = as_gray_image(image)
    h, w = img.shape
    padded = pad_clamped(img, 3).astype(np.int16)

    def compute(y0, y1):
        ranges = np.empty((y1 - y0, w, len(HURST_DISTANCES)))
        hi = lo = None
        for k, (d2, offsets) in enumerate(HURST_CLASSES):
            for dx, dy in offsets:
                view = padded[y0 + 3 + dy : y1 + 3 + dy, 3 + dx : 3 + dx + w]
                if hi is None:
                    hi, lo = view.copy(), view.copy()
                else:
                    np.maximum(hi, view, out=hi)
                    np.minimum(lo, view, out=lo)
            if d2 > 0:
                ranges[..., k - 1] = hi - lo
        return hurst_dimension(ranges)

    return map_row_bands(compute, h, workers)


# ---------------------------------------------------------------- Method of Range

RANGE_LARGE = 9
RANGE_SMALL = 5
_RANGE_LOG_RATIO = math.log(RANGE_LARGE) - math.log(RANGE_SMALL)
# largest attainable value: full 0..255 spread in the large window only
RANGE_MAX = 255 / _RANGE_LOG_RATIO


class RangePair(NamedTuple):
    r1: int  # range of the large window
    r2: int  # range of the small window


def range_pair(image, cx, cy):
    big = clamped_window(image, cx, cy, RANGE_LARGE)
    small = clamped_window(image, cx, cy, RANGE_SMALL)
    return RangePair(int(big.max()) - int(big.min()),
                     int(small.max()) - int(small.min()))


def range_dimension(image, cx, cy):
    """``(r1 - r2) / (ln 9 - ln 5)`` for the 9- and 5-pixel windows at a pixel."""
    r1, r2 = range_pair(image, cx, cy)
    return (r1 - r2) / _RANGE_LOG_RATIO


def range_dimension_map(image, workers=1):
    """Method-of-Range dimension at every pixel."""
    img = as_gray_image(image)
    h, w = img.shape
    r = RANGE_LARGE // 2
    inset = r - RANGE_SMALL // 2
    padded = pad_clamped(img, r)

    def compute(y0, y1):
        sub = padded[y0 : y1 + 2 * r]
        inner = sub[inset : sub.shape[0] - inset, inset : sub.shape[1] - inset]
        r1 = (_sliding(sub, RANGE_LARGE, RANGE_LARGE, np.max).astype(np.int64)
              - _sliding(sub, RANGE_LARGE, RANGE_LARGE, np.min))
        r2 = (_sliding(inner, RANGE_SMALL, RANGE_SMALL, np.max).astype(np.int64)
              - _sliding(inner, RANGE_SMALL, RANGE_SMALL, np.min))
        return (r1 - r2) / _RANGE_LOG_RATIO

    return map_row_bands(compute, h, workers)
