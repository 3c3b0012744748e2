"""Gray-level co-occurrence matrices and the texture features built on them.

A displacement ``(dx, dy)`` pairs pixel ``(row, col)`` with pixel
``(row + dx, col + dy)``, so ``(0, 1)`` looks at the right-hand neighbor.
Only pairs with both pixels inside the image are counted and the matrix
is not symmetrized.

The feature functions take a probability table ``P`` of shape
``(..., G, G)`` and reduce over the last two axes, so a stack of tables
(one per pixel) is handled in one call.
"""

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from ._bands import map_row_bands
from .raster import as_gray_image, pad_clamped

__all__ = [
    "Displacement",
    "CooccurrenceMatrix",
    "MarginalStats",
    "compute_glcm",
    "normalize",
    "marginal_stats",
    "energy",
    "entropy",
    "contrast",
    "local_homogeneity",
    "correlation",
    "chi_square",
    "select_displacement",
    "feature_map",
    "FEATURES",
]


class Displacement(NamedTuple):
    dx: int  # row offset
    dy: int  # column offset


def _displacement(tau):
    dx, dy = (int(v) for v in tau)
    if dx == 0 and dy == 0:
        raise ValueError("displacement (0, 0) is not allowed")
    return Displacement(dx, dy)


@dataclass(frozen=True)
class CooccurrenceMatrix:
    levels: int
    counts: np.ndarray

    @property
    def total(self):
        return int(self.counts.sum())

    def normalized(self):
        return normalize(self)


@dataclass(frozen=True)
class MarginalStats:
    mu1: np.ndarray
    mu2: np.ndarray
    sigma1: np.ndarray
    sigma2: np.ndarray


def _pair_slices(shape, tau):
    """Slices selecting the first and second pixel of every in-image pair."""
    h, w = shape
    dx, dy = tau
    first = (slice(max(0, -dx), h - max(0, dx)), slice(max(0, -dy), w - max(0, dy)))
    second = (slice(max(0, dx), h - max(0, -dx)), slice(max(0, dy), w - max(0, -dy)))
    return first, second


def compute_glcm(image, tau, levels):
    """Count gray-level pairs ``(g, g')`` at displacement ``tau``.

    Every pixel must already be below ``levels``; use
    :func:`texseg.raster.quantize` first on 8-bit data.
    """
    img = as_gray_image(image)
    tau = _displacement(tau)
    if not 1 <= levels <= 256:
        raise ValueError(f"levels must be in [1, 256], got {levels}")
    if img.max() >= levels:
        raise ValueError(f"pixel value {img.max()} not below levels={levels}")
    first, second = _pair_slices(img.shape, tau)
    a = img[first].astype(np.int64)
    b = img[second].astype(np.int64)
    if a.size == 0:
        raise ValueError(f"displacement {tuple(tau)} leaves no pixel pairs in a "
                         f"{img.shape[1]}x{img.shape[0]} image")
    counts = np.bincount((a * levels + b).ravel(), minlength=levels * levels)
    return CooccurrenceMatrix(levels, counts.reshape(levels, levels))


def normalize(m):
    """Probability table ``counts / total``."""
    counts = m.counts if isinstance(m, CooccurrenceMatrix) else np.asarray(m)
    total = counts.sum()
    if total <= 0:
        raise ValueError("cannot normalize an empty co-occurrence matrix")
    return counts / total


def _levels(P):
    return np.arange(P.shape[-1], dtype=np.float64)


def marginal_stats(P):
    """Means and standard deviations of the row (g) and column (g') marginals.

    A marginal concentrated on a single gray level gets a sigma of exactly
    zero, whatever rounding the normalization left behind.
    """
    P = np.asarray(P, dtype=np.float64)
    g = _levels(P)
    rows = P.sum(axis=-1)
    cols = P.sum(axis=-2)
    mu1 = (rows * g).sum(axis=-1)
    mu2 = (cols * g).sum(axis=-1)
    var1 = (rows * (g - mu1[..., None]) ** 2).sum(axis=-1)
    var2 = (cols * (g - mu2[..., None]) ** 2).sum(axis=-1)
    spread1 = np.count_nonzero(rows > 0, axis=-1) > 1
    spread2 = np.count_nonzero(cols > 0, axis=-1) > 1
    sigma1 = np.where(spread1, np.sqrt(var1), 0.0)
    sigma2 = np.where(spread2, np.sqrt(var2), 0.0)
    return MarginalStats(mu1, mu2, sigma1, sigma2)


def energy(P):
    """Angular second moment, the sum of squared probabilities."""
    P = np.asarray(P, dtype=np.float64)
    return (P * P).sum(axis=(-2, -1))


def entropy(P):
    """Shannon entropy in nats, with ``0 ln 0 = 0``."""
    P = np.asarray(P, dtype=np.float64)
    logs = np.log(np.where(P > 0, P, 1.0))
    return -(P * logs).sum(axis=(-2, -1))


def contrast(P):
    P = np.asarray(P, dtype=np.float64)
    g = _levels(P)
    return (P * (g[:, None] - g[None, :]) ** 2).sum(axis=(-2, -1))


def local_homogeneity(P):
    """Inverse difference moment."""
    P = np.asarray(P, dtype=np.float64)
    g = _levels(P)
    return (P / (1.0 + (g[:, None] - g[None, :]) ** 2)).sum(axis=(-2, -1))


def correlation(P, stats=None):
    """Linear dependence between the two gray levels of a pair.

    Zero when either marginal has no spread.
    """
    P = np.asarray(P, dtype=np.float64)
    if stats is None:
        stats = marginal_stats(P)
    g = _levels(P)
    d1 = g - np.asarray(stats.mu1)[..., None]
    d2 = g - np.asarray(stats.mu2)[..., None]
    cov = (P * d1[..., :, None] * d2[..., None, :]).sum(axis=(-2, -1))
    denom = np.asarray(stats.sigma1) * np.asarray(stats.sigma2)
    safe = np.where(denom > 0, denom, 1.0)
    return np.where(denom > 0, cov / safe, 0.0)


def chi_square(P):
    """Sum of ``P(g,g')^2 / (P(g,.) P(.,g'))`` over cells with nonzero marginals.

    Equals 1 for independent gray levels and grows with dependence.
    """
    P = np.asarray(P, dtype=np.float64)
    rows = P.sum(axis=-1)
    cols = P.sum(axis=-2)
    denom = rows[..., :, None] * cols[..., None, :]
    safe = np.where(denom > 0, denom, 1.0)
    return np.where(denom > 0, P * P / safe, 0.0).sum(axis=(-2, -1))


FEATURES = {
    "energy": energy,
    "entropy": entropy,
    "contrast": contrast,
    "homogeneity": local_homogeneity,
    "correlation": correlation,
}


def select_displacement(image, candidates, levels):
    """Pick the candidate displacement with the largest chi-square statistic.

    Returns ``(displacement, chi)``; ties go to the earliest candidate.
    """
    candidates = [_displacement(t) for t in candidates]
    if not candidates:
        raise ValueError("no candidate displacements given")
    best, best_chi = None, -np.inf
    for tau in candidates:
        chi = float(chi_square(normalize(compute_glcm(image, tau, levels))))
        if chi > best_chi:
            best, best_chi = tau, chi
    return best, best_chi


# cap on per-chunk histogram cells (columns x G^2) to bound memory
_CHUNK_CELLS = 1 << 22


def feature_map(image, feature, tau=(0, 1), window=17, levels=32, workers=1):
    """Per-pixel texture feature over a centered, edge-clamped window.

    For every pixel the co-occurrence matrix of its ``window x window``
    neighborhood is built for ``tau``, normalized and reduced with
    ``feature`` (a name from :data:`FEATURES`). The image must already be
    quantized to ``levels`` gray levels.
    """
    if feature not in FEATURES:
        raise ValueError(f"unknown feature {feature!r}; choose from {sorted(FEATURES)}")
    func = FEATURES[feature]
    img = as_gray_image(image)
    tau = _displacement(tau)
    if window < 3 or window % 2 == 0:
        raise ValueError(f"window must be odd and >= 3, got {window}")
    if abs(tau.dx) >= window or abs(tau.dy) >= window:
        raise ValueError(f"displacement {tuple(tau)} leaves no pairs in a {window} window")
    if img.max() >= levels:
        raise ValueError(f"pixel value {img.max()} not below levels={levels}")

    h, w = img.shape
    G2 = levels * levels
    padded = pad_clamped(img, window // 2)
    first, second = _pair_slices(padded.shape, tau)
    # code of the pair whose first pixel sits at each padded position
    codes = padded[first].astype(np.int64) * levels + padded[second]
    ph, pw = window - abs(tau.dx), window - abs(tau.dy)
    npairs = float(ph * pw)
    chunk = max(1, min(w, _CHUNK_CELLS // G2))

    def compute(y0, y1):
        out = np.empty((y1 - y0, w))
        for y in range(y0, y1):
            rect = codes[y : y + ph]
            for x0 in range(0, w, chunk):
                x1 = min(w, x0 + chunk)
                block = rect[:, x0 : x1 + pw - 1]
                ncol = block.shape[1]
                col_ids = np.arange(ncol) * G2
                col_hist = np.bincount(
                    (block + col_ids).ravel(), minlength=ncol * G2
                ).reshape(ncol, G2)
                cum = np.zeros((ncol + 1, G2), dtype=np.int64)
                np.cumsum(col_hist, axis=0, out=cum[1:])
                counts = cum[pw : pw + x1 - x0] - cum[: x1 - x0]
                P = (counts / npairs).reshape(-1, levels, levels)
                out[y - y0, x0:x1] = func(P)
        return out

    return map_row_bands(compute, h, workers)
