"""Texture segmentation with co-occurrence features and local fractal dimension."""

from .fractal import (
    box_count_window,
    box_dimension,
    box_dimension_map,
    fit_line,
    hurst_dimension,
    hurst_dimension_map,
    hurst_profile,
    range_dimension,
    range_dimension_map,
)
from .glcm import (
    compute_glcm,
    feature_map,
    normalize,
    select_displacement,
)
from .raster import load_pgm, quantize, read_pgm, save_pgm, window_pixel, write_pgm
from .segmentation import (
    histogram,
    percentile_threshold,
    rescale_for_display,
    threshold_segment,
)

__version__ = "0.1.0"
