"""Hurst rescaled-range slope over a 37-pixel octagon.

Run:  python demos/03_hurst_octagon.py
"""

import math
import os

import numpy as np

from texseg import fractal, write_pgm
from texseg.segmentation import percentile_threshold, rescale_for_display, threshold_segment
from _scene import agreement, output_dir, two_texture_scene

# %% The neighborhood
# Offsets are grouped by distance from the center; letters follow the usual
# a (center) .. h (distance sqrt(10)) labelling.
labels = {}
for letter, (d2, offsets) in zip("abcdefgh", fractal.HURST_CLASSES):
    print(f"{letter}: d={math.sqrt(d2):.3f}  {len(offsets)} pixels")
    for dx, dy in offsets:
        labels[dy, dx] = letter
for dy in range(-3, 4):
    print(" ".join(labels.get((dy, dx), ".") for dx in range(-3, 4)))

# %% A ramp
# With one gray level per column, the range within distance d is twice the
# largest column offset reachable, so ln r grows roughly like ln d.
ramp = np.tile(np.arange(32, dtype=np.uint8), (32, 1))
profile = fractal.hurst_profile(ramp, 16, 16)
print("ranges:", profile.ranges, " slope:", round(fractal.hurst_dimension(profile), 4))

# %% Whole image
image, disk = two_texture_scene()
D = fractal.hurst_dimension_map(image)
print(f"slope on disk {D[disk].mean():.3f}, on background {D[~disk].mean():.3f}")

# Here the smooth shaded background has the steeper slope (its range keeps
# growing with distance), so the disk is the region *below* the threshold:
# with 20% of pixels inside, the disk turns white at the 20th percentile.
seg = threshold_segment(D, percentile_threshold(D, 20))
print(f"agreement with the disk (white = disk): {agreement(255 - seg, disk):.1%}")

out = output_dir()
write_pgm(os.path.join(out, "hurst_dimension.pgm"), rescale_for_display(D))
write_pgm(os.path.join(out, "hurst_segmented.pgm"), seg)
