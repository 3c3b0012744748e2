"""Box-counting dimension over a sliding 17x17 window.

Run:  python demos/02_box_counting.py
"""

import os

import numpy as np

from texseg import fractal, write_pgm
from texseg.segmentation import histogram, percentile_threshold, rescale_for_display, threshold_segment
from _scene import agreement, output_dir, two_texture_scene

# %% One window
# The window is cut into c x c cells and the gray range into c boxes. A flat
# window needs one box per cell (N = c^2), a window holding both 0 and 255 in
# every cell needs all of them (N = c^3).
flat = np.full((17, 17), 90, np.uint8)
checker = (np.indices((17, 17)).sum(axis=0) % 2 * 255).astype(np.uint8)
noise = np.random.default_rng(1).integers(0, 256, (17, 17)).astype(np.uint8)
for label, win in [("flat", flat), ("noise", noise), ("checker", checker)]:
    series = fractal.box_count_window(win)
    print(f"{label:8s} N={series.counts}  D={fractal.box_dimension(win):.4f}")

# %% Whole image
image, disk = two_texture_scene()
D = fractal.box_dimension_map(image)
print(f"D on disk {D[disk].mean():.3f}, on background {D[~disk].mean():.3f}")

hist = histogram(D, bins=16)
for lo, n in zip(hist.edges[:-1], hist.counts):
    print(f"{lo:6.3f} {'#' * int(60 * n / hist.counts.max())}")

# The rough disk occupies about 20% of the frame, so threshold at the 80th
# percentile: pixels above it turn black.
h = percentile_threshold(D, 80)
seg = threshold_segment(D, h)
print(f"threshold {h:.3f}: agreement with the true disk {agreement(seg, disk):.1%}")

out = output_dir()
write_pgm(os.path.join(out, "box_dimension.pgm"), rescale_for_display(D))
write_pgm(os.path.join(out, "box_segmented.pgm"), seg)
