"""Method of Range: brightness ranges of nested 9x9 and 5x5 windows.

Run:  python demos/04_method_of_range.py
"""

import os
import time

import numpy as np

from texseg import fractal, write_pgm
from texseg.segmentation import percentile_threshold, rescale_for_display, threshold_segment
from _scene import agreement, output_dir, two_texture_scene

# %% One pixel
# D = (r1 - r2) / (ln 9 - ln 5): only the extra range gained by widening the
# window matters, so a constant offset or a reflection g -> 255 - g leaves D
# unchanged.
ramp = np.tile(np.arange(32, dtype=np.uint8), (32, 1))
print("ramp:", fractal.range_pair(ramp, 16, 16), round(fractal.range_dimension(ramp, 16, 16), 6))
print("largest possible value:", round(fractal.RANGE_MAX, 4))

# %% Whole image, and how it compares with box counting on cost
image, disk = two_texture_scene(size=256)
t0 = time.perf_counter()
D = fractal.range_dimension_map(image)
t1 = time.perf_counter()
fractal.box_dimension_map(image)
t2 = time.perf_counter()
print(f"range map {t1 - t0:.3f}s, box map {t2 - t1:.3f}s")
print(f"D on disk {D[disk].mean():.2f}, on background {D[~disk].mean():.2f}")

seg = threshold_segment(D, percentile_threshold(D, 80))
print(f"agreement with the true disk: {agreement(seg, disk):.1%}")

out = output_dir()
write_pgm(os.path.join(out, "range_dimension.pgm"), rescale_for_display(D))
write_pgm(os.path.join(out, "range_segmented.pgm"), seg)
