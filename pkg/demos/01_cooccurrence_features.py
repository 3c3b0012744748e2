"""Co-occurrence matrices and the five texture features.

Run:  python demos/01_cooccurrence_features.py
"""

import os

import numpy as np

from texseg import glcm, quantize, write_pgm
from texseg.segmentation import rescale_for_display
from _scene import output_dir, two_texture_scene

# A 5x5 binary image. With displacement (0, 1) every pixel is paired with
# its right-hand neighbor, giving 5 rows x 4 pairs = 20 pairs.
binary = np.array([[1, 1, 1, 1, 1],
                   [1, 1, 1, 1, 0],
                   [1, 1, 1, 0, 0],
                   [1, 1, 0, 0, 0],
                   [1, 0, 0, 0, 0]], dtype=np.uint8)

m = glcm.compute_glcm(binary, (0, 1), levels=2)
print("counts:\n", m.counts, "\ntotal:", m.total)

P = glcm.normalize(m)
for name, func in glcm.FEATURES.items():
    print(f"{name:12s} {float(func(P)):.6f}")
print(f"{'chi-square':12s} {float(glcm.chi_square(P)):.6f}")

# %% Choosing a displacement
# chi-square grows with the dependence between the two gray levels of a pair,
# so the displacement along which the texture repeats scores highest.
stripes = np.tile(np.array([0, 1, 2, 3, 1, 0, 3, 2], np.uint8), (8, 1))
for tau in [(0, 1), (1, 0), (1, 1)]:
    chi = glcm.chi_square(glcm.normalize(glcm.compute_glcm(stripes, tau, 4)))
    print(f"stripes, tau={tau}: chi2={float(chi):.4f}")
print("selected:", glcm.select_displacement(stripes, [(0, 1), (1, 0), (1, 1)], 4))

# %% Feature maps
# Each pixel gets the feature of the co-occurrence matrix of its 17x17
# neighborhood. The image is reduced to 32 gray levels first so each window
# builds a 32x32 table.
image, disk = two_texture_scene()
q = quantize(image, 32)
out = output_dir()
write_pgm(os.path.join(out, "scene.pgm"), image)
for name in ("energy", "entropy", "contrast"):
    values = glcm.feature_map(q, name, (0, 1), window=17, levels=32)
    inside, outside = values[disk].mean(), values[~disk].mean()
    print(f"{name:9s} disk mean {inside:9.4f}   background mean {outside:9.4f}")
    write_pgm(os.path.join(out, f"glcm_{name}.pgm"), rescale_for_display(values))
print("views written to", out)
