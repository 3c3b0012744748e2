"""Synthetic test scene shared by the demo scripts."""

import os

import numpy as np


def two_texture_scene(size=128, seed=0):
    """A smooth shaded background with a rough, speckled disk in the middle.

    Returns the image and the boolean mask of the disk.
    """
    rng = np.random.default_rng(seed)
    y, x = np.mgrid[0:size, 0:size]
    background = 80 + 60 * x / size + rng.normal(0, 2, (size, size))
    rough = 120 + rng.normal(0, 45, (size, size))
    disk = (x - size / 2) ** 2 + (y - size / 2) ** 2 < (size / 4) ** 2
    image = np.where(disk, rough, background)
    return np.clip(np.rint(image), 0, 255).astype(np.uint8), disk


def output_dir():
    path = os.path.join(os.path.dirname(os.path.abspath(__file__)), "output")
    os.makedirs(path, exist_ok=True)
    return path


def agreement(binary, mask):
    """Fraction of pixels where black coincides with the disk."""
    return float(np.mean((binary == 0) == mask))
