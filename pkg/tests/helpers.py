"""Shared synthetic images for the test modules."""

import numpy as np

from uscut import GrayImage


def flat_image(size=201, level=0.5):
    return GrayImage(width=size, height=size, intensities=np.full((size, size), level))


def disc_image(size=201, center=(100.0, 100.0), radius=30.0, inner=0.6, outer=0.2):
    """Noiseless disc lesion over a flat background."""
    xs = np.arange(size, dtype=float)
    dist = np.hypot(xs[None, :] - center[0], xs[:, None] - center[1])
    grid = np.where(dist <= radius, inner, outer)
    return GrayImage(width=size, height=size, intensities=grid)
