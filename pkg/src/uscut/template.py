"""Radial template geometry: ray directions and node radii around a seed point.

The template is a circle of ``radius_px`` around the seed. ``num_rays`` rays
leave the seed at equal angular steps, clockwise in image coordinates
(x right, y down, angle 0 along +x). Each ray carries ``nodes_per_ray``
sample nodes at radii radius_px*(i+1)/nodes_per_ray, so the outermost node
of every ray lies exactly on the template circle.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConfigError


@dataclass(frozen=True)
class TemplateConfig:
    """Shape of the radial template graph.

    delta bounds how far the cut index may jump between adjacent rays;
    0 forces a (discretely) round contour, larger values allow more wiggle.
    """

    num_rays: int = 60
    nodes_per_ray: int = 40
    radius_px: float = 80.0
    delta: int = 2

    def __post_init__(self):
        if self.num_rays < 3:
            raise ConfigError(f"num_rays must be >= 3, got {self.num_rays}")
        if self.nodes_per_ray < 3:
            raise ConfigError(f"nodes_per_ray must be >= 3, got {self.nodes_per_ray}")
        if not self.radius_px > 0:
            raise ConfigError(f"radius_px must be > 0, got {self.radius_px}")
        if not 0 <= self.delta <= self.nodes_per_ray - 2:
            raise ConfigError(
                f"delta must be in [0, nodes_per_ray - 2], got {self.delta}"
            )

    @property
    def node_count(self) -> int:
        return self.num_rays * self.nodes_per_ray

    @property
    def node_spacing_px(self) -> float:
        """Radial distance between consecutive nodes on a ray."""
        return self.radius_px / self.nodes_per_ray


DEFAULT_CONFIG = TemplateConfig()


def ray_angles(num_rays: int) -> np.ndarray:
    """Angles 2*pi*r/R for r = 0..R-1."""
    return 2.0 * np.pi * np.arange(num_rays) / num_rays


def ray_directions(num_rays: int) -> np.ndarray:
    """(R, 2) unit vectors (cos, sin); clockwise when +y points down."""
    angles = ray_angles(num_rays)
    return np.stack([np.cos(angles), np.sin(angles)], axis=1)


def node_radii(cfg: TemplateConfig) -> np.ndarray:
    """(N,) strictly increasing radii; the last equals radius_px."""
    n = cfg.nodes_per_ray
    return cfg.radius_px * (np.arange(n) + 1.0) / n
