"""Closed contours from per-ray cut indices, and the clinical metrics on them.

The boundary on each ray is placed midway between the outermost source-side
node and the first sink-side node, which bounds the placement error by half
a node spacing.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import IO

import numpy as np

from .errors import DomainError
from .graph_builder import NodeGrid
from .maxflow import CutResult
from .template import node_radii, ray_directions


@dataclass(frozen=True, eq=False)
class Contour:
    """Closed polygon with one point per ray, in image pixel coordinates."""

    points: np.ndarray  # (R, 2)
    spacing: float = 1.0  # mm per pixel

    def __post_init__(self):
        pts = np.ascontiguousarray(self.points, dtype=np.float64)
        if pts.ndim != 2 or pts.shape[1] != 2:
            raise DomainError(f"contour points must be (R, 2), got {pts.shape}")
        if not self.spacing > 0:
            raise DomainError(f"spacing must be > 0, got {self.spacing}")
        pts.setflags(write=False)
        object.__setattr__(self, "points", pts)


def cut_to_contour(cut: CutResult, grid: NodeGrid, spacing: float = 1.0) -> Contour:
    """Boundary points midway between radius(k_r) and radius(k_r + 1) on each ray."""
    if cut.cut_indices is None:
        raise DomainError("cut carries no per-ray indices (not a template cut)")
    cfg = grid.cfg
    radii = node_radii(cfg)
    k = cut.cut_indices
    mid = (radii[k] + radii[k + 1]) / 2.0
    dirs = ray_directions(cfg.num_rays)
    points = np.asarray(grid.seed) + dirs * mid[:, None]
    return Contour(points=points, spacing=spacing)


def max_diameter_mm(contour: Contour) -> float:
    """Largest distance between any two contour points, in mm."""
    pts = contour.points
    if len(pts) < 2:
        raise DomainError("diameter needs at least 2 points")
    diff = pts[:, None, :] - pts[None, :, :]
    dist = np.sqrt((diff * diff).sum(axis=2))
    return float(dist.max()) * contour.spacing


def area_mm2(contour: Contour) -> float:
    """Enclosed polygon area (shoelace), in mm^2."""
    pts = contour.points
    if len(pts) < 3:
        raise DomainError("area needs at least 3 points")
    x, y = pts[:, 0], pts[:, 1]
    xn, yn = np.roll(x, -1), np.roll(y, -1)
    signed = 0.5 * float(np.sum(x * yn - xn * y))
    return abs(signed) * contour.spacing**2


def rasterize(contour: Contour, width: int, height: int) -> np.ndarray:
    """Even-odd fill of the contour at integer pixel centers, as a bool mask.

    A pixel is inside when a ray from its center toward +x crosses the polygon
    boundary an odd number of times.
    """
    pts = contour.points
    mask = np.zeros((height, width), dtype=bool)
    if len(pts) < 3:
        return mask
    x1 = pts[:, 0]
    y1 = pts[:, 1]
    x2 = np.roll(x1, -1)
    y2 = np.roll(y1, -1)
    y_lo = max(0, int(np.ceil(pts[:, 1].min())))
    y_hi = min(height - 1, int(np.floor(pts[:, 1].max())))
    for y in range(y_lo, y_hi + 1):
        straddle = ((y1 <= y) & (y2 > y)) | ((y2 <= y) & (y1 > y))
        if not straddle.any():
            continue
        t = (y - y1[straddle]) / (y2[straddle] - y1[straddle])
        crossings = np.sort(x1[straddle] + t * (x2[straddle] - x1[straddle]))
        cols = np.arange(width)
        inside = (np.searchsorted(crossings, cols, side="right") % 2) == 1
        mask[y] = inside
    return mask


def dice(contour: Contour, truth_mask: np.ndarray) -> float:
    """Dice overlap between the rasterized contour and a ground-truth mask."""
    truth = np.asarray(truth_mask, dtype=bool)
    if truth.ndim != 2:
        raise DomainError("truth mask must be a 2-D raster")
    height, width = truth.shape
    seg = rasterize(contour, width, height)
    denom = int(seg.sum()) + int(truth.sum())
    if denom == 0:
        return 1.0
    overlap = int(np.logical_and(seg, truth).sum())
    return 2.0 * overlap / denom


def write_contour(contour: Contour, out: IO[str], header: dict | None = None) -> None:
    """Plain-text record: header key/value lines, then one "r x y" line per point."""
    for key, value in (header or {}).items():
        out.write(f"{key} {value}\n")
    for r, (x, y) in enumerate(contour.points):
        out.write(f"{r} {float(x)!r} {float(y)!r}\n")
