"""The interactive engine: seed position in, segmentation result out.

segment_at runs the full pipeline (seed statistics, node sampling, graph
construction, min-cut, contour extraction) for one cursor position. It is a
pure function of (image, seed, config) apart from the measured wall time, so
concurrent calls on the same immutable image are safe and a UI can simply
issue one call per cursor move.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .contour import Contour, area_mm2, cut_to_contour, max_diameter_mm
from .errors import UscutError
from .graph_builder import build_graph, sample_nodes
from .image import GrayImage, seed_stats
from .maxflow import CutResult, max_flow
from .template import DEFAULT_CONFIG, TemplateConfig


@dataclass(frozen=True, eq=False)
class SegmentationResult:
    seed: tuple[float, float]
    contour: Contour
    cut: CutResult
    diameter_mm: float
    area_mm2: float
    elapsed_ms: float


@dataclass(frozen=True, eq=False)
class SweepItem:
    """One sweep entry: either a result or the error that stopped it."""

    seed: tuple[float, float]
    result: SegmentationResult | None = None
    error: str | None = None


def segment_at(
    img: GrayImage,
    seed: tuple[float, float],
    cfg: TemplateConfig = DEFAULT_CONFIG,
) -> SegmentationResult:
    """Segment around a seed strictly inside the image."""
    t0 = time.perf_counter()
    stats = seed_stats(img, seed, cfg)
    grid = sample_nodes(img, seed, cfg)
    net = build_graph(grid, stats)
    cut = max_flow(net)
    contour = cut_to_contour(cut, grid, spacing=img.spacing)
    diameter = max_diameter_mm(contour)
    area = area_mm2(contour)
    elapsed_ms = (time.perf_counter() - t0) * 1000.0
    return SegmentationResult(
        seed=(float(seed[0]), float(seed[1])),
        contour=contour,
        cut=cut,
        diameter_mm=diameter,
        area_mm2=area,
        elapsed_ms=elapsed_ms,
    )


def sweep(
    img: GrayImage,
    seeds,
    cfg: TemplateConfig = DEFAULT_CONFIG,
) -> list[SweepItem]:
    """segment_at over a recorded cursor path; per-seed errors do not stop it."""
    items: list[SweepItem] = []
    for seed in seeds:
        seed = (float(seed[0]), float(seed[1]))
        try:
            items.append(SweepItem(seed=seed, result=segment_at(img, seed, cfg)))
        except UscutError as exc:
            items.append(SweepItem(seed=seed, error=str(exc)))
    return items
