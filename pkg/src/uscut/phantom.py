"""Synthetic B-mode-like phantoms: a disc lesion, optional dark halo, speckle.

Echo classes follow the usual sonographic taxonomy relative to background:
A hyperechoic, B isoechoic, C hypoechoic, D hyperechoic with halo,
E isoechoic with halo. Speckle is multiplicative log-normal with unit mean,
so class contrast is preserved in expectation.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import IO

import numpy as np

from .errors import PhantomSpecError
from .image import GrayImage, save_pgm

ECHO_CLASSES = ("A", "B", "C", "D", "E")
ISO_TOLERANCE = 0.02

# Per-class default intensity levels (background, lesion, halo).
_CLASS_LEVELS = {
    "A": (0.40, 0.65, 0.0),
    "B": (0.40, 0.41, 0.0),
    "C": (0.60, 0.20, 0.0),
    "D": (0.40, 0.65, 0.20),
    "E": (0.40, 0.40, 0.20),
}


@dataclass(frozen=True)
class PhantomSpec:
    """Description of one synthetic lesion image with ground truth."""

    width: int = 512
    height: int = 512
    center: tuple[float, float] = (256.0, 256.0)
    lesion_radius: float = 30.0
    background_level: float = 0.5
    lesion_level: float = 0.5
    halo_width: float = 0.0
    halo_level: float = 0.0
    speckle_sigma: float = 0.0
    echo_class: str = "B"
    rng_seed: int = 0

    def __post_init__(self):
        if self.echo_class not in ECHO_CLASSES:
            raise PhantomSpecError(
                f"echo_class must be one of {ECHO_CLASSES}, got {self.echo_class!r}"
            )
        for name in ("background_level", "lesion_level", "halo_level"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise PhantomSpecError(f"{name} must lie in [0, 1], got {value}")
        if self.halo_width < 0:
            raise PhantomSpecError(f"halo_width must be >= 0, got {self.halo_width}")
        if self.speckle_sigma < 0:
            raise PhantomSpecError(
                f"speckle_sigma must be >= 0, got {self.speckle_sigma}"
            )
        if self.lesion_radius <= 0:
            raise PhantomSpecError(
                f"lesion_radius must be > 0, got {self.lesion_radius}"
            )
        cx, cy = self.center
        reach = self.lesion_radius + self.halo_width + 2.0
        margin = min(cx, cy, self.width - 1 - cx, self.height - 1 - cy)
        if margin < reach:
            raise PhantomSpecError(
                "lesion must fit inside the image with margin >= halo_width + 2 px"
            )
        lesion, bg = self.lesion_level, self.background_level
        if self.echo_class in ("A", "D") and not lesion > bg:
            raise PhantomSpecError(
                f"class {self.echo_class}: lesion_level must exceed background_level"
            )
        if self.echo_class == "C" and not lesion < bg:
            raise PhantomSpecError(
                "class C: lesion_level must be below background_level"
            )
        if self.echo_class in ("B", "E") and abs(lesion - bg) > ISO_TOLERANCE:
            raise PhantomSpecError(
                f"class {self.echo_class}: |lesion_level - background_level| must be <= {ISO_TOLERANCE}"
            )
        if self.echo_class in ("D", "E"):
            if not self.halo_width > 0:
                raise PhantomSpecError(
                    f"class {self.echo_class}: halo_width must be > 0"
                )
            if not self.halo_level < min(lesion, bg):
                raise PhantomSpecError(
                    f"class {self.echo_class}: halo_level must be below lesion and background"
                )


def class_defaults(
    echo_class: str,
    *,
    lesion_radius: float = 30.0,
    width: int = 512,
    height: int = 512,
    speckle_sigma: float = 0.0,
    rng_seed: int = 0,
    halo_width: float | None = None,
) -> PhantomSpec:
    """A PhantomSpec for an echo class with stock intensity levels."""
    if echo_class not in ECHO_CLASSES:
        raise PhantomSpecError(
            f"echo_class must be one of {ECHO_CLASSES}, got {echo_class!r}"
        )
    bg, lesion, halo = _CLASS_LEVELS[echo_class]
    if halo_width is None:
        halo_width = 8.0 if echo_class in ("D", "E") else 0.0
    return PhantomSpec(
        width=width,
        height=height,
        center=((width - 1) / 2.0, (height - 1) / 2.0),
        lesion_radius=lesion_radius,
        background_level=bg,
        lesion_level=lesion,
        halo_width=halo_width,
        halo_level=halo,
        speckle_sigma=speckle_sigma,
        echo_class=echo_class,
        rng_seed=rng_seed,
    )


def generate_phantom(spec: PhantomSpec, spacing: float = 1.0) -> tuple[GrayImage, np.ndarray]:
    """Render the phantom and its ground-truth lesion mask (halo excluded)."""
    cx, cy = spec.center
    xs = np.arange(spec.width, dtype=np.float64)
    ys = np.arange(spec.height, dtype=np.float64)
    dist = np.hypot(xs[None, :] - cx, ys[:, None] - cy)
    field = np.full((spec.height, spec.width), spec.background_level)
    inside = dist <= spec.lesion_radius
    if spec.halo_width > 0:
        halo = (dist > spec.lesion_radius) & (
            dist <= spec.lesion_radius + spec.halo_width
        )
        field[halo] = spec.halo_level
    field[inside] = spec.lesion_level
    if spec.speckle_sigma > 0:
        rng = np.random.default_rng(spec.rng_seed)
        g = rng.standard_normal(field.shape)
        s = np.exp(spec.speckle_sigma * g - spec.speckle_sigma**2 / 2.0)
        field = np.clip(field * s, 0.0, 1.0)
    img = GrayImage(
        width=spec.width, height=spec.height, intensities=field, spacing=spacing
    )
    return img, inside


def write_spec_record(spec: PhantomSpec, out: IO[str]) -> None:
    """Plain-text key/value record of the phantom description."""
    cx, cy = spec.center
    out.write(f"echo_class {spec.echo_class}\n")
    out.write(f"width {spec.width}\n")
    out.write(f"height {spec.height}\n")
    out.write(f"center {cx!r} {cy!r}\n")
    out.write(f"lesion_radius {spec.lesion_radius!r}\n")
    out.write(f"background_level {spec.background_level!r}\n")
    out.write(f"lesion_level {spec.lesion_level!r}\n")
    out.write(f"halo_width {spec.halo_width!r}\n")
    out.write(f"halo_level {spec.halo_level!r}\n")
    out.write(f"speckle_sigma {spec.speckle_sigma!r}\n")
    out.write(f"rng_seed {spec.rng_seed}\n")


def save_phantom(
    spec: PhantomSpec,
    image_path: str | os.PathLike,
    mask_path: str | os.PathLike,
    record_path: str | os.PathLike | None = None,
    spacing: float = 1.0,
) -> tuple[GrayImage, np.ndarray]:
    """Write the phantom PGM, its 0/255 mask PGM, and optionally the spec record."""
    img, mask = generate_phantom(spec, spacing=spacing)
    save_pgm(img, image_path)
    mask_img = GrayImage(
        width=spec.width,
        height=spec.height,
        intensities=mask.astype(np.float64),
        spacing=spacing,
    )
    save_pgm(mask_img, mask_path)
    if record_path is not None:
        with open(record_path, "w", encoding="ascii") as fh:
            write_spec_record(spec, fh)
    return img, mask


__all__ = [
    "ECHO_CLASSES",
    "ISO_TOLERANCE",
    "PhantomSpec",
    "class_defaults",
    "generate_phantom",
    "save_phantom",
    "write_spec_record",
]
