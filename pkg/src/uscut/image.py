"""Grayscale images: PGM I/O, sub-pixel sampling, and seed-neighborhood statistics.

Images are 8-bit grayscale PGM files (P2 ascii or P5 binary, maxval 255)
normalized to [0, 1]. All sampling is bilinear with border clamping, so the
intensity field is a continuous, total function of (x, y).
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, PgmFormatError
from .template import TemplateConfig, node_radii, ray_directions

# One 8-bit quantization step: the noise floor for the contrast scale tau.
EPSILON_TAU = 1.0 / 255.0

# Radius of the disc around the seed over which the seed mean is taken.
SEED_DISC_RADIUS_PX = 3.0


def _disc_offsets(radius: float) -> np.ndarray:
    r = int(np.floor(radius))
    dx, dy = np.meshgrid(np.arange(-r, r + 1), np.arange(-r, r + 1))
    keep = dx * dx + dy * dy <= radius * radius
    return np.stack([dx[keep], dy[keep]], axis=1).astype(float)


_SEED_DISC_OFFSETS = _disc_offsets(SEED_DISC_RADIUS_PX)


@dataclass(frozen=True, eq=False)
class GrayImage:
    """Immutable 2-D grayscale raster with isotropic physical pixel spacing."""

    width: int
    height: int
    intensities: np.ndarray  # (height, width) float64 in [0, 1]
    spacing: float = 1.0  # mm per pixel

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise DomainError(f"image size must be >= 1x1, got {self.width}x{self.height}")
        if not self.spacing > 0:
            raise DomainError(f"spacing must be > 0, got {self.spacing}")
        arr = np.ascontiguousarray(self.intensities, dtype=np.float64)
        if arr.shape != (self.height, self.width):
            raise DomainError(
                f"intensity grid shape {arr.shape} does not match {self.height}x{self.width}"
            )
        if arr.size and (arr.min() < 0.0 or arr.max() > 1.0):
            raise DomainError("intensities must lie in [0, 1]")
        arr.setflags(write=False)
        object.__setattr__(self, "intensities", arr)

    def contains(self, x: float, y: float, strict: bool = False) -> bool:
        """Whether (x, y) lies in the image domain [0, w-1] x [0, h-1]."""
        if strict:
            return 0 < x < self.width - 1 and 0 < y < self.height - 1
        return 0 <= x <= self.width - 1 and 0 <= y <= self.height - 1


@dataclass(frozen=True)
class SeedStats:
    """Seed-neighborhood intensity statistics driving the terminal weights.

    mu_seed is the mean intensity in a small disc around the seed, mu_ring the
    mean at the template rim, and tau half their contrast (floored at one
    quantization step so constant images stay well-defined).
    """

    mu_seed: float
    mu_ring: float
    tau: float

    def __post_init__(self):
        if not (0.0 <= self.mu_seed <= 1.0 and 0.0 <= self.mu_ring <= 1.0):
            raise DomainError("mu_seed and mu_ring must lie in [0, 1]")
        if self.tau < EPSILON_TAU:
            raise DomainError(f"tau must be >= {EPSILON_TAU}, got {self.tau}")


def _read_pgm_tokens(data: bytes, count: int, start: int) -> tuple[list[int], int]:
    """Read `count` whitespace-separated ascii integers, skipping # comments."""
    tokens: list[int] = []
    i = start
    n = len(data)
    while len(tokens) < count:
        while i < n and data[i : i + 1].isspace():
            i += 1
        if i < n and data[i] == ord("#"):
            while i < n and data[i] != ord("\n"):
                i += 1
            continue
        j = i
        while j < n and not data[j : j + 1].isspace():
            j += 1
        if j == i:
            raise PgmFormatError("truncated header: expected more integer fields")
        token = data[i:j]
        if not token.isdigit():
            raise PgmFormatError(f"malformed header field {token!r}: not an integer")
        tokens.append(int(token))
        i = j
    return tokens, i


def load_image(path: str | os.PathLike, spacing: float = 1.0) -> GrayImage:
    """Load an 8-bit grayscale PGM (P2 or P5, maxval 255)."""
    try:
        with open(path, "rb") as fh:
            data = fh.read()
    except FileNotFoundError:
        raise PgmFormatError(f"no such image file: {path}") from None
    if len(data) < 2:
        raise PgmFormatError("file too short for a PGM header")
    magic = data[:2]
    if magic in (b"P3", b"P6"):
        raise PgmFormatError(f"magic {magic.decode()}: color images are not supported")
    if magic not in (b"P2", b"P5"):
        raise PgmFormatError(f"magic {data[:2]!r}: not a PGM (P2/P5) file")
    (width, height, maxval), pos = _read_pgm_tokens(data, 3, 2)
    if width < 1 or height < 1:
        raise PgmFormatError(f"size field: invalid dimensions {width}x{height}")
    if maxval != 255:
        raise PgmFormatError(f"maxval field: expected 255, got {maxval}")
    count = width * height
    if magic == b"P5":
        # exactly one whitespace byte separates maxval from the payload
        pos += 1
        raw = data[pos : pos + count]
        if len(raw) < count:
            raise PgmFormatError(
                f"pixel payload: expected {count} bytes, got {len(raw)}"
            )
        values = np.frombuffer(raw, dtype=np.uint8).astype(np.float64)
    else:
        try:
            pixels, _ = _read_pgm_tokens(data, count, pos)
        except PgmFormatError:
            raise PgmFormatError(f"pixel payload: expected {count} ascii values") from None
        values = np.asarray(pixels, dtype=np.float64)
        if values.size and values.max() > 255:
            raise PgmFormatError("pixel payload: value exceeds maxval 255")
    grid = (values / 255.0).reshape(height, width)
    return GrayImage(width=width, height=height, intensities=grid, spacing=spacing)


def pgm_bytes(img: GrayImage) -> bytes:
    """Encode as binary PGM (P5, maxval 255)."""
    raw = np.rint(img.intensities * 255.0).clip(0, 255).astype(np.uint8)
    header = f"P5\n{img.width} {img.height}\n255\n".encode("ascii")
    return header + raw.tobytes()


def save_pgm(img: GrayImage, path: str | os.PathLike) -> None:
    with open(path, "wb") as fh:
        fh.write(pgm_bytes(img))


def sample_bilinear(img: GrayImage, x, y):
    """Bilinear intensity at continuous (x, y); coordinates clamp to the border.

    Accepts scalars or arrays and returns values of the same shape.
    """
    xs = np.clip(np.asarray(x, dtype=np.float64), 0.0, img.width - 1.0)
    ys = np.clip(np.asarray(y, dtype=np.float64), 0.0, img.height - 1.0)
    x0 = np.floor(xs).astype(np.intp)
    y0 = np.floor(ys).astype(np.intp)
    x1 = np.minimum(x0 + 1, img.width - 1)
    y1 = np.minimum(y0 + 1, img.height - 1)
    fx = xs - x0
    fy = ys - y0
    grid = img.intensities
    v = (
        grid[y0, x0] * (1.0 - fx) * (1.0 - fy)
        + grid[y0, x1] * fx * (1.0 - fy)
        + grid[y1, x0] * (1.0 - fx) * fy
        + grid[y1, x1] * fx * fy
    )
    if np.isscalar(x) or np.ndim(x) == 0:
        return float(v)
    return v


def seed_stats(img: GrayImage, seed: tuple[float, float], cfg: TemplateConfig) -> SeedStats:
    """Contrast statistics for a seed: disc mean, rim mean, and tau.

    tau = max(EPSILON_TAU, |mu_seed - mu_ring| / 2). The rim is sampled at the
    outermost node position of every ray.
    """
    sx, sy = float(seed[0]), float(seed[1])
    if not img.contains(sx, sy):
        raise DomainError(f"seed ({sx}, {sy}) lies outside the image")
    disc_x = _SEED_DISC_OFFSETS[:, 0] + sx
    disc_y = _SEED_DISC_OFFSETS[:, 1] + sy
    mu_seed = float(np.mean(sample_bilinear(img, disc_x, disc_y)))
    dirs = ray_directions(cfg.num_rays)
    rim = node_radii(cfg)[-1]
    mu_ring = float(
        np.mean(sample_bilinear(img, sx + rim * dirs[:, 0], sy + rim * dirs[:, 1]))
    )
    tau = max(EPSILON_TAU, abs(mu_seed - mu_ring) / 2.0)
    return SeedStats(mu_seed=mu_seed, mu_ring=mu_ring, tau=tau)
