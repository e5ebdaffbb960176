"""Image and mask containers plus lossless 8-bit PNG I/O.

Pixels live as real intensities in [0, 1]; quantization to bytes happens
only when a file is written (round half away from zero).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from enum import Enum

import numpy as np
from PIL import Image

# Rec. 601 luma weights
LUMA_R = 0.299
LUMA_G = 0.587
LUMA_B = 0.114


class UnsupportedImageError(ValueError):
    """Raised for files we refuse to read (wrong bit depth, bad mask mode, ...)."""


class DimensionMismatchError(ValueError):
    """Raised when a paired image and mask disagree in size."""


class Direction(Enum):
    """The four interpolation directions with their unit (row, col) steps."""

    HORIZONTAL = (0, 1)
    VERTICAL = (1, 0)
    DIAG45 = (-1, 1)
    DIAG135 = (1, 1)

    @property
    def dr(self) -> int:
        return self.value[0]

    @property
    def dc(self) -> int:
        return self.value[1]


@dataclass(frozen=True)
class ImageGrid:
    """A 2-D grid of intensities, 1 or 3 channels, values in [0, 1].

    `data` is float64 with shape (height, width, channels).
    """

    data: np.ndarray

    def __post_init__(self):
        d = self.data
        if d.ndim != 3 or d.shape[2] not in (1, 3):
            raise ValueError(f"expected (h, w, 1|3) array, got shape {d.shape}")
        if d.shape[0] < 1 or d.shape[1] < 1:
            raise ValueError("image must be at least 1x1")
        if d.dtype != np.float64:
            raise ValueError("image data must be float64")

    @property
    def height(self) -> int:
        return self.data.shape[0]

    @property
    def width(self) -> int:
        return self.data.shape[1]

    @property
    def channels(self) -> int:
        return self.data.shape[2]

    @property
    def samples(self) -> np.ndarray:
        """Flat row-major view of all samples."""
        return self.data.reshape(-1)


@dataclass(frozen=True)
class ScratchMask:
    """Binary grid of lost pixels; True marks a missing pixel.

    `missing` is bool with shape (height, width).
    """

    missing: np.ndarray

    def __post_init__(self):
        m = self.missing
        if m.ndim != 2:
            raise ValueError(f"expected (h, w) array, got shape {m.shape}")
        if m.dtype != np.bool_:
            raise ValueError("mask must be boolean")

    @property
    def height(self) -> int:
        return self.missing.shape[0]

    @property
    def width(self) -> int:
        return self.missing.shape[1]


def check_pairing(image: ImageGrid, mask: ScratchMask) -> None:
    """Reject image/mask pairs whose dimensions disagree."""
    if (image.height, image.width) != (mask.height, mask.width):
        raise DimensionMismatchError(
            f"image is {image.width}x{image.height} but mask is "
            f"{mask.width}x{mask.height}"
        )


def _open_image(source) -> Image.Image:
    if isinstance(source, (str, os.PathLike)):
        if not os.path.exists(source):
            raise FileNotFoundError(f"no such image file: {source}")
    try:
        return Image.open(source)
    except FileNotFoundError:
        raise
    except Exception as exc:
        raise UnsupportedImageError(f"cannot decode image: {exc}") from exc


def load_image(source) -> ImageGrid:
    """Load an 8-bit gray or RGB raster file (alpha stripped) as an ImageGrid.

    `source` may be a path or a binary file object.
    """
    img = _open_image(source)
    if img.mode in ("I", "I;16", "I;16B", "I;16L", "F"):
        raise UnsupportedImageError(
            f"unsupported bit depth (mode {img.mode}); only 8-bit images are accepted"
        )
    if img.mode in ("L", "1", "LA"):
        arr = np.asarray(img.convert("L"), dtype=np.float64)[:, :, None]
    elif img.mode in ("RGB", "RGBA", "P", "PA"):
        arr = np.asarray(img.convert("RGB"), dtype=np.float64)
    else:
        raise UnsupportedImageError(f"unsupported image mode: {img.mode}")
    return ImageGrid(arr / 255.0)


def quantize(data: np.ndarray) -> np.ndarray:
    """Map [0, 1] reals to bytes: nearest integer of x*255, ties away from zero."""
    scaled = np.clip(data, 0.0, 1.0) * 255.0
    return np.floor(scaled + 0.5).astype(np.uint8)


def save_image(grid: ImageGrid, path) -> None:
    """Write an ImageGrid as an 8-bit PNG."""
    arr = quantize(grid.data)
    if grid.channels == 1:
        img = Image.fromarray(arr[:, :, 0], mode="L")
    else:
        img = Image.fromarray(arr, mode="RGB")
    img.save(path, format="PNG")


def load_mask(source) -> ScratchMask:
    """Load a single-channel mask file; byte > 127 marks a missing pixel."""
    img = _open_image(source)
    if img.mode == "1":
        img = img.convert("L")
    if img.mode != "L":
        raise UnsupportedImageError(
            f"mask must be single-channel 8-bit gray, got mode {img.mode}"
        )
    arr = np.asarray(img, dtype=np.uint8)
    return ScratchMask(arr > 127)


def save_mask(mask: ScratchMask, path) -> None:
    """Write a ScratchMask as an 8-bit gray PNG (white = missing)."""
    arr = np.where(mask.missing, 255, 0).astype(np.uint8)
    Image.fromarray(arr, mode="L").save(path, format="PNG")


def luminance(grid: ImageGrid) -> ImageGrid:
    """Collapse to one channel; Rec. 601 weights for RGB, identity for gray."""
    if grid.channels == 1:
        return ImageGrid(grid.data.copy())
    d = grid.data
    y = LUMA_R * d[:, :, 0] + LUMA_G * d[:, :, 1] + LUMA_B * d[:, :, 2]
    return ImageGrid(y[:, :, None].copy())
