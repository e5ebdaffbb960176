"""Seeded synthesis of random thick-line scratch masks.

Each line gets its own PCG64 generator seeded with SeedSequence([seed,
line_index]), so a corpus stays stable when line_count grows and masks are
reproducible anywhere numpy's PCG64 is available. Per line the draws are, in
order: anchor row, anchor column, angle in [0, pi), length, thickness.

A line is rasterized by DDA stepping (unit increment along the dominant
axis) centered on its anchor, then dilated by a square of side = thickness
(floor-centered) and clipped to the image bounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .imagecore import ScratchMask

DEFAULT_LINE_COUNT = 10
DEFAULT_THICKNESS_RANGE = (1, 3)
DEFAULT_MIN_LENGTH = 20


@dataclass(frozen=True)
class LineMaskSpec:
    """Parameters of a random scratch mask; ranges are inclusive.

    length_max None means min(width, height) // 2, resolved per image.
    """

    line_count: int = DEFAULT_LINE_COUNT
    thickness_min: int = DEFAULT_THICKNESS_RANGE[0]
    thickness_max: int = DEFAULT_THICKNESS_RANGE[1]
    length_min: int = DEFAULT_MIN_LENGTH
    length_max: Optional[int] = None
    seed: int = 0

    def __post_init__(self):
        if self.line_count < 1:
            raise ValueError("line_count must be >= 1")
        if self.thickness_min < 1 or self.thickness_max < self.thickness_min:
            raise ValueError("invalid thickness range")
        if self.length_min < 2:
            raise ValueError("length must be >= 2")
        if self.length_max is not None and self.length_max < 2:
            raise ValueError("length must be >= 2")


def generate_mask(width: int, height: int, spec: LineMaskSpec) -> ScratchMask:
    """Draw line_count random thick segments into an empty mask."""
    if width < 8 or height < 8:
        raise ValueError("mask dimensions must be at least 8x8")
    length_max = spec.length_max
    if length_max is None:
        length_max = min(width, height) // 2
    # keep the inclusive range non-empty on small images
    length_min = min(spec.length_min, length_max)

    missing = np.zeros((height, width), dtype=np.bool_)
    for line in range(spec.line_count):
        rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence([spec.seed, line])))
        row = int(rng.integers(0, height))
        col = int(rng.integers(0, width))
        angle = float(rng.uniform(0.0, math.pi))
        length = int(rng.integers(length_min, length_max + 1))
        thickness = int(rng.integers(spec.thickness_min, spec.thickness_max + 1))
        _draw_segment(missing, row, col, angle, length, thickness)
    return ScratchMask(missing)


def _draw_segment(missing, row, col, angle, length, thickness):
    height, width = missing.shape
    dx = math.cos(angle)
    dy = math.sin(angle)
    scale = max(abs(dx), abs(dy))
    sx = dx / scale
    sy = dy / scale
    half = (length - 1) // 2
    t_lo = -half
    t_hi = length - 1 - half
    d_lo = -(thickness // 2)
    for t in range(t_lo, t_hi + 1):
        rr = round(row + t * sy)
        cc = round(col + t * sx)
        r0 = max(0, rr + d_lo)
        r1 = min(height, rr + d_lo + thickness)
        c0 = max(0, cc + d_lo)
        c1 = min(width, cc + d_lo + thickness)
        if r0 < r1 and c0 < c1:
            missing[r0:r1, c0:c1] = True
