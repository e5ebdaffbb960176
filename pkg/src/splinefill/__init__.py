"""Edge-aware scratch inpainting via adaptive directional spline interpolation."""

__version__ = "0.1.0"

from .engine import InpaintConfig, inpaint, inpaint_file
from .imagecore import (
    Direction,
    ImageGrid,
    ScratchMask,
    load_image,
    load_mask,
    luminance,
    save_image,
    save_mask,
)
from .maskgen import LineMaskSpec, generate_mask
from .metrics import MetricsReport, bench, psnr, ssim

__all__ = [
    "Direction",
    "ImageGrid",
    "InpaintConfig",
    "LineMaskSpec",
    "MetricsReport",
    "ScratchMask",
    "bench",
    "generate_mask",
    "inpaint",
    "inpaint_file",
    "load_image",
    "load_mask",
    "luminance",
    "psnr",
    "save_image",
    "save_mask",
    "ssim",
    "__version__",
]
