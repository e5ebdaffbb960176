"""PSNR / SSIM scoring, naive baselines and the benchmark harness.

Both metrics work on the 0-255 scale of the quantized 8-bit views, since
that is what ends up in files. SSIM follows the canonical parameterization:
luminance only, 11x11 Gaussian window with sigma 1.5, C1=(0.01*255)^2,
C2=(0.03*255)^2, aggregated over the valid (unpadded) region.
"""

from __future__ import annotations

import csv
import json
import math
import time
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Sequence

import numpy as np
from scipy.ndimage import distance_transform_edt
from scipy.signal import convolve2d

from . import imagecore
from .engine import InpaintConfig, inpaint
from .imagecore import ImageGrid, ScratchMask, check_pairing, luminance, quantize
from .maskgen import LineMaskSpec, generate_mask

SSIM_WINDOW = 11
SSIM_SIGMA = 1.5
SSIM_C1 = (0.01 * 255.0) ** 2
SSIM_C2 = (0.03 * 255.0) ** 2


@dataclass(frozen=True)
class MetricsReport:
    image_id: str
    psnr_db: float
    psnr_masked_db: float
    ssim: float
    elapsed_seconds: float
    method: str


def _check_same_shape(reference: ImageGrid, test: ImageGrid) -> None:
    if reference.data.shape != test.data.shape:
        raise imagecore.DimensionMismatchError(
            f"shapes differ: {reference.data.shape} vs {test.data.shape}"
        )


def psnr(reference: ImageGrid, test: ImageGrid) -> float:
    """Peak signal-to-noise ratio in dB over all samples; inf when identical."""
    _check_same_shape(reference, test)
    a = quantize(reference.data).astype(np.float64)
    b = quantize(test.data).astype(np.float64)
    mse = float(np.mean((a - b) ** 2))
    if mse == 0.0:
        return math.inf
    return 10.0 * math.log10(255.0 ** 2 / mse)


def psnr_masked(reference: ImageGrid, test: ImageGrid, mask: ScratchMask) -> float:
    """PSNR restricted to the masked pixels (diagnostic companion value)."""
    _check_same_shape(reference, test)
    check_pairing(reference, mask)
    sel = mask.missing
    if not sel.any():
        return math.inf
    a = quantize(reference.data).astype(np.float64)[sel]
    b = quantize(test.data).astype(np.float64)[sel]
    mse = float(np.mean((a - b) ** 2))
    if mse == 0.0:
        return math.inf
    return 10.0 * math.log10(255.0 ** 2 / mse)


def _gaussian_kernel() -> np.ndarray:
    radius = SSIM_WINDOW // 2
    x = np.arange(-radius, radius + 1, dtype=np.float64)
    g = np.exp(-0.5 * (x / SSIM_SIGMA) ** 2)
    g /= g.sum()
    return np.outer(g, g)


def ssim(reference: ImageGrid, test: ImageGrid) -> float:
    """Mean structural similarity on luminance, 0-255 scale."""
    if (reference.height, reference.width) != (test.height, test.width):
        raise imagecore.DimensionMismatchError("images differ in size")
    if reference.height < SSIM_WINDOW or reference.width < SSIM_WINDOW:
        raise ValueError(f"image smaller than the {SSIM_WINDOW}x{SSIM_WINDOW} window")
    x = quantize(luminance(reference).data)[:, :, 0].astype(np.float64)
    y = quantize(luminance(test).data)[:, :, 0].astype(np.float64)
    k = _gaussian_kernel()

    def filt(img):
        return convolve2d(img, k, mode="valid")

    ux = filt(x)
    uy = filt(y)
    uxx = filt(x * x)
    uyy = filt(y * y)
    uxy = filt(x * y)
    vx = uxx - ux * ux
    vy = uyy - uy * uy
    cov = uxy - ux * uy
    num = (2.0 * ux * uy + SSIM_C1) * (2.0 * cov + SSIM_C2)
    den = (ux * ux + uy * uy + SSIM_C1) * (vx + vy + SSIM_C2)
    return float(np.mean(num / den))


# ---------------------------------------------------------------------------
# Naive baselines for relative comparison


def nearest_fill(image: ImageGrid, mask: ScratchMask) -> ImageGrid:
    """Fill every masked pixel with its nearest known pixel's value."""
    check_pairing(image, mask)
    if not mask.missing.any():
        return ImageGrid(image.data.copy())
    _, (ir, ic) = distance_transform_edt(mask.missing, return_indices=True)
    out = image.data.copy()
    sel = mask.missing
    out[sel] = image.data[ir[sel], ic[sel]]
    return ImageGrid(out)


def _linear_fill_1d(values, known):
    """Linear interpolation across missing runs of one line; None if no knowns."""
    n = len(values)
    idx = [i for i in range(n) if known[i]]
    if not idx:
        return None
    out = list(values)
    for i in range(n):
        if known[i]:
            continue
        prev_k = next_k = None
        for j in range(i - 1, -1, -1):
            if known[j]:
                prev_k = j
                break
        for j in range(i + 1, n):
            if known[j]:
                next_k = j
                break
        if prev_k is not None and next_k is not None:
            w = (i - prev_k) / (next_k - prev_k)
            out[i] = values[prev_k] * (1.0 - w) + values[next_k] * w
        elif prev_k is not None:
            out[i] = values[prev_k]
        else:
            out[i] = values[next_k]
    return out


def linear_fill(image: ImageGrid, mask: ScratchMask) -> ImageGrid:
    """Axis-aligned linear fill: average of row-wise and column-wise interpolation."""
    check_pairing(image, mask)
    out = image.data.copy()
    miss = mask.missing
    if not miss.any():
        return ImageGrid(out)
    known = ~miss
    global_mean = (
        image.data[known].mean(axis=0)
        if known.any()
        else np.full(image.channels, 0.5)
    )
    for ch in range(image.channels):
        plane = image.data[:, :, ch]
        row_est = plane.copy()
        col_est = plane.copy()
        row_ok = np.zeros_like(miss)
        col_ok = np.zeros_like(miss)
        for r in range(image.height):
            filled = _linear_fill_1d(plane[r].tolist(), known[r].tolist())
            if filled is not None:
                row_est[r] = filled
                row_ok[r] = True
        for c in range(image.width):
            filled = _linear_fill_1d(plane[:, c].tolist(), known[:, c].tolist())
            if filled is not None:
                col_est[:, c] = filled
                col_ok[:, c] = True
        est = np.where(
            row_ok & col_ok,
            0.5 * (row_est + col_est),
            np.where(row_ok, row_est, np.where(col_ok, col_est, global_mean[ch])),
        )
        target = out[:, :, ch]
        target[miss] = est[miss]
    return ImageGrid(np.clip(out, 0.0, 1.0))


# ---------------------------------------------------------------------------
# Benchmark harness

METHODS = ("spline", "nearest", "linear")


def _image_seed(base_seed: int, image_index: int) -> int:
    ss = np.random.SeedSequence([base_seed, image_index])
    return int(ss.generate_state(1)[0])


def _bench_one(task) -> List[MetricsReport]:
    """Score one (image, seed) pair with every method; runs in a worker."""
    path, img_idx, seed, spec, cfg, methods = task
    path = Path(path)
    original = imagecore.load_image(path)
    line_seed = _image_seed(seed, img_idx)
    mask = generate_mask(
        original.width,
        original.height,
        LineMaskSpec(
            line_count=spec.line_count,
            thickness_min=spec.thickness_min,
            thickness_max=spec.thickness_max,
            length_min=spec.length_min,
            length_max=spec.length_max,
            seed=line_seed,
        ),
    )
    damaged_data = original.data.copy()
    damaged_data[mask.missing] = 0.0
    damaged = ImageGrid(damaged_data)
    image_id = f"{path.stem}@{seed}"
    rows = []
    for method in methods:
        t0 = time.perf_counter()
        if method == "spline":
            restored = inpaint(damaged, mask, cfg)
        elif method == "nearest":
            restored = nearest_fill(damaged, mask)
        elif method == "linear":
            restored = linear_fill(damaged, mask)
        else:
            raise ValueError(f"unknown method: {method}")
        elapsed = time.perf_counter() - t0
        rows.append(
            MetricsReport(
                image_id=image_id,
                psnr_db=psnr(original, restored),
                psnr_masked_db=psnr_masked(original, restored, mask),
                ssim=ssim(original, restored),
                elapsed_seconds=elapsed,
                method=method,
            )
        )
    return rows


def bench(
    dataset_dir,
    spec: LineMaskSpec,
    cfg: Optional[InpaintConfig] = None,
    seeds: Optional[Sequence[int]] = None,
    methods: Sequence[str] = METHODS,
    jobs: int = 1,
) -> tuple:
    """Corrupt each dataset image with a seeded mask, restore it and score it.

    Returns (rows, summary): one MetricsReport per image/seed/method, and a
    dict of per-method means. With jobs > 1, (image, seed) pairs run in a
    process pool; each timing still comes from a dedicated single-threaded
    inpaint call, and row order stays deterministic.
    """
    if cfg is None:
        cfg = InpaintConfig()
    if seeds is None:
        seeds = [spec.seed]
    paths = sorted(Path(dataset_dir).glob("*.png"))
    if not paths:
        raise ValueError(f"no PNG images in {dataset_dir}")
    tasks = [
        (str(path), img_idx, seed, spec, cfg, tuple(methods))
        for img_idx, path in enumerate(paths)
        for seed in seeds
    ]
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_bench_one, tasks))
    else:
        chunks = [_bench_one(t) for t in tasks]
    rows = [row for chunk in chunks for row in chunk]
    return rows, summarize(rows)


def summarize(rows: Sequence[MetricsReport]) -> dict:
    """Per-method arithmetic means of each metric."""
    summary = {}
    for method in sorted({r.method for r in rows}):
        sel = [r for r in rows if r.method == method]
        summary[method] = {
            "psnr_db": sum(r.psnr_db for r in sel) / len(sel),
            "psnr_masked_db": sum(r.psnr_masked_db for r in sel) / len(sel),
            "ssim": sum(r.ssim for r in sel) / len(sel),
            "elapsed_seconds": sum(r.elapsed_seconds for r in sel) / len(sel),
            "count": len(sel),
        }
    return summary


def write_csv(rows: Sequence[MetricsReport], path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(
            ["image_id", "psnr_db", "psnr_masked_db", "ssim", "elapsed_seconds", "method"]
        )
        for r in rows:
            writer.writerow(
                [r.image_id, r.psnr_db, r.psnr_masked_db, r.ssim, r.elapsed_seconds, r.method]
            )


def _jsonable(value):
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, float) and math.isinf(value):
        return "inf"
    return value


def write_summary_json(summary: dict, path) -> None:
    with open(path, "w") as fh:
        json.dump(_jsonable(summary), fh, indent=2)
        fh.write("\n")
