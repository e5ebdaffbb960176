"""End-to-end inpainting: mask-driven passes over lost pixels.

Each pass predicts every still-unfilled masked pixel from the knowledge
state frozen at the start of the pass, so results do not depend on visit
order. Color channels are fused independently but share one luminance-based
edge verdict. Pixels no direction can reach survive until the pass limit and
are then filled from known 8-neighbors, or the global known mean as a last
resort.

The hot loop works on flat Python lists; numpy arrays are only built at the
boundaries.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from . import imagecore
from .edgeclass import (
    DEFAULT_EDGE_THRESHOLD,
    EDGE_COHERENCE_LIMIT,
    EDGE_MIN_SUPPORT,
    EdgeOrientation,
)
from .fusion import fuse_values
from .imagecore import (
    ImageGrid,
    LUMA_B,
    LUMA_G,
    LUMA_R,
    ScratchMask,
    check_pairing,
)
from .locality import collect_offsets
from .spline1d import predict_at_zero

_DIR_STEPS = ((0, 1), (1, 0), (-1, 1), (1, 1))  # H, V, 45deg, 135deg


@dataclass(frozen=True)
class InpaintConfig:
    k_total: int = 4
    edge_threshold: float = DEFAULT_EDGE_THRESHOLD
    max_passes: int = 8

    def __post_init__(self):
        if self.k_total < 2 or self.k_total % 2 != 0:
            raise ValueError("k_total must be an even integer >= 2")
        if not 0.0 < self.edge_threshold < 1.0:
            raise ValueError("edge_threshold must lie in (0, 1)")
        if self.max_passes < 1:
            raise ValueError("max_passes must be >= 1")


def _aux_score(lum, known, width, height, offsets, r, c, axis_dr, axis_dc, fr, fc):
    """Gated mean-difference score across the two lines flanking a selection.

    (fr, fc) is the flank step; entries that are masked or out of bounds are
    omitted. Same rule as edgeclass.classify: each side needs at least
    EDGE_MIN_SUPPORT entries with peak-to-peak spread within
    EDGE_COHERENCE_LIMIT, otherwise the score is zero.
    """
    side_a = []
    side_b = []
    for o in offsets:
        rr = r + o * axis_dr
        cc = c + o * axis_dc
        ra, ca = rr + fr, cc + fc
        if 0 <= ra < height and 0 <= ca < width:
            i = ra * width + ca
            if known[i]:
                side_a.append(lum[i])
        rb, cb = rr - fr, cc - fc
        if 0 <= rb < height and 0 <= cb < width:
            i = rb * width + cb
            if known[i]:
                side_b.append(lum[i])
    for side in (side_a, side_b):
        if len(side) < EDGE_MIN_SUPPORT:
            return 0.0
        if max(side) - min(side) > EDGE_COHERENCE_LIMIT:
            return 0.0
    return abs(sum(side_a) / len(side_a) - sum(side_b) / len(side_b))


def inpaint(
    image: ImageGrid,
    mask: ScratchMask,
    cfg: InpaintConfig | None = None,
    _permute=None,
) -> ImageGrid:
    """Reconstruct the masked pixels of an image; unmasked pixels pass through.

    `_permute` reorders the per-pass visit sequence and exists to let tests
    assert order independence.
    """
    if cfg is None:
        cfg = InpaintConfig()
    check_pairing(image, mask)
    height, width, nch = image.height, image.width, image.channels
    k_total = cfg.k_total
    threshold = cfg.edge_threshold

    chans = [image.data[:, :, k].reshape(-1).tolist() for k in range(nch)]
    known = np.logical_not(mask.missing).reshape(-1).tolist()
    todo = [i for i, k in enumerate(known) if not k]

    if todo:
        if nch == 1:
            lum = chans[0]
        else:
            r_, g_, b_ = chans
            lum = [
                LUMA_R * r_[i] + LUMA_G * g_[i] + LUMA_B * b_[i]
                for i in range(width * height)
            ]

        for _ in range(cfg.max_passes):
            if not todo:
                break
            order = todo if _permute is None else _permute(list(todo))
            filled = []
            for idx in order:
                r, c = divmod(idx, width)
                dir_offsets = []
                for dr, dc in _DIR_STEPS:
                    offs, _, _ = collect_offsets(
                        known, width, height, r, c, dr, dc, k_total
                    )
                    dir_offsets.append(offs if len(offs) >= 2 else None)
                if all(o is None for o in dir_offsets):
                    continue

                chan_preds = []
                uniform = True
                for chan in chans:
                    preds = []
                    first = None
                    for (dr, dc), offs in zip(_DIR_STEPS, dir_offsets):
                        if offs is None:
                            preds.append(None)
                            continue
                        stride = dr * width + dc
                        ys = [chan[idx + o * stride] for o in offs]
                        v = predict_at_zero(offs, ys)
                        v = min(1.0, max(0.0, v))
                        preds.append(v)
                        if first is None:
                            first = v
                        elif v != first:
                            uniform = False
                    chan_preds.append(preds)

                if uniform:
                    # all present predictions agree per channel; the edge
                    # verdict cannot change the fused value
                    orientation = EdgeOrientation.NONE
                else:
                    # shared edge verdict from luminance
                    pos_h = sorted(set(dir_offsets[0] or ()) | {0})
                    pos_v = sorted(set(dir_offsets[1] or ()) | {0})
                    score_h = _aux_score(
                        lum, known, width, height, pos_h, r, c, 0, 1, -1, 0
                    )
                    score_v = _aux_score(
                        lum, known, width, height, pos_v, r, c, 1, 0, 0, -1
                    )
                    if max(score_h, score_v) < threshold or score_h == score_v:
                        orientation = EdgeOrientation.NONE
                    elif score_h > score_v:
                        orientation = EdgeOrientation.HORIZONTAL
                    else:
                        orientation = EdgeOrientation.VERTICAL

                vals = [fuse_values(*preds, orientation) for preds in chan_preds]
                filled.append((idx, vals))

            if not filled:
                break
            for idx, vals in filled:
                for k in range(nch):
                    chans[k][idx] = vals[k]
                known[idx] = True
                if nch == 3:
                    lum[idx] = (
                        LUMA_R * chans[0][idx]
                        + LUMA_G * chans[1][idx]
                        + LUMA_B * chans[2][idx]
                    )
            todo = [i for i in todo if not known[i]]

        if todo:
            _fill_leftovers(chans, known, todo, width, height)

    out = image.data.copy()
    flat_missing = mask.missing.reshape(-1)
    for k in range(nch):
        col = np.asarray(chans[k], dtype=np.float64)
        plane = out[:, :, k].reshape(-1)
        plane[flat_missing] = np.clip(col[flat_missing], 0.0, 1.0)
        out[:, :, k] = plane.reshape(height, width)
    return ImageGrid(out)


def _fill_leftovers(chans, known, todo, width, height):
    """Known 8-neighbor mean, else global known mean (frozen snapshot)."""
    nch = len(chans)
    n_known = sum(known)
    if n_known:
        global_means = [
            sum(v for v, k in zip(chan, known) if k) / n_known for chan in chans
        ]
    else:
        global_means = [0.5] * nch
    fills = []
    for idx in todo:
        r, c = divmod(idx, width)
        neigh = []
        for dr in (-1, 0, 1):
            for dc in (-1, 0, 1):
                if dr == 0 and dc == 0:
                    continue
                rr, cc = r + dr, c + dc
                if 0 <= rr < height and 0 <= cc < width and known[rr * width + cc]:
                    neigh.append(rr * width + cc)
        if neigh:
            vals = [sum(chan[i] for i in neigh) / len(neigh) for chan in chans]
        else:
            vals = list(global_means)
        fills.append((idx, vals))
    for idx, vals in fills:
        for k in range(nch):
            chans[k][idx] = vals[k]
        known[idx] = True


def inpaint_file(image_path, mask_path, out_path, cfg: InpaintConfig | None = None):
    """Load, inpaint, save; returns wall-clock seconds of the inpaint call only."""
    image = imagecore.load_image(image_path)
    mask = imagecore.load_mask(mask_path)
    check_pairing(image, mask)
    t0 = time.perf_counter()
    result = inpaint(image, mask, cfg)
    elapsed = time.perf_counter() - t0
    imagecore.save_image(result, out_path)
    return elapsed
