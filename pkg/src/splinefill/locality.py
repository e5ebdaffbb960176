"""Adaptive neighbor selection along a direction, plus auxiliary vectors.

For a lost pixel the gap of consecutive missing pixels is measured on both
sides of the direction line; the side with the shorter gap contributes more
samples (3/1 split for the default of 4). Samples are consecutive known
pixels starting just beyond the missing run; a second hole or the image
border stops collection. Auxiliary vectors are the two lines flanking the
selection, used downstream for edge classification.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

from .imagecore import Direction, ImageGrid, ScratchMask


@dataclass(frozen=True)
class NeighborSelection:
    """Known samples picked for one direction.

    samples: (offset, value) pairs with strictly increasing signed offsets,
    offsets counted in unit steps along the direction. gap_before/gap_after
    are the consecutive missing-pixel runs on the negative/positive side.
    """

    direction: Direction
    samples: Tuple[Tuple[int, float], ...]
    gap_before: int
    gap_after: int


@dataclass(frozen=True)
class AuxiliaryVectors:
    """Intensities flanking a selection; masked or out-of-bounds entries omitted."""

    side_a: Tuple[float, ...]
    side_b: Tuple[float, ...]


def collect_offsets(
    known: list,
    width: int,
    height: int,
    r: int,
    c: int,
    dr: int,
    dc: int,
    k_total: int,
) -> Tuple[List[int], int, int]:
    """Core selection: signed step offsets of chosen samples plus the two gaps.

    `known` is a flat row-major list of booleans (True = usable pixel).
    Offsets are returned in increasing order. The border acts as a stop but
    is not counted in the gap totals.
    """
    stride = dr * width + dc
    idx = r * width + c
    # in-bounds step budget on each side (border is a stop, not a gap)
    big = 1 << 30
    if dr > 0:
        max_pos, max_neg = height - 1 - r, r
    elif dr < 0:
        max_pos, max_neg = r, height - 1 - r
    else:
        max_pos = max_neg = big
    if dc > 0:
        lim_p, lim_n = width - 1 - c, c
    elif dc < 0:
        lim_p, lim_n = c, width - 1 - c
    else:
        lim_p = lim_n = big
    if lim_p < max_pos:
        max_pos = lim_p
    if lim_n < max_neg:
        max_neg = lim_n

    # gap of consecutive missing pixels on each side
    a = 0
    j = idx - stride
    while a < max_neg and not known[j]:
        a += 1
        j -= stride
    b = 0
    j = idx + stride
    while b < max_pos and not known[j]:
        b += 1
        j += stride

    if b > a:
        k_before, k_after = k_total - 1, 1
    elif a > b:
        k_before, k_after = 1, k_total - 1
    else:
        k_before = k_after = k_total // 2

    # consecutive known pixels just beyond each missing run, up to k_total
    neg_avail = 0
    step = a + 1
    j = idx - step * stride
    while step <= max_neg and neg_avail < k_total and known[j]:
        neg_avail += 1
        step += 1
        j -= stride
    pos_avail = 0
    step = b + 1
    j = idx + step * stride
    while step <= max_pos and pos_avail < k_total and known[j]:
        pos_avail += 1
        step += 1
        j += stride

    take_neg = k_before if k_before < neg_avail else neg_avail
    take_pos = k_after if k_after < pos_avail else pos_avail
    deficit = k_total - take_neg - take_pos
    if deficit > 0:
        extra = min(deficit, neg_avail - take_neg)
        take_neg += extra
        deficit -= extra
    if deficit > 0:
        take_pos += min(deficit, pos_avail - take_pos)

    offsets = list(range(-a - take_neg, -a)) + list(range(b + 1, b + 1 + take_pos))
    return offsets, a, b


def select_neighbors(
    image: ImageGrid,
    mask: ScratchMask,
    p: tuple,
    direction: Direction,
    k_total: int = 4,
) -> NeighborSelection:
    """Pick up to k_total known samples around a lost pixel along a direction."""
    if image.channels != 1:
        raise ValueError("select_neighbors expects a single-channel image")
    if k_total < 2 or k_total % 2 != 0:
        raise ValueError("k_total must be an even integer >= 2")
    r, c = p
    if not mask.missing[r, c]:
        raise ValueError(f"pixel {p} is not masked")
    known = (~mask.missing).reshape(-1).tolist()
    offsets, a, b = collect_offsets(
        known, mask.width, mask.height, r, c, direction.dr, direction.dc, k_total
    )
    data = image.data
    samples = tuple(
        (o, float(data[r + o * direction.dr, c + o * direction.dc, 0]))
        for o in offsets
    )
    return NeighborSelection(direction, samples, a, b)


def aux_positions(
    offsets,
    r: int,
    c: int,
    axis: Direction,
) -> Tuple[List[tuple], List[tuple]]:
    """Flanking pixel coordinates for each selected offset and for the pixel itself."""
    if axis is Direction.HORIZONTAL:
        da, db = (-1, 0), (1, 0)
        dr, dc = 0, 1
    elif axis is Direction.VERTICAL:
        da, db = (0, -1), (0, 1)
        dr, dc = 1, 0
    else:
        raise ValueError("auxiliary vectors are defined for the two axes only")
    positions = sorted(set(offsets) | {0})
    side_a = [(r + o * dr + da[0], c + o * dc + da[1]) for o in positions]
    side_b = [(r + o * dr + db[0], c + o * dc + db[1]) for o in positions]
    return side_a, side_b


def extract_auxiliary(
    image: ImageGrid,
    mask: ScratchMask,
    p: tuple,
    axis: Direction,
    selection: NeighborSelection,
) -> AuxiliaryVectors:
    """Flanking intensities for an axis-aligned selection (masked entries omitted).

    Horizontal axis: side_a is one row above, side_b one row below.
    Vertical axis: side_a is one column left, side_b one column right.
    """
    if image.channels != 1:
        raise ValueError("extract_auxiliary expects a single-channel image")
    r, c = p
    h, w = mask.height, mask.width
    offs = [o for o, _ in selection.samples]
    pos_a, pos_b = aux_positions(offs, r, c, axis)
    data = image.data
    miss = mask.missing

    def gather(positions):
        out = []
        for rr, cc in positions:
            if 0 <= rr < h and 0 <= cc < w and not miss[rr, cc]:
                out.append(float(data[rr, cc, 0]))
        return tuple(out)

    return AuxiliaryVectors(gather(pos_a), gather(pos_b))
