"""Fusion of the four directional predictions into one value.

When an edge was detected, only the prediction aligned with it is trusted.
Otherwise the present values are sorted and, with exactly four of them, the
extreme adjacent gap rule may discard one outlier: if the first (last) gap
is the strict unique maximum of the three adjacent gaps, the smallest
(largest) value is invalid. The kept values are averaged.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .edgeclass import EdgeClass, EdgeOrientation
from .imagecore import Direction


@dataclass(frozen=True)
class DirectionalPredictions:
    horizontal: Optional[float] = None
    vertical: Optional[float] = None
    diag45: Optional[float] = None
    diag135: Optional[float] = None

    def get(self, direction: Direction) -> Optional[float]:
        return {
            Direction.HORIZONTAL: self.horizontal,
            Direction.VERTICAL: self.vertical,
            Direction.DIAG45: self.diag45,
            Direction.DIAG135: self.diag135,
        }[direction]


def fuse_values(
    horizontal: Optional[float],
    vertical: Optional[float],
    diag45: Optional[float],
    diag135: Optional[float],
    orientation: EdgeOrientation,
) -> Optional[float]:
    """Scalar core of the fusion rule; None marks an unavailable direction."""
    if orientation is EdgeOrientation.VERTICAL and vertical is not None:
        return vertical
    if orientation is EdgeOrientation.HORIZONTAL and horizontal is not None:
        return horizontal

    present = [v for v in (horizontal, vertical, diag45, diag135) if v is not None]
    if not present:
        return None
    if min(present) == max(present):
        # unanimous values pass through exactly (no summation round-off)
        return present[0]
    if len(present) < 4:
        return sum(present) / len(present)

    v = sorted(present)
    d1 = v[1] - v[0]
    d2 = v[2] - v[1]
    d3 = v[3] - v[2]
    if d1 > d2 and d1 > d3:
        kept = v[1:]
    elif d3 > d1 and d3 > d2:
        kept = v[:3]
    else:
        kept = v
    return sum(kept) / len(kept)


def fuse(preds: DirectionalPredictions, edge: EdgeClass) -> Optional[float]:
    """Combine directional predictions under the edge override and gap rule."""
    return fuse_values(
        preds.horizontal, preds.vertical, preds.diag45, preds.diag135, edge.orientation
    )
