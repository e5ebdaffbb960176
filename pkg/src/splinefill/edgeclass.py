"""Edge classification from auxiliary vectors.

The score for each axis is the absolute difference of the two flanking-side
means, gated on the evidence being trustworthy: each side must contribute at
least EDGE_MIN_SUPPORT usable samples and be internally coherent (peak-to-peak
spread at most EDGE_COHERENCE_LIMIT), otherwise the axis scores zero. Without
the gate a single stray flank pixel next to a wide hole can fake a huge
contrast and the override then hurts far more than it helps on natural
images; a genuine step edge has flat flanks on both sides and passes easily.

A Horizontal verdict means intensity changes across rows (the edge runs
along the row), so the horizontal directional prediction is the one to
trust; symmetrically for Vertical. Ties and sub-threshold scores yield None.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .locality import AuxiliaryVectors

DEFAULT_EDGE_THRESHOLD = 0.15
EDGE_MIN_SUPPORT = 3
EDGE_COHERENCE_LIMIT = 0.05


class EdgeOrientation(Enum):
    HORIZONTAL = "horizontal"
    VERTICAL = "vertical"
    NONE = "none"


@dataclass(frozen=True)
class EdgeClass:
    orientation: EdgeOrientation
    score_h: float
    score_v: float


def _side_score(aux: AuxiliaryVectors) -> float:
    for side in (aux.side_a, aux.side_b):
        if len(side) < EDGE_MIN_SUPPORT:
            return 0.0
        if max(side) - min(side) > EDGE_COHERENCE_LIMIT:
            return 0.0
    mean_a = sum(aux.side_a) / len(aux.side_a)
    mean_b = sum(aux.side_b) / len(aux.side_b)
    return abs(mean_a - mean_b)


def classify(
    aux_h: AuxiliaryVectors,
    aux_v: AuxiliaryVectors,
    threshold: float = DEFAULT_EDGE_THRESHOLD,
) -> EdgeClass:
    """Decide whether the lost pixel sits on a horizontal or vertical edge.

    aux_h flanks the horizontal selection (top/bottom rows) and scores
    horizontal edges; aux_v flanks the vertical selection (left/right
    columns) and scores vertical edges.
    """
    if not 0.0 < threshold < 1.0:
        raise ValueError("threshold must lie in (0, 1)")
    score_h = _side_score(aux_h)
    score_v = _side_score(aux_v)
    if max(score_h, score_v) < threshold or score_h == score_v:
        orientation = EdgeOrientation.NONE
    elif score_h > score_v:
        orientation = EdgeOrientation.HORIZONTAL
    else:
        orientation = EdgeOrientation.VERTICAL
    return EdgeClass(orientation, score_h, score_v)
