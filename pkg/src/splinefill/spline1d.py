"""Natural cubic spline fitting and evaluation on 1-D samples.

The directional predictor fits a spline through the neighbor samples of a
lost pixel (abscissae are signed step counts) and evaluates it at zero.
Outside the knot range the end segment's cubic polynomial is extended, so
one-sided stencils near borders still produce a value.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .imagecore import Direction, ImageGrid, ScratchMask
from .locality import collect_offsets


@dataclass(frozen=True)
class Spline:
    """Fitted natural cubic spline: knots, values and per-knot 2nd derivatives."""

    knots: tuple
    values: tuple
    second_derivatives: tuple


def solve_second_derivatives(xs: Sequence[float], ys: Sequence[float]) -> list:
    """Solve the natural-spline tridiagonal system for knot 2nd derivatives.

    End conditions are zero; n == 2 degenerates to the linear interpolant.
    """
    n = len(xs)
    if n < 2:
        raise ValueError("need at least 2 points to fit a spline")
    m = [0.0] * n
    if n == 2:
        return m
    # Thomas algorithm on the n-2 interior equations.
    cp = [0.0] * n  # scratch: modified superdiagonal
    dp = [0.0] * n  # scratch: modified rhs
    for i in range(1, n - 1):
        h0 = xs[i] - xs[i - 1]
        h1 = xs[i + 1] - xs[i]
        diag = 2.0 * (h0 + h1)
        rhs = 6.0 * ((ys[i + 1] - ys[i]) / h1 - (ys[i] - ys[i - 1]) / h0)
        if i > 1:
            # h0 is the subdiagonal entry coupling to m[i-1]
            denom = diag - h0 * cp[i - 1]
            cp[i] = h1 / denom
            dp[i] = (rhs - h0 * dp[i - 1]) / denom
        else:
            cp[i] = h1 / diag
            dp[i] = rhs / diag
    for i in range(n - 2, 0, -1):
        m[i] = dp[i] - cp[i] * m[i + 1]
    return m


def fit(xs: Sequence[float], ys: Sequence[float]) -> Spline:
    """Fit a natural cubic spline through (xs, ys); xs strictly increasing."""
    if len(xs) != len(ys):
        raise ValueError("xs and ys must have equal length")
    if len(xs) < 2:
        raise ValueError("need at least 2 points to fit a spline")
    for i in range(len(xs) - 1):
        if xs[i + 1] <= xs[i]:
            raise ValueError("xs must be strictly increasing")
    m = solve_second_derivatives(xs, ys)
    return Spline(tuple(xs), tuple(ys), tuple(m))


def eval_with_derivatives(
    xs: Sequence[float], ys: Sequence[float], m: Sequence[float], x: float
) -> float:
    """Evaluate the piecewise cubic given knot second derivatives.

    Queries outside [xs[0], xs[-1]] use the end segment's polynomial.
    """
    n = len(xs)
    # segment index: end segments also serve as extrapolants
    lo = 0
    if x >= xs[-2]:
        lo = n - 2
    elif x > xs[0]:
        hi = n - 2
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if xs[mid] <= x:
                lo = mid
            else:
                hi = mid - 1
    h = xs[lo + 1] - xs[lo]
    t = x - xs[lo]
    b = (ys[lo + 1] - ys[lo]) / h - h * (2.0 * m[lo] + m[lo + 1]) / 6.0
    return (
        ys[lo]
        + b * t
        + 0.5 * m[lo] * t * t
        + (m[lo + 1] - m[lo]) / (6.0 * h) * t * t * t
    )


def evaluate(spline: Spline, x: float) -> float:
    """Evaluate a fitted spline at x (end-segment extrapolation outside)."""
    return eval_with_derivatives(spline.knots, spline.values, spline.second_derivatives, x)


def predict_at_zero(xs: Sequence[float], ys: Sequence[float]) -> float:
    """Fit-and-evaluate-at-0 shortcut used by the engine's hot loop.

    Same math as fit + evaluate, with closed-form solves for the small knot
    counts the selector produces (n <= 4 covers the k_total=4 default).
    """
    n = len(xs)
    y0 = ys[0]
    for y in ys:
        if y != y0:
            break
    else:
        return y0
    if n == 2:
        return y0 + (ys[1] - y0) * (0.0 - xs[0]) / (xs[1] - xs[0])
    if n == 3:
        h0 = xs[1] - xs[0]
        h1 = xs[2] - xs[1]
        m1 = 6.0 * ((ys[2] - ys[1]) / h1 - (ys[1] - ys[0]) / h0) / (2.0 * (h0 + h1))
        m = (0.0, m1, 0.0)
    elif n == 4:
        h0 = xs[1] - xs[0]
        h1 = xs[2] - xs[1]
        h2 = xs[3] - xs[2]
        r1 = 6.0 * ((ys[2] - ys[1]) / h1 - (ys[1] - ys[0]) / h0)
        r2 = 6.0 * ((ys[3] - ys[2]) / h2 - (ys[2] - ys[1]) / h1)
        d1 = 2.0 * (h0 + h1)
        d2 = 2.0 * (h1 + h2)
        det = d1 * d2 - h1 * h1
        m = (0.0, (r1 * d2 - h1 * r2) / det, (d1 * r2 - h1 * r1) / det, 0.0)
    else:
        m = solve_second_derivatives(xs, ys)
    return eval_with_derivatives(xs, ys, m, 0.0)


def predict_direction(
    image: ImageGrid,
    mask: ScratchMask,
    p: tuple,
    direction: Direction,
    k_total: int = 4,
) -> Optional[float]:
    """Spline prediction at a lost pixel from one direction, clamped to [0, 1].

    Returns None when fewer than 2 known samples are available.
    """
    if image.channels != 1:
        raise ValueError("predict_direction expects a single-channel image")
    r, c = p
    h, w = mask.height, mask.width
    known = (~mask.missing).reshape(-1).tolist()
    offsets, _, _ = collect_offsets(
        known, w, h, r, c, direction.dr, direction.dc, k_total
    )
    if len(offsets) < 2:
        return None
    data = image.data
    ys = [data[r + o * direction.dr, c + o * direction.dc, 0] for o in offsets]
    value = predict_at_zero([float(o) for o in offsets], ys)
    return min(1.0, max(0.0, value))
