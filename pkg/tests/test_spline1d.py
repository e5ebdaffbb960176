"""Spline solver tests against an independent dense linear-system oracle.

The oracle builds the full 4(n-1)-coefficient system of a natural cubic
spline (value, first/second derivative continuity, zero end curvature) and
solves it with numpy.linalg.solve -- a completely different formulation from
the shipped tridiagonal solver.
"""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from splinefill.imagecore import Direction
from splinefill.spline1d import (
    evaluate,
    fit,
    predict_at_zero,
    predict_direction,
    solve_second_derivatives,
)

from conftest import grid, mask_from


def dense_natural_spline(xs, ys):
    """Oracle: solve for all piecewise-cubic coefficients at once.

    Returns a callable evaluating the spline (end segments extended
    polynomially outside the knot range).
    """
    xs = [float(x) for x in xs]
    n = len(xs)
    nseg = n - 1
    A = np.zeros((4 * nseg, 4 * nseg))
    b = np.zeros(4 * nseg)
    row = 0
    for i in range(nseg):
        h = xs[i + 1] - xs[i]
        # value at both ends of the segment (local coordinate t = x - xs[i])
        A[row, 4 * i] = 1.0
        b[row] = ys[i]
        row += 1
        A[row, 4 * i : 4 * i + 4] = [1.0, h, h ** 2, h ** 3]
        b[row] = ys[i + 1]
        row += 1
    for i in range(nseg - 1):
        h = xs[i + 1] - xs[i]
        # first and second derivative continuity at interior knots
        A[row, 4 * i + 1 : 4 * i + 4] = [1.0, 2.0 * h, 3.0 * h ** 2]
        A[row, 4 * (i + 1) + 1] = -1.0
        row += 1
        A[row, 4 * i + 2 : 4 * i + 4] = [2.0, 6.0 * h]
        A[row, 4 * (i + 1) + 2] = -2.0
        row += 1
    # natural end conditions
    A[row, 2] = 2.0
    row += 1
    h_last = xs[-1] - xs[-2]
    A[row, 4 * (nseg - 1) + 2] = 2.0
    A[row, 4 * (nseg - 1) + 3] = 6.0 * h_last
    coeffs = np.linalg.solve(A, b)

    def ev(x):
        i = 0
        while i < nseg - 1 and x >= xs[i + 1]:
            i += 1
        t = x - xs[i]
        c0, c1, c2, c3 = coeffs[4 * i : 4 * i + 4]
        return c0 + c1 * t + c2 * t * t + c3 * t ** 3

    return ev


def random_instance(rng, n):
    """Integer-spaced knots (unit-step offsets, the solver's real domain)."""
    start = int(rng.integers(-10, 10))
    gaps = rng.integers(1, 5, size=n - 1)
    xs = [float(start)]
    for g in gaps:
        xs.append(xs[-1] + float(g))
    ys = rng.random(n).tolist()
    return xs, ys


class TestSolver:
    def test_needs_two_points(self):
        with pytest.raises(ValueError):
            solve_second_derivatives([0.0], [1.0])

    def test_two_points_linear(self):
        assert solve_second_derivatives([0.0, 1.0], [3.0, 7.0]) == [0.0, 0.0]

    def test_end_conditions_zero(self, rng):
        for n in range(3, 9):
            xs, ys = random_instance(rng, n)
            m = solve_second_derivatives(xs, ys)
            assert m[0] == 0.0 and m[-1] == 0.0

    def test_against_dense_oracle(self, rng):
        worst = 0.0
        for _ in range(300):
            n = int(rng.integers(2, 9))
            xs, ys = random_instance(rng, n)
            s = fit(xs, ys)
            oracle = dense_natural_spline(xs, ys)
            for x in np.linspace(xs[0], xs[-1], 17):
                worst = max(worst, abs(evaluate(s, float(x)) - oracle(float(x))))
        assert worst <= 1e-9


class TestFit:
    def test_rejects_unsorted(self):
        with pytest.raises(ValueError):
            fit([0.0, 2.0, 1.0], [0.0, 1.0, 2.0])

    def test_rejects_duplicates(self):
        with pytest.raises(ValueError):
            fit([0.0, 1.0, 1.0], [0.0, 1.0, 2.0])

    def test_rejects_length_mismatch(self):
        with pytest.raises(ValueError):
            fit([0.0, 1.0], [0.0])


class TestEvaluate:
    def test_constant_reproduction(self):
        s = fit([0.0, 1.0, 2.0, 3.0], [5.0, 5.0, 5.0, 5.0])
        for x in np.linspace(0.0, 3.0, 13):
            assert evaluate(s, float(x)) == pytest.approx(5.0, abs=1e-12)

    def test_affine_reproduction_interior(self):
        s = fit([0.0, 1.0, 3.0, 4.0], [0.0, 1.0, 3.0, 4.0])
        assert evaluate(s, 2.0) == pytest.approx(2.0, abs=1e-12)

    def test_quadratic_interior_value(self):
        # interior query of non-affine data, hand-solved 2x2 interior system
        s = fit([0.0, 1.0, 3.0, 4.0], [0.0, 1.0, 9.0, 16.0])
        assert evaluate(s, 2.0) == pytest.approx(3.875, abs=1e-12)

    def test_affine_extrapolation(self):
        s = fit([0.0, 1.0, 2.0, 3.0], [1.0, 3.0, 5.0, 7.0])
        assert evaluate(s, -1.0) == pytest.approx(-1.0, abs=1e-12)

    def test_knot_reproduction(self, rng):
        xs, ys = random_instance(rng, 6)
        s = fit(xs, ys)
        for x, y in zip(xs, ys):
            assert evaluate(s, x) == pytest.approx(y, abs=1e-12)

    def test_extrapolation_matches_oracle(self, rng):
        for _ in range(50):
            n = int(rng.integers(2, 8))
            xs, ys = random_instance(rng, n)
            s = fit(xs, ys)
            oracle = dense_natural_spline(xs, ys)
            for x in (xs[0] - 2.0, xs[-1] + 2.0):
                assert evaluate(s, x) == pytest.approx(oracle(x), abs=1e-9)


class TestPredictAtZero:
    def test_matches_fit_evaluate(self, rng):
        for _ in range(200):
            n = int(rng.integers(2, 9))
            xs, ys = random_instance(rng, n)
            expected = evaluate(fit(xs, ys), 0.0)
            assert predict_at_zero(xs, ys) == pytest.approx(expected, abs=1e-9)

    def test_constant_fast_path(self):
        assert predict_at_zero([-7.0, -5.0, 2.0], [0.3, 0.3, 0.3]) == 0.3

    def test_directional_stencil(self):
        # one-sided directional stencil: eval at 0 equals the fit oracle
        xs = [-2.0, -1.0, 1.0, 2.0]
        ys = [0.1, 0.2, 0.6, 0.7]
        oracle = dense_natural_spline(xs, ys)
        assert predict_at_zero(xs, ys) == pytest.approx(oracle(0.0), abs=1e-9)

    @settings(max_examples=100, deadline=None)
    @given(
        st.integers(2, 8),
        st.integers(0, 2 ** 32 - 1),
        st.integers(2, 7),
    )
    def test_abscissa_scale_invariance(self, n, seed, scale):
        r = np.random.default_rng(seed)
        xs, ys = random_instance(r, n)
        scaled = [x * scale for x in xs]
        assert predict_at_zero(scaled, ys) == pytest.approx(
            predict_at_zero(xs, ys), abs=1e-9
        )


class TestPredictDirection:
    def test_row_ramp_exact(self):
        img = grid(np.tile(np.arange(8) / 7.0, (3, 1)))
        miss = np.zeros((3, 8), bool)
        miss[1, 4] = True
        v = predict_direction(img, mask_from(miss), (1, 4), Direction.HORIZONTAL)
        assert v == pytest.approx(4 / 7.0, abs=1e-9)

    def test_too_few_samples_is_none(self):
        img = grid(np.zeros((1, 2)))
        miss = np.array([[True, False]])
        v = predict_direction(img, mask_from(miss), (0, 0), Direction.HORIZONTAL)
        assert v is None

    def test_clamped_to_unit_interval(self):
        # steeply increasing samples extrapolate above 1 before clamping
        img = grid(np.tile([[0.0, 0.0, 0.9, 1.0, 1.0]], (1, 1)))
        miss = np.array([[False, False, False, False, True]])
        v = predict_direction(img, mask_from(miss), (0, 4), Direction.HORIZONTAL)
        assert v is not None and 0.0 <= v <= 1.0
