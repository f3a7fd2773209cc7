"""Series coefficients, banded determinants and the continued fraction."""

import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cornellspec import (SeriesParams, airy_ai, airy_zero, coefficients_by_recurrence,
                         det_a_cf, det_a_matrix, det_b, ode_residual,
                         radial_wavefunction, solve_shooting, truncation_ratio)

params_strategy = st.builds(
    SeriesParams,
    a=st.floats(min_value=0.0, max_value=5.0),
    l=st.integers(min_value=0, max_value=6),
    lam=st.floats(min_value=-3.0, max_value=20.0),
)


def dense_banded_matrix(i: int, p: SeriesParams) -> np.ndarray:
    m = np.zeros((i, i))
    for row in range(1, i + 1):
        if row + 1 <= i:
            m[row - 1, row] = row * (row + 1 + 2 * p.l)
        m[row - 1, row - 1] = p.a
        if row - 1 >= 1:
            m[row - 1, row - 2] = p.lam
        if row - 2 >= 1:
            m[row - 1, row - 3] = -1.0
    return m


@given(params_strategy)
def test_first_two_coefficients(p):
    c = coefficients_by_recurrence(p, 2).c
    assert c[0] == 1.0
    assert c[1] == pytest.approx(-p.a / (2 * p.l + 2), rel=1e-14, abs=1e-300)
    expected = (p.a ** 2 - p.lam * (2 * p.l + 2)) / ((2 * p.l + 2) * 2 * (2 * p.l + 3))
    assert c[2] == pytest.approx(expected, rel=1e-13, abs=1e-16)


def determinant_scale(p: SeriesParams, i: int) -> float:
    """Magnitude of the intermediate determinants; rounding noise in any of
    the three evaluation routes is proportional to this, so comparisons
    near a zero of the determinant polynomial are measured against it."""
    return max(1.0, max(abs(det_a_matrix(j, p)) for j in range(1, i + 1)))


@given(params_strategy)
@settings(max_examples=60)
def test_recurrence_matches_determinant_ratio(p):
    c = coefficients_by_recurrence(p, 12).c
    for i in range(1, 13):
        expected = (-1) ** i * det_a_matrix(i, p) / det_b(i, p.l)
        scale = determinant_scale(p, i) / det_b(i, p.l)
        assert c[i] == pytest.approx(expected, rel=1e-10, abs=1e-12 * scale)


@given(params_strategy, st.integers(min_value=1, max_value=9))
@settings(max_examples=60)
def test_banded_determinant_matches_dense_determinant(p, i):
    dense = float(np.linalg.det(dense_banded_matrix(i, p)))
    tol = 1e-9 * determinant_scale(p, i)
    assert det_a_matrix(i, p) == pytest.approx(dense, rel=1e-9, abs=tol)


@given(params_strategy, st.integers(min_value=1, max_value=12))
@settings(max_examples=60)
def test_continued_fraction_matches_determinant(p, i):
    value, fallback = det_a_cf(i, p)
    tol = 1e-10 * determinant_scale(p, i)
    assert value == pytest.approx(det_a_matrix(i, p), rel=1e-10, abs=tol)
    if p.a == 0.0 and i >= 2 and p.lam != 0.0:
        assert fallback


def test_determinant_examples():
    p = SeriesParams(a=1.0, l=0, lam=2.0)
    assert det_a_matrix(1, p) == pytest.approx(1.0)
    assert det_a_matrix(2, p) == pytest.approx(1.0 - 2.0 * 2.0)
    assert det_a_cf(1, p).value == pytest.approx(1.0)
    assert det_a_cf(3, p).value == pytest.approx(det_a_matrix(3, p), rel=1e-12)
    p2 = SeriesParams(a=1.5, l=2, lam=3.7)
    assert det_a_cf(5, p2).value == pytest.approx(det_a_matrix(5, p2), rel=1e-12)


def test_cf_fallback_at_zero_coulomb_strength():
    p = SeriesParams(a=0.0, l=0, lam=2.0)
    value, fallback = det_a_cf(5, p)
    assert fallback
    assert value == det_a_matrix(5, p)


def test_det_b_values():
    assert det_b(1, 0) == 2.0
    assert det_b(2, 0) == 12.0
    # 3! * (2l+2)(2l+3)(2l+4) at l = 1: 6 * 4 * 5 * 6
    assert det_b(3, 1) == 720.0


def test_det_b_overflow_reports_index():
    with pytest.raises(OverflowError, match="j="):
        det_b(200, 3)


def test_invalid_orders_rejected():
    p = SeriesParams(a=1.0, l=0, lam=1.0)
    with pytest.raises(ValueError):
        coefficients_by_recurrence(p, 0)
    with pytest.raises(ValueError):
        det_a_matrix(0, p)
    with pytest.raises(ValueError):
        det_a_cf(0, p)
    with pytest.raises(ValueError):
        det_b(0, 0)


def test_params_validation():
    with pytest.raises(ValueError):
        SeriesParams(a=-1.0, l=0, lam=1.0)
    with pytest.raises(ValueError):
        SeriesParams(a=1.0, l=-2, lam=1.0)
    with pytest.raises(ValueError):
        SeriesParams(a=1.0, l=0, lam=math.nan)


def test_single_term_series():
    # c = [1, 0] at lam = 0, a = 0, so the xi^(l+1) term is all there is
    coeffs = coefficients_by_recurrence(SeriesParams(a=0.0, l=0, lam=0.0), 1)
    assert radial_wavefunction(coeffs, 2.0).value == pytest.approx(2.0, rel=1e-12)


def test_wavefunction_leading_power():
    p = SeriesParams(a=0.5, l=2, lam=4.0)
    coeffs = coefficients_by_recurrence(p, 40)
    small = radial_wavefunction(coeffs, 1e-5).value
    assert small == pytest.approx(1e-5 ** 3, rel=1e-4)
    with pytest.raises(ValueError):
        radial_wavefunction(coeffs, 0.0)
    with pytest.raises(ValueError):
        radial_wavefunction(coeffs, -1.0)


def test_series_reproduces_shifted_airy():
    # at a = 0, l = 0 the equation is the shifted Airy equation, so the
    # series at lam = -airy_zero(n+1) must be proportional to Ai(xi + zero)
    for n in range(3):
        zero = airy_zero(n + 1)
        coeffs = coefficients_by_recurrence(SeriesParams(a=0.0, l=0, lam=-zero), 120)
        ratios = []
        for xi in np.linspace(0.2, 3.0, 10):
            ratios.append(radial_wavefunction(coeffs, xi).value / airy_ai(xi + zero))
        spread = (max(ratios) - min(ratios)) / abs(np.mean(ratios))
        assert spread < 1e-6


def test_truncated_series_solves_the_equation():
    lam = solve_shooting(1.0, 1, 1).lam
    p = SeriesParams(a=1.0, l=1, lam=lam)
    coeffs = coefficients_by_recurrence(p, 120)
    grid = np.linspace(0.2, 2.0, 30)
    peak = max(abs(radial_wavefunction(coeffs, x).value) for x in grid)
    for x in grid:
        assert abs(ode_residual(coeffs, x)) <= 1e-5 * peak


def test_truncation_diagnostics():
    p = SeriesParams(a=1.0, l=0, lam=3.0)
    coeffs = coefficients_by_recurrence(p, 120)
    assert truncation_ratio(coeffs, 2.0) < 1e-10
    value, last = radial_wavefunction(coeffs, 2.0)
    assert last < 1e-10 * abs(value)
