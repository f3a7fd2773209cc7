"""Closed-form eigenvalue expressions against table anchors and each other."""

import math

import pytest
from hypothesis import given, settings, strategies as st

from cornellspec import (CORNELL_CONSTANTS, DEFAULT_DELTAS, airy_zero,
                         cornell_eigenvalue, cornell_f, cornell_g, lambda_linear,
                         lambda_linear_expanded, regge_l, regge_ln, regge_n,
                         regge_nl, wkb_linear)

nl = st.integers(min_value=0, max_value=40)


def test_delta_constants_near_sqrt_two_over_pi():
    root = math.sqrt(2.0 / math.pi)
    assert abs(DEFAULT_DELTAS.delta1 - root) < 2e-3
    assert abs(DEFAULT_DELTAS.delta2 - root) < 2e-3


def test_linear_formula_anchors():
    assert lambda_linear(0, 0) == pytest.approx(2.33811, abs=5e-6)
    assert lambda_linear(1, 1) == pytest.approx(4.88445, abs=5e-6)
    assert lambda_linear(0, 100) == pytest.approx(41.08631, abs=1e-4)


@given(st.integers(min_value=0, max_value=20))
def test_linear_formula_exact_at_l_zero(n):
    assert lambda_linear(n, 0) == pytest.approx(-airy_zero(n + 1), rel=5e-15)


def test_expanded_formula():
    assert lambda_linear_expanded(0, 0) == pytest.approx(2.33811, rel=0.01)
    assert lambda_linear_expanded(100, 100) == pytest.approx(80.65, abs=0.1)
    for n, l in [(100, 100), (0, 200), (200, 0)]:
        ratio = lambda_linear_expanded(n, l) / lambda_linear(n, l)
        assert ratio == pytest.approx(1.0, abs=1e-3)


def test_wkb_anchors():
    assert wkb_linear(0, 0) == pytest.approx(2.32025, abs=1e-5)
    assert wkb_linear(0, 1) == pytest.approx(3.26163, abs=1e-5)
    assert wkb_linear(1, 8) == pytest.approx(9.02137, abs=1e-5)


@given(st.integers(min_value=0, max_value=30), st.integers(min_value=0, max_value=15))
def test_wkb_depends_on_n_plus_half_l(n, l):
    assert wkb_linear(n, 2 * l) == pytest.approx(wkb_linear(n + l, 0), rel=1e-14)


def test_regge_asymptotics():
    assert regge_n(0) == 0.0
    assert regge_l(0) == 0.0
    assert regge_n(100) == pytest.approx(lambda_linear(100, 0), rel=0.02)
    assert regge_l(100) == pytest.approx(lambda_linear(0, 100), rel=0.02)
    assert regge_nl(50, 50) == pytest.approx(regge_n(100), rel=1e-14)
    assert regge_ln(80, 20) == pytest.approx(regge_l(100), rel=1e-14)


def test_cornell_g():
    assert cornell_g(0.0) == 0.0
    assert cornell_g(1e9) == pytest.approx(CORNELL_CONSTANTS.f1, rel=1e-12)
    expected = CORNELL_CONSTANTS.f1 * (1.0 - math.exp(-CORNELL_CONSTANTS.f2))
    assert cornell_g(1.0) == pytest.approx(expected, rel=1e-14)


@given(st.integers(min_value=0, max_value=10), st.integers(min_value=0, max_value=10))
def test_cornell_f_is_one_at_zero_strength(n, l):
    assert cornell_f(0.0, n, l) == 1.0


@given(st.integers(min_value=0, max_value=10), st.integers(min_value=0, max_value=10))
@settings(max_examples=40)
def test_cornell_reduces_to_linear_formula(n, l):
    assert cornell_eigenvalue(0.0, n, l) == pytest.approx(lambda_linear(n, l), rel=1e-14)


def test_cornell_fit_anchors():
    # the (0, 0) point is printed twice in the reference table, as 1.39750
    # and 1.39749; the formula value sits between the two roundings
    assert cornell_eigenvalue(1.0, 0, 0) == pytest.approx(1.397489, abs=5e-6)
    assert cornell_eigenvalue(1.0, 0, 5) == pytest.approx(6.24822, abs=1e-5)
    assert cornell_eigenvalue(1.0, 3, 0) == pytest.approx(6.39233, abs=1e-5)


def test_cornell_fit_large_quantum_number_anchor():
    assert lambda_linear(100, 100) == pytest.approx(80.650, abs=2e-3)


def test_domain_validation():
    with pytest.raises(ValueError):
        lambda_linear(-1, 0)
    with pytest.raises(ValueError):
        wkb_linear(0, -1)
    with pytest.raises(ValueError):
        cornell_eigenvalue(-0.5, 0, 0)
    with pytest.raises(ValueError):
        cornell_f(math.nan, 0, 0)
    with pytest.raises(ValueError):
        cornell_g(-1.0)
