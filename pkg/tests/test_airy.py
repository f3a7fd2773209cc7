"""Airy evaluation against frozen 50-digit arbitrary-precision references."""

import math

import pytest
from hypothesis import given, strategies as st

from cornellspec import airy_ai, airy_ai_prime, airy_zero

# frozen from a 30-digit arbitrary-precision evaluation; spans the series,
# marching and asymptotic branches on both sides
AI_REFERENCE = {
    -20.0: -0.17640612707798469,
    -15.0: 0.27821749087082893,
    -9.5: 0.319103247719128201,
    -8.5: -0.330290237630208879,
    -7.0: 0.184280835250505637,
    -6.0: -0.329145173629823105,
    -5.1: 0.309525996287317516,
    -4.5: 0.292152781055959467,
    -4.0: -0.0702655329492895151,
    -1.0: 0.535560883292352119,
    0.0: 0.355028053887817239,
    0.5: 0.23169360648083349,
    2.0: 0.0349241304232743791,
    4.4: 0.000409973586386962156,
    5.0: 0.000108344428136074417,
    5.5: 0.0000336853119085998144,
    6.5: 2.79588234320491359e-6,
    7.0: 7.49212886399716708e-7,
    8.9: 3.34206104251870348e-9,
    9.5: 5.33026370461749163e-10,
    12.0: 1.39318468887536084e-13,
    20.0: 1.69167286867054031e-27,
}

AIP_REFERENCE = {
    -20.0: 0.892862856736471238,
    -15.0: 0.272374204308642021,
    -9.5: -0.108095318811871239,
    -8.5: -0.0323133482846391359,
    -7.0: -0.771008168410126548,
    -6.0: 0.345935487281342895,
    -5.1: 0.494585998384937055,
    -4.5: -0.523362532315747701,
    -4.0: -0.79062857536858138,
    -1.0: -0.0101605671166452094,
    0.0: -0.258819403792806798,
    0.5: -0.224910532664683893,
    2.0: -0.0530903844336536317,
    4.4: -0.000881892086491768072,
    5.0: -0.000247413890868462476,
    5.5: -0.0000804633913055651434,
    6.5: -7.23193146660179256e-6,
    7.0: -2.00815089473879199e-6,
    8.9: -1.00621099218369227e-8,
    9.5: -1.65663945937406663e-9,
    12.0: -4.85473655498530846e-13,
    20.0: -7.58639162574835496e-27,
}

AIRY_ZERO_REFERENCE = {
    1: -2.3381074104597670385,
    2: -4.0879494441309706166,
    3: -5.5205598280955510591,
    4: -6.7867080900717589988,
    5: -7.9441335871208531231,
    10: -12.8287767528657572,
    20: -20.53733290767756636,
    30: -26.986985111606367686,
    50: -38.021008677255254433,
    101: -60.858931764608923796,
    201: -96.367629107589078433,
}


@pytest.mark.parametrize("x,expected", sorted(AI_REFERENCE.items()))
def test_ai_reference_values(x, expected):
    assert airy_ai(x) == pytest.approx(expected, abs=1e-12, rel=1e-11)


@pytest.mark.parametrize("x,expected", sorted(AIP_REFERENCE.items()))
def test_aip_reference_values(x, expected):
    assert airy_ai_prime(x) == pytest.approx(expected, abs=1e-11, rel=1e-10)


def test_ai_at_zero():
    assert airy_ai(0.0) == pytest.approx(0.355028053887817, abs=1e-15)
    assert airy_ai_prime(0.0) == pytest.approx(-0.258819403792807, abs=1e-15)


def test_ai_near_first_zero():
    # -2.33811 is only a 6-digit rounding of the first zero
    assert abs(airy_ai(-2.33811)) < 5e-6


def test_aip_at_first_zero_is_simple_root():
    # finite-difference oracle: (Ai(x+h) - Ai(x-h)) / 2h at the printed zero
    h = 1e-6
    fd = (airy_ai(-2.33811 + h) - airy_ai(-2.33811 - h)) / (2.0 * h)
    value = airy_ai_prime(-2.33811)
    assert value == pytest.approx(fd, abs=1e-9)
    assert abs(value) == pytest.approx(0.70121, abs=1e-4)
    assert value > 0.0


def test_ai_decays_monotonically_on_positive_axis():
    previous = airy_ai_prime(1.0)
    for x in (2.0, 5.0, 10.0, 15.0, 20.0):
        current = airy_ai_prime(x)
        assert current < 0.0
        assert abs(current) < abs(previous)
        previous = current


@pytest.mark.parametrize("bad", [math.inf, -math.inf, math.nan])
def test_non_finite_arguments_rejected(bad):
    with pytest.raises(ValueError):
        airy_ai(bad)
    with pytest.raises(ValueError):
        airy_ai_prime(bad)


@pytest.mark.parametrize("k,expected", sorted(AIRY_ZERO_REFERENCE.items()))
def test_zero_reference_values(k, expected):
    assert airy_zero(k) == pytest.approx(expected, rel=1e-12)


@pytest.mark.parametrize("bad", [0, -1, -7])
def test_zero_index_must_be_positive(bad):
    with pytest.raises(ValueError):
        airy_zero(bad)


def test_zeros_are_roots_and_simple():
    for k in range(1, 51):
        z = airy_zero(k)
        assert abs(airy_ai(z)) <= 1e-9
        assert abs(airy_ai_prime(z)) > 0.3


def test_zeros_strictly_decreasing():
    zeros = [airy_zero(k) for k in range(1, 51)]
    for earlier, later in zip(zeros, zeros[1:]):
        assert later < earlier


def test_zeros_track_asymptotic_estimate():
    for k in range(5, 51):
        estimate = -(3.0 * math.pi * (4 * k - 1) / 8.0) ** (2.0 / 3.0)
        assert abs(airy_zero(k) - estimate) <= 0.01


def test_airy_equation_residual():
    # five-point second difference against x*Ai(x), step 1e-3
    h = 1e-3
    x = -10.0
    while x <= 5.0:
        stencil = [airy_ai(x + i * h) for i in (-2, -1, 0, 1, 2)]
        d2 = (-stencil[0] + 16 * stencil[1] - 30 * stencil[2]
              + 16 * stencil[3] - stencil[4]) / (12.0 * h * h)
        assert abs(d2 - x * airy_ai(x)) <= 1e-6
        x += 0.37


@given(st.floats(min_value=-20.0, max_value=20.0, allow_nan=False))
def test_ai_is_finite_and_bounded(x):
    value = airy_ai(x)
    assert math.isfinite(value)
    assert abs(value) < 0.6
