"""Power-series solution of the scaled radial equation.

The reduced wavefunction is expanded as R(xi) = sum_i c_i xi^(i+l+1).
Coefficients come from a four-term recurrence; the same numbers are also
expressible as ratios of banded determinants and as a finite continued
fraction, and all three forms are kept so they can cross-check each other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

__all__ = [
    "SeriesParams",
    "SeriesCoefficients",
    "ContinuedFractionDet",
    "RadialValue",
    "coefficients_by_recurrence",
    "det_b",
    "det_a_matrix",
    "det_a_cf",
    "radial_wavefunction",
    "ode_residual",
    "truncation_ratio",
]

DEFAULT_COUNT = 120


@dataclass(frozen=True)
class SeriesParams:
    """Dimensionless inputs: Coulomb strength a >= 0, orbital l >= 0, candidate eigenvalue lam."""

    a: float
    l: int
    lam: float

    def __post_init__(self):
        if not (self.a >= 0.0 and math.isfinite(self.a)):
            raise ValueError("Coulomb strength a must be a finite non-negative real")
        if self.l < 0 or self.l != int(self.l):
            raise ValueError("orbital number l must be a non-negative integer")
        if not math.isfinite(self.lam):
            raise ValueError("candidate eigenvalue must be finite")


@dataclass(frozen=True)
class SeriesCoefficients:
    c: tuple[float, ...]
    params: SeriesParams
    count: int


class ContinuedFractionDet(NamedTuple):
    value: float
    used_fallback: bool


class RadialValue(NamedTuple):
    value: float
    last_term: float


def coefficients_by_recurrence(params: SeriesParams, count: int) -> SeriesCoefficients:
    """c[0..count] with c[0] = 1 and
    c[j] = (-a*c[j-1] - lam*c[j-2] + c[j-3]) / (j*(j + 2l + 1)).
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    a, l, lam = params.a, params.l, params.lam
    c = [1.0]
    for j in range(1, count + 1):
        cm1 = c[j - 1]
        cm2 = c[j - 2] if j >= 2 else 0.0
        cm3 = c[j - 3] if j >= 3 else 0.0
        c.append((-a * cm1 - lam * cm2 + cm3) / (j * (j + 2 * l + 1)))
    return SeriesCoefficients(c=tuple(c), params=params, count=count)


def det_b(i: int, l: int) -> float:
    """i! * prod_{j=1..i} (2l + j + 1), with overflow reported."""
    if i < 1:
        raise ValueError("determinant order must be >= 1")
    if l < 0:
        raise ValueError("orbital number l must be >= 0")
    out = 1.0
    for j in range(1, i + 1):
        out *= j * (2 * l + j + 1)
        if math.isinf(out):
            raise OverflowError(f"det_b overflowed at factor j={j} (i={i}, l={l})")
    return out


def det_a_matrix(i: int, params: SeriesParams) -> float:
    """Determinant of the i x i banded matrix with superdiagonal p(p+1+2l),
    diagonal a, subdiagonal lam and second subdiagonal -1.

    The band structure collapses Laplace expansion along the last row to a
    four-term linear recurrence, so no dense determinant is ever formed.
    """
    if i < 1:
        raise ValueError("determinant order must be >= 1")
    a, l, lam = params.a, params.l, params.lam
    d_m3, d_m2, d_m1 = 0.0, 0.0, 1.0   # D_{-2}, D_{-1}, D_0
    det = a
    for m in range(1, i + 1):
        det = (a * d_m1
               - lam * (m - 1) * (m + 2 * l) * d_m2
               - (m - 1) * (m - 2) * (m + 2 * l) * (m - 1 + 2 * l) * d_m3)
        d_m3, d_m2, d_m1 = d_m2, d_m1, det
    return det


def det_a_cf(i: int, params: SeriesParams) -> ContinuedFractionDet:
    """Same determinant through the finite continued fraction, evaluated
    bottom-up; the numerator form is the telescoped product of the partial
    denominators.  A vanishing intermediate denominator (a = 0 always
    triggers one) falls back to det_a_matrix with the flag set.
    """
    if i < 1:
        raise ValueError("determinant order must be >= 1")
    a, l, lam = params.a, params.l, params.lam
    if i == 1:
        return ContinuedFractionDet(a, False)

    tiny = 1e-12 * max(1.0, abs(a), abs(lam))
    tails = [0.0] * (i + 2)            # tails[s] = K_{r=s..i} a_r/a, tails[i+1] = 0
    for s in range(i, 1, -1):
        if s == i:
            num = -lam * (s - 1) * (s + 2 * l)
        else:
            inner = a + tails[s + 2]
            if abs(inner) < tiny:
                return ContinuedFractionDet(det_a_matrix(i, params), True)
            num = -(s - 1) * (s + 2 * l) * (lam + s * (s + 2 * l + 1) / inner)
        denom = a + tails[s + 1]
        if abs(denom) < tiny:
            return ContinuedFractionDet(det_a_matrix(i, params), True)
        tails[s] = num / denom

    det = 1.0
    for s in range(2, i + 2):
        det *= a + tails[s]
    if not math.isfinite(det):
        return ContinuedFractionDet(det_a_matrix(i, params), True)
    return ContinuedFractionDet(det, False)


def radial_wavefunction(coeffs: SeriesCoefficients, xi: float) -> RadialValue:
    """Truncated sum_i c_i xi^(i+l+1) by Horner's scheme, plus the magnitude
    of the last retained term as a truncation diagnostic."""
    if not coeffs.c:
        raise ValueError("empty coefficient sequence")
    if not (xi > 0.0):
        raise ValueError("xi must be positive")
    l = coeffs.params.l
    poly = 0.0
    for ci in reversed(coeffs.c):
        poly = poly * xi + ci
    value = poly * xi ** (l + 1)
    last = coeffs.c[-1] * xi ** (coeffs.count + l + 1)
    return RadialValue(value, abs(last))


def ode_residual(coeffs: SeriesCoefficients, xi: float) -> float:
    """-R'' + [l(l+1)/xi^2 + xi - a/xi - lam] R at xi, with R'' obtained by
    term-wise differentiation of the series (not finite differences)."""
    if not (xi > 0.0):
        raise ValueError("xi must be positive")
    p = coeffs.params
    l = p.l
    r = radial_wavefunction(coeffs, xi).value
    poly = 0.0
    for i in range(len(coeffs.c) - 1, -1, -1):
        poly = poly * xi + coeffs.c[i] * (i + l + 1) * (i + l)
    d2 = poly * xi ** (l - 1) if l >= 1 else poly / xi
    return -d2 + (l * (l + 1) / (xi * xi) + xi - p.a / xi - p.lam) * r


def truncation_ratio(coeffs: SeriesCoefficients, xi: float) -> float:
    """|last retained term| relative to the running maximum term magnitude."""
    if not (xi > 0.0):
        raise ValueError("xi must be positive")
    l = coeffs.params.l
    term = xi ** (l + 1)
    biggest = 0.0
    last = 0.0
    for ci in coeffs.c:
        last = abs(ci * term)
        if last > biggest:
            biggest = last
        term *= xi
    if biggest == 0.0:
        return 0.0
    return last / biggest
