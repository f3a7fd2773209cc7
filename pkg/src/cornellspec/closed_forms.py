"""Closed-form eigenvalue expressions for the scaled radial problem.

Covers the linear-potential formula built on Airy zeros, its large
quantum-number expansion, the semiclassical (WKB) prescription, the Regge
asymptotics, the exact Coulomb levels, and the fitted Coulomb-plus-linear
eigenvalue surface.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .airy import airy_zero

__all__ = [
    "DeltaConstants",
    "CornellFitConstants",
    "DEFAULT_DELTAS",
    "CORNELL_CONSTANTS",
    "lambda_linear",
    "lambda_linear_expanded",
    "wkb_linear",
    "regge_n",
    "regge_nl",
    "regge_l",
    "regge_ln",
    "cornell_f",
    "cornell_g",
    "cornell_eigenvalue",
]


@dataclass(frozen=True)
class DeltaConstants:
    """Fitted interpolation constants; both are within 2e-3 of sqrt(2/pi)."""

    delta1: float = 0.797533
    delta2: float = 0.797804
    delta: float = 0.798


DEFAULT_DELTAS = DeltaConstants()

# pi^(2/3)/3^(1/3), computed rather than hard-coded
_RC = math.pi ** (2.0 / 3.0) / 3.0 ** (1.0 / 3.0)


def _interp_ratio(n: int, l: int, consts: DeltaConstants) -> float:
    num = consts.delta1 * l + _RC * consts.delta2 * n + 1.0
    den = _RC * (consts.delta1 * l + consts.delta2 * n) + 1.0
    return num / den


def _check_nl(n: int, l: int) -> None:
    if n < 0 or n != int(n):
        raise ValueError("radial number n must be a non-negative integer")
    if l < 0 or l != int(l):
        raise ValueError("orbital number l must be a non-negative integer")


def lambda_linear(n: int, l: int, consts: DeltaConstants = DEFAULT_DELTAS) -> float:
    """Linear-potential eigenvalue: an interpolating ratio in (n, l) times
    the (n+l+1)-th Airy zero.  At l = 0 the ratio is identically 1, so the
    value reduces to the exact -airy_zero(n+1)."""
    _check_nl(n, l)
    return -_interp_ratio(n, l, consts) * airy_zero(n + l + 1)


def lambda_linear_expanded(n: int, l: int, delta: float = 0.798) -> float:
    """Large-(n+l) expansion of lambda_linear built on the asymptotic form
    of the Airy zeros; stays within a percent even at n = l = 0."""
    _check_nl(n, l)
    c = (3.0 * math.pi) ** (2.0 / 3.0) / 3.0
    lead = (12.0 * math.pi) ** (2.0 / 3.0) / 4.0 * (l + n + 0.75) ** (2.0 / 3.0)
    return lead * (delta * (l + c * n) + 1.0) / (c * delta * (l + n) + 1.0)


def wkb_linear(n: int, l: int) -> float:
    """Semiclassical level of the linear potential,
    [(3*pi/2)*(n + l/2 + 3/4)]^(2/3)."""
    _check_nl(n, l)
    return (1.5 * math.pi * (n + 0.5 * l + 0.75)) ** (2.0 / 3.0)


def regge_n(n: int) -> float:
    """Leading radial trajectory: lambda^3 ~ ((3*pi/2) n)^2."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return (1.5 * math.pi * n) ** (2.0 / 3.0)


def regge_nl(n: int, l: int) -> float:
    """Radial trajectory with n + l as the principal-like number."""
    _check_nl(n, l)
    return (1.5 * math.pi * (n + l)) ** (2.0 / 3.0)


def regge_l(l: int) -> float:
    """Leading orbital trajectory: lambda^3 ~ ((3^(3/2)/2) l)^2."""
    if l < 0:
        raise ValueError("l must be >= 0")
    return (0.5 * 3.0 ** 1.5 * l) ** (2.0 / 3.0)


def regge_ln(l: int, n: int) -> float:
    """Orbital trajectory with l + n as the principal-like number."""
    _check_nl(n, l)
    return (0.5 * 3.0 ** 1.5 * (l + n)) ** (2.0 / 3.0)


@dataclass(frozen=True)
class CornellFitConstants:
    """Fitted constants of the Coulomb-plus-linear eigenvalue surface.

    The dl5 entry is printed as a second "al5" in the source listing of the
    constants; it is read as dl5 here, which is the only assignment that
    leaves the d-block complete and reproduces the reference tables.
    """

    al1: float = -0.0131096
    al2: float = -0.0526298
    al3: float = 0.000656495
    al4: float = 5.04779
    al5: float = 1.59813
    bl1: float = 0.214579
    bl2: float = -0.0439848
    bl3: float = 0.00362465
    bl4: float = -0.22573
    bl5: float = 0.839639
    cl1: float = -0.689677
    cl2: float = -1.91553
    cl3: float = -0.274089
    cl4: float = 4.19812
    cl5: float = 0.75866
    dl1: float = 0.365051
    dl2: float = 0.148248
    dl3: float = 0.0362142
    dl4: float = 1.43633
    dl5: float = 0.621341
    an1: float = 0.254949
    an2: float = 0.500001
    bn1: float = 1.29783
    bn2: float = 0.77
    cn1: float = 0.0400669
    cn2: float = 1.61998
    dn1: float = 0.433161
    dn2: float = 1.92501
    en1: float = 0.4
    en2: float = 0.520996
    f1: float = 0.00685891
    f2: float = 8.47589
    deltas: DeltaConstants = field(default_factory=DeltaConstants)


CORNELL_CONSTANTS = CornellFitConstants()

_DENOM_FLOOR = 1e-9


def cornell_f(a: float, n: int, l: int,
              consts: CornellFitConstants = CORNELL_CONSTANTS) -> float:
    """Coulomb-strength damping factor of the Airy term, f(0, n, l) = 1.

    The closing denominator term uses (en2*n + 1)/(en1*n + 1); with the
    constants as listed, only this orientation reproduces the reference
    eigenvalue tables (the straight reading is off by several percent for
    every n > 0).
    """
    if not (a >= 0.0 and math.isfinite(a)):
        raise ValueError("Coulomb strength a must be a finite non-negative real")
    _check_nl(n, l)
    k = consts
    x = a ** 0.4

    s32 = (k.an1 * n + l) ** 1.5
    s3 = (k.an2 * n + l) ** 3
    num1 = k.al1 + k.al2 * s32 + k.al3 * s3
    den1 = k.al4 * s32 + k.al5 * s3 + 1.0

    sq = math.sqrt(k.bn1 * n + l)
    lin = k.bn2 * n + l
    num2 = k.bl1 + k.bl2 * sq + k.bl3 * lin
    den2 = k.bl4 * sq + k.bl5 * lin + 1.0

    q2 = (k.cn1 * n + l) ** 2
    q4 = (k.cn2 * n + l) ** 4
    num3 = k.cl1 + k.cl2 * q2 + k.cl3 * q4
    den3 = k.cl4 * q2 + k.cl5 * q4 + 1.0

    w1 = k.dn1 * n + l
    w2 = (k.dn2 * n + l) ** 2
    num4 = k.dl1 + k.dl2 * w1 + k.dl3 * w2
    den4 = k.dl4 * w1 + k.dl5 * w2 + 1.0

    en_term = (k.en2 * n + 1.0) / (k.en1 * n + 1.0)
    big_den = (num3 / den3 + (num4 / den4) * x) * x + en_term

    for d in (den1, den2, den3, den4, big_den):
        if abs(d) < _DENOM_FLOOR:
            raise ArithmeticError("near-vanishing denominator in the fit evaluation")

    return 1.0 - ((num1 / den1 + (num2 / den2) * x) * x) / big_den


def cornell_g(a: float, consts: CornellFitConstants = CORNELL_CONSTANTS) -> float:
    """Saturating offset f1*(1 - exp(-f2*a)); zero at a = 0."""
    if not (a >= 0.0 and math.isfinite(a)):
        raise ValueError("Coulomb strength a must be a finite non-negative real")
    return consts.f1 * (1.0 - math.exp(-consts.f2 * a))


def cornell_eigenvalue(a: float, n: int, l: int,
                       consts: CornellFitConstants = CORNELL_CONSTANTS) -> float:
    """Fitted Coulomb-plus-linear eigenvalue:
    Coulomb level - interpolating ratio * airy_zero(n+l+1) * f(a,n,l) + g(a).
    Reduces exactly to lambda_linear(n, l) at a = 0."""
    if not (a >= 0.0 and math.isfinite(a)):
        raise ValueError("Coulomb strength a must be a finite non-negative real")
    _check_nl(n, l)
    coulomb = -a * a / (4.0 * (n + l + 1) ** 2)
    airy_term = _interp_ratio(n, l, consts.deltas) * airy_zero(n + l + 1)
    return coulomb - airy_term * cornell_f(a, n, l, consts) + cornell_g(a, consts)
