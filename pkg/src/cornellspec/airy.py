"""Airy function Ai, its first derivative, and its negative real zeros.

Everything here is self-contained: a Maclaurin expansion near the origin,
the standard asymptotic expansions far out, and Taylor continuation of the
defining equation y'' = x*y across the mid-range where neither single
expansion reaches full double precision.  No special-function library is
used.
"""

from __future__ import annotations

import math

__all__ = ["airy_ai", "airy_ai_prime", "airy_zero"]

# Ai(0) = 3**(-2/3)/Gamma(2/3) and Ai'(0) = -3**(-1/3)/Gamma(1/3),
# written out to full double precision.
_AI0 = 0.35502805388781724
_AIP0 = -0.25881940379280680

_SQRT_PI = 1.7724538509055160273

# A single Maclaurin expansion keeps cancellation below ~1e-13 inside
# |x| <= 4.5; the asymptotic expansions deliver better than 1e-13 for
# |x| >= 9.  The band in between is bridged by Taylor marching.
_SERIES_RADIUS = 4.5
_ASYMPTOTIC_EDGE = 9.0
_MARCH_STEP = 0.5
_EPS = 1e-18


def _maclaurin(x: float) -> tuple[float, float]:
    """(Ai, Ai') summed from the two entire series about x = 0."""
    x3 = x * x * x
    f, g = 1.0, x
    fp, gp = 0.0, 1.0
    term_f, term_g = 1.0, x   # current terms of f and g
    term_fp, term_gp = 0.0, 1.0
    k = 0
    while k < 400:
        term_f = term_f * x3 / ((3 * k + 2) * (3 * k + 3))
        term_g = term_g * x3 / ((3 * k + 3) * (3 * k + 4))
        if k == 0:
            term_fp = 0.5 * x * x
        else:
            term_fp = term_fp * x3 * (k + 1) / (k * (3 * k + 2) * (3 * k + 3))
        term_gp = term_gp * x3 / ((3 * k + 1) * (3 * k + 3))
        f += term_f
        g += term_g
        fp += term_fp
        gp += term_gp
        k += 1
        if (max(abs(term_f), abs(term_g)) < _EPS * (abs(f) + abs(g) + 1.0)
                and max(abs(term_fp), abs(term_gp)) < _EPS * (abs(fp) + abs(gp) + 1.0)):
            break
    return _AI0 * f + _AIP0 * g, _AI0 * fp + _AIP0 * gp


def _asymptotic_positive(x: float) -> tuple[float, float]:
    """Exponentially decaying expansion, reliable for x >= 9."""
    zeta = 2.0 / 3.0 * x * math.sqrt(x)
    sum_u, sum_v = 1.0, 1.0
    u = 1.0
    sign = 1.0
    prev = 1.0
    for k in range(60):
        u = u * (6 * k + 5) * (6 * k + 1) / (72.0 * (k + 1))
        v = u * (6 * (k + 1) + 1) / (1.0 - 6 * (k + 1))
        sign = -sign
        tk = u / zeta ** (k + 1)
        if abs(tk) >= prev:
            break
        sum_u += sign * tk
        sum_v += sign * v / zeta ** (k + 1)
        prev = abs(tk)
        if abs(tk) < _EPS * abs(sum_u):
            break
    damp = math.exp(-zeta)
    root = x ** 0.25
    ai = damp * sum_u / (2.0 * _SQRT_PI * root)
    aip = -root * damp * sum_v / (2.0 * _SQRT_PI)
    return ai, aip


def _asymptotic_negative(x: float) -> tuple[float, float]:
    """Oscillatory expansion, reliable for x <= -9."""
    y = -x
    zeta = 2.0 / 3.0 * y * math.sqrt(y)
    ue, uo = 1.0, 0.0   # even/odd u-sums
    ve, vo = 1.0, 0.0
    u = 1.0
    prev = 1.0
    for m in range(1, 80):
        u = u * (6 * (m - 1) + 5) * (6 * (m - 1) + 1) / (72.0 * m)
        v = u * (6 * m + 1) / (1.0 - 6 * m)
        tm = u / zeta ** m
        if abs(tm) >= prev:
            break
        if m % 2 == 0:
            s = -1.0 if (m // 2) % 2 else 1.0
            ue += s * tm
            ve += s * v / zeta ** m
        else:
            s = -1.0 if ((m - 1) // 2) % 2 else 1.0
            uo += s * tm
            vo += s * v / zeta ** m
        prev = abs(tm)
        if abs(tm) < _EPS:
            break
    theta = zeta - 0.25 * math.pi
    c, s = math.cos(theta), math.sin(theta)
    root = y ** 0.25
    ai = (c * ue + s * uo) / (_SQRT_PI * root)
    aip = root * (s * ve - c * vo) / _SQRT_PI
    return ai, aip


def _taylor_step(x0: float, y: float, yp: float, h: float) -> tuple[float, float]:
    """One Taylor step of y'' = x*y from x0 to x0 + h."""
    a_m2, a_m1 = y, yp          # a_0, a_1
    a_m = 0.5 * x0 * y          # a_2
    val = y + yp * h + a_m * h * h
    der = yp + 2.0 * a_m * h
    hm = h * h                  # h**m for the current highest term
    for m in range(1, 80):
        # (m+2)(m+1) a_{m+2} = x0*a_m + a_{m-1}
        a_next = (x0 * a_m1 + a_m2) / ((m + 2.0) * (m + 1.0))
        hm *= h
        dv = a_next * hm
        val += dv
        der += (m + 2.0) * a_next * hm / h
        a_m2, a_m1, a_m = a_m1, a_m, a_next
        if m > 6 and abs(dv) < _EPS * (abs(val) + 1e-300):
            break
    return val, der


def _march(x_from: float, y: float, yp: float, x_to: float) -> tuple[float, float]:
    span = x_to - x_from
    nsteps = max(1, math.ceil(abs(span) / _MARCH_STEP))
    h = span / nsteps
    x = x_from
    for _ in range(nsteps):
        y, yp = _taylor_step(x, y, yp, h)
        x += h
    return y, yp


def _ai_both(x: float) -> tuple[float, float]:
    if abs(x) <= _SERIES_RADIUS:
        return _maclaurin(x)
    if x >= _ASYMPTOTIC_EDGE:
        return _asymptotic_positive(x)
    if x <= -_ASYMPTOTIC_EDGE:
        return _asymptotic_negative(x)
    if x > 0.0:
        # march downward from the asymptotic anchor; in this direction the
        # decaying solution is the locally growing one, so the step errors
        # stay at the size of Ai itself
        y, yp = _asymptotic_positive(_ASYMPTOTIC_EDGE)
        return _march(_ASYMPTOTIC_EDGE, y, yp, x)
    y, yp = _maclaurin(-_SERIES_RADIUS)
    return _march(-_SERIES_RADIUS, y, yp, x)


def airy_ai(x: float) -> float:
    """Ai(x) for finite real x."""
    x = float(x)
    if not math.isfinite(x):
        raise ValueError("airy_ai requires a finite argument")
    return _ai_both(x)[0]


def airy_ai_prime(x: float) -> float:
    """Ai'(x) for finite real x."""
    x = float(x)
    if not math.isfinite(x):
        raise ValueError("airy_ai_prime requires a finite argument")
    return _ai_both(x)[1]


def airy_zero(k: int) -> float:
    """The k-th negative zero of Ai (k = 1, 2, ...), relative error <= 1e-12.

    Newton iteration on airy_ai, seeded with the asymptotic estimate
    -(3*pi*(4k-1)/8)**(2/3) and kept inside a bracket around the seed;
    any step leaving the bracket falls back to bisection.
    """
    if isinstance(k, float) and not k.is_integer():
        raise ValueError("airy_zero index must be an integer")
    k = int(k)
    if k < 1:
        raise ValueError("airy_zero index must be >= 1")

    t = 3.0 * math.pi * (4 * k - 1) / 8.0
    seed = -(t ** (2.0 / 3.0))
    # true zero sits within ~(5/48) t^(-4/3) of the seed; neighbours are
    # ~pi * t^(-1/3) away
    gap = math.pi * t ** (-1.0 / 3.0)
    width = min(0.45 * gap, max(0.42 * t ** (-4.0 / 3.0), 0.01))

    lo, hi = seed - width, seed + width
    flo, fhi = airy_ai(lo), airy_ai(hi)
    widen = 0
    while flo * fhi > 0.0 and widen < 8:
        width = min(0.48 * gap, width * 1.6)
        lo, hi = seed - width, seed + width
        flo, fhi = airy_ai(lo), airy_ai(hi)
        widen += 1
    if flo * fhi > 0.0:
        raise ArithmeticError(f"could not bracket Airy zero {k}")

    x = seed
    for _ in range(80):
        f, fp = _ai_both(x)
        if f == 0.0:
            return x
        if f * flo < 0.0:
            hi = x
        else:
            lo, flo = x, f
        if fp != 0.0:
            x_new = x - f / fp
        else:
            x_new = 0.5 * (lo + hi)
        if not (lo < x_new < hi):
            x_new = 0.5 * (lo + hi)
        if abs(x_new - x) <= 1e-15 * abs(x):
            return x_new
        x = x_new
    return x
