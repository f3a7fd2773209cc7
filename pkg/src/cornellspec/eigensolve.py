"""Numerical eigenvalues of the scaled radial equation

    [-d^2/dxi^2 + l(l+1)/xi^2 + xi - a/xi] R = lam R

by two independent routes: Numerov shooting with node-counting bisection,
and diagonalization in a radial harmonic-oscillator basis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from math import lgamma

import numpy as np

try:
    from numba import njit
except ImportError:  # pragma: no cover - numba is expected to be installed
    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]

        def wrap(fn):
            return fn

        return wrap

from .airy import airy_zero

__all__ = [
    "SearchError",
    "ShootingOptions",
    "BasisOptions",
    "EigenResult",
    "solve_shooting",
    "solve_sho_basis",
    "sho_eigenvalue",
    "coulomb_eigenvalue",
    "linear_l0_eigenvalue",
]


class SearchError(RuntimeError):
    """Eigenvalue bracketing or root search failed."""


@dataclass
class ShootingOptions:
    step: float = 1e-3
    xi_min: float = 1e-6
    xi_margin: float = 15.0
    tol: float = 1e-9
    max_iter: int = 200

    def __post_init__(self):
        if not (self.step > 0.0 and self.xi_min > 0.0 and self.tol > 0.0):
            raise ValueError("step, xi_min and tol must all be positive")
        if self.xi_margin <= 0.0 or self.max_iter < 1:
            raise ValueError("xi_margin must be positive and max_iter >= 1")


@dataclass
class BasisOptions:
    n_basis: int = 20
    scale: float | None = None          # oscillator length; None = variational choice
    quadrature_points: int = 200

    def __post_init__(self):
        if self.n_basis < 1 or self.quadrature_points < 2:
            raise ValueError("n_basis must be >= 1 and quadrature_points >= 2")
        if self.scale is not None and not self.scale > 0.0:
            raise ValueError("oscillator length must be positive")


@dataclass
class EigenResult:
    lam: float
    method: str
    n: int
    l: int
    a: float
    diagnostics: dict = field(default_factory=dict)
    wavefunction: tuple[np.ndarray, np.ndarray] | None = None


@njit(cache=True)
def _numerov_sweep(a, lfac, lam, xi0, h, nsteps, linear_on, u0, u1):
    """Outward Numerov march of R'' = W(xi) R; returns (nodes, u_end, u_max).

    Rescales when the solution grows past 1e250 so deep forbidden regions
    cannot overflow; positive rescaling leaves nodes and the end sign alone.
    """
    h2 = h * h
    xi = xi0
    f_cur = lfac / (xi * xi) - a / xi - lam
    if linear_on:
        f_cur += xi
    xi = xi0 + h
    f_nxt = lfac / (xi * xi) - a / xi - lam
    if linear_on:
        f_nxt += xi
    w_prev = (1.0 - h2 * f_cur / 12.0) * u0
    w_cur = (1.0 - h2 * f_nxt / 12.0) * u1
    f_cur = f_nxt
    u_cur = u1
    nodes = 0
    sgn = 0.0
    if u0 > 0.0:
        sgn = 1.0
    elif u0 < 0.0:
        sgn = -1.0
    if u1 > 0.0:
        s1 = 1.0
    elif u1 < 0.0:
        s1 = -1.0
    else:
        s1 = 0.0
    if s1 != 0.0:
        if sgn != 0.0 and s1 != sgn:
            nodes += 1
        sgn = s1
    u_max = abs(u0)
    if abs(u1) > u_max:
        u_max = abs(u1)

    for i in range(1, nsteps):
        w_nxt = 2.0 * w_cur - w_prev + h2 * f_cur * u_cur
        xi = xi0 + (i + 1) * h
        f_nxt = lfac / (xi * xi) - a / xi - lam
        if linear_on:
            f_nxt += xi
        u_nxt = w_nxt / (1.0 - h2 * f_nxt / 12.0)
        if u_nxt > 0.0:
            s = 1.0
        elif u_nxt < 0.0:
            s = -1.0
        else:
            s = 0.0
        if s != 0.0:
            if sgn != 0.0 and s != sgn:
                nodes += 1
            sgn = s
        au = abs(u_nxt)
        if au > u_max:
            u_max = au
        if au > 1e250:
            w_nxt *= 1e-250
            w_cur *= 1e-250
            u_nxt *= 1e-250
            u_max *= 1e-250
        w_prev = w_cur
        w_cur = w_nxt
        u_cur = u_nxt
        f_cur = f_nxt
    return nodes, u_cur, u_max


@njit(cache=True)
def _numerov_record(a, lfac, lam, xi0, h, nsteps, linear_on, u0, u1, out):
    """Same march as _numerov_sweep but storing u on the grid (no rescaling;
    intended for converged eigenvalues where the solution stays bounded)."""
    h2 = h * h
    xi = xi0
    f_cur = lfac / (xi * xi) - a / xi - lam
    if linear_on:
        f_cur += xi
    xi = xi0 + h
    f_nxt = lfac / (xi * xi) - a / xi - lam
    if linear_on:
        f_nxt += xi
    w_prev = (1.0 - h2 * f_cur / 12.0) * u0
    w_cur = (1.0 - h2 * f_nxt / 12.0) * u1
    f_cur = f_nxt
    out[0] = u0
    out[1] = u1
    u_cur = u1
    for i in range(1, nsteps):
        w_nxt = 2.0 * w_cur - w_prev + h2 * f_cur * u_cur
        xi = xi0 + (i + 1) * h
        f_nxt = lfac / (xi * xi) - a / xi - lam
        if linear_on:
            f_nxt += xi
        u_nxt = w_nxt / (1.0 - h2 * f_nxt / 12.0)
        out[i + 1] = u_nxt
        w_prev = w_cur
        w_cur = w_nxt
        u_cur = u_nxt
        f_cur = f_nxt


def _v_eff(xi: float, a: float, l: int, linear_on: bool) -> float:
    v = l * (l + 1) / (xi * xi) - a / xi
    if linear_on:
        v += xi
    return v


def _v_min_location(a: float, l: int, linear_on: bool) -> float:
    """Location of the effective-potential minimum (0 means "at the origin
    side": the potential is monotone increasing on (0, inf))."""
    big_l = l * (l + 1)
    if big_l == 0:
        return 0.0
    if not linear_on:
        return 2.0 * big_l / a if a > 0.0 else 0.0
    # cubic xi^3 + a*xi - 2L = 0 has a single positive root
    lo, hi = 0.0, max(1.0, (2.0 * big_l) ** (1.0 / 3.0))
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid ** 3 + a * mid - 2.0 * big_l > 0.0:
            hi = mid
        else:
            lo = mid
        if hi - lo < 1e-12 * max(1.0, hi):
            break
    return 0.5 * (lo + hi)


def _outer_turning(a: float, l: int, lam: float, linear_on: bool) -> float:
    """Largest root of V_eff = lam, or the potential-minimum location when
    lam sits below the whole well."""
    xv = _v_min_location(a, l, linear_on)
    lo = max(xv, 1e-8)
    if _v_eff(lo, a, l, linear_on) >= lam and xv > 0.0:
        return xv
    hi = max(2.0 * lo, abs(lam) + a + 2.0 * l + 5.0)
    grow = 0
    while _v_eff(hi, a, l, linear_on) <= lam:
        hi *= 2.0
        grow += 1
        if grow > 60:
            raise SearchError("no outer classical turning point found")
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if _v_eff(mid, a, l, linear_on) > lam:
            hi = mid
        else:
            lo = mid
        if hi - lo < 1e-10 * max(1.0, hi):
            break
    return 0.5 * (lo + hi)


def _grid_start(a: float, l: int, opts: ShootingOptions) -> float:
    """Start abscissa: keep h^2*|W|/12 small at the first points and keep
    xi^(l+1) representable, while staying deep inside the forbidden core."""
    xi0 = opts.xi_min
    if l > 0:
        xi0 = max(xi0,
                  opts.step * math.sqrt(l * (l + 1) / 1.2),
                  math.exp(-250.0 / (l + 1)))
    if a > 0.0:
        xi0 = max(xi0, a * opts.step * opts.step / 1.2)
    return xi0


def _shoot(a: float, l: int, lam: float, opts: ShootingOptions,
           linear_on: bool) -> tuple[int, float, float, float, float, int]:
    """One outward integration at trial lam.

    Returns (nodes, u_end, u_max, xi0, h, nsteps)."""
    xi_max = _outer_turning(a, l, lam, linear_on) + opts.xi_margin
    xi0 = _grid_start(a, l, opts)
    if xi_max <= xi0 + 8.0 * opts.step:
        xi_max = xi0 + 8.0 * opts.step
    nsteps = int(math.ceil((xi_max - xi0) / opts.step))
    h = opts.step
    # two-term regular start, normalised so the larger value is ~1
    g0 = (l + 1) * math.log(xi0)
    g1 = (l + 1) * math.log(xi0 + h)
    u0 = math.exp(g0 - g1) * (1.0 - a * xi0 / (2.0 * l + 2.0))
    u1 = 1.0 - a * (xi0 + h) / (2.0 * l + 2.0)
    nodes, u_end, u_max = _numerov_sweep(a, float(l * (l + 1)), lam, xi0, h,
                                         nsteps, linear_on, u0, u1)
    return nodes, u_end, u_max, xi0, h, nsteps


def _wkb_estimate(n: int, l: int) -> float:
    return (1.5 * math.pi * (n + 0.5 * l + 0.75)) ** (2.0 / 3.0)


def solve_shooting(a: float, n: int, l: int, opts: ShootingOptions | None = None,
                   *, include_linear: bool = True,
                   return_wavefunction: bool = False) -> EigenResult:
    """n-th eigenvalue (n = number of radial nodes) for fixed l by Numerov
    shooting: node counts bracket the state, then bisection pins the sign
    flip of R at xi_max.

    include_linear=False drops the confining term (test hook for the pure
    Coulomb problem; requires a > 0).
    """
    if not (a >= 0.0 and math.isfinite(a)):
        raise ValueError("Coulomb strength a must be a finite non-negative real")
    if n < 0 or n != int(n) or l < 0 or l != int(l):
        raise ValueError("n and l must be non-negative integers")
    opts = opts or ShootingOptions()
    n, l = int(n), int(l)
    evals = 0

    def nodes_at(lam: float) -> int:
        nonlocal evals
        evals += 1
        return _shoot(a, l, lam, opts, include_linear)[0]

    if include_linear:
        lam_lo = -0.25 * a * a - 1.0
        est = _wkb_estimate(n, l)
        lam_hi = est + 0.5
        cap = max(10.0 * est, lam_lo + 100.0)
        while nodes_at(lam_hi) < n + 1:
            lam_hi += max(lam_hi - lam_lo, 1.0)
            if lam_hi > cap:
                raise SearchError(
                    f"node count never reached {n + 1} below lambda = {cap:g}")
    else:
        if a <= 0.0:
            raise ValueError("the Coulomb-only problem requires a > 0")
        p = n + l + 1
        lam_lo = -a * a / (4.0 * (p - 0.5) ** 2)
        lam_hi = -a * a / (4.0 * (p + 0.5) ** 2)
        tries = 0
        while nodes_at(lam_hi) < n + 1:
            lam_hi *= 0.5
            tries += 1
            if tries > 50:
                raise SearchError("Coulomb bracket failed to capture the state")

    iterations = 0
    while lam_hi - lam_lo > opts.tol and iterations < opts.max_iter:
        mid = 0.5 * (lam_lo + lam_hi)
        if nodes_at(mid) >= n + 1:
            lam_hi = mid
        else:
            lam_lo = mid
        iterations += 1
    lam = 0.5 * (lam_lo + lam_hi)

    nodes_lo = nodes_at(lam_lo)
    _, u_end, u_max, xi0, h, nsteps = _shoot(a, l, lam, opts, include_linear)
    evals += 1
    diag = {
        "iterations": iterations,
        "evaluations": evals,
        "nodes": nodes_lo,
        "tail_ratio": abs(u_end) / u_max if u_max > 0.0 else math.inf,
        "xi_max": xi0 + nsteps * h,
        "bracket_width": lam_hi - lam_lo,
    }
    result = EigenResult(lam=lam, method="shooting", n=n, l=l, a=a, diagnostics=diag)
    if return_wavefunction:
        u = np.empty(nsteps + 1)
        g0 = (l + 1) * math.log(xi0)
        g1 = (l + 1) * math.log(xi0 + h)
        u0 = math.exp(g0 - g1) * (1.0 - a * xi0 / (2.0 * l + 2.0))
        u1 = 1.0 - a * (xi0 + h) / (2.0 * l + 2.0)
        _numerov_record(a, float(l * (l + 1)), lam, xi0, h, nsteps,
                        include_linear, u0, u1, u)
        grid = xi0 + h * np.arange(nsteps + 1)
        peak = np.max(np.abs(u))
        if peak > 0 and np.isfinite(peak):
            u = u / peak
        result.wavefunction = (grid, u)
    return result


def _orthonormal_laguerre(n_basis: int, alpha: float, t: np.ndarray) -> np.ndarray:
    """Rows k = 0..n_basis-1 of sqrt(k!/Gamma(k+alpha+1)) * L_k^alpha(t)."""
    out = np.empty((n_basis, t.size))
    l_prev = np.ones_like(t)
    l_cur = 1.0 + alpha - t
    for k in range(n_basis):
        if k == 0:
            lk = l_prev
        elif k == 1:
            lk = l_cur
        else:
            lk = ((2.0 * k - 1.0 + alpha - t) * l_cur - (k - 1.0 + alpha) * l_prev) / k
            l_prev, l_cur = l_cur, lk
        out[k] = lk * math.exp(0.5 * (lgamma(k + 1.0) - lgamma(k + alpha + 1.0)))
    return out


def _gauss_laguerre_scaled(points: int) -> tuple[np.ndarray, np.ndarray]:
    """Gauss-Laguerre nodes plus exponentially scaled weights w_i * e^{t_i}.

    Nodes come from Golub-Welsch on the Jacobi matrix.  Weights are NOT
    taken from the eigenvectors: their first components drown in roundoff
    noise far out in the tail, which is fatal once the integrand carries a
    large polynomial factor.  Instead the classical derivative-free form

        w_i = t_i / ((n+1) * L_{n+1}(t_i))^2

    is evaluated with the scaled recurrence for L_k(t) * e^{-t/2}, whose
    values stay representable across the whole node range; the e^{t_i}
    factor then cancels analytically.
    """
    k = np.arange(points, dtype=float)
    jacobi = np.diag(2.0 * k + 1.0) + np.diag(k[1:], 1) + np.diag(k[1:], -1)
    nodes = np.linalg.eigvalsh(jacobi)
    damp = np.exp(-0.5 * nodes)
    l_prev = damp.copy()                # L_0 * e^{-t/2}
    l_cur = (1.0 - nodes) * damp        # L_1 * e^{-t/2}
    for m in range(1, points + 1):
        l_prev, l_cur = l_cur, ((2.0 * m + 1.0 - nodes) * l_cur - m * l_prev) / (m + 1.0)
    scaled_w = nodes / ((points + 1.0) * l_cur) ** 2
    return nodes, scaled_w


def _moment_matrices(n_basis: int, l: int, points: int) -> tuple[np.ndarray, np.ndarray]:
    """Dimensionless <xi> and <1/xi> matrices at unit oscillator parameter.

    With t = xi^2 both integrands are polynomial times exp(-t), so plain
    Gauss-Laguerre nodes integrate them exactly once the t^(l+1) and t^l
    weights are folded in.  Assembly pairs the scaled weights w*e^t with
    basis values scaled by e^{-t/2}, keeping every factor representable.
    """
    t, scaled_w = _gauss_laguerre_scaled(points)
    keep = np.isfinite(scaled_w) & (scaled_w > 0.0)
    t, scaled_w = t[keep], scaled_w[keep]
    alpha = l + 0.5
    phi = _orthonormal_laguerre(n_basis, alpha, t) * np.exp(-0.5 * t)
    m_xi = (phi * (scaled_w * t ** (l + 1))) @ phi.T
    m_inv = (phi * (scaled_w * t ** l)) @ phi.T
    m_xi = 0.5 * (m_xi + m_xi.T)
    m_inv = 0.5 * (m_inv + m_inv.T)
    return m_xi, m_inv


def _variational_nu(a: float, alpha: float, m_xi: np.ndarray,
                    m_inv: np.ndarray) -> float:
    """Oscillator parameter by a weighted Ritz criterion: minimise
    4*eig_0 + eig_1 + eig_2 + eig_3 of the truncated Hamiltonian over nu.

    Every truncated eigenvalue bounds its exact counterpart from above, so
    the objective is a variational upper bound; weighting the ground state
    keeps it accurate without letting the low excitations drift.
    """
    nb = m_xi.shape[0]
    ks = np.arange(nb, dtype=float)
    kin_diag = 2.0 * ks + alpha + 1.0
    kin_off = np.sqrt((ks[:-1] + 1.0) * (ks[:-1] + alpha + 1.0))
    kin = np.diag(kin_diag) + np.diag(kin_off, 1) + np.diag(kin_off, -1)
    take = min(4, nb)

    def objective(log_nu: float) -> float:
        nu = math.exp(log_nu)
        ham = nu * kin + nu ** -0.5 * m_xi - a * nu ** 0.5 * m_inv
        eig = np.linalg.eigvalsh(ham)
        return 3.0 * eig[0] + float(eig[:take].sum())

    grid = np.linspace(math.log(0.02), math.log(50.0), 45)
    values = [objective(g) for g in grid]
    i = int(np.argmin(values))
    lo = grid[max(0, i - 1)]
    hi = grid[min(len(grid) - 1, i + 1)]
    # golden-section refinement on the bracketing interval
    phi = 0.5 * (math.sqrt(5.0) - 1.0)
    x1 = hi - phi * (hi - lo)
    x2 = lo + phi * (hi - lo)
    f1, f2 = objective(x1), objective(x2)
    for _ in range(60):
        if f1 <= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - phi * (hi - lo)
            f1 = objective(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + phi * (hi - lo)
            f2 = objective(x2)
        if hi - lo < 1e-10:
            break
    return math.exp(0.5 * (lo + hi))


def solve_sho_basis(a: float, l: int, opts: BasisOptions | None = None) -> list[EigenResult]:
    """All eigenvalues of the truncated Hamiltonian in the radial
    harmonic-oscillator basis for fixed l, ascending, tagged n = 0, 1, ...

    Kinetic plus centrifugal parts are analytic in the basis; the xi and
    a/xi potentials are assembled by Gauss-Laguerre quadrature.
    """
    if not (a >= 0.0 and math.isfinite(a)):
        raise ValueError("Coulomb strength a must be a finite non-negative real")
    if l < 0 or l != int(l):
        raise ValueError("orbital number l must be a non-negative integer")
    opts = opts or BasisOptions()
    l = int(l)
    nb = opts.n_basis
    alpha = l + 0.5

    m_xi, m_inv = _moment_matrices(nb, l, opts.quadrature_points)
    ks = np.arange(nb, dtype=float)
    kin_diag = 2.0 * ks + alpha + 1.0
    kin_off = np.sqrt((ks[:-1] + 1.0) * (ks[:-1] + alpha + 1.0))

    if opts.scale is not None:
        nu = 1.0 / (opts.scale * opts.scale)
    else:
        nu = _variational_nu(a, alpha, m_xi, m_inv)

    ham = np.diag(nu * kin_diag)
    ham += np.diag(nu * kin_off, 1) + np.diag(nu * kin_off, -1)
    ham += nu ** -0.5 * m_xi - a * nu ** 0.5 * m_inv
    if not np.all(np.isfinite(ham)):
        raise ArithmeticError("non-finite entries in the basis Hamiltonian")

    values = np.linalg.eigvalsh(ham)
    if nb > 1:
        trimmed = np.linalg.eigvalsh(ham[:-1, :-1])
        shifts = np.abs(trimmed - values[: nb - 1])
    else:
        shifts = np.array([math.nan])
    results = []
    for i, lam in enumerate(values):
        diag = {
            "n_basis": nb,
            "nu": nu,
            "oscillator_length": nu ** -0.5,
            "truncation_shift": float(shifts[i]) if i < len(shifts) else math.nan,
        }
        results.append(EigenResult(lam=float(lam), method="sho_basis",
                                   n=i, l=l, a=a, diagnostics=diag))
    return results


def sho_eigenvalue(a: float, n: int, l: int, opts: BasisOptions | None = None) -> EigenResult:
    """Single basis-diagonalization eigenvalue; n must fit inside the basis."""
    opts = opts or BasisOptions()
    if n < 0 or n != int(n):
        raise ValueError("radial number n must be a non-negative integer")
    if n >= opts.n_basis:
        raise ValueError(f"requested n={n} needs n_basis > n (have {opts.n_basis})")
    return solve_sho_basis(a, l, opts)[int(n)]


def coulomb_eigenvalue(a: float, n: int, l: int) -> float:
    """Exact Coulomb level -a^2 / (4 (n+l+1)^2); requires attraction a > 0."""
    if not (a > 0.0 and math.isfinite(a)):
        raise ValueError("pure-Coulomb bound states require a > 0")
    if n < 0 or n != int(n) or l < 0 or l != int(l):
        raise ValueError("n and l must be non-negative integers")
    return -a * a / (4.0 * (n + l + 1) ** 2)


def linear_l0_eigenvalue(mu: float, b: float, n: int) -> float:
    """Exact l = 0 eigenvalue of 2*mu*E for the pure linear potential:
    -(2*mu*b)^(2/3) * airy_zero(n+1)."""
    if not (mu > 0.0 and b > 0.0):
        raise ValueError("mu and b must be positive")
    if n < 0 or n != int(n):
        raise ValueError("radial number n must be a non-negative integer")
    return -((2.0 * mu * b) ** (2.0 / 3.0)) * airy_zero(n + 1)
