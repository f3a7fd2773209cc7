"""Physical Cornell-potential parameters, the dimensionless scaling map,
and heavy-quarkonium mass tables.

The potential is V(r) = b*r - alpha/r - C for an equal-mass quark pair of
reduced mass mu = m_q/2; the scaling sigma = (2*mu*b)^(1/3), a = 2*mu*alpha/sigma,
lam = 2*mu*(E + C)/sigma^2 removes all units from the radial problem.
"""

from __future__ import annotations

from dataclasses import dataclass

from .closed_forms import cornell_eigenvalue
from .eigensolve import ShootingOptions, solve_shooting

__all__ = [
    "PotentialParams",
    "ScaledProblem",
    "BottomoniumRow",
    "BOTTOMONIUM",
    "PRESETS",
    "UPSILON_EXPERIMENTAL",
    "scale_to_dimensionless",
    "eigenvalue_to_energy",
    "energy_to_eigenvalue",
    "meson_mass",
    "bottomonium_table",
]


@dataclass(frozen=True)
class PotentialParams:
    """Cornell parameters in GeV units: string tension b (GeV^2), Coulomb
    coefficient alpha, additive constant C (GeV), constituent mass (GeV)."""

    mu: float
    b: float
    alpha: float
    C: float
    quark_mass: float

    def __post_init__(self):
        if not (self.mu > 0.0 and self.b > 0.0 and self.quark_mass > 0.0):
            raise ValueError("mu, b and quark_mass must be positive")
        if self.alpha < 0.0:
            raise ValueError("alpha must be non-negative")


@dataclass(frozen=True)
class ScaledProblem:
    sigma: float
    a: float


# b = 0.18 GeV^2, C = 0.29 GeV, alpha = 0.52, m_b = 4.93 GeV, mu = m_b/2
BOTTOMONIUM = PotentialParams(mu=4.93 / 2.0, b=0.18, alpha=0.52, C=0.29,
                              quark_mass=4.93)
PRESETS: dict[str, PotentialParams] = {"bottomonium-table3": BOTTOMONIUM}

# measured Upsilon(nS) masses carried as annotation only, GeV
UPSILON_EXPERIMENTAL = (9.4603, 10.023, 10.355, 10.579, 10.882, 11.003)


def scale_to_dimensionless(p: PotentialParams) -> ScaledProblem:
    sigma = (2.0 * p.mu * p.b) ** (1.0 / 3.0)
    return ScaledProblem(sigma=sigma, a=2.0 * p.mu * p.alpha / sigma)


def eigenvalue_to_energy(lam: float, s: ScaledProblem, p: PotentialParams) -> float:
    """E = lam * sigma^2 / (2 mu) - C, in GeV."""
    return lam * s.sigma * s.sigma / (2.0 * p.mu) - p.C


def energy_to_eigenvalue(energy: float, s: ScaledProblem, p: PotentialParams) -> float:
    """Forward map lam = 2 mu (E + C) / sigma^2."""
    return 2.0 * p.mu * (energy + p.C) / (s.sigma * s.sigma)


def meson_mass(energy: float, p: PotentialParams) -> float:
    """M = 2 m_q + E for an equal-mass pair, GeV."""
    return 2.0 * p.quark_mass + energy


@dataclass(frozen=True)
class BottomoniumRow:
    label: str
    formula_mass: float
    numerical_mass: float
    experimental_mass: float


def bottomonium_table(shooting_opts: ShootingOptions | None = None) -> list[BottomoniumRow]:
    """Upsilon(nS) masses for n = 0..5 with the preset parameters, computed
    both from the fitted eigenvalue surface and from Numerov shooting.

    The spinless Hamiltonian carries the triplet-S labels as metadata only.
    """
    p = BOTTOMONIUM
    s = scale_to_dimensionless(p)
    rows = []
    for n in range(6):
        lam_formula = cornell_eigenvalue(s.a, n, 0)
        lam_numeric = solve_shooting(s.a, n, 0, shooting_opts).lam
        rows.append(BottomoniumRow(
            label=f"{n}^3S_1",
            formula_mass=meson_mass(eigenvalue_to_energy(lam_formula, s, p), p),
            numerical_mass=meson_mass(eigenvalue_to_energy(lam_numeric, s, p), p),
            experimental_mass=UPSILON_EXPERIMENTAL[n],
        ))
    return rows
