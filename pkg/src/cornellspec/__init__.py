"""Bound-state eigenvalues of linear and Cornell confining potentials.

Four independent routes to the spectrum of
[-d^2/dxi^2 + l(l+1)/xi^2 + xi - a/xi] R = lam R:
exact Airy zeros at a = 0, l = 0; a power-series / continued-fraction
solution; Numerov shooting and SHO-basis diagonalization; and closed-form
eigenvalue formulas, plus the mapping to heavy-quarkonium masses.
"""

from .airy import airy_ai, airy_ai_prime, airy_zero
from .closed_forms import (CORNELL_CONSTANTS, DEFAULT_DELTAS, CornellFitConstants,
                           DeltaConstants, cornell_eigenvalue, cornell_f, cornell_g,
                           lambda_linear, lambda_linear_expanded, regge_l, regge_ln,
                           regge_n, regge_nl, wkb_linear)
from .eigensolve import (BasisOptions, EigenResult, SearchError, ShootingOptions,
                         coulomb_eigenvalue, linear_l0_eigenvalue, sho_eigenvalue,
                         solve_sho_basis, solve_shooting)
from .series import (ContinuedFractionDet, RadialValue, SeriesCoefficients,
                     SeriesParams, coefficients_by_recurrence, det_a_cf,
                     det_a_matrix, det_b, ode_residual, radial_wavefunction,
                     truncation_ratio)
from .spectrum import (BOTTOMONIUM, PRESETS, UPSILON_EXPERIMENTAL, BottomoniumRow,
                       PotentialParams, ScaledProblem, bottomonium_table,
                       energy_to_eigenvalue, eigenvalue_to_energy, meson_mass,
                       scale_to_dimensionless)

__version__ = "0.1.0"
