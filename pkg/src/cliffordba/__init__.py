"""Baker-Akhiezer function of the Clifford torus on its singular spectral
curve, the potentials it generates, and the Weierstrass reconstruction of the
torus, with a verification suite for every closed-form identity involved."""

from .ba_engine import (BASolution, eval_psi, general_solve, gluing_residual,
                        single_pole_ba, solve_coefficients)
from .differentials import (OmegaFamily, PoleDivisor, antiholomorphic_coefficient,
                            divisor_symmetry_check, pole_divisor, q_polynomial,
                            q_prime_polynomial, residue_regularity,
                            solve_a_from_poles)
from .dirac import (closed_form_U, clifford_provider, dirac_residual,
                    multiplier_closed_form, multipliers, potential_U,
                    potential_V, sample_potential)
from .spectral_curve import (CurveSpec, GluePair, clifford_curve, curve_from_json,
                             curve_to_json, genus, load_curve, permutes_glue,
                             sigma, tau)
from .verify import VerifyReport, run_verify
from .weierstrass import (GeometrySample, SurfaceGrid, T_ALIGN, align_to_reference,
                          integrate_surface, reference_clifford,
                          reference_geometry, stereographic,
                          surface_derivatives, willmore)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
