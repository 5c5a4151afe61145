"""Potentials, Dirac-equation residuals, and Floquet multipliers.

The operator is  D = [[0, d], [-dbar, 0]] + diag(U, V)  acting on
(psi1, psi2); the expansion coefficients of the solved ansatz give the
potentials algebraically:

    U = -xi2_plus  = t1 p1 + t2 p2 + t3 p3
    V =  xi1_minus = |u|^2 (q1/p1 + q2/p2 + q3/p3)

For the Clifford data both reduce to the real closed form
sin y / (2 sqrt(2) (sin y - sqrt(2))).
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import kernels
from .ba_engine import BASolution, eval_psi, solve_coefficients
from .differentials import pole_divisor
from .errors import FloquetError
from .numerics import central_partials
from .spectral_curve import CurveSpec, clifford_curve

SQRT2 = np.sqrt(2.0)


@dataclass(frozen=True)
class PotentialSample:
    y: float
    u_spectral: complex
    u_closed: float

    @property
    def abs_err(self) -> float:
        return abs(self.u_spectral - self.u_closed)


def potential_U(s: BASolution) -> complex:
    return complex(np.sum(s.t * s.poles))


def potential_V(s: BASolution) -> complex:
    au2 = (s.u * s.u.conjugate()).real
    return complex(au2 * np.sum(s.q / s.poles))


def closed_form_U(y):
    """sin y / (2 sqrt(2) (sin y - sqrt(2))); the denominator never vanishes."""
    sy = np.sin(y)
    return sy / (2 * SQRT2 * (sy - SQRT2))


def clifford_provider() -> Callable[[complex], BASolution]:
    """z -> BASolution for the Clifford curve with its resolved pole divisor."""
    curve = clifford_curve()
    poles = pole_divisor(curve.u)

    def provider(z: complex) -> BASolution:
        return solve_coefficients(curve, poles, z)

    return provider


def dirac_residual(s_provider: Callable[[complex], BASolution], z: complex,
                   lam: complex, h: float = 1e-4):
    """Normalized residuals (r1, r2) of the Dirac system at (z, lambda):

        r1 = d psi2 + U psi1,   r2 = -dbar psi1 + V psi2,

    with Wirtinger derivatives by plain central differences (coefficients
    re-solved at every stencil point), divided by max |psi|.
    """
    z = complex(z)
    lam = complex(lam)
    sol = s_provider(z)
    U = potential_U(sol)
    V = potential_V(sol)
    psi1, psi2 = eval_psi(sol, lam)

    d2, _ = central_partials(lambda w: eval_psi(s_provider(w), lam)[1], z, h,
                             richardson=False)
    _, db1 = central_partials(lambda w: eval_psi(s_provider(w), lam)[0], z, h,
                              richardson=False)
    scale = max(abs(psi1), abs(psi2), 1e-300)
    return abs(d2 + U * psi1) / scale, abs(-db1 + V * psi2) / scale


def multiplier_closed_form(lam: complex, u: complex, period: str) -> complex:
    """mu1 = e^{2 pi (lam - |u|^2/lam)} for the x period, and
    mu2 = e^{2 pi i (lam + |u|^2/lam)} for the y period."""
    au2 = (u * u.conjugate()).real
    if period == "x":
        return cmath.exp(2 * cmath.pi * (lam - au2 / lam))
    if period == "y":
        return cmath.exp(2j * cmath.pi * (lam + au2 / lam))
    raise ValueError(f"unknown period selector {period!r}")


def multipliers(s_provider: Callable[[complex], BASolution], lam: complex,
                period: str = "x", z0: complex = 0.37 + 0.41j,
                tol: float = 1e-8) -> complex:
    """Translation eigenvalue of psi(., lam) for the 2*pi (x) or 2*pi*i (y)
    period, measured as the component-wise ratio psi(z0 + gamma) / psi(z0)."""
    if period == "x":
        gamma = 2 * np.pi
    elif period == "y":
        gamma = 2j * np.pi
    else:
        raise ValueError(f"unknown period selector {period!r}")
    base = eval_psi(s_provider(z0), lam)
    shifted = eval_psi(s_provider(z0 + gamma), lam)
    ratios = [shifted[i] / base[i] for i in (0, 1) if abs(base[i]) > 1e-14]
    if not ratios:
        raise FloquetError("psi vanishes at the base point; cannot form ratios")
    if len(ratios) == 2:
        rel = abs(ratios[0] - ratios[1]) / max(abs(ratios[0]), abs(ratios[1]))
        if rel > tol:
            raise FloquetError(
                f"not a Floquet function: component ratios disagree by {rel:.3e}")
    return ratios[0]


def sample_potential(n: int, curve: CurveSpec | None = None):
    """n uniform y-samples of the spectral and closed-form potentials on
    [0, 2 pi), solved through the grid kernels at x = 0."""
    if n < 1:
        raise ValueError("need at least one sample")
    curve = curve or clifford_curve()
    poles = pole_divisor(curve.u).as_array()
    pairs = np.array([p.support for p in curve.glue], dtype=complex)
    ys = 2 * np.pi * np.arange(n) / n
    _, _, t1, t2 = kernels.ba_coefficients(np.zeros(n), ys, pairs, poles, curve.u)
    u_spec = t1 * poles[0] + t2 * poles[1] + (1 - t1 - t2) * poles[2]
    return [PotentialSample(float(y), complex(us), float(closed_form_U(y)))
            for y, us in zip(ys, u_spec)]


def potential_csv_lines(samples):
    """CSV rows for the potential export (17 significant digits)."""
    yield "y,U_spectral_re,U_spectral_im,U_closed,abs_err"
    for s in samples:
        yield (f"{s.y:.17g},{s.u_spectral.real:.17g},{s.u_spectral.imag:.17g},"
               f"{s.u_closed:.17g},{s.abs_err:.17g}")
