"""Baker-Akhiezer vector function on the glued curve.

The function is sought as an exponential factor times a rational sum over the
allowed poles,

    psi1 = e^{lam z - |u|^2 zbar / lam} ( q1 lam/(lam-p1) + ... )
    psi2 = e^{lam z - |u|^2 zbar / lam} ( t1 p1/(p1-lam) + ... )

with the last coefficient eliminated through sum(q) = sum(t) = 1 so the
asymptotics at both marked points are pinned.  Requiring equal values at each
glued pair yields one small linear system per component and per point z.

Two independent assemblies are provided: `solve_coefficients` builds the
eliminated 2x2 systems of the two-double-point curve directly, while
`general_solve` runs the generic construction (one single-pole basis function
per pole, gluing rows plus a normalization row) for any number of simple glue
pairs.  They must agree on the Clifford data.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

from .differentials import PoleDivisor
from .errors import PoleProximityError, SingularGluingError, UnsupportedCurveError
from .numerics import solve_small
from .spectral_curve import CurveSpec

POLE_EXCLUSION = 1e-8
_SINGULAR_FRACTION = 1e-13


def exponential_factor(lam: complex, z: complex, u: complex) -> complex:
    """e^{lam z - (|u|^2/lam) zbar}, assembled in one exponent so the purely
    imaginary exponents of the gluing weights stay a phase."""
    au2 = (u * u.conjugate()).real
    return cmath.exp(lam * z - (au2 / lam) * z.conjugate())


@dataclass(frozen=True)
class BASolution:
    """Coefficients of the rational ansatz at one point z (full vectors;
    the trailing entries are 1 - sum(others) by construction)."""

    z: complex
    q: np.ndarray
    t: np.ndarray
    poles: np.ndarray
    u: complex

    @property
    def n_poles(self) -> int:
        return len(self.poles)


def _pole_array(d) -> np.ndarray:
    if isinstance(d, PoleDivisor):
        return d.as_array()
    return np.asarray(d, dtype=complex)


def single_pole_ba(p: complex, u: complex, z: complex, lam: complex):
    """Closed-form one-pole function: (lam/(lam-p)) e^{...} (1, -p/lam)^T.

    Solves the Dirac system with constant potentials U = p, V = |u|^2/p.
    """
    p = complex(p)
    lam = complex(lam)
    if abs(lam) <= 1e-12 or abs(lam - p) <= 1e-12:
        raise PoleProximityError(f"lambda = {lam} is at an excluded point")
    e = exponential_factor(lam, complex(z), complex(u))
    return lam / (lam - p) * e, -p / (lam - p) * e


def _check_supports(c: CurveSpec, poles: np.ndarray):
    c.require_simple()
    for g in c.glue_points():
        if np.min(np.abs(poles - g)) <= 1e-9:
            raise UnsupportedCurveError("glue supports must stay away from the poles")


def solve_coefficients(c: CurveSpec, d, z: complex) -> BASolution:
    """Direct eliminated assembly for the two-double-point, three-pole curve."""
    poles = _pole_array(d)
    if len(c.glue) != 2 or len(poles) != 3:
        raise UnsupportedCurveError(
            "solve_coefficients expects exactly two glue pairs and three poles; "
            "use general_solve otherwise")
    _check_supports(c, poles)
    z = complex(z)
    u = c.u
    p1, p2, p3 = poles

    def assemble(g):
        M = np.zeros((2, 2), dtype=complex)
        rhs = np.zeros(2, dtype=complex)
        for k, pair in enumerate(c.glue):
            A, B = pair.support
            EA = exponential_factor(A, z, u)
            EB = exponential_factor(B, z, u)
            for i, p in enumerate((p1, p2)):
                M[k, i] = EA * (g(A, p) - g(A, p3)) - EB * (g(B, p) - g(B, p3))
            rhs[k] = -EA * g(A, p3) + EB * g(B, p3)
        det = M[0, 0] * M[1, 1] - M[0, 1] * M[1, 0]
        scale = (abs(M[0, 0]) + abs(M[0, 1])) * (abs(M[1, 0]) + abs(M[1, 1]))
        if abs(det) < _SINGULAR_FRACTION * max(scale, 1e-300):
            raise SingularGluingError(
                f"singular gluing system at z = {z}: |det| = {abs(det):.3e}, "
                f"scale = {scale:.3e}")
        return solve_small(M, rhs)

    q12 = assemble(lambda lam, p: lam / (lam - p))
    t12 = assemble(lambda lam, p: p / (p - lam))
    q = np.array([q12[0], q12[1], 1 - q12[0] - q12[1]])
    t = np.array([t12[0], t12[1], 1 - t12[0] - t12[1]])
    return BASolution(z=z, q=q, t=t, poles=poles, u=u)


def general_solve(c: CurveSpec, d, z: complex) -> BASolution:
    """Generic construction: single-pole basis functions phi_j, one gluing
    row per pair and component, plus the normalization row sum = 1."""
    poles = _pole_array(d)
    c.require_simple()
    r = len(c.glue)
    if len(poles) != r + 1:
        raise UnsupportedCurveError(
            f"need {r + 1} poles for {r} glue pairs, got {len(poles)}")
    _check_supports(c, poles)
    z = complex(z)
    n = r + 1
    M1 = np.zeros((n, n), dtype=complex)
    M2 = np.zeros((n, n), dtype=complex)
    r1 = np.zeros(n, dtype=complex)
    r2 = np.zeros(n, dtype=complex)
    for k, pair in enumerate(c.glue):
        A, B = pair.support
        for j, p in enumerate(poles):
            fA = single_pole_ba(p, c.u, z, A)
            fB = single_pole_ba(p, c.u, z, B)
            M1[k, j] = fA[0] - fB[0]
            M2[k, j] = fA[1] - fB[1]
    M1[r, :] = 1
    M2[r, :] = 1
    r1[r] = 1
    r2[r] = 1
    q = solve_small(M1, r1)
    t = solve_small(M2, r2)
    return BASolution(z=z, q=q, t=t, poles=poles, u=c.u)


def eval_psi(s: BASolution, lam: complex):
    """Evaluate (psi1, psi2) of a solved ansatz anywhere on the curve."""
    lam = complex(lam)
    if abs(lam) <= POLE_EXCLUSION:
        raise PoleProximityError(f"pole proximity: lambda = {lam} near the marked point 0")
    gap = np.min(np.abs(s.poles - lam))
    if gap <= POLE_EXCLUSION:
        raise PoleProximityError(f"pole proximity: lambda = {lam} within {gap:.2e} of a pole")
    e = exponential_factor(lam, s.z, s.u)
    psi1 = e * np.sum(s.q * lam / (lam - s.poles))
    psi2 = e * np.sum(s.t * s.poles / (s.poles - lam))
    return complex(psi1), complex(psi2)


def gluing_residual(s: BASolution, c: CurveSpec) -> float:
    """Max relative mismatch of psi across the curve's glue pairs."""
    worst = 0.0
    for pair in c.glue:
        va = eval_psi(s, pair.first)
        vb = eval_psi(s, pair.second)
        scale = max(abs(va[0]), abs(va[1]), abs(vb[0]), abs(vb[1]), 1e-300)
        worst = max(worst, abs(va[0] - vb[0]) / scale, abs(va[1] - vb[1]) / scale)
    return worst
