"""End-to-end verification: every closed-form identity the construction is
supposed to satisfy, as one pass/fail row each with its measured value.

All randomness is seeded, so the report is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import dirac, weierstrass
from .ba_engine import eval_psi, gluing_residual
from .differentials import (OmegaFamily, antiholomorphic_coefficient,
                            divisor_symmetry_check, pole_divisor,
                            residue_regularity, solve_a_from_poles)
from .numerics import central_partials
from .spectral_curve import clifford_curve, genus

TWO_PI_SQ = 2 * np.pi**2

DEFAULT_THRESHOLDS = {
    "genus": 0.5,
    "divisor_symmetry": 1e-9,
    "residue_regularity": 1e-12,
    "gluing": 1e-10,
    "coeff_x_independence": 1e-10,
    "coeff_periodicity": 1e-10,
    "u_equals_v": 1e-9,
    "u_real": 1e-9,
    "potential": 1e-9,
    "dirac": 1e-6,
    "psi2_identity": 1e-6,
    "multipliers": 1e-8,
    "period_defect": 1e-8,
    "surface_rms": 1e-6,
    "willmore": 1e-8,
    "willmore_grid": 1e-5,
}


@dataclass(frozen=True)
class CheckRow:
    name: str
    measured: float
    threshold: float
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.measured <= self.threshold


@dataclass
class VerifyReport:
    rows: list[CheckRow] = field(default_factory=list)

    @property
    def overall(self) -> bool:
        return all(r.passed for r in self.rows)

    def format_lines(self):
        for r in self.rows:
            status = "PASS" if r.passed else "FAIL"
            note = f"  {r.note}" if r.note else ""
            yield f"{status}  {r.name:<22} {r.measured:.3e} <= {r.threshold:.1e}{note}"
        yield f"overall: {'PASS' if self.overall else 'FAIL'}"


def run_verify(tol_overrides: dict[str, float] | None = None,
               mesh_n: int = 64, willmore_n: int = 256,
               seed: int = 20240811) -> VerifyReport:
    thresholds = dict(DEFAULT_THRESHOLDS)
    for name, val in (tol_overrides or {}).items():
        if name not in thresholds:
            raise KeyError(f"unknown check name {name!r}")
        thresholds[name] = float(val)

    curve = clifford_curve()
    poles = pole_divisor(curve.u)
    pole_arr = poles.as_array()
    provider = dirac.clifford_provider()
    rng = np.random.default_rng(seed)
    report = VerifyReport()

    def add(name, measured, note=""):
        report.rows.append(CheckRow(name, float(measured), thresholds[name], note))

    # spectral data
    p_g, p_a = genus(curve)
    add("genus", max(abs(p_g - 0), abs(p_a - 2)), f"(p_g, p_a) = ({p_g}, {p_a})")

    sym = divisor_symmetry_check(curve.u)
    add("divisor_symmetry",
        max(sym.q_zero_mismatch, sym.qprime_zero_mismatch, sym.double_zero_residual),
        f"a = {sym.a_form}")

    a = solve_a_from_poles(pole_arr[0], pole_arr[1], curve.u)
    cd = antiholomorphic_coefficient(curve.u)
    reg = max(residue_regularity(OmegaFamily(curve.u, a, -a, "sigma"), curve),
              residue_regularity(OmegaFamily(curve.u, cd, cd, "tau"), curve))
    add("residue_regularity", reg)

    # gluing and coefficient structure
    zs = rng.uniform(0, 2 * np.pi, size=(20, 2))
    add("gluing", max(gluing_residual(provider(complex(zx, zy)), curve)
                      for zx, zy in zs))

    ys = rng.uniform(0, 2 * np.pi, size=12)
    x_ind = 0.0
    periodic = 0.0
    for y in ys:
        s0 = provider(complex(0.0, y))
        s1 = provider(complex(5.0, y))
        s2 = provider(complex(0.0, y + 2 * np.pi))
        for attr in ("q", "t"):
            x_ind = max(x_ind, np.max(np.abs(getattr(s0, attr) - getattr(s1, attr))))
            periodic = max(periodic, np.max(np.abs(getattr(s0, attr) - getattr(s2, attr))))
    add("coeff_x_independence", x_ind)
    add("coeff_periodicity", periodic)

    # potentials
    samples = dirac.sample_potential(256)
    add("potential", max(s.abs_err for s in samples))
    add("u_real", max(abs(s.u_spectral.imag) for s in samples))
    uv = 0.0
    for y in ys:
        sol = provider(complex(0.0, y))
        uv = max(uv, abs(dirac.potential_U(sol) - dirac.potential_V(sol)))
    add("u_equals_v", uv)

    # Dirac equation
    worst = 0.0
    worst_id = 0.0
    for _ in range(20):
        z = complex(rng.uniform(0, 2 * np.pi), rng.uniform(0, 2 * np.pi))
        lam = rng.uniform(0.7, 2.2) * np.exp(2j * np.pi * rng.uniform())
        worst = max(worst, *dirac.dirac_residual(provider, z, lam, h=1e-4))
        sol = provider(z)
        _, db1 = central_partials(lambda w: eval_psi(provider(w), lam)[0], z, 1e-4)
        psi2 = eval_psi(sol, lam)[1]
        worst_id = max(worst_id, abs(psi2 - db1 / dirac.potential_V(sol)) / abs(psi2))
    add("dirac", worst)
    add("psi2_identity", worst_id)

    # Floquet multipliers
    mu_err = 0.0
    for lam in (curve.u, -curve.u.conjugate(), 0.9 + 0.2j, 1.6 - 0.4j, 0.45j):
        for period in ("x", "y"):
            mu = dirac.multipliers(provider, lam, period)
            mu_cf = dirac.multiplier_closed_form(lam, curve.u, period)
            mu_err = max(mu_err, abs(mu - mu_cf) / abs(mu_cf))
    for pair in curve.glue:
        for period in ("x", "y"):
            ma = dirac.multipliers(provider, pair.first, period)
            mb = dirac.multipliers(provider, pair.second, period)
            mu_err = max(mu_err, abs(ma - mb))
    mu_err = max(mu_err,
                 abs(dirac.multipliers(provider, curve.u, "x") + 1),
                 abs(dirac.multipliers(provider, curve.u, "y") + 1))
    add("multipliers", mu_err)

    # surface reconstruction
    grid = weierstrass.integrate_surface(curve, mesh_n, mesh_n)
    add("period_defect", grid.period_defect)
    _, rms = weierstrass.align_to_reference(grid, tol=float("inf"))
    add("surface_rms", rms,
        f"max point error {weierstrass.alignment_max_error(grid):.3e}")

    # Willmore energy
    w_closed = weierstrass.willmore(weierstrass.reference_geometry, willmore_n)
    add("willmore", abs(w_closed - TWO_PI_SQ) / TWO_PI_SQ,
        f"value = {w_closed:.9f}")
    w_grid = weierstrass.willmore(grid)
    add("willmore_grid", abs(w_grid - TWO_PI_SQ) / TWO_PI_SQ,
        f"value = {w_grid:.9f}")

    return report
