"""Acceptance suite: every exit criterion at its stated tolerance, one
pass/fail line printed per criterion (run with -s to see them on success)."""

import numpy as np

from cliffordba import (BASolution, align_to_reference, closed_form_U,
                        dirac_residual, divisor_symmetry_check, eval_psi,
                        general_solve, genus, multiplier_closed_form,
                        multipliers, potential_U, potential_V,
                        reference_geometry, single_pole_ba, solve_coefficients,
                        willmore)
from cliffordba.numerics import central_partials, principal_sqrt
from cliffordba.spectral_curve import CurveSpec
from cliffordba.weierstrass import T_ALIGN, alignment_max_error

U = (1 + 1j) / 4
UB = U.conjugate()
AU2 = (U * U.conjugate()).real
TWO_PI_SQ = 2 * np.pi**2


def report(num, ok, text):
    print(f"criterion {num} [{'PASS' if ok else 'FAIL'}] {text}")
    assert ok, f"criterion {num}: {text}"


def test_criterion_1_spectral_data(curve, poles):
    p_g, p_a = genus(curve)
    rad = principal_sqrt(-2j - 4)
    p1_ref = (-1 + 1j + rad) / (4 * np.sqrt(2))
    p2_ref = (-1 + 1j - rad) / (4 * np.sqrt(2))
    err3 = abs(poles.points[2] - 1 / np.sqrt(8))
    err12 = max(abs(poles.points[0] - p1_ref), abs(poles.points[1] - p2_ref))
    ok = (p_g, p_a) == (0, 2) and err3 <= 1e-15 and err12 <= 1e-12
    report(1, ok, f"spectral data: genus ({p_g}, {p_a}), |p3 - 1/sqrt 8| = {err3:.2e}, "
                  f"radical mismatch = {err12:.2e}")


def test_criterion_2_differential_symmetry(curve, poles):
    rep = divisor_symmetry_check(curve.u)
    from cliffordba.differentials import q_polynomial
    from cliffordba.numerics import poly_eval
    q = q_polynomial(curve.u, rep.a_value, -rep.a_value)
    qp_res = max(abs(poly_eval(q, poles.points[0])), abs(poly_eval(q, poles.points[1])))
    prod_err = abs(rep.pole_product_sq - 1 / 512) / (1 / 512)
    signed_err = abs(rep.q_root_product - (-1 / 512)) / (1 / 512)
    cd_err = abs(rep.cd_value - 1j / np.sqrt(8))
    ok = (rep.ok and rep.q_zero_mismatch <= 1e-9 and rep.qprime_zero_mismatch <= 1e-9
          and rep.double_zero_residual <= 1e-9 and prod_err <= 1e-12
          and signed_err <= 1e-12 and cd_err <= 1e-14 and qp_res <= 1e-10)
    report(2, ok, f"differential symmetry: zero-set mismatches "
                  f"({rep.q_zero_mismatch:.2e}, {rep.qprime_zero_mismatch:.2e}), "
                  f"(p1 p2 p3)^2 rel err {prod_err:.2e} (signed product = -1/512), "
                  f"c = d err {cd_err:.2e}, Q(p12) residual {qp_res:.2e}; "
                  f"resolved a matches {rep.a_form}")


def test_criterion_3_potential_identity(curve, poles, provider):
    ys = 2 * np.pi * np.arange(256) / 256
    pot_err = uv_err = im_err = 0.0
    for y in ys[::1]:
        sol = provider(complex(0.0, y))
        u_val = potential_U(sol)
        pot_err = max(pot_err, abs(u_val - closed_form_U(y)))
        uv_err = max(uv_err, abs(u_val - potential_V(sol)))
        im_err = max(im_err, abs(u_val.imag))
    coeff_err = 0.0
    for y in np.linspace(0.0, 2 * np.pi, 9):
        s0 = provider(complex(0.0, y))
        s1 = provider(complex(4.0, y))
        s2 = provider(complex(0.0, y + 2 * np.pi))
        for attr in ("q", "t"):
            coeff_err = max(coeff_err,
                            np.max(np.abs(getattr(s0, attr) - getattr(s1, attr))),
                            np.max(np.abs(getattr(s0, attr) - getattr(s2, attr))))
    ok = pot_err < 1e-9 and uv_err <= 1e-9 and im_err < 1e-9 and coeff_err <= 1e-10
    report(3, ok, f"potential identity: |U - closed| {pot_err:.2e}, |U - V| {uv_err:.2e}, "
                  f"|Im U| {im_err:.2e}, coefficient structure {coeff_err:.2e}")


def test_criterion_4_dirac_equation(provider):
    rng = np.random.default_rng(812)
    pts = [(complex(rng.uniform(0, 2 * np.pi), rng.uniform(0, 2 * np.pi)),
            complex(rng.uniform(0.7, 2.2) * np.exp(2j * np.pi * rng.uniform())))
           for _ in range(20)]
    res_h = max(max(dirac_residual(provider, z, lam, h=1e-4)) for z, lam in pts)
    res_h2 = max(max(dirac_residual(provider, z, lam, h=5e-5)) for z, lam in pts)
    ratio = res_h / res_h2
    id_err = 0.0
    for z, lam in pts:
        sol = provider(z)
        _, db1 = central_partials(lambda w: eval_psi(provider(w), lam)[0], z, 1e-4)
        psi2 = eval_psi(sol, lam)[1]
        id_err = max(id_err, abs(psi2 - db1 / potential_V(sol)) / abs(psi2))
    ok = res_h < 1e-6 and 3.5 <= ratio <= 4.5 and id_err <= 1e-6
    report(4, ok, f"Dirac equation: residual {res_h:.2e} at h = 1e-4, halving ratio "
                  f"{ratio:.2f}, psi2 = dbar psi1 / V error {id_err:.2e}")


def test_criterion_5_floquet_structure(curve, provider):
    rng = np.random.default_rng(813)
    cf_err = 0.0
    for _ in range(6):
        lam = complex(rng.uniform(0.6, 1.8) * np.exp(2j * np.pi * rng.uniform()))
        for period in ("x", "y"):
            mu = multipliers(provider, lam, period)
            cf = multiplier_closed_form(lam, curve.u, period)
            cf_err = max(cf_err, abs(mu - cf) / abs(cf))
    glue_err = 0.0
    minus_one_err = 0.0
    for pair in curve.glue:
        for period in ("x", "y"):
            ma = multipliers(provider, pair.first, period)
            mb = multipliers(provider, pair.second, period)
            glue_err = max(glue_err, abs(ma - mb))
    for period in ("x", "y"):
        minus_one_err = max(minus_one_err,
                            abs(multipliers(provider, U, period) + 1),
                            abs(multipliers(provider, -UB, period) + 1))
    ok = cf_err <= 1e-8 and glue_err <= 1e-10 and minus_one_err <= 1e-10
    report(5, ok, f"Floquet structure: closed-form rel err {cf_err:.2e}, glue-pair "
                  f"equality {glue_err:.2e}, mu_j(u) = mu_j(-ub) = -1 within {minus_one_err:.2e}")


def test_criterion_6_surface_reconstruction(grid64):
    defect = grid64.period_defect
    max_err = alignment_max_error(grid64)
    _, rms = align_to_reference(grid64)
    orth = np.max(np.abs(T_ALIGN.T @ T_ALIGN - np.eye(3)))
    det_err = abs(np.linalg.det(T_ALIGN) + 1.0)
    ok = (defect < 1e-8 and max_err < 1e-6 and orth <= 1e-15 and det_err <= 1e-15)
    report(6, ok, f"surface reconstruction: period defect {defect:.2e}, "
                  f"max |T S - r| = {max_err:.2e} (rms {rms:.2e}), "
                  f"|T^T T - I| = {orth:.2e}, |det T + 1| = {det_err:.2e}")


def test_criterion_7_willmore_energy(grid64):
    w_closed = willmore(reference_geometry, 256)
    w_grid = willmore(grid64)
    rel_closed = abs(w_closed - TWO_PI_SQ) / TWO_PI_SQ
    rel_grid = abs(w_grid - TWO_PI_SQ) / TWO_PI_SQ
    ok = rel_closed <= 1e-8 and rel_grid <= 1e-5
    report(7, ok, f"Willmore energy: closed-form {w_closed:.9f} (rel err {rel_closed:.2e}), "
                  f"reconstructed grid {w_grid:.9f} (rel err {rel_grid:.2e})")


def test_criterion_8_engine_consistency(curve, poles):
    rng = np.random.default_rng(814)
    path_err = 0.0
    for _ in range(8):
        z = complex(rng.uniform(0, 2 * np.pi), rng.uniform(0, 2 * np.pi))
        a = solve_coefficients(curve, poles, z)
        g = general_solve(curve, poles, z)
        path_err = max(path_err, np.max(np.abs(a.q - g.q)), np.max(np.abs(a.t - g.t)))

    p = 0.4 - 0.3j
    single = BASolution(z=0.7 + 0.2j, q=np.array([1.0 + 0j]), t=np.array([1.0 + 0j]),
                        poles=np.array([p]), u=curve.u)
    pot_exact = (potential_U(single) == p
                 and abs(potential_V(single) - AU2 / p) <= 2.3e-16 * abs(AU2 / p))

    bare = CurveSpec(u=curve.u)
    sol = general_solve(bare, np.array([p]), 0.7 + 0.2j)
    reduce_err = 0.0
    for lam in (1.5 + 0.4j, 0.9 - 1.1j):
        got = eval_psi(sol, lam)
        want = single_pole_ba(p, curve.u, 0.7 + 0.2j, lam)
        reduce_err = max(reduce_err,
                         abs(got[0] - want[0]) / max(1.0, abs(want[0])),
                         abs(got[1] - want[1]) / max(1.0, abs(want[1])))

    ok = path_err <= 1e-12 and pot_exact and reduce_err <= 1e-14
    report(8, ok, f"engine consistency: general vs direct {path_err:.2e}, single-pole "
                  f"potentials exact: {pot_exact}, zero-glue reduction {reduce_err:.2e}")
