import numpy as np
import pytest

from cliffordba import (OmegaFamily, antiholomorphic_coefficient,
                        divisor_symmetry_check, pole_divisor, q_polynomial,
                        q_prime_polynomial, residue_regularity,
                        solve_a_from_poles, tau)
from cliffordba.differentials import PoleDivisor, match_multisets
from cliffordba.errors import UnsupportedCurveError
from cliffordba.numerics import poly_deriv, poly_eval, poly_roots, principal_sqrt
from cliffordba.spectral_curve import CurveSpec, GluePair, clifford_curve

U = (1 + 1j) / 4
UB = U.conjugate()
AU2 = (U * U.conjugate()).real
R = abs(U)


def radical_poles():
    rad = principal_sqrt(-2j - 4)
    p1 = (-1 + 1j + rad) / (4 * np.sqrt(2))
    p2 = (-1 + 1j - rad) / (4 * np.sqrt(2))
    return p1, p2, 1 / np.sqrt(8)


# ---------------------------------------------------------------------------
# Q and Q'
# ---------------------------------------------------------------------------

def test_q_vanishes_at_abs_u_when_b_is_minus_a():
    for a in (0.3 + 0.1j, (1 + 1j) / 4, 1.0):
        q = q_polynomial(U, a, -a)
        assert abs(poly_eval(q, R)) < 1e-15
        assert abs(poly_eval(q, -R)) < 1e-15


def test_q_factored_form_when_a_b_zero():
    roots = poly_roots(q_polynomial(U, 0.0, 0.0))
    expected = [R, -R, U, -U, UB, -UB]
    mis, ok = match_multisets(roots, expected, tol=1e-12)
    assert ok, mis


def test_q_prime_double_zero_and_quartic_factor():
    cd = antiholomorphic_coefficient(U)
    qp = q_prime_polynomial(U, cd, cd)
    assert abs(poly_eval(qp, R)) < 1e-15
    assert abs(poly_eval(poly_deriv(qp), R)) < 1e-14
    # Q'(lam) / ((lam - |u|)^2 |u|^4) = P(lam/|u|) with P = mu^4+2mu^3+4mu^2+2mu+1
    quartic = np.array([1, 2, 4, 2, 1], dtype=complex)
    lam = np.polynomial.polynomial.Polynomial
    divisor = (lam([-R, 1]) ** 2).coef * R**4
    quotient, remainder = np.polynomial.polynomial.polydiv(qp, divisor)
    assert np.max(np.abs(remainder)) < 1e-14
    scaled = quotient * R ** np.arange(5)          # P(lam/|u|) in lam coefficients
    assert np.max(np.abs(scaled - quartic)) < 1e-12


def test_q_prime_factored_form_when_c_d_zero():
    roots = poly_roots(q_prime_polynomial(U, 0.0, 0.0))
    expected = [1j * R, -1j * R, U, -U, UB, -UB]
    mis, ok = match_multisets(roots, expected, tol=1e-12)
    assert ok, mis


def test_antiholomorphic_coefficient_value():
    assert abs(antiholomorphic_coefficient(U) - 1j / np.sqrt(8)) < 1e-14


def test_principal_parts_at_marked_points():
    # omega = -Q(lam) / (lam^2 (lam^2-u^2)(lam^2-ub^2)) dlam.  In the local
    # parameters k+ = lam, k- = -|u|^2/lam both families carry +k+^2 at
    # infinity; at zero the sigma family carries -k-^2 and the tau family +k-^2.
    a, b = 0.21 + 0.13j, -0.4j
    for kind, want_zero in (("sigma", -1.0), ("tau", +1.0)):
        fam = OmegaFamily(U, a, b, kind)
        q = fam.zero_polynomial()

        def f(lam):
            return -poly_eval(q, lam) / (lam**2 * (lam**2 - U**2) * (lam**2 - UB**2))

        # dk+^{-1} = -dlam/lam^2, so omega ~ c dlam gives -c * k+^2 dk+^{-1}
        assert abs(-f(1e7) - 1.0) < 1e-6
        # k-^2 dk-^{-1} = -|u|^2 dlam/lam^2
        coef_zero = -1e-14 * f(1e-7) / AU2
        assert abs(coef_zero - want_zero) < 1e-6


# ---------------------------------------------------------------------------
# pole divisor
# ---------------------------------------------------------------------------

def test_pole_divisor_matches_radicals():
    p1, p2, p3 = radical_poles()
    div = pole_divisor(U)
    assert abs(div.points[2] - p3) <= 1e-15
    assert abs(div.points[0] - p1) < 1e-12
    assert abs(div.points[1] - p2) < 1e-12
    # cross-check: all three are zeros of Q'
    cd = antiholomorphic_coefficient(U)
    qp = q_prime_polynomial(U, cd, cd)
    for p in div.points:
        assert abs(poly_eval(qp, p)) < 1e-12


def test_pole_divisor_alternate_branch():
    # tau swaps the small- and large-modulus members of the pair
    div = pole_divisor(U)
    alt = pole_divisor(U, alternate=True)
    assert abs(tau(div.points[0], U) - alt.points[1]) < 1e-12
    assert abs(tau(div.points[1], U) - alt.points[0]) < 1e-12
    assert alt.points[2] == div.points[2]


def test_pole_divisor_rejects_other_u():
    with pytest.raises(UnsupportedCurveError, match="unsupported u"):
        pole_divisor(0.3 + 0.1j)


def test_pole_divisor_validation():
    with pytest.raises(ValueError):
        PoleDivisor((0.5, 0.5, 0.3))
    with pytest.raises(ValueError):
        PoleDivisor((0.0, 0.5, 0.3))


# ---------------------------------------------------------------------------
# coefficient a
# ---------------------------------------------------------------------------

def test_solve_a_clifford():
    p1, p2, _ = radical_poles()
    a = solve_a_from_poles(p1, p2, U)
    assert abs(a - (1 + 1j) / 4) < 1e-10
    # oracle: with this a (and b = -a), Q vanishes at both poles
    q = q_polynomial(U, a, -a)
    assert abs(poly_eval(q, p1)) < 1e-14
    assert abs(poly_eval(q, p2)) < 1e-14
    # the value printed alongside the poles, (1+i)/sqrt(8), does not
    q_bad = q_polynomial(U, (1 + 1j) / np.sqrt(8), -(1 + 1j) / np.sqrt(8))
    assert abs(poly_eval(q_bad, p1)) > 1e-6


def test_solve_a_trivial_pair():
    assert abs(solve_a_from_poles(U, UB, U)) < 1e-16


def test_quartic_root_product():
    p1, p2, _ = radical_poles()
    # Vieta on lam^4 + a lam^2 + |u|^4: product of the lam^2 roots is |u|^4
    assert abs(p1**2 * p2**2 - AU2**2) < 1e-12 * AU2**2


def test_solve_a_inconsistent_pair():
    with pytest.raises(ValueError, match="inconsistent pole pair"):
        solve_a_from_poles(0.5, 0.7, U)


# ---------------------------------------------------------------------------
# residues
# ---------------------------------------------------------------------------

def test_residue_values():
    a = 0.3 + 0.7j
    b = -0.2 + 0.1j
    res = OmegaFamily(U, a, b, "sigma").residues()
    assert res[U] == -a
    assert res[-UB] == a
    assert res[-U] == -b
    assert res[UB] == b


def test_residue_regularity_clifford():
    curve = clifford_curve()
    a = (1 + 1j) / 4
    assert residue_regularity(OmegaFamily(U, a, -a, "sigma"), curve) < 1e-12
    cd = antiholomorphic_coefficient(U)
    assert residue_regularity(OmegaFamily(U, cd, cd, "tau"), curve) < 1e-12


def test_residue_regularity_zero_coefficients():
    assert residue_regularity(OmegaFamily(U, 0.0, 0.0, "sigma"), clifford_curve()) == 0.0


def test_residue_regularity_lambda_weight_flags_asymmetry():
    curve = clifford_curve()
    val = residue_regularity(OmegaFamily(U, 1.0, 0.0, "sigma"), curve, weight="lambda")
    assert val == pytest.approx(abs(U + UB), abs=1e-15)   # |u + ub| scale
    assert val > 1e-3


def test_residue_regularity_rejects_multiplicity():
    c = CurveSpec(u=U, glue=(GluePair(U, -UB, multiplicity=2),))
    with pytest.raises(UnsupportedCurveError):
        residue_regularity(OmegaFamily(U, 1.0, -1.0, "sigma"), c)


# ---------------------------------------------------------------------------
# divisor symmetry
# ---------------------------------------------------------------------------

def test_divisor_symmetry_report():
    rep = divisor_symmetry_check(U)
    assert rep.ok
    assert rep.q_zero_mismatch < 1e-9
    assert rep.qprime_zero_mismatch < 1e-9
    assert rep.double_zero_residual < 1e-9
    assert rep.a_form == "(1+i)/4"
    assert abs(rep.cd_value - 1j / np.sqrt(8)) < 1e-14


def test_tau_pairs_poles_on_reciprocal_circles():
    div = pole_divisor(U)
    p1 = div.points[0]
    assert abs(abs(tau(p1, U)) * abs(p1) - AU2) < 1e-15
    # printed forms of the tau images differ by the sign of sqrt(2i - 4)
    rad2 = principal_sqrt(2j - 4)
    t1 = (-1 - 1j - rad2) / (4 * np.sqrt(2))
    t2 = (-1 - 1j + rad2) / (4 * np.sqrt(2))
    assert abs(tau(div.points[0], U) - t1) < 1e-12
    assert abs(tau(div.points[1], U) - t2) < 1e-12


def test_q_zero_multiset_symmetries():
    div = pole_divisor(U)
    a = solve_a_from_poles(div.points[0], div.points[1], U)
    q_roots = poly_roots(q_polynomial(U, a, -a))
    _, ok = match_multisets(q_roots, [-r for r in q_roots], tol=1e-10)
    assert ok                                             # sigma-invariant
    cd = antiholomorphic_coefficient(U)
    qp_roots = poly_roots(q_prime_polynomial(U, cd, cd))
    _, ok = match_multisets(qp_roots, [tau(r, U) for r in qp_roots], tol=1e-9)
    assert ok                                             # tau-invariant


def test_q_root_product():
    rep = divisor_symmetry_check(U)
    # product of all six zeros is the constant term -|u|^6; the positive
    # quantity |u|^6 = 1/512 is the squared pole product
    assert abs(rep.q_root_product - (-AU2**3)) < 1e-12 * AU2**3
    assert abs(rep.pole_product_sq - 1 / 512) < 1e-12 / 512
