"""Meromorphic differentials on the glued curve and the pole divisor.

Two one-parameter-pair families live here, both with prescribed second-order
principal parts at the marked points and partial-fraction poles at the four
glue points:

    omega  = -[ (lam^2 - |u|^2)/lam^2 + a (1/(lam-u) - 1/(lam+ub))
                                      + b (1/(lam+u) - 1/(lam-ub)) ] dlam
    omega' = same with (lam^2 + |u|^2)/lam^2 and coefficients (c, d)

Their zero sets are the roots of the degree-6 polynomials Q and Q'.  Matching
those zero sets to D + sigma(D) and D + tau(D) pins the free coefficients and
the pole divisor D = p1 + p2 + p3.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

import numpy as np

from .errors import UnsupportedCurveError
from .numerics import poly_deriv, poly_eval, poly_roots
from .spectral_curve import CurveSpec, tau

CLIFFORD_U = (1 + 1j) / 4


@dataclass(frozen=True)
class OmegaFamily:
    """Differential of the family above; kind 'sigma' carries the odd
    principal parts (+-k^2), kind 'tau' the even ones (+k^2 at both ends).
    For kind 'tau' the slots (a, b) hold the coefficients called (c, d)."""

    u: complex
    a: complex
    b: complex
    kind: str = "sigma"

    def __post_init__(self):
        if self.kind not in ("sigma", "tau"):
            raise ValueError(f"unknown family kind {self.kind!r}")

    def residues(self) -> dict[complex, complex]:
        """Residues at the four simple poles away from the marked points."""
        u = complex(self.u)
        ub = u.conjugate()
        return {u: -self.a, -ub: +self.a, -u: -self.b, ub: +self.b}

    def zero_polynomial(self) -> np.ndarray:
        if self.kind == "sigma":
            return q_polynomial(self.u, self.a, self.b)
        return q_prime_polynomial(self.u, self.a, self.b)


@dataclass(frozen=True)
class PoleDivisor:
    """Allowed poles of the Baker-Akhiezer function (r + 1 points)."""

    points: tuple[complex, ...]

    def __post_init__(self):
        pts = tuple(complex(p) for p in self.points)
        object.__setattr__(self, "points", pts)
        for i, p in enumerate(pts):
            if abs(p) <= 1e-9:
                raise ValueError("poles must avoid the marked points")
            for q in pts[:i]:
                if abs(p - q) <= 1e-12:
                    raise ValueError("pole divisor points must be pairwise distinct")

    def __len__(self):
        return len(self.points)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.points, dtype=complex)


def _poly(*coeffs) -> np.ndarray:
    return np.asarray(coeffs, dtype=complex)


def _pmul(*ps) -> np.ndarray:
    out = _poly(1)
    for p in ps:
        out = np.polynomial.polynomial.polymul(out, p)
    return out


def q_polynomial(u: complex, a: complex, b: complex) -> np.ndarray:
    """Ascending coefficients of the degree-6 zero polynomial of omega:

    Q = (lam^2-|u|^2)(lam^2-u^2)(lam^2-ub^2)
        + lam^2 (u+ub) [ (a-b)(lam^2-|u|^2) + (a+b)(u-ub) lam ].
    """
    u = complex(u)
    if u == 0:
        raise ValueError("u must be nonzero")
    ub = u.conjugate()
    au2 = abs(u) ** 2
    base = _pmul(_poly(-au2, 0, 1), _poly(-u * u, 0, 1), _poly(-ub * ub, 0, 1))
    bracket = np.polynomial.polynomial.polyadd(
        (a - b) * _poly(-au2, 0, 1), (a + b) * (u - ub) * _poly(0, 1))
    corr = (u + ub) * _pmul(_poly(0, 0, 1), bracket)
    out = np.zeros(7, dtype=complex)
    summed = np.polynomial.polynomial.polyadd(base, corr)
    out[: summed.size] = summed
    return out


def q_prime_polynomial(u: complex, c: complex, d: complex) -> np.ndarray:
    """Ascending coefficients of the degree-6 zero polynomial of omega'."""
    u = complex(u)
    if u == 0:
        raise ValueError("u must be nonzero")
    ub = u.conjugate()
    au2 = abs(u) ** 2
    base = _pmul(_poly(au2, 0, 1), _poly(-u * u, 0, 1), _poly(-ub * ub, 0, 1))
    bracket = np.polynomial.polynomial.polyadd(
        (c - d) * _poly(-au2, 0, 1), (c + d) * (u - ub) * _poly(0, 1))
    corr = (u + ub) * _pmul(_poly(0, 0, 1), bracket)
    out = np.zeros(7, dtype=complex)
    summed = np.polynomial.polynomial.polyadd(base, corr)
    out[: summed.size] = summed
    return out


def antiholomorphic_coefficient(u: complex) -> complex:
    """c = d making (lam - |u|)^2 divide Q' (the tau-fixed double zero)."""
    u = complex(u)
    ub = u.conjugate()
    return ((u * u + ub * ub) * abs(u) - 2 * abs(u) ** 3) / (u * u - ub * ub)


def _require_clifford(u: complex):
    if abs(complex(u) - CLIFFORD_U) > 1e-15:
        raise UnsupportedCurveError(
            f"unsupported u: only u = (1+i)/4 is solved end to end, got {u}")


def pole_divisor(u: complex, alternate: bool = False) -> PoleDivisor:
    """The pole divisor (p1, p2, p3) for the Clifford curve.

    p3 = |u| is the tau-fixed double zero of Q'.  The remaining four zeros of
    Q' are |u| times the roots of the quartic mu^4 + 2 mu^3 + 4 mu^2 + 2 mu + 1,
    which split into two inverse pairs swapped by tau; we take the pair whose
    small-modulus member lies in the lower half plane (the alternate flag
    selects the tau image instead).
    """
    _require_clifford(u)
    u = complex(u)
    r = abs(u)
    mus = poly_roots([1, 2, 4, 2, 1])
    small = [m for m in mus if abs(m) < 1]
    if len(small) != 2:
        raise RuntimeError("unexpected quartic root configuration")
    lead = min(small, key=lambda m: m.imag)       # small modulus, Im < 0
    if alternate:
        lead = lead.conjugate()
    partner = min(mus, key=lambda m: abs(m - 1 / lead))
    return PoleDivisor((r * lead, r * partner, complex(r)))


def solve_a_from_poles(p1: complex, p2: complex, u: complex) -> complex:
    """Coefficient a (with b = -a) making p1, p2 zeros of the sigma-even part

        (lam^2 - u^2)(lam^2 - ub^2) + 2 a (u + ub) lam^2.

    The two induced values must agree; their mean is returned.
    """
    u = complex(u)
    ub = u.conjugate()
    if p1 == 0 or p2 == 0:
        raise ValueError("poles must be nonzero")

    def induced(p):
        p = complex(p)
        return -((p * p - u * u) * (p * p - ub * ub)) / (2 * (u + ub) * p * p)

    a1, a2 = induced(p1), induced(p2)
    if abs(a1 - a2) > 1e-9:
        raise ValueError(
            f"inconsistent pole pair: induced a values differ by {abs(a1 - a2):.3e}")
    return (a1 + a2) / 2


def residue_regularity(omega: OmegaFamily, c: CurveSpec, weight: str = "one") -> float:
    """Max over glue pairs of |sum of (weighted) residues of omega|.

    weight 'one' is the regularity condition on the glued curve for simple
    divisors (test functions take one common value per cluster); 'lambda'
    weights each residue by its base point, a stricter diagnostic that is
    nonzero for generic coefficient choices.
    """
    if weight not in ("one", "lambda"):
        raise ValueError(f"unknown weight {weight!r}")
    c.require_simple()
    res = omega.residues()

    def residue_at(point: complex) -> complex:
        for pole, val in res.items():
            if abs(point - pole) <= 1e-12:
                return val
        return 0j

    worst = 0.0
    for pair in c.glue:
        total = 0j
        for pt in pair.support:
            w = pt if weight == "lambda" else 1.0
            total += w * residue_at(pt)
        worst = max(worst, abs(total))
    return worst


def match_multisets(found, expected, tol: float = 1e-9):
    """Best assignment distance between two equal-size complex multisets
    (exact min-max over permutations; sizes here are <= 6)."""
    found = [complex(v) for v in found]
    expected = [complex(v) for v in expected]
    if len(found) != len(expected):
        raise ValueError("multisets must have equal size")
    best = float("inf")
    for perm in permutations(range(len(found))):
        worst = max(abs(found[i] - expected[perm[i]]) for i in range(len(found)))
        best = min(best, worst)
        if best == 0:
            break
    return best, best <= tol


@dataclass(frozen=True)
class SymmetryReport:
    ok: bool
    a_value: complex
    a_form: str
    cd_value: complex
    q_zero_mismatch: float
    qprime_zero_mismatch: float
    double_zero_residual: float
    q_root_product: complex
    pole_product_sq: complex
    details: str = ""


def divisor_symmetry_check(u: complex, tol: float = 1e-9) -> SymmetryReport:
    """Verify zeros(Q) = D + sigma(D) and zeros(Q') = D + tau(D) as multisets
    for the resolved coefficients, including the double zero of Q' at |u|."""
    _require_clifford(u)
    u = complex(u)
    div = pole_divisor(u)
    p1, p2, p3 = div.points
    a = solve_a_from_poles(p1, p2, u)
    cd = antiholomorphic_coefficient(u)

    if abs(a - (1 + 1j) / 4) <= 1e-9:
        a_form = "(1+i)/4"
    elif abs(a - (1 + 1j) / np.sqrt(8)) <= 1e-9:
        a_form = "(1+i)/sqrt(8)"
    else:
        a_form = "other"

    q = q_polynomial(u, a, -a)
    qp = q_prime_polynomial(u, cd, cd)
    q_roots = poly_roots(q)
    qp_roots = poly_roots(qp)

    q_expected = [p1, -p1, p2, -p2, p3, -p3]
    qp_expected = [p1, p2, p3, tau(p1, u), tau(p2, u), tau(p3, u)]
    q_mis, q_ok = match_multisets(q_roots, q_expected, tol)
    qp_mis, qp_ok = match_multisets(qp_roots, qp_expected, tol)

    dbl = max(abs(poly_eval(qp, p3)), abs(poly_eval(poly_deriv(qp), p3)))
    ok = q_ok and qp_ok and dbl <= tol

    details = ""
    if not ok:
        details = (f"Q roots {np.sort_complex(q_roots)} vs {np.sort_complex(q_expected)}; "
                   f"Q' roots {np.sort_complex(qp_roots)} vs {np.sort_complex(qp_expected)}")
    return SymmetryReport(
        ok=ok, a_value=a, a_form=a_form, cd_value=cd,
        q_zero_mismatch=q_mis, qprime_zero_mismatch=qp_mis,
        double_zero_residual=dbl,
        q_root_product=complex(np.prod(q_roots)),
        pole_product_sq=complex((p1 * p2 * p3) ** 2),
        details=details)
