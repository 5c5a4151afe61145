"""Pure-numpy (vectorized) implementations of the grid kernels.

Same contracts as the numba twin: flat float64 coordinate arrays in, complex128
arrays out.  The 2x2 gluing solves use explicit elimination with row pivoting.
"""

import numpy as np

NAME = "numpy"


def _solve2(m11, m12, m21, m22, b1, b2):
    swap = np.abs(m21) > np.abs(m11)
    a11 = np.where(swap, m21, m11)
    a12 = np.where(swap, m22, m12)
    a21 = np.where(swap, m11, m21)
    a22 = np.where(swap, m12, m22)
    c1 = np.where(swap, b2, b1)
    c2 = np.where(swap, b1, b2)
    f = a21 / a11
    x2 = (c2 - f * c1) / (a22 - f * a12)
    x1 = (c1 - a12 * x2) / a11
    return x1, x2


def _coeff_systems(zx, zy, pairs, poles, u):
    z = zx + 1j * zy
    zb = zx - 1j * zy
    au2 = (u * u.conjugate()).real
    p1, p2, p3 = poles

    rows1 = []
    rows2 = []
    for (A, B) in pairs:
        EA = np.exp(A * z - (au2 / A) * zb)
        EB = np.exp(B * z - (au2 / B) * zb)
        g1 = lambda lam, p: lam / (lam - p)  # noqa: E731
        g2 = lambda lam, p: p / (p - lam)    # noqa: E731
        rows1.append((
            EA * (g1(A, p1) - g1(A, p3)) - EB * (g1(B, p1) - g1(B, p3)),
            EA * (g1(A, p2) - g1(A, p3)) - EB * (g1(B, p2) - g1(B, p3)),
            -EA * g1(A, p3) + EB * g1(B, p3),
        ))
        rows2.append((
            EA * (g2(A, p1) - g2(A, p3)) - EB * (g2(B, p1) - g2(B, p3)),
            EA * (g2(A, p2) - g2(A, p3)) - EB * (g2(B, p2) - g2(B, p3)),
            -EA * g2(A, p3) + EB * g2(B, p3),
        ))
    return rows1, rows2


def ba_coefficients(zx, zy, pairs, poles, u):
    """(q1, q2, t1, t2) of the gluing solve at each point of (zx, zy)."""
    zx = np.asarray(zx, dtype=np.float64)
    zy = np.asarray(zy, dtype=np.float64)
    rows1, rows2 = _coeff_systems(zx, zy, pairs, poles, u)
    q1, q2 = _solve2(rows1[0][0], rows1[0][1], rows1[1][0], rows1[1][1],
                     rows1[0][2], rows1[1][2])
    t1, t2 = _solve2(rows2[0][0], rows2[0][1], rows2[1][0], rows2[1][1],
                     rows2[0][2], rows2[1][2])
    return q1, q2, t1, t2


def psi_values(zx, zy, pairs, poles, u, lam):
    """Both components of the Baker-Akhiezer function at fixed lambda."""
    zx = np.asarray(zx, dtype=np.float64)
    zy = np.asarray(zy, dtype=np.float64)
    q1, q2, t1, t2 = ba_coefficients(zx, zy, pairs, poles, u)
    z = zx + 1j * zy
    zb = zx - 1j * zy
    au2 = (u * u.conjugate()).real
    p1, p2, p3 = poles
    e = np.exp(lam * z - (au2 / lam) * zb)
    psi1 = e * (q1 * lam / (lam - p1) + q2 * lam / (lam - p2)
                + (1 - q1 - q2) * lam / (lam - p3))
    psi2 = e * (t1 * p1 / (p1 - lam) + t2 * p2 / (p2 - lam)
                + (1 - t1 - t2) * p3 / (p3 - lam))
    return psi1, psi2


def weier_derivs(zx, zy, pairs, poles, u, lam, scale):
    """Weierstrass integrand triple (x1_z, x2_z, x3_z) from scale * psi."""
    psi1, psi2 = psi_values(zx, zy, pairs, poles, u, lam)
    psi1 = scale * psi1
    psi2 = scale * psi2
    s2b = np.conj(psi2)
    x1z = 0.5j * (s2b * s2b + psi1 * psi1)
    x2z = 0.5 * (s2b * s2b - psi1 * psi1)
    x3z = psi1 * s2b
    return x1z, x2z, x3z
