"""Numba twins of the grid kernels: per-point scalar loops under @njit.

Raises ImportError at import time when numba is unavailable; the dispatcher
falls back to the numpy implementations.
"""

import numpy as np
from numba import njit

NAME = "numba"


@njit(cache=True)
def _solve2(m11, m12, m21, m22, b1, b2):
    if abs(m21) > abs(m11):
        m11, m21 = m21, m11
        m12, m22 = m22, m12
        b1, b2 = b2, b1
    f = m21 / m11
    x2 = (b2 - f * b1) / (m22 - f * m12)
    x1 = (b1 - m12 * x2) / m11
    return x1, x2


@njit(cache=True)
def _coeffs_point(z, zb, A1, B1, A2, B2, p1, p2, p3, au2):
    m1 = np.empty((2, 3), dtype=np.complex128)
    m2 = np.empty((2, 3), dtype=np.complex128)
    pairs_a = (A1, A2)
    pairs_b = (B1, B2)
    for k in range(2):
        A = pairs_a[k]
        B = pairs_b[k]
        EA = np.exp(A * z - (au2 / A) * zb)
        EB = np.exp(B * z - (au2 / B) * zb)
        gA3 = A / (A - p3)
        gB3 = B / (B - p3)
        m1[k, 0] = EA * (A / (A - p1) - gA3) - EB * (B / (B - p1) - gB3)
        m1[k, 1] = EA * (A / (A - p2) - gA3) - EB * (B / (B - p2) - gB3)
        m1[k, 2] = -EA * gA3 + EB * gB3
        hA3 = p3 / (p3 - A)
        hB3 = p3 / (p3 - B)
        m2[k, 0] = EA * (p1 / (p1 - A) - hA3) - EB * (p1 / (p1 - B) - hB3)
        m2[k, 1] = EA * (p2 / (p2 - A) - hA3) - EB * (p2 / (p2 - B) - hB3)
        m2[k, 2] = -EA * hA3 + EB * hB3
    q1, q2 = _solve2(m1[0, 0], m1[0, 1], m1[1, 0], m1[1, 1], m1[0, 2], m1[1, 2])
    t1, t2 = _solve2(m2[0, 0], m2[0, 1], m2[1, 0], m2[1, 1], m2[0, 2], m2[1, 2])
    return q1, q2, t1, t2


@njit(cache=True)
def _ba_coefficients(zx, zy, A1, B1, A2, B2, p1, p2, p3, u):
    n = zx.shape[0]
    q1 = np.empty(n, dtype=np.complex128)
    q2 = np.empty(n, dtype=np.complex128)
    t1 = np.empty(n, dtype=np.complex128)
    t2 = np.empty(n, dtype=np.complex128)
    au2 = (u * np.conj(u)).real
    for i in range(n):
        z = complex(zx[i], zy[i])
        zb = complex(zx[i], -zy[i])
        q1[i], q2[i], t1[i], t2[i] = _coeffs_point(
            z, zb, A1, B1, A2, B2, p1, p2, p3, au2)
    return q1, q2, t1, t2


@njit(cache=True)
def _psi_values(zx, zy, A1, B1, A2, B2, p1, p2, p3, u, lam):
    n = zx.shape[0]
    psi1 = np.empty(n, dtype=np.complex128)
    psi2 = np.empty(n, dtype=np.complex128)
    au2 = (u * np.conj(u)).real
    for i in range(n):
        z = complex(zx[i], zy[i])
        zb = complex(zx[i], -zy[i])
        q1, q2, t1, t2 = _coeffs_point(z, zb, A1, B1, A2, B2, p1, p2, p3, au2)
        e = np.exp(lam * z - (au2 / lam) * zb)
        psi1[i] = e * (q1 * lam / (lam - p1) + q2 * lam / (lam - p2)
                       + (1 - q1 - q2) * lam / (lam - p3))
        psi2[i] = e * (t1 * p1 / (p1 - lam) + t2 * p2 / (p2 - lam)
                       + (1 - t1 - t2) * p3 / (p3 - lam))
    return psi1, psi2


@njit(cache=True)
def _weier_derivs(zx, zy, A1, B1, A2, B2, p1, p2, p3, u, lam, scale):
    n = zx.shape[0]
    x1z = np.empty(n, dtype=np.complex128)
    x2z = np.empty(n, dtype=np.complex128)
    x3z = np.empty(n, dtype=np.complex128)
    au2 = (u * np.conj(u)).real
    for i in range(n):
        z = complex(zx[i], zy[i])
        zb = complex(zx[i], -zy[i])
        q1, q2, t1, t2 = _coeffs_point(z, zb, A1, B1, A2, B2, p1, p2, p3, au2)
        e = np.exp(lam * z - (au2 / lam) * zb)
        s1 = scale * e * (q1 * lam / (lam - p1) + q2 * lam / (lam - p2)
                          + (1 - q1 - q2) * lam / (lam - p3))
        s2 = scale * e * (t1 * p1 / (p1 - lam) + t2 * p2 / (p2 - lam)
                          + (1 - t1 - t2) * p3 / (p3 - lam))
        s2b = np.conj(s2)
        x1z[i] = 0.5j * (s2b * s2b + s1 * s1)
        x2z[i] = 0.5 * (s2b * s2b - s1 * s1)
        x3z[i] = s1 * s2b
    return x1z, x2z, x3z


def _flat(a):
    return np.ascontiguousarray(np.asarray(a, dtype=np.float64))


def ba_coefficients(zx, zy, pairs, poles, u):
    """(q1, q2, t1, t2) of the gluing solve at each point of (zx, zy)."""
    pairs = np.asarray(pairs, dtype=np.complex128)
    p = np.asarray(poles, dtype=np.complex128)
    return _ba_coefficients(_flat(zx), _flat(zy),
                            pairs[0, 0], pairs[0, 1], pairs[1, 0], pairs[1, 1],
                            p[0], p[1], p[2], complex(u))


def psi_values(zx, zy, pairs, poles, u, lam):
    """Both components of the Baker-Akhiezer function at fixed lambda."""
    pairs = np.asarray(pairs, dtype=np.complex128)
    p = np.asarray(poles, dtype=np.complex128)
    return _psi_values(_flat(zx), _flat(zy),
                       pairs[0, 0], pairs[0, 1], pairs[1, 0], pairs[1, 1],
                       p[0], p[1], p[2], complex(u), complex(lam))


def weier_derivs(zx, zy, pairs, poles, u, lam, scale):
    """Weierstrass integrand triple (x1_z, x2_z, x3_z) from scale * psi."""
    pairs = np.asarray(pairs, dtype=np.complex128)
    p = np.asarray(poles, dtype=np.complex128)
    return _weier_derivs(_flat(zx), _flat(zy),
                         pairs[0, 0], pairs[0, 1], pairs[1, 0], pairs[1, 1],
                         p[0], p[1], p[2], complex(u), complex(lam), float(scale))
