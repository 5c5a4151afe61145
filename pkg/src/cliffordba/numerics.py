"""Small complex-arithmetic kernels: polynomial roots, tiny dense solves,
periodic quadrature, complex-step central differences.

Polynomials are plain 1-D complex arrays of coefficients in ascending degree
order.  Everything here is pure and allocation-light; nothing holds state.
"""

from __future__ import annotations

import cmath
from typing import Callable

import numpy as np

from .errors import DegeneratePolynomialError, IllConditionedError, StencilError

CONDITION_LIMIT = 1e12


def principal_sqrt(w: complex) -> complex:
    """Principal complex square root: Re >= 0, and Im >= 0 on the negative
    real axis (a -0.0 imaginary part is normalized away first)."""
    w = complex(w)
    return cmath.sqrt(complex(w.real, w.imag + 0.0))


# ---------------------------------------------------------------------------
# polynomials (ascending coefficients)
# ---------------------------------------------------------------------------

def poly_trim(coeffs) -> np.ndarray:
    """Normalize to a complex array with a nonzero leading coefficient."""
    c = np.atleast_1d(np.asarray(coeffs, dtype=complex))
    if c.ndim != 1:
        raise ValueError("polynomial coefficients must be one-dimensional")
    nz = np.nonzero(c)[0]
    if nz.size == 0:
        raise DegeneratePolynomialError("degenerate polynomial")
    return c[: nz[-1] + 1]


def poly_eval(coeffs, x):
    return np.polynomial.polynomial.polyval(x, np.asarray(coeffs, dtype=complex))


def poly_deriv(coeffs) -> np.ndarray:
    return np.polynomial.polynomial.polyder(np.asarray(coeffs, dtype=complex))


def poly_from_roots(roots) -> np.ndarray:
    return np.polynomial.polynomial.polyfromroots(np.asarray(roots, dtype=complex))


def poly_roots(coeffs) -> np.ndarray:
    """All roots (with multiplicity) of a degree >= 1 complex polynomial.

    Companion-matrix eigenvalues, guarded Newton polishing (steps kept only
    when they shrink |p|), then multiplicity-corrected Newton on clustered
    roots: eigenvalues split an m-fold root by ~eps^(1/m), and the modified
    step m p/p' restores quadratic convergence there.
    """
    c = poly_trim(coeffs)
    n = c.size - 1
    if n < 1:
        raise ValueError("poly_roots requires degree >= 1")
    if n == 1:
        return np.array([-c[0] / c[1]])
    roots = np.linalg.eigvals(np.polynomial.polynomial.polycompanion(c))
    dc = poly_deriv(c)
    for _ in range(3):
        pv = poly_eval(c, roots)
        dv = poly_eval(dc, roots)
        step = np.where(dv != 0, pv / np.where(dv != 0, dv, 1.0), 0.0)
        cand = roots - step
        better = np.abs(poly_eval(c, cand)) < np.abs(pv)
        if not better.any():
            break
        roots = np.where(better, cand, roots)
    return _refine_clusters(c, dc, roots)


def _refine_clusters(c, dc, roots, radius=1e-7):
    done = np.zeros(roots.size, dtype=bool)
    out = roots.copy()
    for i in range(roots.size):
        if done[i]:
            continue
        near = ~done & (np.abs(roots - roots[i]) < radius * max(1.0, abs(roots[i])))
        idx = np.nonzero(near)[0]
        done[idx] = True
        m = idx.size
        if m == 1:
            continue
        # an m-fold root of p is a simple (well-conditioned) root of p^(m-1)
        dm = np.asarray(c)
        for _ in range(m - 1):
            dm = np.polynomial.polynomial.polyder(dm)
        dm1 = np.polynomial.polynomial.polyder(dm)
        x = roots[idx].mean()
        for _ in range(200):
            dv = poly_eval(dm1, x)
            if dv == 0:
                break
            step = poly_eval(dm, x) / dv
            x -= step
            if abs(step) <= 1e-15 * max(1.0, abs(x)):
                break
        out[idx] = x
    return out


# ---------------------------------------------------------------------------
# tiny dense solves
# ---------------------------------------------------------------------------

def solve_small(A, b) -> np.ndarray:
    """Solve Ax = b for n <= 4 by Gaussian elimination with partial pivoting.

    Raises IllConditionedError when the 1-norm condition estimate exceeds
    CONDITION_LIMIT (message keyed 'ill-conditioned gluing system').
    """
    A = np.asarray(A, dtype=complex)
    b = np.asarray(b, dtype=complex)
    n = A.shape[0]
    if A.shape != (n, n) or b.shape != (n,):
        raise ValueError(f"expected square system, got A{A.shape}, b{b.shape}")
    if n > 4:
        raise ValueError("solve_small handles n <= 4 only")

    # eliminate on [A | b | I] so the inverse (for the condition estimate)
    # falls out of the same factorization
    M = np.hstack([A, b[:, None], np.eye(n, dtype=complex)])
    for k in range(n):
        piv = k + np.argmax(np.abs(M[k:, k]))
        if M[piv, k] == 0:
            raise IllConditionedError(
                "ill-conditioned gluing system (exactly singular)")
        if piv != k:
            M[[k, piv]] = M[[piv, k]]
        M[k, k:] /= M[k, k]
        for i in range(n):
            if i != k and M[i, k] != 0:
                M[i, k:] -= M[i, k] * M[k, k:]
    x = M[:, n]
    inv = M[:, n + 1:]
    cond = np.abs(A).sum(axis=0).max() * np.abs(inv).sum(axis=0).max()
    if cond > CONDITION_LIMIT:
        raise IllConditionedError(
            f"ill-conditioned gluing system (cond estimate {cond:.3e})")
    return x


# ---------------------------------------------------------------------------
# quadrature and differences
# ---------------------------------------------------------------------------

def trapezoid_2d_periodic(samples, cell_area: float) -> float:
    """Periodic trapezoid rule on a uniform seamless grid: cell_area * sum.

    Spectrally accurate for smooth doubly periodic integrands.
    """
    s = np.asarray(samples, dtype=float)
    if s.ndim != 2 or s.size == 0:
        raise ValueError("empty grid")
    return float(cell_area * s.sum())


def central_partials(f: Callable[[complex], complex], z: complex,
                     h: float = 1e-4, richardson: bool = True):
    """Wirtinger derivatives (df, dbar f) by central differences.

    d = (d/dx - i d/dy)/2, dbar = (d/dx + i d/dy)/2.  One Richardson level
    (on by default) lifts the truncation error from O(h^2) to O(h^4).
    """
    if not h > 0:
        raise ValueError("h must be positive")

    def stencil(hh):
        try:
            fe = f(z + hh)
            fw = f(z - hh)
            fn = f(z + 1j * hh)
            fs = f(z - 1j * hh)
        except (ZeroDivisionError, OverflowError, FloatingPointError) as exc:
            raise StencilError(f"stencil point hits a singularity of f: {exc}") from exc
        vals = (fe, fw, fn, fs)
        if not all(cmath.isfinite(complex(v)) for v in vals):
            raise StencilError("stencil point hits a singularity of f (non-finite value)")
        fx = (fe - fw) / (2 * hh)
        fy = (fn - fs) / (2 * hh)
        return 0.5 * (fx - 1j * fy), 0.5 * (fx + 1j * fy)

    d1, db1 = stencil(h)
    if not richardson:
        return d1, db1
    d2, db2 = stencil(h / 2)
    return (4 * d2 - d1) / 3, (4 * db2 - db1) / 3
