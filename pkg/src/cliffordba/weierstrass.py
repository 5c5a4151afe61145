"""Surface reconstruction and reference geometry of the Clifford torus.

The immersion is recovered from psi(., ., conj(u)) scaled by 2^(-1/4) through

    x1_z = i/2 (conj(psi2)^2 + psi1^2),  x2_z = 1/2 (conj(psi2)^2 - psi1^2),
    x3_z = psi1 conj(psi2),              x^k = x^k(0) + int (x^k_z dz + c.c.)

and compared against the torus of revolution r(x, y) (radius ratio sqrt 2).
The two parameterizations are congruent via the fixed orthogonal matrix
T_ALIGN (det = -1): T_ALIGN @ reconstruction = reference, which is how the
base point is pinned and the alignment is measured.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .differentials import pole_divisor
from .errors import AlignmentError, SurfaceClosureError
from .numerics import trapezoid_2d_periodic
from .spectral_curve import CurveSpec

PSI_SCALE = 2.0 ** -0.25

T_ALIGN = np.array([
    [-1.0, 1.0, 0.0],
    [-1.0, -1.0, 0.0],
    [0.0, 0.0, -np.sqrt(2.0)],
]) / np.sqrt(2.0)


@dataclass(frozen=True)
class GeometrySample:
    """Pointwise first/second-order data of a parameterized surface."""

    e2alpha: float
    normal: np.ndarray
    kappa1: float
    kappa2: float

    @property
    def H(self) -> float:
        return 0.5 * (self.kappa1 + self.kappa2)

    @property
    def K(self) -> float:
        return self.kappa1 * self.kappa2


@dataclass(frozen=True)
class SurfaceGrid:
    """Seamless uniform grid over [0, 2 pi)^2; positions[i, j] sits at
    (x[i], y[j]) and derivs holds the complex 1-form coefficients there."""

    nx: int
    ny: int
    x: np.ndarray
    y: np.ndarray
    positions: np.ndarray          # (nx, ny, 3) float
    derivs: np.ndarray             # (nx, ny, 3) complex
    period_defect: float


# ---------------------------------------------------------------------------
# reference parameterization
# ---------------------------------------------------------------------------

def reference_clifford(x, y) -> np.ndarray:
    """Torus of revolution (cos x, sin x, cos y)/(sqrt 2 - sin y); broadcasts."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    den = np.sqrt(2.0) - np.sin(y)
    return np.stack(np.broadcast_arrays(np.cos(x) / den, np.sin(x) / den,
                                        np.cos(y) / den), axis=-1)


def reference_geometry(x: float, y: float) -> GeometrySample:
    """Closed-form metric factor, unit normal, and principal curvatures."""
    sy, cy = np.sin(y), np.cos(y)
    den = np.sqrt(2.0) - sy
    normal = np.array([np.cos(x) * (1 - np.sqrt(2.0) * sy) / den,
                       np.sin(x) * (1 - np.sqrt(2.0) * sy) / den,
                       -cy / den])
    return GeometrySample(e2alpha=1.0 / den**2, normal=normal,
                          kappa1=1.0, kappa2=np.sqrt(2.0) * sy - 1.0)


def stereographic(x1: float, x2: float, x3: float, x4: float) -> np.ndarray:
    """Project a unit-sphere point from the north pole (0,0,0,1) to R^3."""
    norm_sq = x1 * x1 + x2 * x2 + x3 * x3 + x4 * x4
    if abs(norm_sq - 1.0) > 1e-12:
        raise ValueError(f"input must lie on the unit 3-sphere, |x|^2 = {norm_sq}")
    if x4 == 1.0:
        raise ValueError("north pole has no finite image")
    return np.array([x1, x2, x3]) / (1.0 - x4)


# ---------------------------------------------------------------------------
# reconstruction
# ---------------------------------------------------------------------------

def surface_derivatives(psi1, psi2):
    """The three bilinears (x1_z, x2_z, x3_z); works on scalars or arrays."""
    psi1 = np.asarray(psi1, dtype=complex)
    psi2b = np.conj(np.asarray(psi2, dtype=complex))
    x1z = 0.5j * (psi2b * psi2b + psi1 * psi1)
    x2z = 0.5 * (psi2b * psi2b - psi1 * psi1)
    x3z = psi1 * psi2b
    return x1z, x2z, x3z


def _simpson_cells(values: np.ndarray, n_cells: int, over: int, h: float) -> np.ndarray:
    """Composite-Simpson integral of each grid cell from its `over` fine
    panels; values has n_cells*over + 1 rows (axis 0)."""
    w = np.full(over + 1, 2.0)
    w[1::2] = 4.0
    w[0] = w[-1] = 1.0
    w *= h / 3.0
    segs = values[:-1].reshape(n_cells, over, -1)
    ends = values[over::over]
    out = np.einsum("p,cpk->ck", w[:-1], segs)
    out += w[-1] * ends.reshape(n_cells, -1)
    return out


def _derivs_grid(curve, pairs, poles, zx, zy):
    x1z, x2z, x3z = kernels.weier_derivs(
        zx.ravel(), zy.ravel(), pairs, poles, curve.u,
        complex(curve.u).conjugate(), PSI_SCALE)
    shape = zx.shape + (3,)
    return np.stack([x1z, x2z, x3z], axis=-1).reshape(shape)


def integrate_surface(c: CurveSpec, nx: int, ny: int, oversample: int = 4,
                      closure_tol: float = 1e-8) -> SurfaceGrid:
    """Path-integrate the real 1-forms x^k_z dz + c.c. over the torus.

    Route: the y-spine at x = 0 first, then x-rows from each spine point,
    both by composite Simpson on an `oversample`-times finer sampling.  The
    full-period integrals (which must vanish) are returned as the period
    defect; above `closure_tol` the surface is declared non-closing.
    """
    if nx < 16 or ny < 16:
        raise ValueError("grid must be at least 16x16 (coarser grids cannot "
                         "meet the closure tolerance)")
    if oversample < 2 or oversample % 2:
        raise ValueError("oversample must be an even integer >= 2")
    poles = pole_divisor(c.u).as_array()
    pairs = np.array([p.support for p in c.glue], dtype=complex)
    xs = 2 * np.pi * np.arange(nx) / nx
    ys = 2 * np.pi * np.arange(ny) / ny
    base = T_ALIGN.T @ reference_clifford(0.0, 0.0)

    # spine x = 0: d position / dy = -2 Im x^k_z
    hy = 2 * np.pi / (ny * oversample)
    y_fine = hy * np.arange(ny * oversample + 1)
    spine_derivs = _derivs_grid(c, pairs, poles, np.zeros_like(y_fine), y_fine)
    spine_cells = _simpson_cells(-2.0 * spine_derivs.imag, ny, oversample, hy)
    spine_pos = base + np.vstack([np.zeros(3), np.cumsum(spine_cells, axis=0)])
    defect = np.max(np.abs(spine_pos[-1] - base))

    # rows: d position / dx = 2 Re x^k_z, all rows in one kernel sweep
    hx = 2 * np.pi / (nx * oversample)
    x_fine = hx * np.arange(nx * oversample + 1)
    ZX, ZY = np.meshgrid(x_fine, ys, indexing="ij")
    row_derivs = _derivs_grid(c, pairs, poles, ZX, ZY)      # (nfine, ny, 3)
    positions = np.empty((nx, ny, 3))
    for j in range(ny):
        cells = _simpson_cells(2.0 * row_derivs[:, j, :].real, nx, oversample, hx)
        cum = np.vstack([np.zeros(3), np.cumsum(cells, axis=0)])
        positions[:, j, :] = spine_pos[j] + cum[:-1]
        defect = max(defect, np.max(np.abs(cum[-1])))

    if defect > closure_tol:
        raise SurfaceClosureError(
            f"surface does not close: period defect {defect:.3e} > {closure_tol:.1e}")

    derivs = row_derivs[::oversample][:-1]                  # nodes (nx, ny, 3)
    return SurfaceGrid(nx=nx, ny=ny, x=xs, y=ys, positions=positions,
                       derivs=derivs, period_defect=float(defect))


def aligned_reference(nx: int, ny: int) -> np.ndarray:
    """The reference torus carried into the reconstruction frame, i.e.
    T_ALIGN^T r(x, y) on the same seamless grid."""
    xs = 2 * np.pi * np.arange(nx) / nx
    ys = 2 * np.pi * np.arange(ny) / ny
    X, Y = np.meshgrid(xs, ys, indexing="ij")
    return reference_clifford(X, Y) @ T_ALIGN


def align_to_reference(grid: SurfaceGrid, tol: float = 1e-6):
    """Check that T_ALIGN carries the reconstruction onto the reference grid
    pointwise; returns (T_ALIGN, rms of |T S - r|)."""
    diff = grid.positions @ T_ALIGN.T - _reference_grid(grid)
    rms = float(np.sqrt(np.mean(np.sum(diff**2, axis=-1))))
    if rms > tol:
        raise AlignmentError(f"reconstruction is off the reference: rms {rms:.3e}")
    return T_ALIGN, rms


def alignment_max_error(grid: SurfaceGrid) -> float:
    diff = grid.positions @ T_ALIGN.T - _reference_grid(grid)
    return float(np.max(np.linalg.norm(diff, axis=-1)))


def _reference_grid(grid: SurfaceGrid) -> np.ndarray:
    X, Y = np.meshgrid(grid.x, grid.y, indexing="ij")
    return reference_clifford(X, Y)


# ---------------------------------------------------------------------------
# geometry from a grid, Willmore energy
# ---------------------------------------------------------------------------

def _fft_deriv(F: np.ndarray, axis: int) -> np.ndarray:
    n = F.shape[axis]
    ik = 1j * np.fft.fftfreq(n, d=1.0 / n)
    shape = [1] * F.ndim
    shape[axis] = n
    return np.real(np.fft.ifft(np.fft.fft(F, axis=axis) * ik.reshape(shape), axis=axis))


def grid_geometry(grid: SurfaceGrid) -> dict:
    """First and second fundamental forms of the reconstructed grid by
    spectral (FFT) differentiation; positions are smooth and seamless, so
    this inherits only the reconstruction error."""
    R = grid.positions

    def d(F, axis):
        return np.stack([_fft_deriv(F[..., k], axis) for k in range(3)], axis=-1)

    Rx, Ry = d(R, 0), d(R, 1)
    Rxx, Rxy, Ryy = d(Rx, 0), d(Rx, 1), d(Ry, 1)
    E = np.einsum("ijk,ijk->ij", Rx, Rx)
    F = np.einsum("ijk,ijk->ij", Rx, Ry)
    G = np.einsum("ijk,ijk->ij", Ry, Ry)
    N = np.cross(Rx, Ry)
    N /= np.linalg.norm(N, axis=-1, keepdims=True)
    e = np.einsum("ijk,ijk->ij", Rxx, N)
    f = np.einsum("ijk,ijk->ij", Rxy, N)
    g = np.einsum("ijk,ijk->ij", Ryy, N)
    W2 = E * G - F * F
    return {
        "E": E, "F": F, "G": G,
        "H": (e * G - 2 * f * F + g * E) / (2 * W2),
        "K": (e * g - f * f) / W2,
        "area_density": np.sqrt(W2),
    }


def willmore(source, n: int = 256) -> float:
    """Integral of (H^2 - K) over the surface.

    `source` is either a SurfaceGrid (spectral geometry of the reconstructed
    positions) or a sampler (x, y) -> GeometrySample evaluated on an n x n
    seamless grid; either way the integral is the periodic trapezoid sum.
    """
    if isinstance(source, SurfaceGrid):
        geo = grid_geometry(source)
        integrand = (geo["H"] ** 2 - geo["K"]) * geo["area_density"]
        cell = (2 * np.pi / source.nx) * (2 * np.pi / source.ny)
        return trapezoid_2d_periodic(integrand, cell)
    if callable(source):
        if n < 32:
            raise ValueError("need n >= 32 samples per direction")
        step = 2 * np.pi / n
        integrand = np.empty((n, n))
        for i in range(n):
            for j in range(n):
                s = source(i * step, j * step)
                integrand[i, j] = (s.H**2 - s.K) * s.e2alpha
        return trapezoid_2d_periodic(integrand, step * step)
    raise TypeError("source must be a SurfaceGrid or a sampler callable")


# ---------------------------------------------------------------------------
# OBJ export
# ---------------------------------------------------------------------------

def obj_lines(positions: np.ndarray):
    """Wavefront OBJ for a doubly periodic grid: row-major vertices and two
    triangles per wrapped quad."""
    nx, ny, _ = positions.shape
    for i in range(nx):
        for j in range(ny):
            p = positions[i, j]
            yield f"v {p[0]:.17g} {p[1]:.17g} {p[2]:.17g}"

    def vid(i, j):
        return (i % nx) * ny + (j % ny) + 1

    for i in range(nx):
        for j in range(ny):
            v00, v10 = vid(i, j), vid(i + 1, j)
            v11, v01 = vid(i + 1, j + 1), vid(i, j + 1)
            yield f"f {v00} {v10} {v11}"
            yield f"f {v00} {v11} {v01}"


def write_obj(positions: np.ndarray, path):
    with open(path, "w", encoding="utf-8") as fh:
        for line in obj_lines(positions):
            fh.write(line + "\n")
