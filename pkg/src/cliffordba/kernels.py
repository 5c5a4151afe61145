"""Backend dispatch for the hot grid kernels.

The environment variable CLIFFORDBA_BACKEND selects the implementation:

    numba   force the @njit kernels (ImportError if numba is missing)
    numpy   force the pure-numpy vectorized fallback
    auto    numba when importable, else numpy (default)

Both backends expose the same three functions; `get_backend` returns a named
one explicitly (used by the benchmark and the equivalence tests).
"""

import os

from . import _kernels_numpy

_ENV_VAR = "CLIFFORDBA_BACKEND"


def get_backend(name: str):
    name = name.strip().lower()
    if name == "numpy":
        return _kernels_numpy
    if name == "numba":
        from . import _kernels_numba
        return _kernels_numba
    raise ValueError(f"unknown kernel backend {name!r} (use 'numba' or 'numpy')")


def available_backends() -> tuple[str, ...]:
    try:
        get_backend("numba")
    except ImportError:
        return ("numpy",)
    return ("numba", "numpy")


def _resolve():
    choice = os.environ.get(_ENV_VAR, "auto").strip().lower() or "auto"
    if choice == "auto":
        try:
            return get_backend("numba")
        except ImportError:
            return _kernels_numpy
    if choice in ("numba", "numpy"):
        return get_backend(choice)
    raise ValueError(f"{_ENV_VAR}={choice!r} is not one of auto|numba|numpy")


_backend = _resolve()

ba_coefficients = _backend.ba_coefficients
psi_values = _backend.psi_values
weier_derivs = _backend.weier_derivs


def backend_name() -> str:
    return _backend.NAME
