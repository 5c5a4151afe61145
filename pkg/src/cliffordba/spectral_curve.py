"""Singular genus-0 spectral curve: CP^1 with marked points at lambda = inf
(infinity_plus) and lambda = 0 (infinity_minus) and a list of glued point
pairs (double points).

Conventions are fixed rather than stored: local parameters are
k_plus = lambda near infinity_plus and k_minus = -|u|^2 / lambda near
infinity_minus; the holomorphic involution is sigma(lambda) = -lambda and the
antiholomorphic one is tau(lambda) = |u|^2 / conj(lambda).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import UnsupportedCurveError

ORIGIN_EXCLUSION = 1e-9
MATCH_TOL = 1e-12


@dataclass(frozen=True)
class GluePair:
    """Two points of the normalization contracted to one double point."""

    first: complex
    second: complex
    multiplicity: int = 1

    def __post_init__(self):
        object.__setattr__(self, "first", complex(self.first))
        object.__setattr__(self, "second", complex(self.second))
        if self.multiplicity < 1:
            raise ValueError("multiplicity must be a positive integer")
        if abs(self.first - self.second) <= MATCH_TOL:
            raise ValueError("glue pair points must be distinct")
        if min(abs(self.first), abs(self.second)) <= ORIGIN_EXCLUSION:
            raise ValueError("glue points must avoid the marked points 0 and infinity")

    @property
    def support(self) -> tuple[complex, complex]:
        return (self.first, self.second)

    @property
    def degree(self) -> int:
        return 2 * self.multiplicity


@dataclass(frozen=True)
class CurveSpec:
    """Rational curve with two marked points and contracted glue pairs."""

    u: complex
    glue: tuple[GluePair, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "u", complex(self.u))
        object.__setattr__(self, "glue", tuple(self.glue))
        if self.u == 0:
            raise ValueError("u must be nonzero")
        pts = [p for pair in self.glue for p in pair.support]
        for i in range(len(pts)):
            for j in range(i + 1, len(pts)):
                if abs(pts[i] - pts[j]) <= MATCH_TOL:
                    raise ValueError("glue pair supports must be pairwise disjoint")

    @property
    def abs_u_sq(self) -> float:
        return abs(self.u) ** 2

    def glue_points(self) -> list[complex]:
        return [p for pair in self.glue for p in pair.support]

    def require_simple(self):
        if any(pair.multiplicity != 1 for pair in self.glue):
            raise UnsupportedCurveError("unsupported multiplicity (only 1 handled)")


def clifford_curve() -> CurveSpec:
    """The curve of the Clifford torus: u = (1+i)/4 with the two double
    points gluing u ~ -conj(u) and -u ~ conj(u)."""
    u = (1 + 1j) / 4
    ub = u.conjugate()
    return CurveSpec(u=u, glue=(GluePair(u, -ub), GluePair(-u, ub)))


def genus(c: CurveSpec) -> tuple[int, int]:
    """(geometric, arithmetic) genus: p_g = 0 for the rational normalization
    and p_a = sum over glue divisors of (deg D_k - 1)."""
    p_a = sum(pair.degree - 1 for pair in c.glue)
    return 0, p_a


def sigma(lam: complex) -> complex:
    """Holomorphic involution, fixing both marked points."""
    return -lam


def tau(lam: complex, u: complex) -> complex:
    """Antiholomorphic involution swapping the marked points."""
    if lam == 0:
        raise ValueError("tau is undefined at lambda = 0")
    u = complex(u)
    return (u * u.conjugate()).real / complex(lam).conjugate()


def permutes_glue(c: CurveSpec, which: str, tol: float = 1e-12) -> bool:
    """True when the involution maps the set of glue-pair supports to itself
    (pairs may be permuted and flipped)."""
    if which == "sigma":
        fn = sigma
    elif which == "tau":
        fn = lambda lam: tau(lam, c.u)  # noqa: E731
    else:
        raise ValueError(f"unknown involution {which!r}")

    remaining = [pair.support for pair in c.glue]
    for pair in c.glue:
        img = (fn(pair.first), fn(pair.second))
        hit = None
        for k, (a, b) in enumerate(remaining):
            straight = max(abs(img[0] - a), abs(img[1] - b))
            flipped = max(abs(img[0] - b), abs(img[1] - a))
            if min(straight, flipped) <= tol:
                hit = k
                break
        if hit is None:
            return False
        remaining.pop(hit)
    return True


# ---------------------------------------------------------------------------
# curve-spec file format: {"u": [re, im], "glue": [[[re,im],[re,im]], ...]}
# a glue entry may carry an optional integer multiplicity as third element
# ---------------------------------------------------------------------------

def _as_complex(obj, what: str) -> complex:
    if (not isinstance(obj, (list, tuple)) or len(obj) != 2
            or not all(isinstance(v, (int, float)) for v in obj)):
        raise ValueError(f"{what} must be a [re, im] pair of numbers")
    return complex(float(obj[0]), float(obj[1]))


def curve_from_json(text: str) -> CurveSpec:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"curve spec is not valid JSON: {exc}") from exc
    if not isinstance(data, dict) or "u" not in data:
        raise ValueError("curve spec must be an object with a 'u' entry")
    u = _as_complex(data["u"], "'u'")
    pairs = []
    for k, entry in enumerate(data.get("glue", [])):
        if not isinstance(entry, (list, tuple)) or len(entry) not in (2, 3):
            raise ValueError(f"glue entry {k} must be [[re,im],[re,im]] "
                             "with optional multiplicity")
        mult = 1
        if len(entry) == 3:
            if not isinstance(entry[2], int) or entry[2] < 1:
                raise ValueError(f"glue entry {k}: multiplicity must be a positive integer")
            mult = entry[2]
        pairs.append(GluePair(_as_complex(entry[0], f"glue entry {k} first point"),
                              _as_complex(entry[1], f"glue entry {k} second point"),
                              mult))
    return CurveSpec(u=u, glue=tuple(pairs))


def curve_to_json(c: CurveSpec) -> str:
    glue = []
    for pair in c.glue:
        entry = [[pair.first.real, pair.first.imag],
                 [pair.second.real, pair.second.imag]]
        if pair.multiplicity != 1:
            entry.append(pair.multiplicity)
        glue.append(entry)
    return json.dumps({"u": [c.u.real, c.u.imag], "glue": glue})


def load_curve(path) -> CurveSpec:
    with open(path, "r", encoding="utf-8") as fh:
        return curve_from_json(fh.read())
