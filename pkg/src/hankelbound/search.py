"""Global maximization of |H_{2,1}| over the Caratheodory parameter domain.

For each family, H_{2,1} restricted to real c1 (justified by rotation
invariance) has the form

    scale * (e0 + e1*p2 + e2*p2^2 + e3*(1 - |p2|^2)*p3)

with real e0..e3 depending on p1 only and e3 >= 0.  The p3 variable enters
affinely with a nonnegative coefficient, so its optimum over the closed disk
is a unimodular value aligning phases; that leaves a two-real-parameter
search over p1 in [0, 1] and p2 in the closed disk, done by a coarse grid
plus deterministic local refinement.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .caratheodory import SchurParams
from .families import FamilySpec, Ozaki, ParameterRangeError, Robertson, Spirallike, sharp_bound

_SHRINK = 8.0  # window shrink factor per refinement round


@dataclass(frozen=True)
class Envelope:
    """Evaluated envelope coefficients at a fixed p1."""

    scale: float
    e0: float
    e1: float
    e2: float
    e3: float


@dataclass(frozen=True)
class SearchReport:
    family: FamilySpec
    max_abs_h21: float
    argmax: SchurParams
    bound: float
    gap: float
    grid: str


def _envelope_arrays(spec: FamilySpec, p1: np.ndarray):
    """Vectorized envelope coefficients; returns (scale, e0, e1, e2, e3)."""
    q = 1.0 - p1 * p1
    if isinstance(spec, Spirallike):
        scale = (1.0 - spec.alpha) ** 2 * math.cos(spec.beta) ** 2 / 12.0
        e0 = p1 ** 4
        e1 = 2.0 * q * p1 * p1
        e2 = -q * (3.0 + p1 * p1)
        e3 = 4.0 * p1 * q
    elif isinstance(spec, Ozaki):
        nu = spec.nu
        scale = nu * nu / 2304.0
        e0 = (-nu * nu - 4.0 * nu + 8.0) * p1 ** 4
        e1 = 4.0 * (4.0 - nu) * q * p1 * p1
        e2 = -8.0 * (2.0 + p1 * p1) * q
        e3 = 24.0 * p1 * q
    elif isinstance(spec, Robertson):
        lam = spec.lam
        scale = (2.0 * lam + 1.0) ** 2 / 2304.0
        e0 = (-4.0 * lam * lam + 4.0 * lam + 11.0) * p1 ** 4
        e1 = 4.0 * (2.0 * lam + 5.0) * q * p1 * p1
        e2 = -8.0 * (p1 * p1 + 2.0) * q
        e3 = 24.0 * p1 * q
    else:
        raise ParameterRangeError(f"unknown family spec {spec!r}")
    return scale, e0, e1, e2, e3


def envelope(spec: FamilySpec, p1: float) -> Envelope:
    """Envelope coefficients of H_{2,1} at a single p1 in [0, 1]."""
    if not 0.0 <= p1 <= 1.0:
        raise ParameterRangeError(f"p1 must lie in [0, 1], got {p1!r}")
    scale, e0, e1, e2, e3 = _envelope_arrays(spec, np.asarray(p1, dtype=float))
    return Envelope(float(scale), float(e0), float(e1), float(e2), float(e3))


def envelope_value(env: Envelope, p2: complex, p3: complex) -> complex:
    """H_{2,1} (up to the dropped rotation phase) at explicit (p2, p3)."""
    return env.scale * (
        env.e0 + env.e1 * p2 + env.e2 * p2 * p2
        + env.e3 * (1.0 - abs(p2) ** 2) * p3
    )


def value_p3_optimal(env: Envelope, p2: complex) -> float:
    """Exact max of |H_{2,1}| over |p3| <= 1 at fixed (p1, p2).

    The p3 coefficient e3*(1-|p2|^2) is nonnegative, so the best p3 is the
    unimodular value phase-aligned with the remaining terms.
    """
    if abs(p2) > 1.0 + 1e-12:
        raise ParameterRangeError(f"|p2| must be <= 1, got {abs(p2)!r}")
    inner = env.e0 + env.e1 * p2 + env.e2 * p2 * p2
    return env.scale * (abs(inner) + env.e3 * (1.0 - abs(p2) ** 2))


def optimal_p3(env: Envelope, p2: complex) -> complex:
    """The unimodular p3 realizing value_p3_optimal (1 when the phase is free)."""
    inner = env.e0 + env.e1 * p2 + env.e2 * p2 * p2
    if inner == 0:
        return 1.0 + 0.0j
    return inner / abs(inner)


def _grid_values(spec: FamilySpec, p1: np.ndarray, r: np.ndarray, phi: np.ndarray) -> np.ndarray:
    """values[i, j, k] = value_p3_optimal at (p1[i], r[j]*e^{i*phi[k]})."""
    scale, e0, e1, e2, e3 = _envelope_arrays(spec, p1)
    p2 = r[:, None] * np.exp(1j * phi)[None, :]
    p2sq = p2 * p2
    inner = (
        e0[:, None, None]
        + e1[:, None, None] * p2[None, :, :]
        + e2[:, None, None] * p2sq[None, :, :]
    )
    disk = (1.0 - r * r)[None, :, None]
    return scale * (np.abs(inner) + e3[:, None, None] * disk)


def _window(center: float, width: float, lo: float, hi: float, count: int) -> np.ndarray:
    a = max(lo, center - width / 2.0)
    b = min(hi, center + width / 2.0)
    return np.linspace(a, b, count)


def global_max(spec: FamilySpec, coarse: int = 128, refine_rounds: int = 3) -> SearchReport:
    """Grid search plus local refinement; argmax ties break toward smaller
    p1, then smaller |p2|, then smaller phase (first hit in scan order)."""
    if coarse < 64:
        raise ValueError("coarse must be >= 64")
    if refine_rounds < 2:
        raise ValueError("refine_rounds must be >= 2")

    p1 = np.linspace(0.0, 1.0, coarse + 1)
    r = np.linspace(0.0, 1.0, coarse + 1)
    phi = 2.0 * np.pi * np.arange(coarse) / coarse
    vals = _grid_values(spec, p1, r, phi)
    idx = np.unravel_index(int(np.argmax(vals)), vals.shape)
    best = float(vals[idx])
    bp1, br, bphi = float(p1[idx[0]]), float(r[idx[1]]), float(phi[idx[2]])

    for t in range(1, refine_rounds + 1):
        shrink = _SHRINK ** t
        p1 = _window(bp1, 1.0 / shrink, 0.0, 1.0, coarse + 1)
        r = _window(br, 1.0 / shrink, 0.0, 1.0, coarse + 1)
        half = math.pi / shrink
        phi = np.linspace(bphi - half, bphi + half, coarse + 1)
        vals = _grid_values(spec, p1, r, phi)
        idx = np.unravel_index(int(np.argmax(vals)), vals.shape)
        if float(vals[idx]) > best:
            best = float(vals[idx])
            bp1, br, bphi = float(p1[idx[0]]), float(r[idx[1]]), float(phi[idx[2]])

    env = envelope(spec, bp1)
    p2 = br * complex(math.cos(bphi), math.sin(bphi))
    argmax = SchurParams(bp1, p2, optimal_p3(env, p2))
    bound = sharp_bound(spec)
    return SearchReport(
        family=spec,
        max_abs_h21=best,
        argmax=argmax,
        bound=bound,
        gap=bound - best,
        grid=f"coarse={coarse}, refine_rounds={refine_rounds}, shrink={int(_SHRINK)}",
    )


def sweep(family: str, values, coarse: int = 128, refine_rounds: int = 3,
          beta: float = 0.0) -> list[SearchReport]:
    """One SearchReport per parameter value; any bad value aborts up front."""
    specs = [make_spec(family, v, beta=beta) for v in values]
    return [global_max(s, coarse=coarse, refine_rounds=refine_rounds) for s in specs]


def make_spec(family: str, value: float, beta: float = 0.0) -> FamilySpec:
    """Build a FamilySpec from a family tag and its swept parameter."""
    tag = family.lower()
    if tag == "spirallike":
        return Spirallike(alpha=value, beta=beta)
    if tag == "ozaki":
        return Ozaki(nu=value)
    if tag == "robertson":
        return Robertson(lam=value)
    raise ParameterRangeError(f"unknown family tag {family!r}")


def bound_monotonicity(reports: list[SearchReport]) -> str:
    """Direction of the closed-form bound across a sweep."""
    bounds = [rep.bound for rep in reports]
    if all(b2 <= b1 + 1e-15 for b1, b2 in zip(bounds, bounds[1:])):
        return "non-increasing"
    if all(b2 >= b1 - 1e-15 for b1, b2 in zip(bounds, bounds[1:])):
        return "non-decreasing"
    return "non-monotonic"
