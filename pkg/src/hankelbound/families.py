"""The three function families and their coefficient machinery.

Each family is defined by a relation of the form "some expression in
zf'/f or zf''/f' is a Caratheodory function p".  Coefficients (a2, a3, a4)
are available through two independent routes:

* ``coeffs_closed_form`` -- explicit polynomials in (c1, c2, c3);
* ``coeffs_ode_oracle``  -- a series-level solve of the defining relation.

For the bounded-curvature (Ozaki) family the relation solved directly gives
a2 = -nu*c1/4; the opposite sign convention amounts to composing with the
rotation f(z) -> -f(-z), which flips a2 and a4 simultaneously and leaves
|H_{2,1}| untouched.  This module standardizes on the direct-solve signs so
that both routes agree componentwise.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Union

from .caratheodory import CTriple
from .series import DEFAULT_ORDER, PowerSeries, SeriesDomainError, exp_unit, pow_complex

_HALF_PI = math.pi / 2.0


class ParameterRangeError(ValueError):
    """A family parameter lies outside its admissible range."""


@dataclass(frozen=True)
class Spirallike:
    """beta-spirallike of order alpha: Re(e^{-i*beta} zf'/f) > alpha*cos(beta)."""

    alpha: float
    beta: float

    def __post_init__(self):
        if not 0.0 <= self.alpha < 1.0:
            raise ParameterRangeError(f"alpha must lie in [0, 1), got {self.alpha!r}")
        if not -_HALF_PI < self.beta < _HALF_PI:
            raise ParameterRangeError(f"beta must lie in (-pi/2, pi/2), got {self.beta!r}")


@dataclass(frozen=True)
class Ozaki:
    """Bounded-curvature class: Re(1 + zf''/f') < 1 + nu/2, 0 < nu <= 1."""

    nu: float

    def __post_init__(self):
        if not 0.0 < self.nu <= 1.0:
            raise ParameterRangeError(f"nu must lie in (0, 1], got {self.nu!r}")


@dataclass(frozen=True)
class Robertson:
    """Re(1 + zf''/f') > 1/2 - lambda, 1/2 <= lambda <= 1 (lambda=1/2: convex)."""

    lam: float

    def __post_init__(self):
        if not 0.5 <= self.lam <= 1.0:
            raise ParameterRangeError(f"lambda must lie in [1/2, 1], got {self.lam!r}")


FamilySpec = Union[Spirallike, Ozaki, Robertson]


@dataclass(frozen=True)
class CoeffTriple:
    """Taylor coefficients (a2, a3, a4) of a normalized function."""

    a2: complex
    a3: complex
    a4: complex


def _spiral_factor(spec: Spirallike) -> complex:
    """k = (1 - alpha) * cos(beta) * e^{i*beta}; then zf'/f = 1 + k(p - 1)."""
    return (1.0 - spec.alpha) * math.cos(spec.beta) * cmath.exp(1j * spec.beta)


def coeffs_closed_form(spec: FamilySpec, c: CTriple) -> CoeffTriple:
    """Coefficients as explicit polynomials in (c1, c2, c3)."""
    c1, c2, c3 = c.c1, c.c2, c.c3
    if isinstance(spec, Spirallike):
        k = _spiral_factor(spec)
        a2 = k * c1
        a3 = (k * k * c1 * c1 + k * c2) / 2.0
        a4 = (k ** 3 * c1 ** 3 + 3.0 * k * k * c1 * c2 + 2.0 * k * c3) / 6.0
        return CoeffTriple(a2, a3, a4)
    if isinstance(spec, Ozaki):
        nu = spec.nu
        a2 = -nu * c1 / 4.0
        a3 = nu * (nu * c1 * c1 - 2.0 * c2) / 24.0
        a4 = nu * (6.0 * nu * c1 * c2 - 8.0 * c3 - nu * nu * c1 ** 3) / 192.0
        return CoeffTriple(a2, a3, a4)
    if isinstance(spec, Robertson):
        m = 2.0 * spec.lam + 1.0
        a2 = m * c1 / 4.0
        a3 = m * (2.0 * c2 + m * c1 * c1) / 24.0
        a4 = m * (8.0 * c3 + 6.0 * m * c1 * c2 + m * m * c1 ** 3) / 192.0
        return CoeffTriple(a2, a3, a4)
    raise ParameterRangeError(f"unknown family spec {spec!r}")


def coeffs_ode_oracle(spec: FamilySpec, p: PowerSeries) -> CoeffTriple:
    """Solve the defining relation coefficient-by-coefficient.

    For the spirallike relation zf'/f = 1 + k(p - 1) the log-derivative
    integrates to log(f/z) = sum_n k*p_n/n z^n.  For the curvature relations
    zf''/f' = w(z) the same identity gives log f' = sum_n w_n/n z^n.  Either
    way the coefficients come out of a single exp of a known series, with no
    reference to the closed-form polynomials above.
    """
    if abs(p[0] - 1.0) > 1e-12:
        raise SeriesDomainError("driving function must have constant term 1")
    if p.order < 3:
        raise ValueError("driving series must retain at least order 3")
    n = p.order
    if isinstance(spec, Spirallike):
        k = _spiral_factor(spec)
        log_fz = PowerSeries([0.0] + [k * p[m] / m for m in range(1, n + 1)])
        fz = exp_unit(log_fz)  # series of f(z)/z
        return CoeffTriple(fz[1], fz[2], fz[3])
    if isinstance(spec, Ozaki):
        mu = -spec.nu / 2.0  # zf''/f' = mu*(p - 1)
    elif isinstance(spec, Robertson):
        mu = (2.0 * spec.lam + 1.0) / 2.0  # zf''/f' = mu*(p - 1)
    else:
        raise ParameterRangeError(f"unknown family spec {spec!r}")
    log_fp = PowerSeries([0.0] + [mu * p[m] / m for m in range(1, n + 1)])
    fp = exp_unit(log_fp)  # series of f'(z)
    return CoeffTriple(fp[1] / 2.0, fp[2] / 3.0, fp[3] / 4.0)


def s_critical(spec: FamilySpec) -> float:
    """Location in (0, 1) of the interior maximum of the reduced objective."""
    if isinstance(spec, Ozaki):
        nu = spec.nu
        return math.sqrt(2.0 * (nu - 2.0) / (nu * nu + 8.0 * nu - 32.0))
    if isinstance(spec, Robertson):
        lam = spec.lam
        return math.sqrt(-2.0 * (2.0 * lam + 3.0) / (4.0 * lam * lam - 12.0 * lam - 39.0))
    raise ParameterRangeError("no interior critical point for the spirallike family")


def extremal_coeffs(spec: FamilySpec) -> CoeffTriple:
    """Coefficients of the function attaining the sharp bound."""
    if isinstance(spec, Spirallike):
        w = _spiral_factor(spec)
        base = PowerSeries.from_poly([1.0, 0.0, -1.0], DEFAULT_ORDER)
        fz = pow_complex(base, -w)  # series of z/(1-z^2)^w divided by z
        return CoeffTriple(fz[1], fz[2], fz[3])
    if isinstance(spec, Ozaki):
        nu, s = spec.nu, s_critical(spec)
        a2 = -nu * s / 2.0
        a3 = nu * (1.0 + (nu - 2.0) * s * s) / 6.0
        a4 = -nu * (nu - 2.0) * s * (3.0 + (nu - 4.0) * s * s) / 24.0
        return CoeffTriple(a2, a3, a4)
    if isinstance(spec, Robertson):
        m, s = 2.0 * spec.lam + 1.0, s_critical(spec)
        a2 = m * s / 2.0
        a3 = m * ((m + 2.0) * s * s - 1.0) / 6.0
        a4 = m * (m + 2.0) * ((m + 4.0) * s * s - 3.0) * s / 24.0
        return CoeffTriple(a2, a3, a4)
    raise ParameterRangeError(f"unknown family spec {spec!r}")


def sharp_bound(spec: FamilySpec) -> float:
    """Closed-form sharp bound on |H_{2,1}| for the family."""
    if isinstance(spec, Spirallike):
        return (1.0 - spec.alpha) ** 2 * math.cos(spec.beta) ** 2 / 4.0
    if isinstance(spec, Ozaki):
        nu = spec.nu
        return nu * nu * (nu * nu + 12.0 * nu - 44.0) / (192.0 * (nu * nu + 8.0 * nu - 32.0))
    if isinstance(spec, Robertson):
        lam = spec.lam
        num = (2.0 * lam + 1.0) ** 2 * (12.0 * lam * lam - 60.0 * lam - 165.0)
        den = 576.0 * (4.0 * lam * lam - 12.0 * lam - 39.0)
        return num / den
    raise ParameterRangeError(f"unknown family spec {spec!r}")
