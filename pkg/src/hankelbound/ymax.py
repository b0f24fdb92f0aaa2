"""Closed-form maximum of |A + Bz + Cz^2| + 1 - |z|^2 over the closed disk.

``y_closed_form`` implements the piecewise formula exactly as stated for real
A, B, C, recording which branch fired.  ``y_oracle`` is an independent
brute-force maximization over a polar grid; ``y_certify`` checks the two
against each other up to a grid-resolution allowance.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

#: Near-equality window at which adjacent branches are cross-checked.
_BOUNDARY_EPS = 1e-9

#: Default certification grid.
CERT_RADIAL = 512
CERT_ANGULAR = 2048


class YCase(enum.Enum):
    AC_NONNEG_SUM = "AC_NONNEG_SUM"
    AC_NONNEG_PARABOLA = "AC_NONNEG_PARABOLA"
    NEG_FIRST = "NEG_FIRST"
    NEG_SECOND = "NEG_SECOND"
    R_SUM = "R_SUM"
    R_DIFF = "R_DIFF"
    R_SQRT = "R_SQRT"


@dataclass(frozen=True)
class YResult:
    value: float
    case_label: YCase


def y_closed_form(A: float, B: float, C: float, debug: bool = False) -> YResult:
    """Piecewise maximum; first satisfied condition (top to bottom) wins.

    With ``debug=True``, a condition holding with near-equality triggers an
    agreement check between the two adjacent branch formulas (the maximum is
    continuous, so any disagreement is a transcription error).
    """
    aA, aB, aC = abs(A), abs(B), abs(C)

    if A * C >= 0.0:
        gap = aB - 2.0 * (1.0 - aC)
        if gap >= 0.0:
            value, label = aA + aB + aC, YCase.AC_NONNEG_SUM
        else:
            value, label = 1.0 + aA + aB * aB / (4.0 * (1.0 - aC)), YCase.AC_NONNEG_PARABOLA
        if debug and abs(gap) <= _BOUNDARY_EPS and 1.0 - aC > 1e-6:
            other = (
                1.0 + aA + aB * aB / (4.0 * (1.0 - aC))
                if label is YCase.AC_NONNEG_SUM
                else aA + aB + aC
            )
            assert abs(value - other) <= 1e-7, "branch mismatch at AC>=0 boundary"
        return YResult(value, label)

    # AC < 0 from here on; C != 0 so C**-2 is safe.
    t = -4.0 * A * C * (1.0 / (C * C) - 1.0)
    if t <= B * B and aB < 2.0 * (1.0 - aC):
        return YResult(1.0 - aA + aB * aB / (4.0 * (1.0 - aC)), YCase.NEG_FIRST)
    if B * B < min(4.0 * (1.0 + aC) ** 2, t):
        return YResult(1.0 + aA + aB * aB / (4.0 * (1.0 + aC)), YCase.NEG_SECOND)
    return _r_branch(A, B, C, aA, aB, aC, debug)


def _r_branch(A, B, C, aA, aB, aC, debug) -> YResult:
    # First case: |A| + |B| - |C|.  With AC < 0 the three terms of the
    # polynomial cannot phase-align on the boundary, so |C| is subtracted;
    # the brute-force oracle confirms this against the "+|C|" variant.
    sum_gap = aA * aB - aC * (aB + 4.0 * aA)
    diff_gap = aC * (aB - 4.0 * aA) - aA * aB
    if sum_gap >= 0.0:
        value, label = aA + aB - aC, YCase.R_SUM
    elif diff_gap >= 0.0:
        value, label = -aA + aB + aC, YCase.R_DIFF
    else:
        radicand = 1.0 - B * B / (4.0 * A * C)
        if radicand < -1e-12:
            raise ValueError(f"negative radicand {radicand!r} in R branch")
        value, label = (aA + aC) * math.sqrt(max(radicand, 0.0)), YCase.R_SQRT
    if debug:
        sqrt_val = (aA + aC) * math.sqrt(max(1.0 - B * B / (4.0 * A * C), 0.0))
        if abs(sum_gap) <= _BOUNDARY_EPS:
            assert abs((aA + aB - aC) - sqrt_val) <= 1e-7, "R_SUM boundary mismatch"
        if abs(diff_gap) <= _BOUNDARY_EPS:
            assert abs((-aA + aB + aC) - sqrt_val) <= 1e-7, "R_DIFF boundary mismatch"
    return YResult(value, label)


def y_oracle(A: float, B: float, C: float, radial: int = CERT_RADIAL,
             angular: int = CERT_ANGULAR) -> float:
    """Maximum of |A + Bz + Cz^2| + 1 - |z|^2 over the polar grid.

    The grid is r_j = j/radial (j = 0..radial, so r = 0 and r = 1 are
    included) times theta_k = 2*pi*k/angular.  For real coefficients the
    squared modulus is a quadratic in cos(theta), which lets the whole grid
    be scanned with vectorized real arithmetic; the result is exactly the
    grid maximum.
    """
    if radial < 64 or angular < 256:
        raise ValueError("grid too coarse: need radial >= 64 and angular >= 256")
    r = np.arange(radial + 1) / radial
    # theta_k and 2*pi - theta_k give the same cos, hence the same value;
    # for even angular counts the distinct cosines are k = 0..angular/2.
    n_u = angular // 2 + 1 if angular % 2 == 0 else angular
    u = np.cos(2.0 * np.pi * np.arange(n_u) / angular)
    r2 = r * r
    # |A + Bz + Cz^2|^2 = A^2 + B^2 r^2 + C^2 r^4
    #                     + 2(AB r + BC r^3) u + 2AC r^2 (2u^2 - 1)
    const = A * A + B * B * r2 + C * C * r2 * r2 - 2.0 * A * C * r2
    lin = 2.0 * (A * B * r + B * C * r * r2)
    quad = 4.0 * A * C * r2
    sq = const[:, None] + lin[:, None] * u[None, :] + quad[:, None] * (u * u)[None, :]
    row_max = np.sqrt(np.maximum(sq.max(axis=1), 0.0))
    return float(np.max(row_max + 1.0 - r2))


def grid_allowance(B: float, C: float, radial: int = CERT_RADIAL,
                   angular: int = CERT_ANGULAR) -> float:
    """Lipschitz-based slack covering the gap between grid and true maximum."""
    lip = abs(B) + 2.0 * abs(C) + 2.0
    return lip * math.pi / angular + lip / radial


def y_certify(A: float, B: float, C: float, tol: float,
              radial: int = CERT_RADIAL, angular: int = CERT_ANGULAR) -> bool:
    """True iff closed form and oracle agree within tol plus grid allowance."""
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    closed = y_closed_form(A, B, C).value
    grid = y_oracle(A, B, C, radial=radial, angular=angular)
    return abs(closed - grid) <= tol + grid_allowance(B, C, radial, angular)
