"""Numerical certification that a warped metric is a gradient Ricci soliton.

With u = log|K| the soliton structure is equivalent to the trace-free
Hessian of u vanishing together with Delta u = 2(lambda - K); radially,

    u'' - (b'/b) u' = 0        (trace-free part)
    u'' + (b'/b) u' = 2(lambda - K)

and the potential/Killing structure pins u' = 2 mu b, i.e. u'/b == 2 mu.
All derivatives here are central finite differences on the metric's own
r-grid (including b', recomputed from b), so the check does not reuse the
construction path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, ZeroCurvatureError
from .geometry import SMOOTH_ORIGIN_TOL, WarpedMetric
from .ode import ProfileA

ZERO_K = 1.0e-12


@dataclass(frozen=True)
class ResidualReport:
    """Grid suprema of the four soliton identities, with grid metadata."""

    max_tracefree: float
    max_laplace: float
    max_potential: float
    max_killing: float
    grid: np.ndarray
    spacing: float

    def to_json_dict(self) -> dict:
        return {
            "max_tracefree": self.max_tracefree,
            "max_laplace": self.max_laplace,
            "max_potential": self.max_potential,
            "max_killing": self.max_killing,
            "grid_points": int(self.grid.size),
            "grid_min": float(self.grid[0]),
            "grid_max": float(self.grid[-1]),
            "spacing": self.spacing,
        }


def _components(K: np.ndarray):
    """Maximal runs of constant curvature sign, split where K changes sign."""
    if np.any(np.abs(K) < ZERO_K):
        raise ZeroCurvatureError(
            "Gauss curvature vanishes on the grid; log|K| is undefined there"
        )
    sign = np.sign(K)
    breaks = np.nonzero(np.diff(sign) != 0)[0]
    edges = np.concatenate([[0], breaks + 1, [K.size]])
    return [(int(edges[i]), int(edges[i + 1])) for i in range(edges.size - 1)]


def _fd_fields(metric: WarpedMetric, lo: int, hi: int):
    """(interior slice, u', u'', b'_fd) on one sign component by central FD."""
    r = metric.r[lo:hi]
    b = metric.b[lo:hi]
    K = metric.K[lo:hi]
    if r.size < 5:
        raise DomainError("sign component too short for interior stencils")
    h = metric.spacing
    u = np.log(np.abs(K))
    up = (u[2:] - u[:-2]) / (2.0 * h)
    upp = (u[2:] - 2.0 * u[1:-1] + u[:-2]) / (h * h)
    bp = (b[2:] - b[:-2]) / (2.0 * h)
    inner = slice(1, -1)
    return r[inner], b[inner], K[inner], up, upp, bp


def soliton_residual(metric: WarpedMetric) -> ResidualReport:
    """Suprema of the trace-free, Laplacian, potential and Killing identities.

    All four vanish exactly on a gradient soliton; on a grid of spacing h the
    finite-difference suprema are O(h^2).
    """
    p = metric.params
    grids = []
    tf, lap, pot, kil = 0.0, 0.0, 0.0, 0.0
    for lo, hi in _components(metric.K):
        if hi - lo < 5:
            continue
        r, b, K, up, upp, bp = _fd_fields(metric, lo, hi)
        # the origin circle b = 0 cannot enter the b'/b coefficient
        msk = b > 1e-8
        cot = bp[msk] / b[msk]
        tf = max(tf, float(np.max(np.abs(upp[msk] - cot * up[msk]))))
        lap = max(lap, float(np.max(np.abs(upp[msk] + cot * up[msk] - 2.0 * (p.lam - K[msk])))))
        pot = max(pot, float(np.max(np.abs(up - 2.0 * p.mu * b))))
        kil = max(kil, float(np.max(np.abs(up[msk] / b[msk] - 2.0 * p.mu))))
        grids.append(r)
    if not grids:
        raise DomainError("no usable sign component on the grid")
    grid = np.concatenate(grids)
    return ResidualReport(
        max_tracefree=tf, max_laplace=lap, max_potential=pot, max_killing=kil,
        grid=grid, spacing=metric.spacing,
    )


def potential_check(metric: WarpedMetric) -> float:
    """sup |u'(r) - 2 mu b(r)|, the arc-length form of the potential identity."""
    return soliton_residual(metric).max_potential


def killing_check(metric: WarpedMetric) -> float:
    """sup |u'(r)/b(r) - 2 mu|: the rotated gradient field is Killing iff
    u'/b is the constant 2 mu."""
    return soliton_residual(metric).max_killing


def smooth_extension_check(profile: ProfileA) -> tuple[bool, float | None]:
    """Whether the metric closes up smoothly over the origin circle.

    True iff a -> 1 as t -> 0 (within 1e-8); then the origin curvature is
    lambda - 2 mu and the curvature gradient vanishes there.
    """
    p = profile.params
    if profile.is_constant:
        if profile.t0 > 0.0:
            raise DomainError("t = 0 is not in the closure of the profile domain")
        a0 = p.gamma
    else:
        if profile.t0 > 0.0 or profile.t1 <= 0.0:
            raise DomainError("t = 0 is not in the closure of the profile domain")
        a0 = float(profile.a(0.0))
    if abs(a0 - 1.0) <= SMOOTH_ORIGIN_TOL:
        return True, p.lam - 2.0 * p.mu
    return False, None
